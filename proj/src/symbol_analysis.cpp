#include "circleq/symbol_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <iostream>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace circleq {

namespace {

constexpr double pi = std::numbers::pi;

// sin(x)/x with a series for small arguments.
double sinc(double x) {
    const double ax = std::abs(x);
    if (ax < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

std::string iso_timestamp() {
    char buf[32];
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

Complex lower_symbol(const OperatorMatrix& a, double theta) {
    if (a.entries.rows() != a.entries.cols())
        throw std::invalid_argument("lower_symbol: matrix not square");
    const Vector v = phase_state(theta, Dimension(a.dim())).amplitudes;
    return v.dot(a.entries * v);  // Eigen's dot conjugates the left factor
}

OperatorMatrix allones_matrix(Dimension dim) {
    OperatorMatrix a;
    a.entries = Matrix::Constant(dim.n(), dim.n(), Complex(1.0, 0.0));
    a.hermitian = true;
    return a;
}

SpectrumResult allones_spectrum(Dimension dim) {
    const int n = dim.n();
    Eigen::SelfAdjointEigenSolver<Matrix> solver(allones_matrix(dim).entries);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("allones_spectrum: eigensolver failed");

    SpectrumResult result;
    result.eigenvalues = solver.eigenvalues().reverse();  // descending: N first
    Vector top = solver.eigenvectors().col(n - 1);

    // Fix the free global phase: largest-modulus entry made real nonnegative.
    int arg_max = 0;
    top.cwiseAbs().maxCoeff(&arg_max);
    const Complex z = top[arg_max];
    if (std::abs(z) > 0.0) top *= std::conj(z) / std::abs(z);
    result.top_eigenvector = top;
    return result;
}

double fejer_kernel(double theta, Dimension dim) {
    const int n = dim.n();
    double t = wrap_angle(theta);
    if (t > pi) t -= two_pi;  // reduce to (-pi, pi]
    double value;
    if (std::abs(t) < 1e-8) {
        // Removable singularity: F = N (sinc(N t/2)/sinc(t/2))^2.
        const double r = sinc(0.5 * n * t) / sinc(0.5 * t);
        value = n * r * r;
    } else {
        const double s = std::sin(0.5 * t);
        const double sn = std::sin(0.5 * n * t);
        value = (sn * sn) / (n * s * s);
    }
    return std::clamp(value, 0.0, static_cast<double>(n));
}

Complex comb_pairing(const ClassicalObservable& g, Dimension dim, const QuadratureGrid& grid) {
    const int n = dim.n();
    const int m = grid.size();
    if (g.kind() == ClassicalObservable::Kind::sampled && g.sample_count() != m)
        throw std::invalid_argument("comb_pairing: sampled observable grid does not match");
    if (m < 4 * n)
        std::cerr << "circleq: warning: comb pairing grid M=" << m << " under-resolves N=" << n
                  << " (want M >= 4N)\n";
    Complex acc = 0.0;
    for (int j = 0; j < m; ++j) {
        const double t = grid.node(j);
        acc += fejer_kernel(t, dim) * g.evaluate(t);
    }
    return acc * grid.weight();
}

Complex fejer_smoothed_mean(const ClassicalObservable& g, Dimension dim) {
    const int n = dim.n();
    Complex acc = 0.0;
    for (int k = -(n - 1); k <= n - 1; ++k)
        acc += fourier_coefficient(g, k) * (1.0 - std::abs(k) / static_cast<double>(n));
    return acc;
}

Complex commutator_lower_symbol(double theta, Dimension dim) {
    return Complex(0.0, 1.0) * (1.0 - fejer_kernel(theta, dim));
}

double resolution_identity_residual(Dimension dim, const QuadratureGrid& grid) {
    const int n = dim.n();
    const int m = grid.size();
    Matrix acc = Matrix::Zero(n, n);
    for (int j = 0; j < m; ++j) {
        const Vector v = phase_state(grid.node(j), dim).amplitudes;
        acc.noalias() += v * v.adjoint();
    }
    acc *= static_cast<double>(n) / m;
    acc -= Matrix::Identity(n, n);
    return max_abs(acc);
}

std::string GridPolicy::describe() const {
    if (kind == Kind::fixed) return "M=" + std::to_string(value);
    if (value == 1) return "M=N";
    return "M=" + std::to_string(value) + "N";
}

ScanReport convergence_scan(const ScanRequest& request) {
    if (request.dims.empty()) throw std::invalid_argument("convergence_scan: no dimensions");
    for (size_t i = 1; i < request.dims.size(); ++i)
        if (request.dims[i] <= request.dims[i - 1])
            throw std::invalid_argument("convergence_scan: dimensions must be increasing");

    ScanReport report;
    report.grid_rule = request.grid.describe();
    report.theta = request.theta;
    report.timestamp = iso_timestamp();
    if (request.observable) report.observable = request.observable->spec_string();

    switch (request.quantity) {
        case ScanQuantity::commutator: {
            if (!request.theta)
                throw std::invalid_argument("convergence_scan: commutator quantity needs theta");
            report.quantity = "commutator";
            report.tolerance = 0.0;  // checked against the 1/(N sin^2(theta/2)) envelope
            const double s = std::sin(0.5 * wrap_angle(*request.theta));
            for (int n : request.dims) {
                const Complex measured = commutator_lower_symbol(*request.theta, Dimension(n));
                const Complex reference(0.0, 1.0);
                report.axis.push_back(n);
                report.measured.push_back(measured);
                report.reference.push_back(reference);
                report.residuals.push_back(std::abs(measured - reference));
                report.envelope.push_back(s == 0.0 ? std::numeric_limits<double>::infinity()
                                                   : 1.0 / (n * s * s));
            }
            break;
        }
        case ScanQuantity::resolution: {
            report.quantity = "resolution";
            report.tolerance = 1e-12;
            for (int n : request.dims) {
                const QuadratureGrid grid(request.grid.grid_for(n));
                const double residual = resolution_identity_residual(Dimension(n), grid);
                report.axis.push_back(n);
                report.measured.push_back(residual);
                report.reference.push_back(0.0);
                report.residuals.push_back(residual);
            }
            break;
        }
        case ScanQuantity::comb: {
            if (!request.observable)
                throw std::invalid_argument("convergence_scan: comb quantity needs an observable");
            report.quantity = "comb";
            report.tolerance = 1e-10;
            for (int n : request.dims) {
                const QuadratureGrid grid(request.grid.grid_for(n));
                const Complex measured = comb_pairing(*request.observable, Dimension(n), grid);
                const Complex reference = fejer_smoothed_mean(*request.observable, Dimension(n));
                report.axis.push_back(n);
                report.measured.push_back(measured);
                report.reference.push_back(reference);
                report.residuals.push_back(std::abs(measured - reference));
            }
            break;
        }
    }
    return report;
}

}  // namespace circleq
