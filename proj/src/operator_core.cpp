#include "circleq/operator_core.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace circleq {

namespace {
constexpr double pi = std::numbers::pi;
}

PhaseStateVector phase_state(double theta, Dimension dim) {
    const int n = dim.n();
    PhaseStateVector state;
    state.theta = wrap_angle(theta);
    state.amplitudes.resize(n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int j = 0; j < n; ++j)
        state.amplitudes[j] = scale * std::exp(Complex(0.0, j * state.theta));
    return state;
}

Complex overlap(double theta, double theta_prime, Dimension dim) {
    const int n = dim.n();
    // The closed form is invariant under shifts of the difference by 2*pi,
    // so reduce it to (-pi, pi] where only d = 0 is singular.
    double d = wrap_angle(theta) - wrap_angle(theta_prime);
    if (d > pi) d -= two_pi;
    if (d <= -pi) d += two_pi;
    const double s = std::sin(0.5 * d);
    if (s == 0.0) return Complex(1.0, 0.0);
    const Complex phase = std::exp(Complex(0.0, 0.5 * (n - 1) * d));
    return phase * (std::sin(0.5 * n * d) / (n * s));
}

OperatorMatrix quantize(const FourierSpectrum& spectrum, Dimension dim, bool real_valued) {
    const int n = dim.n();
    if (spectrum.order < n - 1)
        throw std::invalid_argument("quantize: spectrum order below N-1");
    OperatorMatrix a;
    a.entries.resize(n, n);
    a.hermitian = real_valued;
    for (int row = 0; row < n; ++row)
        for (int col = 0; col < n; ++col) a.entries(row, col) = spectrum.at(col - row);
    return a;
}

OperatorMatrix quantize(const ClassicalObservable& f, Dimension dim) {
    return quantize(fourier_spectrum(f, dim), dim, f.real_valued());
}

OperatorMatrix phase_operator(Dimension dim, bool include_reference_diagonal) {
    const int n = dim.n();
    OperatorMatrix a;
    a.entries = Matrix::Zero(n, n);
    a.hermitian = true;
    const Complex diag = include_reference_diagonal ? Complex(pi, 0.0) : Complex(0.0);
    for (int row = 0; row < n; ++row) {
        a.entries(row, row) = diag;
        for (int col = 0; col < n; ++col)
            if (col != row) a.entries(row, col) = Complex(0.0, -1.0 / (row - col));
    }
    return a;
}

OperatorMatrix number_operator(Dimension dim) {
    const int n = dim.n();
    OperatorMatrix a;
    a.entries = Matrix::Zero(n, n);
    a.hermitian = true;
    for (int j = 0; j < n; ++j) a.entries(j, j) = static_cast<double>(j);
    return a;
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("commutator: dimension mismatch");
    OperatorMatrix c;
    c.entries = a.entries * b.entries - b.entries * a.entries;
    c.hermitian = false;  // anti-Hermitian when both inputs are Hermitian
    return c;
}

OperatorMatrix commutator_number_phase(Dimension dim) {
    const int n = dim.n();
    OperatorMatrix c;
    // i(I - N |v_N><v_N|) with uniform |v_N>: diagonal 0, off-diagonal -i.
    c.entries = Matrix::Constant(n, n, Complex(0.0, -1.0));
    c.entries.diagonal().setZero();
    c.hermitian = false;
    return c;
}

}  // namespace circleq
