#ifndef CIRCLEQ_SYMBOL_ANALYSIS_HPP
#define CIRCLEQ_SYMBOL_ANALYSIS_HPP

#include "circleq/observable.hpp"
#include "circleq/operator_core.hpp"
#include "circleq/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace circleq {

/// Lower (covariant) symbol (theta|A|theta).
Complex lower_symbol(const OperatorMatrix& a, double theta);

/// The N x N matrix with every entry 1; equals N |v_N><v_N| for uniform v_N.
OperatorMatrix allones_matrix(Dimension dim);

struct SpectrumResult {
    Eigen::VectorXd eigenvalues;   // sorted descending
    Vector top_eigenvector;        // phase-fixed: largest-modulus entry real >= 0
};

/// Eigen-decomposition of the all-ones matrix: eigenvalue N once, 0 with
/// multiplicity N-1; the top eigenvector is the uniform vector up to phase.
SpectrumResult allones_spectrum(Dimension dim);

/// (1/N) sin^2(N theta/2) / sin^2(theta/2), the lower symbol of the all-ones
/// matrix. Within 1e-8 of a multiple of 2*pi the ratio of sinc expansions is
/// used; the result is clamped to [0, N].
double fejer_kernel(double theta, Dimension dim);

/// Quadrature pairing (1/M) sum_j F_N(theta_j) g(theta_j) of the kernel with a
/// test observable. Warns on stderr when M < 4N (under-resolved). For
/// g = exp(i k theta) the exact value is max(0, 1 - |k|/N).
Complex comb_pairing(const ClassicalObservable& g, Dimension dim, const QuadratureGrid& grid);

/// Exact pairing value sum_{|k|<N} c_k(g) (1 - |k|/N), the spectral route used
/// as the scan reference.
Complex fejer_smoothed_mean(const ClassicalObservable& g, Dimension dim);

/// i (1 - F_N(theta)), the lower symbol of [N_hat, A_theta].
Complex commutator_lower_symbol(double theta, Dimension dim);

/// Max-entry norm of (N/M) sum_j |theta_j)(theta_j| - I. Zero (to roundoff)
/// iff M >= N; aliasing makes it >= 1 otherwise.
double resolution_identity_residual(Dimension dim, const QuadratureGrid& grid);

enum class ScanQuantity { commutator, resolution, comb };

/// Rule mapping a dimension N to a grid size M.
struct GridPolicy {
    enum class Kind { fixed, proportional };
    Kind kind = Kind::proportional;
    int value = 1;

    static GridPolicy fixed(int m) { return {Kind::fixed, m}; }
    static GridPolicy times_dimension(int factor) { return {Kind::proportional, factor}; }
    int grid_for(int n) const { return kind == Kind::fixed ? value : value * n; }
    std::string describe() const;
};

struct ScanRequest {
    ScanQuantity quantity = ScanQuantity::resolution;
    std::vector<int> dims;                          // nonempty, strictly increasing
    std::optional<double> theta;                    // commutator quantity
    std::optional<ClassicalObservable> observable;  // comb quantity
    GridPolicy grid = GridPolicy::times_dimension(1);
};

/// Tabulated quantity-vs-N records. Reference values are computed by an
/// analytic route so downstream checks never re-derive them. The timestamp is
/// in-memory metadata only; serialized output is byte-stable across runs.
struct ScanReport {
    std::string quantity;
    std::vector<double> axis;  // N values, ascending
    std::vector<Complex> measured;
    std::vector<Complex> reference;
    std::vector<double> residuals;  // |measured - reference|
    std::vector<double> envelope;   // commutator quantity only: 1/(N sin^2(theta/2))

    std::string grid_rule;
    std::optional<double> theta;
    std::optional<std::string> observable;
    double tolerance = 0.0;  // per-quantity check tolerance (0 = envelope rule)
    std::string timestamp;
};

ScanReport convergence_scan(const ScanRequest& request);

}  // namespace circleq

#endif
