#ifndef CIRCLEQ_TYPES_HPP
#define CIRCLEQ_TYPES_HPP

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace circleq {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Reduce an angle to the fundamental domain [0, 2*pi).
inline double wrap_angle(double theta) {
    double t = std::fmod(theta, two_pi);
    if (t < 0.0) t += two_pi;
    if (t >= two_pi) t = 0.0;  // fmod/add can land exactly on 2*pi
    return t;
}

/// Hilbert-space dimension N; the number states are |0> ... |N-1>.
class Dimension {
public:
    explicit Dimension(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("Dimension: N must be >= 1");
    }
    int n() const { return n_; }

private:
    int n_;
};

/// Uniform nodes theta_j = 2*pi*j/M on [0, 2*pi), each with weight 1/M.
class QuadratureGrid {
public:
    explicit QuadratureGrid(int m) : m_(m) {
        if (m < 1) throw std::invalid_argument("QuadratureGrid: M must be >= 1");
    }
    int size() const { return m_; }
    double node(int j) const { return two_pi * j / m_; }
    double weight() const { return 1.0 / m_; }

private:
    int m_;
};

/// Dense operator in the number basis. The hermitian flag is metadata set by
/// the constructing operation (real-valued symbol), not recomputed from the
/// entries.
struct OperatorMatrix {
    Matrix entries;
    bool hermitian = false;

    int dim() const { return static_cast<int>(entries.rows()); }
};

/// Coherent phase state |theta): amplitude n is exp(i*n*theta)/sqrt(N).
struct PhaseStateVector {
    double theta = 0.0;  // reduced to [0, 2*pi)
    Vector amplitudes;

    int dim() const { return static_cast<int>(amplitudes.size()); }
};

enum class MatrixNorm { frobenius, max_entry };

inline double max_abs(const Matrix& a) { return a.cwiseAbs().maxCoeff(); }

inline double hermiticity_defect(const Matrix& a) {
    return max_abs(a - a.adjoint().eval());
}

}  // namespace circleq

#endif
