#include "circleq/baselines.hpp"

#include <cmath>
#include <stdexcept>

namespace circleq {

PeggBarnettBasis pegg_barnett_states(Dimension dim, double theta0) {
    const int n = dim.n();
    PeggBarnettBasis basis;
    basis.n = n;
    basis.theta0 = wrap_angle(theta0);
    basis.angles.resize(static_cast<size_t>(n));
    basis.states.resize(n, n);
    for (int m = 0; m < n; ++m) {
        // theta_m kept unreduced: these are the operator's eigenvalues,
        // ascending in [theta0, theta0 + 2*pi).
        const double theta_m = basis.theta0 + two_pi * m / n;
        basis.angles[static_cast<size_t>(m)] = theta_m;
        basis.states.col(m) = phase_state(theta_m, dim).amplitudes;
    }
    return basis;
}

OperatorMatrix pegg_barnett_operator(Dimension dim, double theta0) {
    const PeggBarnettBasis basis = pegg_barnett_states(dim, theta0);
    OperatorMatrix op;
    op.entries = Matrix::Zero(basis.n, basis.n);
    op.hermitian = true;
    for (int m = 0; m < basis.n; ++m) {
        const Vector state = basis.states.col(m);
        op.entries.noalias() += basis.angles[static_cast<size_t>(m)] * (state * state.adjoint());
    }
    return op;
}

OperatorMatrix sg_shift(Dimension dim, ShiftDirection direction) {
    const int n = dim.n();
    OperatorMatrix op;
    op.entries = Matrix::Zero(n, n);
    op.hermitian = false;
    for (int j = 0; j + 1 < n; ++j) {
        if (direction == ShiftDirection::lower)
            op.entries(j, j + 1) = 1.0;  // E- = sum |n><n+1|
        else
            op.entries(j + 1, j) = 1.0;
    }
    return op;
}

CosineSinePair cosine_sine(Dimension dim) {
    if (dim.n() < 2) throw std::invalid_argument("cosine_sine: N must be >= 2");
    const Matrix lower = sg_shift(dim, ShiftDirection::lower).entries;
    const Matrix raise = sg_shift(dim, ShiftDirection::raise).entries;
    CosineSinePair pair;
    pair.cosine.entries = 0.5 * (lower + raise);
    pair.cosine.hermitian = true;
    pair.sine.entries = (lower - raise) / Complex(0.0, 2.0);
    pair.sine.hermitian = true;
    return pair;
}

LadderPair ladder_from_quantization(Dimension dim) {
    const int n = dim.n();
    Matrix sqrt_number = Matrix::Zero(n, n);
    for (int j = 0; j < n; ++j) sqrt_number(j, j) = std::sqrt(static_cast<double>(j));

    const Matrix shift_down = quantize(ClassicalObservable::complex_exponential(1), dim).entries;
    const Matrix shift_up = quantize(ClassicalObservable::complex_exponential(-1), dim).entries;

    LadderPair pair;
    pair.a.entries = shift_down * sqrt_number;
    pair.a.hermitian = false;
    pair.a_dagger.entries = sqrt_number * shift_up;
    pair.a_dagger.hermitian = false;
    return pair;
}

OperatorMatrix ladder_commutator(Dimension dim) {
    const LadderPair pair = ladder_from_quantization(dim);
    return commutator(pair.a, pair.a_dagger);
}

double operator_distance(const OperatorMatrix& a, const OperatorMatrix& b, MatrixNorm norm) {
    if (a.dim() != b.dim()) throw std::invalid_argument("operator_distance: dimension mismatch");
    const Matrix diff = a.entries - b.entries;
    return norm == MatrixNorm::frobenius ? diff.norm() : max_abs(diff);
}

}  // namespace circleq
