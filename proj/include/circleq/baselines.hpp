#ifndef CIRCLEQ_BASELINES_HPP
#define CIRCLEQ_BASELINES_HPP

#include "circleq/operator_core.hpp"
#include "circleq/types.hpp"

#include <vector>

namespace circleq {

/// The orthonormal Pegg-Barnett phase states |theta_m> at the equidistant
/// angles theta_m = theta0 + 2*pi*m/N. Column m of `states` is |theta_m>.
struct PeggBarnettBasis {
    int n = 0;
    double theta0 = 0.0;
    std::vector<double> angles;  // theta_m, ascending, in [theta0, theta0 + 2*pi)
    Matrix states;
};

PeggBarnettBasis pegg_barnett_states(Dimension dim, double theta0);

/// Spectral-resolution phase operator sum_m theta_m |theta_m><theta_m|.
OperatorMatrix pegg_barnett_operator(Dimension dim, double theta0);

enum class ShiftDirection { lower, raise };

/// Susskind-Glogower one-sided shift truncated to N dimensions:
/// lower is E- = sum_{n=0}^{N-2} |n><n+1|, raise its adjoint.
OperatorMatrix sg_shift(Dimension dim, ShiftDirection direction);

struct CosineSinePair {
    OperatorMatrix cosine;  // (E- + E+)/2
    OperatorMatrix sine;    // (E- - E+)/(2i)
};

/// Hermitian cosine/sine phase operators; requires N >= 2.
CosineSinePair cosine_sine(Dimension dim);

struct LadderPair {
    OperatorMatrix a;         // lowering: a|n> = sqrt(n)|n-1>
    OperatorMatrix a_dagger;  // adjoint of a
};

/// Ladder operators from the circle quantization:
/// a = quantize(exp(i theta)) * sqrt(N_hat), a^dag = sqrt(N_hat) * quantize(exp(-i theta)).
LadderPair ladder_from_quantization(Dimension dim);

/// [a, a^dag] computed by multiplication; equals I - N |N-1><N-1|.
OperatorMatrix ladder_commutator(Dimension dim);

/// Norm of A - B under the chosen norm. Throws on dimension mismatch.
double operator_distance(const OperatorMatrix& a, const OperatorMatrix& b, MatrixNorm norm);

}  // namespace circleq

#endif
