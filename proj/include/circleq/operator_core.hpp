#ifndef CIRCLEQ_OPERATOR_CORE_HPP
#define CIRCLEQ_OPERATOR_CORE_HPP

#include "circleq/observable.hpp"
#include "circleq/types.hpp"

namespace circleq {

/// |theta) with amplitudes exp(i*n*theta)/sqrt(N); unit norm by construction.
PhaseStateVector phase_state(double theta, Dimension dim);

/// (theta'|theta) in closed form,
///   exp(i (N-1)(theta-theta')/2) * sin(N (theta-theta')/2) / (N sin((theta-theta')/2)),
/// with the removable singularity at theta = theta' evaluated as 1.
Complex overlap(double theta, double theta_prime, Dimension dim);

/// Toeplitz quantization of f: entry (n, n') = c_{n'-n}(f). Hermitian flag is
/// set iff f is real-valued.
OperatorMatrix quantize(const ClassicalObservable& f, Dimension dim);
OperatorMatrix quantize(const FourierSpectrum& spectrum, Dimension dim, bool real_valued);

/// Self-adjoint phase operator: off-diagonal entries -i/(n-n'). The diagonal
/// is 0 when include_reference_diagonal is false and pi (the c_0 of the
/// sawtooth) when true; the two differ by pi*I only.
OperatorMatrix phase_operator(Dimension dim, bool include_reference_diagonal);

/// diag(0, 1, ..., N-1).
OperatorMatrix number_operator(Dimension dim);

/// AB - BA. Throws std::invalid_argument on dimension mismatch.
OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);

/// The closed form i(I - N |v_N><v_N|) of [N_hat, A_theta], built analytically
/// from the uniform unit vector |v_N>: zero diagonal, -i everywhere else.
OperatorMatrix commutator_number_phase(Dimension dim);

}  // namespace circleq

#endif
