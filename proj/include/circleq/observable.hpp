#ifndef CIRCLEQ_OBSERVABLE_HPP
#define CIRCLEQ_OBSERVABLE_HPP

#include "circleq/types.hpp"

#include <string>
#include <vector>

namespace circleq {

enum class CoefficientSource { analytic, quadrature };

/// A 2*pi-periodic classical observable f(theta), either a catalog entry with
/// exact Fourier coefficients or a list of samples on a uniform grid (whose
/// coefficients come from the discrete transform).
class ClassicalObservable {
public:
    enum class Kind {
        constant,
        sawtooth,          // f(theta) = theta on [0, 2*pi)
        sawtooth_squared,  // f(theta) = theta^2 on [0, 2*pi)
        complex_exponential,
        trig_polynomial,
        sampled
    };

    static ClassicalObservable constant(Complex c);
    static ClassicalObservable sawtooth();
    static ClassicalObservable sawtooth_squared();
    static ClassicalObservable complex_exponential(int k);
    /// Coefficients c_k for consecutive k = k_min, k_min+1, ...
    static ClassicalObservable trig_polynomial(int k_min, std::vector<Complex> coeffs);
    static ClassicalObservable sampled(const QuadratureGrid& grid, std::vector<Complex> values);
    /// Sample a catalog observable on a grid.
    static ClassicalObservable sampled_from(const ClassicalObservable& f, const QuadratureGrid& grid);

    Kind kind() const { return kind_; }
    bool real_valued() const { return real_valued_; }
    CoefficientSource coefficient_source() const {
        return kind_ == Kind::sampled ? CoefficientSource::quadrature : CoefficientSource::analytic;
    }

    /// Sampled observables only; number of samples M.
    int sample_count() const;

    /// Pointwise value. Sampled observables can only be evaluated at their own
    /// grid nodes.
    Complex evaluate(double theta) const;

    /// Canonical spec string, matching the CLI grammar (sampled: "sampled:<M>").
    std::string spec_string() const;

    // internals used by fourier_coefficient
    Complex constant_value() const { return constant_; }
    int exponent() const { return exponent_; }
    int trig_k_min() const { return k_min_; }
    const std::vector<Complex>& trig_coefficients() const { return coeffs_; }
    const std::vector<Complex>& samples() const { return values_; }

private:
    ClassicalObservable() = default;

    Kind kind_ = Kind::constant;
    bool real_valued_ = true;
    Complex constant_ = 0.0;
    int exponent_ = 0;
    int k_min_ = 0;
    std::vector<Complex> coeffs_;
    std::vector<Complex> values_;  // sampled, on nodes 2*pi*j/M
};

/// Fourier coefficient c_k(f) = (1/2pi) \int f(theta) exp(-i k theta) dtheta.
/// Catalog entries are exact; the sampled path is the uniform-grid discrete
/// transform and throws std::domain_error when |k| >= M/2 (aliasing).
Complex fourier_coefficient(const ClassicalObservable& f, int k);

/// Coefficients c_k for |k| <= order, with per-coefficient provenance.
struct FourierSpectrum {
    int order = 0;
    std::vector<Complex> coefficients;      // index k + order
    std::vector<CoefficientSource> source;  // same indexing

    Complex at(int k) const { return coefficients.at(static_cast<size_t>(k + order)); }
    CoefficientSource source_at(int k) const { return source.at(static_cast<size_t>(k + order)); }
    int length() const { return 2 * order + 1; }
};

/// All coefficients needed to quantize f on an N-dimensional space: |k| <= N-1.
FourierSpectrum fourier_spectrum(const ClassicalObservable& f, Dimension dim);

}  // namespace circleq

#endif
