#include "circleq/observable.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace circleq {

namespace {

constexpr double pi = std::numbers::pi;

// Symmetry test for user-supplied data; exact inputs pass exactly.
bool conjugate_symmetric(int k_min, const std::vector<Complex>& coeffs) {
    const int k_max = k_min + static_cast<int>(coeffs.size()) - 1;
    for (int k = k_min; k <= k_max; ++k) {
        const Complex ck = coeffs[static_cast<size_t>(k - k_min)];
        Complex cmk = 0.0;
        if (-k >= k_min && -k <= k_max) cmk = coeffs[static_cast<size_t>(-k - k_min)];
        if (std::abs(cmk - std::conj(ck)) > 1e-14) return false;
    }
    return true;
}

bool all_real(const std::vector<Complex>& values) {
    for (const Complex& v : values)
        if (std::abs(v.imag()) > 1e-13) return false;
    return true;
}

}  // namespace

ClassicalObservable ClassicalObservable::constant(Complex c) {
    ClassicalObservable f;
    f.kind_ = Kind::constant;
    f.constant_ = c;
    f.real_valued_ = c.imag() == 0.0;
    return f;
}

ClassicalObservable ClassicalObservable::sawtooth() {
    ClassicalObservable f;
    f.kind_ = Kind::sawtooth;
    f.real_valued_ = true;
    return f;
}

ClassicalObservable ClassicalObservable::sawtooth_squared() {
    ClassicalObservable f;
    f.kind_ = Kind::sawtooth_squared;
    f.real_valued_ = true;
    return f;
}

ClassicalObservable ClassicalObservable::complex_exponential(int k) {
    ClassicalObservable f;
    f.kind_ = Kind::complex_exponential;
    f.exponent_ = k;
    f.real_valued_ = (k == 0);
    return f;
}

ClassicalObservable ClassicalObservable::trig_polynomial(int k_min, std::vector<Complex> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("trig_polynomial: empty coefficient list");
    ClassicalObservable f;
    f.kind_ = Kind::trig_polynomial;
    f.k_min_ = k_min;
    f.real_valued_ = conjugate_symmetric(k_min, coeffs);
    f.coeffs_ = std::move(coeffs);
    return f;
}

ClassicalObservable ClassicalObservable::sampled(const QuadratureGrid& grid,
                                                 std::vector<Complex> values) {
    if (static_cast<int>(values.size()) != grid.size())
        throw std::invalid_argument("sampled: value count does not match grid size");
    ClassicalObservable f;
    f.kind_ = Kind::sampled;
    f.real_valued_ = all_real(values);
    f.values_ = std::move(values);
    return f;
}

ClassicalObservable ClassicalObservable::sampled_from(const ClassicalObservable& f,
                                                      const QuadratureGrid& grid) {
    if (f.kind_ == Kind::sampled) throw std::invalid_argument("sampled_from: source already sampled");
    std::vector<Complex> values(static_cast<size_t>(grid.size()));
    for (int j = 0; j < grid.size(); ++j) values[static_cast<size_t>(j)] = f.evaluate(grid.node(j));
    return sampled(grid, std::move(values));
}

int ClassicalObservable::sample_count() const {
    if (kind_ != Kind::sampled) throw std::logic_error("sample_count: not a sampled observable");
    return static_cast<int>(values_.size());
}

Complex ClassicalObservable::evaluate(double theta) const {
    const double t = wrap_angle(theta);
    switch (kind_) {
        case Kind::constant:
            return constant_;
        case Kind::sawtooth:
            return t;
        case Kind::sawtooth_squared:
            return t * t;
        case Kind::complex_exponential:
            return std::exp(Complex(0.0, exponent_ * t));
        case Kind::trig_polynomial: {
            Complex acc = 0.0;
            for (size_t i = 0; i < coeffs_.size(); ++i)
                acc += coeffs_[i] * std::exp(Complex(0.0, (k_min_ + static_cast<int>(i)) * t));
            return acc;
        }
        case Kind::sampled: {
            const int m = static_cast<int>(values_.size());
            const double step = two_pi / m;
            const int j = static_cast<int>(std::lround(t / step)) % m;
            if (std::abs(t - j * step) > 1e-9 && std::abs(t - j * step - two_pi) > 1e-9)
                throw std::invalid_argument("sampled observable evaluated off its grid");
            return values_[static_cast<size_t>(j)];
        }
    }
    throw std::logic_error("evaluate: unreachable");
}

std::string ClassicalObservable::spec_string() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::constant:
            os << "const:" << constant_.real();
            if (constant_.imag() != 0.0) os << "," << constant_.imag();
            break;
        case Kind::sawtooth:
            os << "theta";
            break;
        case Kind::sawtooth_squared:
            os << "theta2";
            break;
        case Kind::complex_exponential:
            os << "exp:" << exponent_;
            break;
        case Kind::trig_polynomial:
            os << "trigpoly:" << k_min_ << ":";
            for (size_t i = 0; i < coeffs_.size(); ++i) {
                if (i) os << ";";
                os << coeffs_[i].real() << "," << coeffs_[i].imag();
            }
            break;
        case Kind::sampled:
            os << "sampled:" << values_.size();
            break;
    }
    return os.str();
}

Complex fourier_coefficient(const ClassicalObservable& f, int k) {
    using Kind = ClassicalObservable::Kind;
    switch (f.kind()) {
        case Kind::constant:
            return k == 0 ? f.constant_value() : Complex(0.0);
        case Kind::sawtooth:
            // c_0 = pi, c_k = i/k: integration by parts of theta exp(-ik theta).
            return k == 0 ? Complex(pi, 0.0) : Complex(0.0, 1.0 / k);
        case Kind::sawtooth_squared:
            // c_0 = 4 pi^2/3, c_k = 2/k^2 + 2 pi i/k.
            return k == 0 ? Complex(4.0 * pi * pi / 3.0, 0.0)
                          : Complex(2.0 / (static_cast<double>(k) * k), 2.0 * pi / k);
        case Kind::complex_exponential:
            return k == f.exponent() ? Complex(1.0) : Complex(0.0);
        case Kind::trig_polynomial: {
            const auto& coeffs = f.trig_coefficients();
            const int idx = k - f.trig_k_min();
            if (idx < 0 || idx >= static_cast<int>(coeffs.size())) return Complex(0.0);
            return coeffs[static_cast<size_t>(idx)];
        }
        case Kind::sampled: {
            const auto& values = f.samples();
            const int m = static_cast<int>(values.size());
            if (2 * std::abs(k) >= m)
                throw std::domain_error("fourier_coefficient: |k| >= M/2 aliases on the sampled path");
            Complex acc = 0.0;
            for (int j = 0; j < m; ++j)
                acc += values[static_cast<size_t>(j)] * std::exp(Complex(0.0, -k * two_pi * j / m));
            return acc / static_cast<double>(m);
        }
    }
    throw std::logic_error("fourier_coefficient: unreachable");
}

FourierSpectrum fourier_spectrum(const ClassicalObservable& f, Dimension dim) {
    const int order = dim.n() - 1;
    FourierSpectrum spectrum;
    spectrum.order = order;
    spectrum.coefficients.resize(static_cast<size_t>(2 * order + 1));
    spectrum.source.resize(static_cast<size_t>(2 * order + 1), f.coefficient_source());
    for (int k = -order; k <= order; ++k)
        spectrum.coefficients[static_cast<size_t>(k + order)] = fourier_coefficient(f, k);
    return spectrum;
}

}  // namespace circleq
