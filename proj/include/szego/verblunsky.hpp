#ifndef SZEGO_VERBLUNSKY_HPP
#define SZEGO_VERBLUNSKY_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "szego/errors.hpp"
#include "szego/mat2.hpp"

namespace szego {

/// One recursion coefficient alpha in the open unit disk, with
/// rho = sqrt(1 - |alpha|^2) cached.
struct Verblunsky {
    Complex alpha{0.0};
    double rho = 1.0;

    Verblunsky() = default;
    explicit Verblunsky(Complex a) : alpha(a) {
        double n2 = std::norm(a);
        if (n2 >= 1.0)
            throw InvalidCoefficientError("Verblunsky: |alpha| must be < 1");
        rho = std::sqrt(1.0 - n2);
    }

    bool real_positive() const {
        return alpha.imag() == 0.0 && alpha.real() > 0.0 && alpha.real() < 1.0;
    }
};

/// Finite ordered word (alpha_1, ..., alpha_n).
class VerblunskyWord {
public:
    VerblunskyWord() = default;
    explicit VerblunskyWord(std::vector<Verblunsky> coeffs) : coeffs_(std::move(coeffs)) {}

    static VerblunskyWord from_reals(const std::vector<double>& values) {
        std::vector<Verblunsky> c;
        c.reserve(values.size());
        for (double v : values) c.emplace_back(Complex{v, 0.0});
        return VerblunskyWord(std::move(c));
    }

    static VerblunskyWord from_complex(const std::vector<Complex>& values) {
        std::vector<Verblunsky> c;
        c.reserve(values.size());
        for (Complex v : values) c.emplace_back(v);
        return VerblunskyWord(std::move(c));
    }

    static VerblunskyWord constant(Complex alpha, std::size_t n) {
        return VerblunskyWord(std::vector<Verblunsky>(n, Verblunsky(alpha)));
    }

    std::size_t size() const { return coeffs_.size(); }
    bool empty() const { return coeffs_.empty(); }
    const Verblunsky& operator[](std::size_t i) const { return coeffs_[i]; }
    const std::vector<Verblunsky>& coefficients() const { return coeffs_; }

    bool real_positive() const {
        for (const auto& v : coeffs_)
            if (!v.real_positive()) return false;
        return !coeffs_.empty();
    }

    /// Smallest coefficient of a real-positive word.
    double min_coefficient() const {
        if (!real_positive())
            throw InvalidCoefficientError("min_coefficient: word is not real-positive");
        double m = 1.0;
        for (const auto& v : coeffs_) m = std::min(m, v.alpha.real());
        return m;
    }

    /// Word rotated left by k positions (alpha_{k+1}, ..., alpha_n, alpha_1, ...).
    VerblunskyWord rotated(std::size_t k) const {
        std::vector<Verblunsky> c;
        c.reserve(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            c.push_back(coeffs_[(i + k) % coeffs_.size()]);
        return VerblunskyWord(std::move(c));
    }

private:
    std::vector<Verblunsky> coeffs_;
};

} // namespace szego

#endif
