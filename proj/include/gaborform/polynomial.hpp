#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gaborform {

struct Term {
    std::int64_t exponent;
    double coefficient;

    friend bool operator==(const Term&, const Term&) = default;
};

/// p(z) = sum_j a_j z^{n_j} with 0 = n_0 < n_1 < ... < n_k and real a_j != 0.
///
/// Construction normalizes: terms are sorted, equal exponents combined,
/// zero coefficients dropped, and the lowest exponent divided out. The
/// amount divided out is kept in shift(); |p| on the unit circle does not
/// depend on it.
class SparsePolynomial {
public:
    /// Throws std::invalid_argument on a negative exponent, a non-finite
    /// coefficient, or when nothing nonzero remains.
    explicit SparsePolynomial(std::vector<Term> terms);

    static SparsePolynomial constant(double c);
    /// From a_0..a_N; exact zeros are skipped.
    static SparsePolynomial from_dense(std::span<const double> coeffs);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::int64_t shift() const noexcept { return shift_; }
    std::int64_t degree() const noexcept { return terms_.back().exponent; }
    std::size_t size() const noexcept { return terms_.size(); }

    /// sum_j |a_j|
    double l1_norm() const noexcept;

    /// Coefficients a_0..a_N of the dense representation, N = degree().
    std::vector<double> dense() const;

    std::complex<double> operator()(std::complex<double> z) const;

    /// |p(e^{i theta})|^2 evaluated directly from the terms.
    double magnitude_squared(double theta) const;

    SparsePolynomial operator-() const;

    friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

private:
    std::vector<Term> terms_;
    std::int64_t shift_ = 0;
};

/// Band b_0..b_N of a symmetric Toeplitz matrix. When produced by
/// autocorrelation() its symbol is |p|^2 >= 0; user-supplied bands carry no
/// such guarantee.
class AutocorrSequence {
public:
    /// Throws std::invalid_argument when empty.
    explicit AutocorrSequence(std::vector<double> values);

    std::span<const double> values() const& noexcept { return values_; }
    std::span<const double> values() const&& = delete;
    std::size_t degree() const noexcept { return values_.size() - 1; }
    double operator[](std::size_t m) const noexcept {
        return m < values_.size() ? values_[m] : 0.0;
    }

    friend bool operator==(const AutocorrSequence&, const AutocorrSequence&) = default;

private:
    std::vector<double> values_;
};

/// Accepts "a0:n0,a1:n1,..." or an expression such as "2+3z^2+4z^3".
/// Throws ParseError.
SparsePolynomial parse_polynomial(std::string_view text);

/// Comma separated reals, e.g. "3,1,1,1". Throws ParseError.
AutocorrSequence parse_band(std::string_view text);

/// Human readable form, e.g. "1 + z + z^3" (after normalization).
std::string to_string(const SparsePolynomial& p);

/// b_m = sum over pairs with n_j - n_i = m of a_i a_j.
AutocorrSequence autocorrelation(const SparsePolynomial& p);

/// q(theta) = b_0 + 2 sum_{m>=1} b_m cos(m theta).
double symbol_eval(const AutocorrSequence& b, double theta);

}  // namespace gaborform
