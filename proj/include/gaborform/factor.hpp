#pragma once

#include <optional>
#include <string>

#include "gaborform/polynomial.hpp"

namespace gaborform {

inline constexpr double kDefaultFactorTol = 1e-9;
inline constexpr double kRootPairTol = 1e-6;

struct Factorization {
    SparsePolynomial polynomial;
    double residual = 0.0;  // max_m |autocorrelation(polynomial)_m - b_m|
    std::optional<std::string> warning;
};

/// Fejer-Riesz spectral factorization: a real polynomial r of degree N with
/// autocorrelation(r) = b. Roots of the Laurent symbol are split into
/// reciprocal pairs and the member inside the unit disk is kept; unit roots
/// are kept with half multiplicity.
///
/// Trailing zeros of b are ignored. Throws NotFactorableError when the
/// symbol dips below -tol * max(1, b_0), or when b_0 <= 0.
Factorization fejer_riesz_factor(const AutocorrSequence& b, double tol = kDefaultFactorTol);

}  // namespace gaborform
