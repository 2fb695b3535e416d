#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "gaborform/circle.hpp"
#include "gaborform/eigen.hpp"
#include "gaborform/polynomial.hpp"

namespace gaborform {

/// d x d principal block of the infinite matrix with entries b_{|i-j|}.
class ToeplitzBlock {
public:
    /// Throws std::invalid_argument when dim == 0.
    ToeplitzBlock(AutocorrSequence band, std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    const AutocorrSequence& band() const noexcept { return band_; }
    std::size_t bandwidth() const noexcept { return std::min(band_.degree(), dim_ - 1); }

    double operator()(std::size_t i, std::size_t j) const noexcept {
        return band_[i > j ? i - j : j - i];
    }

    Matrix dense() const;

private:
    AutocorrSequence band_;
    std::size_t dim_;
};

/// Finitely supported x in l^2(Z): x_n = values[n - offset].
struct CoefficientVector {
    std::int64_t offset = 0;
    std::vector<double> values;

    double at(std::int64_t n) const noexcept {
        const std::int64_t i = n - offset;
        return i >= 0 && i < static_cast<std::int64_t>(values.size())
                   ? values[static_cast<std::size_t>(i)]
                   : 0.0;
    }
    double norm_squared() const noexcept;
};

ToeplitzBlock build_block(const AutocorrSequence& b, std::size_t dim);

/// sum_n (a_0 x_n + a_1 x_{n+n_1} + ... + a_k x_{n+n_k})^2, summed exactly
/// over the finitely many n where a term can be nonzero.
double apply_quadratic_form(const SparsePolynomial& p, const CoefficientVector& x);

/// x^T M x with M_{ij} = b_{|i-j|}.
double matrix_quadratic_form(const AutocorrSequence& b, const CoefficientVector& x);

Spectrum symmetric_eigenvalues(const ToeplitzBlock& block, double tol = kDefaultEigenTol);

struct BlockCheck {
    std::size_t dim = 0;
    Spectrum spectrum;
    bool within_bounds = false;
};

struct BlockBoundsReport {
    SpectralBounds bounds;
    double epsilon = 0.0;  // 1e-6 * max(1, c2)
    std::vector<BlockCheck> blocks;

    bool all_within() const;
};

/// Spectra of the principal blocks of autocorrelation(p) for each requested
/// dimension, each checked against [c1 - eps, c2 + eps].
BlockBoundsReport verify_block_bounds(const SparsePolynomial& p, std::span<const std::size_t> dims,
                                      double eigen_tol = kDefaultEigenTol);

}  // namespace gaborform
