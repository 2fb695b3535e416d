#include "gaborform/toeplitz.hpp"

#include <algorithm>
#include <stdexcept>

namespace gaborform {

ToeplitzBlock::ToeplitzBlock(AutocorrSequence band, std::size_t dim)
    : band_(std::move(band)), dim_(dim) {
    if (dim_ == 0) throw std::invalid_argument("block dimension must be positive");
}

Matrix ToeplitzBlock::dense() const {
    Matrix m(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) m(i, j) = (*this)(i, j);
    }
    return m;
}

double CoefficientVector::norm_squared() const noexcept {
    double s = 0.0;
    for (double v : values) s += v * v;
    return s;
}

ToeplitzBlock build_block(const AutocorrSequence& b, std::size_t dim) { return {b, dim}; }

double apply_quadratic_form(const SparsePolynomial& p, const CoefficientVector& x) {
    if (x.values.empty()) return 0.0;
    const std::int64_t first = x.offset - p.degree();
    const std::int64_t last = x.offset + static_cast<std::int64_t>(x.values.size()) - 1;
    double total = 0.0;
    for (std::int64_t n = first; n <= last; ++n) {
        double s = 0.0;
        for (const auto& t : p.terms()) s += t.coefficient * x.at(n + t.exponent);
        total += s * s;
    }
    return total;
}

double matrix_quadratic_form(const AutocorrSequence& b, const CoefficientVector& x) {
    const auto& v = x.values;
    const std::size_t n = v.size();
    const std::size_t width = std::min(b.degree(), n == 0 ? 0 : n - 1);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += b[0] * v[i] * v[i];
    for (std::size_t m = 1; m <= width; ++m) {
        double s = 0.0;
        for (std::size_t i = 0; i + m < n; ++i) s += v[i] * v[i + m];
        total += 2.0 * b[m] * s;
    }
    return total;
}

Spectrum symmetric_eigenvalues(const ToeplitzBlock& block, double tol) {
    return symmetric_eigenvalues(block.dense(), tol);
}

bool BlockBoundsReport::all_within() const {
    return std::all_of(blocks.begin(), blocks.end(),
                       [](const BlockCheck& c) { return c.within_bounds; });
}

BlockBoundsReport verify_block_bounds(const SparsePolynomial& p,
                                      std::span<const std::size_t> dims, double eigen_tol) {
    if (dims.empty()) throw std::invalid_argument("no block dimensions requested");
    BlockBoundsReport report;
    report.bounds = circle_extrema(p);
    report.epsilon = 1e-6 * std::max(1.0, report.bounds.c2);
    const AutocorrSequence band = autocorrelation(p);
    for (std::size_t d : dims) {
        BlockCheck check;
        check.dim = d;
        check.spectrum = symmetric_eigenvalues(build_block(band, d), eigen_tol);
        check.within_bounds = check.spectrum.min() >= report.bounds.c1 - report.epsilon &&
                              check.spectrum.max() <= report.bounds.c2 + report.epsilon;
        report.blocks.push_back(std::move(check));
    }
    return report;
}

}  // namespace gaborform
