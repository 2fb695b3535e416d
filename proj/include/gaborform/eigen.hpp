#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace gaborform {

inline constexpr std::size_t kMaxEigenDim = 2048;
inline constexpr double kDefaultEigenTol = 1e-12;

/// Dense square matrix, row-major. Symmetry is checked where it matters.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}

    std::size_t dim() const noexcept { return dim_; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    double frobenius_norm() const;
    double off_diagonal_norm() const;
    double trace() const;
    bool is_symmetric(double tol = 0.0) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<double> data_;
};

struct Spectrum {
    std::vector<double> eigenvalues;  // ascending
    double offdiag_residual = 0.0;
    int sweeps = 0;

    double min() const { return eigenvalues.front(); }
    double max() const { return eigenvalues.back(); }
};

/// Cyclic Jacobi: sweeps until the off-diagonal Frobenius norm is at most
/// tol * ||M||_F. Throws SizeError above kMaxEigenDim, std::invalid_argument
/// for a non-symmetric or empty matrix, ConvergenceError after 100 sweeps.
Spectrum symmetric_eigenvalues(const Matrix& m, double tol = kDefaultEigenTol);

/// One row per line, comma separated. Throws ParseError on ragged or
/// non-numeric input.
Matrix read_matrix_csv(std::istream& in);
Matrix parse_matrix_csv(const std::string& text);
void write_matrix_csv(std::ostream& out, const Matrix& m);

}  // namespace gaborform
