#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "gaborform/error.hpp"
#include "gaborform/toeplitz.hpp"

using namespace gaborform;

namespace {

std::vector<double> eigen_oracle(const Matrix& m) {
    Eigen::MatrixXd e(m.dim(), m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) e(i, j) = m(i, j);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(e, Eigen::EigenvaluesOnly);
    const auto& v = solver.eigenvalues();
    return {v.data(), v.data() + v.size()};
}

Matrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = u(rng);
    }
    return m;
}

}  // namespace

TEST(Block, Example1Entries) {
    const auto blk = build_block(autocorrelation(parse_polynomial("1+z+z^3")), 5);
    EXPECT_EQ(blk.dim(), 5u);
    EXPECT_EQ(blk.bandwidth(), 3u);
    EXPECT_EQ(blk(0, 0), 3.0);
    EXPECT_EQ(blk(0, 3), 1.0);
    EXPECT_EQ(blk(4, 0), 0.0);
    EXPECT_TRUE(blk.dense().is_symmetric());
    EXPECT_THROW(build_block(AutocorrSequence({1.0}), 0), std::invalid_argument);
}

TEST(QuadraticForm, Examples) {
    const auto p = parse_polynomial("1+z+z^3");
    const auto b = autocorrelation(p);
    const CoefficientVector e0{0, {1.0}};
    EXPECT_DOUBLE_EQ(apply_quadratic_form(p, e0), 3.0);
    const CoefficientVector ones{0, {1.0, 1.0}};
    EXPECT_DOUBLE_EQ(apply_quadratic_form(p, ones), 8.0);
    EXPECT_DOUBLE_EQ(matrix_quadratic_form(b, ones), 8.0);
    const CoefficientVector three{0, {1.0, 1.0, 1.0}};
    EXPECT_DOUBLE_EQ(matrix_quadratic_form(b, three), 3.0 * 3 + 2.0 * (2 + 1));
    EXPECT_DOUBLE_EQ(apply_quadratic_form(p, CoefficientVector{}), 0.0);
}

TEST(QuadraticForm, ShiftedSupport) {
    const auto p = parse_polynomial("-2+z+z^3");
    const auto b = autocorrelation(p);
    CoefficientVector x{-7, {0.5, -1.0, 2.0, 0.25}};
    const double direct = apply_quadratic_form(p, x);
    x.offset = 100;
    EXPECT_NEAR(apply_quadratic_form(p, x), direct, 1e-12);
    EXPECT_NEAR(matrix_quadratic_form(b, x), direct, 1e-12);
}

TEST(Jacobi, AgreesWithEigenOnRandomMatrices) {
    std::mt19937_64 rng(5);
    for (std::size_t n : {1u, 2u, 3u, 7u, 16u, 40u}) {
        for (int trial = 0; trial < 5; ++trial) {
            const Matrix m = random_symmetric(rng, n);
            const Spectrum s = symmetric_eigenvalues(m);
            const auto ref = eigen_oracle(m);
            ASSERT_EQ(s.eigenvalues.size(), n);
            EXPECT_TRUE(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end()));
            for (std::size_t i = 0; i < n; ++i) {
                EXPECT_NEAR(s.eigenvalues[i], ref[i], 1e-9 * std::max(1.0, m.frobenius_norm()));
            }
            double sum = 0.0;
            for (double v : s.eigenvalues) sum += v;
            EXPECT_NEAR(sum, m.trace(), 1e-9 * std::max(1.0, m.frobenius_norm()));
            EXPECT_LE(s.offdiag_residual, kDefaultEigenTol * m.frobenius_norm() + 1e-300);
        }
    }
}

TEST(Jacobi, Errors) {
    Matrix bad(2);
    bad(0, 1) = 1.0;
    EXPECT_THROW(symmetric_eigenvalues(bad), std::invalid_argument);
    EXPECT_THROW(symmetric_eigenvalues(Matrix{}), std::invalid_argument);
    EXPECT_THROW(symmetric_eigenvalues(Matrix(kMaxEigenDim + 1)), SizeError);
}

TEST(Jacobi, ToeplitzAgainstEigen) {
    const auto b = autocorrelation(parse_polynomial("2+3z^2+4z^3"));
    for (std::size_t d = 1; d <= 30; ++d) {
        const Matrix m = build_block(b, d).dense();
        const auto ref = eigen_oracle(m);
        const auto s = symmetric_eigenvalues(build_block(b, d));
        for (std::size_t i = 0; i < d; ++i) EXPECT_NEAR(s.eigenvalues[i], ref[i], 1e-9);
    }
}

TEST(Blocks, CauchyInterlacingAndPositivity) {
    const auto b = autocorrelation(parse_polynomial("1.5-2z+0.7z^4"));
    std::vector<double> prev = symmetric_eigenvalues(build_block(b, 1)).eigenvalues;
    for (std::size_t d = 2; d <= 25; ++d) {
        const auto cur = symmetric_eigenvalues(build_block(b, d)).eigenvalues;
        for (std::size_t i = 0; i + 1 < d; ++i) {
            EXPECT_LE(cur[i], prev[i] + 1e-10);
            EXPECT_GE(cur[i + 1], prev[i] - 1e-10);
        }
        EXPECT_GE(cur.front(), -1e-10);
        prev = cur;
    }
}

TEST(Blocks, BoundsReport) {
    const std::size_t dims[] = {2, 3, 4, 5};
    const auto r = verify_block_bounds(parse_polynomial("1+z+z^3"), dims);
    EXPECT_TRUE(r.all_within());
    ASSERT_EQ(r.blocks.size(), 4u);
    EXPECT_NEAR(r.blocks[0].spectrum.min(), 2.0, 1e-9);
    EXPECT_NEAR(r.blocks[0].spectrum.max(), 4.0, 1e-9);
    EXPECT_THROW(verify_block_bounds(parse_polynomial("1"), {}), std::invalid_argument);

    const std::size_t three[] = {3};
    const auto c = verify_block_bounds(parse_polynomial("5"), three);
    EXPECT_EQ(c.blocks[0].spectrum.eigenvalues, (std::vector<double>{25, 25, 25}));
}

TEST(MatrixCsv, RoundTripAndErrors) {
    const Matrix m = parse_matrix_csv("# header\n4, -2\n\n-2, 4\n");
    ASSERT_EQ(m.dim(), 2u);
    EXPECT_EQ(m(0, 1), -2.0);
    std::ostringstream out;
    write_matrix_csv(out, m);
    EXPECT_EQ(parse_matrix_csv(out.str()), m);
    EXPECT_THROW(parse_matrix_csv("1,2\n3\n"), ParseError);
    EXPECT_THROW(parse_matrix_csv("1,x\n3,4\n"), ParseError);
}
