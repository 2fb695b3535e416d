#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gaborform/circle.hpp"
#include "gaborform/polynomial.hpp"
#include "gaborform/toeplitz.hpp"

namespace gaborform {

inline constexpr int kDefaultMMax = 20000;

/// Real step function on the lattice of subintervals
/// [2 pi q / L, 2 pi (q + 1) / L), q in Z, with finitely many nonzero values.
class StepFunction {
public:
    /// Throws std::invalid_argument if resolution < 1.
    explicit StepFunction(int resolution = 1, std::map<std::int64_t, double> values = {});

    /// f = x_n on [0, 2pi) + 2 pi n.
    static StepFunction from_sequence(const CoefficientVector& x);

    int resolution() const noexcept { return resolution_; }
    double interval_length() const noexcept;
    const std::map<std::int64_t, double>& values() const noexcept { return values_; }
    bool empty() const noexcept { return values_.empty(); }

    double operator[](std::int64_t q) const;

    /// Same function on a lattice `factor` times finer.
    StepFunction refined(int factor) const;

    double norm_squared() const;

    friend StepFunction operator+(const StepFunction& a, const StepFunction& b);
    friend StepFunction operator*(double s, const StepFunction& f);
    friend bool operator==(const StepFunction&, const StepFunction&) = default;

private:
    int resolution_;
    std::map<std::int64_t, double> values_;
};

/// E = union over m of [0, 2pi) + 2 pi m for the listed m.
class IntervalSet {
public:
    /// Throws std::invalid_argument on duplicate or empty input.
    explicit IntervalSet(std::vector<std::int64_t> indices);

    static IntervalSet from_polynomial(const SparsePolynomial& p);

    const std::vector<std::int64_t>& indices() const noexcept { return indices_; }
    std::size_t size() const noexcept { return indices_.size(); }

private:
    std::vector<std::int64_t> indices_;
};

/// Window g = sum_j a_j chi_{[0,2pi) + 2 pi n_j}, as an L = 1 step function.
StepFunction step_window(const SparsePolynomial& p);

/// Values on the L subintervals of [0, 2pi) of F(xi) = sum_{m in E} f(xi + 2 pi m).
/// H0_E f equals F * chi_E.
std::vector<double> periodize(const StepFunction& f, const IntervalSet& e);

/// <H0_E f, f>, computed both as the integral over E of F f and as
/// ||F chi_E||^2 / |E|. Throws IdentityViolation if they differ by more than
/// 1e-10 relative.
double h0_inner_product(const StepFunction& f, const IntervalSet& e);

struct FrameSumResult {
    double value = 0.0;
    std::optional<int> truncation_m;  // nullopt: exact
    std::map<std::int64_t, double> per_n;
};

/// sum_n ||F_n chi_[0,2pi)||^2 with F_n(xi) = sum_j a_j f(xi + 2 pi (n_j + n)).
FrameSumResult frame_sum_lemma(const SparsePolynomial& p, const StepFunction& f);

/// sum_{|m| <= m_max} sum_n |<(2pi)^{-1/2} e^{imt} g(t - 2 pi n), f>|^2 from
/// closed-form interval integrals. Throws std::invalid_argument if m_max < 1.
FrameSumResult frame_sum_direct(const SparsePolynomial& p, const StepFunction& f,
                                int m_max = kDefaultMMax);

struct FrameVerdict {
    bool is_mother_frame_wavelet = false;
    double lower_bound = 0.0;
    double upper_bound = 0.0;
    UnitRootReport spd;
};

FrameVerdict frame_verdict(const SparsePolynomial& p, double threshold = kDefaultSpdThreshold,
                           double extrema_tol = kDefaultExtremaTol);

/// Quadratic form over ||x||^2. Throws std::invalid_argument for x = 0.
double frame_ratio(const SparsePolynomial& p, const CoefficientVector& x);

struct FrameRatioRange {
    double min_ratio = 0.0;
    double max_ratio = 0.0;
};

/// Extremes of frame_ratio over `trials` vectors supported on [0, support).
/// The first two trials are sine-tapered harmonics at the symbol's minimizer
/// and maximizer; the rest alternate uniform random vectors and tapered
/// harmonics at random angles.
FrameRatioRange empirical_frame_ratio(const SparsePolynomial& p, int trials, int support,
                                      std::uint64_t seed = 42);

/// x_n = sin(pi (n + 1) / (W + 1)) cos(n theta), n = 0..W-1.
CoefficientVector tapered_harmonic(int support, double theta);

struct FrameSumGap {
    double max_relative_gap = 0.0;
    bool monotone = true;
};

/// Compares frame_sum_direct at m_max against frame_sum_lemma for `trials`
/// random step functions of the given resolution, and checks that the direct
/// sum does not decrease from m_max / 4 to m_max / 2 to m_max.
FrameSumGap frame_sum_consistency(const SparsePolynomial& p, int trials, int resolution,
                                  int m_max, std::uint64_t seed = 42);

}  // namespace gaborform
