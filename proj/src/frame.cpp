#include "gaborform/frame.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "gaborform/error.hpp"

namespace gaborform {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

}  // namespace

StepFunction::StepFunction(int resolution, std::map<std::int64_t, double> values)
    : resolution_(resolution) {
    if (resolution < 1) throw std::invalid_argument("step function resolution must be >= 1");
    for (const auto& [q, v] : values) {
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite step value");
        if (v != 0.0) values_.emplace(q, v);
    }
}

StepFunction StepFunction::from_sequence(const CoefficientVector& x) {
    std::map<std::int64_t, double> values;
    for (std::size_t i = 0; i < x.values.size(); ++i) {
        values[x.offset + static_cast<std::int64_t>(i)] = x.values[i];
    }
    return StepFunction(1, std::move(values));
}

double StepFunction::interval_length() const noexcept { return kTwoPi / resolution_; }

double StepFunction::operator[](std::int64_t q) const {
    const auto it = values_.find(q);
    return it == values_.end() ? 0.0 : it->second;
}

StepFunction StepFunction::refined(int factor) const {
    if (factor < 1) throw std::invalid_argument("refinement factor must be >= 1");
    std::map<std::int64_t, double> out;
    for (const auto& [q, v] : values_) {
        for (int s = 0; s < factor; ++s) out[q * factor + s] = v;
    }
    return StepFunction(resolution_ * factor, std::move(out));
}

double StepFunction::norm_squared() const {
    double s = 0.0;
    for (const auto& [q, v] : values_) s += v * v;
    return interval_length() * s;
}

StepFunction operator+(const StepFunction& a, const StepFunction& b) {
    if (a.resolution_ != b.resolution_) {
        const int l = std::lcm(a.resolution_, b.resolution_);
        return a.refined(l / a.resolution_) + b.refined(l / b.resolution_);
    }
    std::map<std::int64_t, double> out = a.values_;
    for (const auto& [q, v] : b.values_) out[q] += v;
    return StepFunction(a.resolution_, std::move(out));
}

StepFunction operator*(double s, const StepFunction& f) {
    std::map<std::int64_t, double> out;
    for (const auto& [q, v] : f.values_) out[q] = s * v;
    return StepFunction(f.resolution_, std::move(out));
}

IntervalSet::IntervalSet(std::vector<std::int64_t> indices) : indices_(std::move(indices)) {
    if (indices_.empty()) throw std::invalid_argument("interval set is empty");
    std::sort(indices_.begin(), indices_.end());
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
        throw std::invalid_argument("interval indices must be distinct");
    }
}

IntervalSet IntervalSet::from_polynomial(const SparsePolynomial& p) {
    std::vector<std::int64_t> idx;
    for (const auto& t : p.terms()) idx.push_back(t.exponent);
    return IntervalSet(std::move(idx));
}

StepFunction step_window(const SparsePolynomial& p) {
    std::map<std::int64_t, double> values;
    for (const auto& t : p.terms()) values[t.exponent] = t.coefficient;
    return StepFunction(1, std::move(values));
}

std::vector<double> periodize(const StepFunction& f, const IntervalSet& e) {
    const int l = f.resolution();
    std::vector<double> out(static_cast<std::size_t>(l), 0.0);
    for (std::int64_t m : e.indices()) {
        for (int r = 0; r < l; ++r) out[static_cast<std::size_t>(r)] += f[m * l + r];
    }
    return out;
}

double h0_inner_product(const StepFunction& f, const IntervalSet& e) {
    const int l = f.resolution();
    const double h = f.interval_length();
    const std::vector<double> big_f = periodize(f, e);

    // Integral over E of F * f.
    double direct = 0.0;
    double magnitude = 0.0;
    for (std::int64_t m : e.indices()) {
        for (int r = 0; r < l; ++r) {
            const double term = big_f[static_cast<std::size_t>(r)] * f[m * l + r];
            direct += term;
            magnitude += std::abs(term);
        }
    }
    direct *= h;
    magnitude *= h;

    // ||F chi_E||^2 / |E|: F is 2pi-periodic, so every interval of E
    // contributes the same integral.
    double per_interval = 0.0;
    for (double v : big_f) per_interval += v * v;
    const double norm_sq = static_cast<double>(e.size()) * h * per_interval;
    const double via_norm = norm_sq / static_cast<double>(e.size());

    const double scale = std::max({magnitude, std::abs(via_norm), 1e-300});
    if (std::abs(direct - via_norm) > 1e-10 * scale) {
        throw IdentityViolation("<H0_E f, f> mismatch: direct " + std::to_string(direct) +
                                " vs ||F chi_E||^2/(k+1) " + std::to_string(via_norm));
    }
    return via_norm;
}

FrameSumResult frame_sum_lemma(const SparsePolynomial& p, const StepFunction& f) {
    FrameSumResult result;
    if (f.empty()) return result;
    const int l = f.resolution();
    const double h = f.interval_length();
    const std::int64_t lo = floor_div(f.values().begin()->first, l);
    const std::int64_t hi = floor_div(f.values().rbegin()->first, l);

    std::vector<double> fn(static_cast<std::size_t>(l));
    for (std::int64_t n = lo - p.degree(); n <= hi; ++n) {
        std::fill(fn.begin(), fn.end(), 0.0);
        for (const auto& t : p.terms()) {
            const std::int64_t base = (t.exponent + n) * l;
            for (int r = 0; r < l; ++r) fn[static_cast<std::size_t>(r)] += t.coefficient * f[base + r];
        }
        double term = 0.0;
        for (double v : fn) term += v * v;
        term *= h;
        if (term != 0.0) {
            result.per_n[n] = term;
            result.value += term;
        }
    }
    return result;
}

FrameSumResult frame_sum_direct(const SparsePolynomial& p, const StepFunction& f, int m_max) {
    using cd = std::complex<double>;
    if (m_max < 1) throw std::invalid_argument("m_max must be >= 1");
    FrameSumResult result;
    result.truncation_m = m_max;
    if (f.empty()) return result;

    const int l = f.resolution();
    const double h = f.interval_length();
    const std::int64_t lo = floor_div(f.values().begin()->first, l);
    const std::int64_t hi = floor_div(f.values().rbegin()->first, l);

    // e^{-i 2 pi k / L}: subinterval starts are multiples of h, so every
    // phase e^{-i m alpha} is one of these L values.
    std::vector<cd> phase(static_cast<std::size_t>(l));
    for (int k = 0; k < l; ++k) phase[static_cast<std::size_t>(k)] = std::polar(1.0, -kTwoPi * k / l);

    for (std::int64_t n = lo - p.degree(); n <= hi; ++n) {
        // Subintervals of the translated window's support, with weights a_j f_q.
        std::vector<std::pair<std::int64_t, double>> cells;
        for (const auto& t : p.terms()) {
            const std::int64_t base = (t.exponent + n) * l;
            for (int r = 0; r < l; ++r) {
                const double v = f[base + r];
                if (v != 0.0) cells.emplace_back(base + r, t.coefficient * v);
            }
        }
        if (cells.empty()) continue;

        double total = 0.0;
        for (int m = 0; m <= m_max; ++m) {
            // Integral of e^{-imt} over [alpha, alpha + h] is
            // e^{-im alpha} (e^{-imh} - 1) / (-im); it vanishes when mh is a
            // multiple of 2pi.
            double kernel_sq;
            if (m == 0) {
                kernel_sq = h * h;
            } else if (m % l == 0) {
                continue;
            } else {
                const cd k = (std::polar(1.0, -static_cast<double>(m) * h) - 1.0) /
                             cd(0.0, -static_cast<double>(m));
                kernel_sq = std::norm(k);
            }
            cd acc = 0.0;
            for (const auto& [q, w] : cells) {
                acc += w * phase[static_cast<std::size_t>(floor_mod(static_cast<std::int64_t>(m) * q, l))];
            }
            // Real f: the m and -m terms have equal magnitude.
            const double weight = m == 0 ? 1.0 : 2.0;
            total += weight * kernel_sq * std::norm(acc) / kTwoPi;
        }
        if (total != 0.0) {
            result.per_n[n] = total;
            result.value += total;
        }
    }
    return result;
}

FrameVerdict frame_verdict(const SparsePolynomial& p, double threshold, double extrema_tol) {
    FrameVerdict v;
    v.spd = spd_verdict(p, threshold, extrema_tol);
    v.is_mother_frame_wavelet = v.spd.spd;
    v.lower_bound = v.spd.bounds.c1;
    v.upper_bound = v.spd.bounds.c2;
    return v;
}

double frame_ratio(const SparsePolynomial& p, const CoefficientVector& x) {
    const double norm = x.norm_squared();
    if (!(norm > 0.0)) throw std::invalid_argument("frame ratio of the zero vector");
    return apply_quadratic_form(p, x) / norm;
}

CoefficientVector tapered_harmonic(int support, double theta) {
    CoefficientVector x;
    x.values.resize(static_cast<std::size_t>(support));
    for (int n = 0; n < support; ++n) {
        x.values[static_cast<std::size_t>(n)] =
            std::sin(std::numbers::pi * (n + 1) / (support + 1)) * std::cos(n * theta);
    }
    return x;
}

FrameRatioRange empirical_frame_ratio(const SparsePolynomial& p, int trials, int support,
                                      std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (support < 1) throw std::invalid_argument("support must be >= 1");
    const SpectralBounds bounds = circle_extrema(p);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);

    FrameRatioRange range{std::numeric_limits<double>::infinity(),
                          -std::numeric_limits<double>::infinity()};
    for (int t = 0; t < trials; ++t) {
        CoefficientVector x;
        if (t == 0) {
            x = tapered_harmonic(support, bounds.theta_min);
        } else if (t == 1) {
            x = tapered_harmonic(support, bounds.theta_max);
        } else if (t % 2 == 1) {
            x = tapered_harmonic(support, angle(rng));
        } else {
            x.values.resize(static_cast<std::size_t>(support));
            for (double& v : x.values) v = unit(rng);
        }
        if (!(x.norm_squared() > 0.0)) continue;
        const double r = frame_ratio(p, x);
        range.min_ratio = std::min(range.min_ratio, r);
        range.max_ratio = std::max(range.max_ratio, r);
    }
    return range;
}

FrameSumGap frame_sum_consistency(const SparsePolynomial& p, int trials, int resolution,
                                  int m_max, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_int_distribution<int> span(1, 6);

    FrameSumGap gap;
    for (int t = 0; t < trials; ++t) {
        std::map<std::int64_t, double> values;
        const int width = span(rng) * resolution;
        for (int q = 0; q < width; ++q) values[q] = unit(rng);
        const StepFunction f(resolution, std::move(values));

        const double exact = frame_sum_lemma(p, f).value;
        double prev = 0.0;
        for (int m : {std::max(1, m_max / 4), std::max(1, m_max / 2), m_max}) {
            const double v = frame_sum_direct(p, f, m).value;
            if (v < prev) gap.monotone = false;
            prev = v;
        }
        if (exact > 0.0) {
            gap.max_relative_gap = std::max(gap.max_relative_gap, std::abs(exact - prev) / exact);
        }
    }
    return gap;
}

}  // namespace gaborform
