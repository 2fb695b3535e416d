#include "gaborform/circle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "gaborform/error.hpp"

namespace gaborform {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kGoldenMaxIter = 200;
constexpr int kAberthMaxIter = 200;
constexpr double kAberthStep = 1e-14;

struct Refined {
    double theta;
    double value;
};

// Golden-section minimization of f on [lo, hi].
Refined golden_min(const std::function<double(double)>& f, double lo, double hi, double width) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int it = 0; it < kGoldenMaxIter && (hi - lo) > width; ++it) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? Refined{x1, f1} : Refined{x2, f2};
}

// Representative of theta in [0, pi] under theta -> -theta and 2pi periodicity.
double fold_angle(double theta) {
    double t = std::fmod(std::abs(theta), 2.0 * kPi);
    if (t > kPi) t = 2.0 * kPi - t;
    return t;
}

Refined extremum(const std::function<double(double)>& f, std::span<const double> values,
                 double h, double tol) {
    const std::size_t n = values.size();
    auto at = [&](std::ptrdiff_t i) {
        // Even about 0 and about pi.
        if (i < 0) i = -i;
        if (i >= static_cast<std::ptrdiff_t>(n)) i = 2 * static_cast<std::ptrdiff_t>(n - 1) - i;
        return values[static_cast<std::size_t>(i)];
    };

    Refined best{0.0, values[0]};
    for (std::size_t i = 1; i < n; ++i) {
        if (values[i] < best.value) best = {static_cast<double>(i) * h, values[i]};
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto k = static_cast<std::ptrdiff_t>(i);
        const double left = at(k - 1), mid = values[i], right = at(k + 1);
        if (mid > left || mid > right) continue;
        const double curvature = std::abs(left - 2.0 * mid + right) / (h * h);
        const double width = tol / std::max(1.0, curvature);
        const double center = static_cast<double>(i) * h;
        const Refined r = golden_min(f, center - h, center + h, width);
        if (r.value < best.value) best = {fold_angle(r.theta), r.value};
    }
    return best;
}

std::size_t sample_count(std::size_t degree) {
    return std::max<std::size_t>(256, 64 * degree) + 1;
}

}  // namespace

SpectralBounds even_periodic_extrema(const std::function<double(double)>& q, std::size_t samples,
                                     double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("extrema tolerance must be positive");
    samples = std::max<std::size_t>(samples, 3);
    const double h = kPi / static_cast<double>(samples - 1);
    std::vector<double> values(samples);
    for (std::size_t i = 0; i < samples; ++i) values[i] = q(static_cast<double>(i) * h);

    const Refined lo = extremum(q, values, h, tol);

    std::vector<double> negated(values.size());
    std::transform(values.begin(), values.end(), negated.begin(), [](double v) { return -v; });
    const Refined hi = extremum([&q](double t) { return -q(t); }, negated, h, tol);

    return SpectralBounds{lo.value, -hi.value, lo.theta, hi.theta};
}

SpectralBounds circle_extrema(const SparsePolynomial& p, double tol) {
    return even_periodic_extrema([&p](double t) { return p.magnitude_squared(t); },
                                 sample_count(static_cast<std::size_t>(p.degree())), tol);
}

SpectralBounds band_extrema(const AutocorrSequence& b, double tol) {
    return even_periodic_extrema([&b](double t) { return symbol_eval(b, t); },
                                 sample_count(b.degree()), tol);
}

std::vector<std::complex<double>> dense_roots(std::span<const double> coeffs, double tol) {
    using cd = std::complex<double>;
    std::size_t lead = coeffs.size();
    while (lead > 0 && coeffs[lead - 1] == 0.0) --lead;
    if (lead < 2) throw std::invalid_argument("polynomial must have degree >= 1");

    // Exact zero roots are split off so the iteration only sees a_0 != 0.
    std::size_t zeros = 0;
    while (coeffs[zeros] == 0.0) ++zeros;
    const std::span<const double> a = coeffs.subspan(zeros, lead - zeros);
    const std::size_t n = a.size() - 1;

    std::vector<cd> roots(zeros, cd(0.0, 0.0));
    if (n == 0) return roots;

    double scale = 0.0;
    for (double c : a) scale += std::abs(c);

    auto eval = [&](cd z, cd& dp) {
        cd p = a[n];
        dp = 0.0;
        for (std::size_t i = n; i-- > 0;) {
            dp = dp * z + p;
            p = p * z + a[i];
        }
        return p;
    };
    // Bound on the rounding error of Horner's scheme at z.
    auto noise = [&](cd z) {
        const double r = std::abs(z);
        double s = std::abs(a[n]);
        for (std::size_t i = n; i-- > 0;) s = s * r + std::abs(a[i]);
        return 8.0 * static_cast<double>(n) * kEps * s;
    };

    const double radius = std::pow(std::abs(a[0] / a[n]), 1.0 / static_cast<double>(n));
    std::vector<cd> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double angle = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
        z[k] = std::polar(radius, angle);
    }

    for (int iter = 0; iter < kAberthMaxIter; ++iter) {
        bool converged = true;
        for (std::size_t k = 0; k < n; ++k) {
            cd dp;
            const cd p = eval(z[k], dp);
            if (std::abs(p) <= noise(z[k])) continue;
            const cd ratio = dp == cd(0.0) ? cd(radius * 1e-3) : p / dp;
            cd repulsion = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != k) repulsion += 1.0 / (z[k] - z[j]);
            }
            const cd step = ratio / (1.0 - ratio * repulsion);
            z[k] -= step;
            if (std::abs(step) >= kAberthStep * std::abs(z[k])) converged = false;
        }
        if (converged) break;
    }

    double worst = 0.0;
    for (const cd& r : z) {
        cd dp;
        const double bound = tol * scale * std::pow(std::max(1.0, std::abs(r)), n);
        worst = std::max(worst, std::abs(eval(r, dp)) / bound);
    }
    if (!(worst <= 1.0)) {
        throw ConvergenceError("Aberth iteration did not converge; worst scaled residual " +
                                   std::to_string(worst),
                               worst);
    }
    roots.insert(roots.end(), z.begin(), z.end());
    std::sort(roots.begin(), roots.end(), [](const cd& x, const cd& y) {
        if (std::arg(x) != std::arg(y)) return std::arg(x) < std::arg(y);
        return std::abs(x) < std::abs(y);
    });
    return roots;
}

std::vector<std::complex<double>> polynomial_roots(const SparsePolynomial& p, double tol) {
    if (p.degree() < 1) throw std::invalid_argument("polynomial must have degree >= 1");
    const std::vector<double> a = p.dense();
    return dense_roots(a, tol);
}

UnitRootReport spd_verdict(const SparsePolynomial& p, double threshold, double extrema_tol) {
    if (!(threshold > 0.0)) throw std::invalid_argument("spd threshold must be positive");
    UnitRootReport report;
    report.bounds = circle_extrema(p, std::min(extrema_tol, 0.1 * threshold));
    report.spd = report.bounds.c1 > threshold;
    if (p.degree() >= 1) {
        const double margin = std::sqrt(threshold);
        for (const auto& r : polynomial_roots(p)) {
            const double modulus = std::abs(r);
            if (std::abs(modulus - 1.0) >= margin) continue;
            double theta = std::arg(r);
            // Real roots come back with rounding-level imaginary parts.
            if (std::abs(r.imag()) <= 64.0 * kEps * modulus) theta = r.real() > 0.0 ? 0.0 : kPi;
            if (theta < 0.0) theta += 2.0 * kPi;
            if (theta >= 2.0 * kPi) theta = 0.0;
            report.roots.push_back({theta, std::abs(p(std::polar(1.0, theta))), modulus});
        }
    }
    return report;
}

}  // namespace gaborform
