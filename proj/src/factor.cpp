#include "gaborform/factor.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>

#include "gaborform/circle.hpp"
#include "gaborform/error.hpp"

namespace gaborform {

namespace {

using cd = std::complex<double>;

// Roots closer than this are treated as one repeated root on the circle.
constexpr double kClusterRadius = 1e-4;

std::vector<double> monic_from_roots(const std::vector<cd>& roots) {
    std::vector<cd> c{cd(1.0)};
    for (const cd& r : roots) {
        std::vector<cd> next(c.size() + 1, cd(0.0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    std::vector<double> out(c.size());
    std::transform(c.begin(), c.end(), out.begin(), [](const cd& v) { return v.real(); });
    return out;
}

// Groups unit roots into clusters of nearby points.
std::vector<std::vector<cd>> cluster(const std::vector<cd>& roots) {
    std::vector<std::size_t> parent(roots.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (std::abs(roots[i] - roots[j]) < kClusterRadius) parent[find(i)] = find(j);
        }
    }
    std::vector<std::vector<cd>> groups;
    std::vector<std::ptrdiff_t> slot(roots.size(), -1);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const std::size_t r = find(i);
        if (slot[r] < 0) {
            slot[r] = static_cast<std::ptrdiff_t>(groups.size());
            groups.emplace_back();
        }
        groups[static_cast<std::size_t>(slot[r])].push_back(roots[i]);
    }
    // Conjugate clusters end up adjacent after sorting by angle magnitude.
    std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
        return std::abs(std::arg(a.front())) < std::abs(std::arg(b.front()));
    });
    return groups;
}

}  // namespace

Factorization fejer_riesz_factor(const AutocorrSequence& band, double tol) {
    std::vector<double> b(band.values().begin(), band.values().end());
    while (b.size() > 1 && b.back() == 0.0) b.pop_back();
    const AutocorrSequence trimmed(b);
    const std::size_t n = trimmed.degree();

    if (!(b[0] > 0.0)) throw NotFactorableError(b[0], 0.0);
    const SpectralBounds bounds = band_extrema(trimmed);
    if (bounds.c1 < -tol * std::max(1.0, b[0])) {
        throw NotFactorableError(bounds.c1, bounds.theta_min);
    }
    if (n == 0) {
        return {SparsePolynomial::constant(std::sqrt(b[0])), 0.0, std::nullopt};
    }

    // z^N times the Laurent symbol sum_{|m|<=N} b_|m| z^m.
    std::vector<double> laurent(2 * n + 1);
    for (std::size_t k = 0; k <= 2 * n; ++k) laurent[k] = b[k > n ? k - n : n - k];
    const std::vector<cd> roots = dense_roots(laurent);

    std::vector<cd> inside, outside, unit;
    for (const cd& r : roots) {
        const double m = std::abs(r);
        if (std::abs(m - 1.0) < kRootPairTol) {
            unit.push_back(r);
        } else {
            (m < 1.0 ? inside : outside).push_back(r);
        }
    }

    std::optional<std::string> warning;
    auto warn = [&warning](const std::string& msg) {
        warning = warning ? *warning + "; " + msg : msg;
    };

    if (inside.size() != outside.size()) warn("reciprocal root pairing is unbalanced");
    for (const cd& r : inside) {
        double best = std::numeric_limits<double>::infinity();
        for (const cd& s : outside) best = std::min(best, std::abs(r * std::conj(s) - 1.0));
        if (best >= kRootPairTol) {
            warn("root without reciprocal partner");
            break;
        }
    }

    std::vector<cd> chosen = inside;
    // Odd clusters alternate between rounding up and down so the total stays
    // N; a conjugate pair of clusters shares one choice.
    bool round_up = false;
    double last_odd_angle = -1.0;
    for (const auto& group : cluster(unit)) {
        cd centre = std::accumulate(group.begin(), group.end(), cd(0.0));
        centre /= std::abs(centre);
        std::size_t take = group.size() / 2;
        if (group.size() % 2 == 1) {
            warn("unit root of odd multiplicity; factorization is degenerate");
            const double angle = std::abs(std::arg(centre));
            if (std::abs(angle - last_odd_angle) > kClusterRadius) round_up = !round_up;
            last_odd_angle = angle;
            if (round_up) ++take;
        }
        chosen.insert(chosen.end(), take, centre);
    }
    if (chosen.size() != n) {
        warn("selected " + std::to_string(chosen.size()) + " roots, expected " +
             std::to_string(n));
    }

    std::vector<double> r = monic_from_roots(chosen);
    // Lag-N autocorrelation of the monic factor is r_0 * r_N = r_0.
    double scale2 = r.size() == n + 1 ? b[n] / r[0] : -1.0;
    if (!(scale2 > 0.0)) {
        warn("leading-product scaling failed; matched b_0 instead");
        double energy = 0.0;
        for (double v : r) energy += v * v;
        scale2 = b[0] / energy;
    }
    const double scale = std::sqrt(scale2);
    for (double& v : r) v *= scale;

    SparsePolynomial poly = SparsePolynomial::from_dense(r);
    const AutocorrSequence got = autocorrelation(poly);
    double residual = 0.0;
    for (std::size_t m = 0; m < std::max(b.size(), got.values().size()); ++m) {
        residual = std::max(residual, std::abs(got[m] - trimmed[m]));
    }
    return {std::move(poly), residual, warning};
}

}  // namespace gaborform
