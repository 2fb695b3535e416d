// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "gaborform/circle.hpp"
#include "gaborform/error.hpp"
#include "gaborform/factor.hpp"
#include "gaborform/frame.hpp"
#include "gaborform/repro.hpp"
#include "gaborform/toeplitz.hpp"

using namespace gaborform;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

struct Outcome {
    bool pass = true;
    std::string detail;
};

void require(Outcome& o, bool ok, const std::string& what) {
    if (!ok && o.pass) o.detail = what;
    o.pass = o.pass && ok;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

// k <= 4 extra terms, exponents <= 8, coefficients in [-5, 5] without 0.
SparsePolynomial random_poly(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> mag(1e-3, 5.0);
    std::bernoulli_distribution sign(0.5);
    std::uniform_int_distribution<int> k(0, 4), expo(1, 8);
    auto coef = [&] { return sign(rng) ? mag(rng) : -mag(rng); };
    std::vector<Term> terms{{0, coef()}};
    std::vector<int> used{0};
    const int extra = k(rng);
    while (static_cast<int>(terms.size()) < extra + 1) {
        const int e = expo(rng);
        if (std::find(used.begin(), used.end(), e) != used.end()) continue;
        used.push_back(e);
        terms.push_back({e, coef()});
    }
    return SparsePolynomial(terms);
}

double item_delta(const std::vector<ReproItem>& items, const std::string& name, bool& pass) {
    for (const auto& it : items) {
        if (it.name == name) {
            pass = pass && it.pass;
            return it.max_delta;
        }
    }
    pass = false;
    return INFINITY;
}

Outcome criterion1() {
    Outcome o;
    const auto p = parse_polynomial("1+z+z^3");
    const auto b = circle_extrema(p);
    require(o, std::abs(b.c2 - 9.0) <= 1e-9, "c2 off");
    require(o, std::abs(b.c1 - 0.3689) <= 1e-3, "c1 off printed value");
    double brute = INFINITY;
    constexpr int kSamples = 1000000;
    for (int s = 0; s < kSamples; ++s) brute = std::min(brute, p.magnitude_squared(kTwoPi * s / kSamples));
    require(o, std::abs(b.c1 - brute) <= 1e-6, "c1 off brute force");
    o.detail = fmt("c1 = %.10f (brute %.10f), c2 = %.12g", b.c1, brute, b.c2) +
               (o.pass ? "" : "; " + o.detail);
    return o;
}

Outcome spectra_criterion(const std::vector<std::string>& names) {
    Outcome o;
    const auto items = reproduce_examples();
    double worst = 0.0;
    for (const auto& n : names) {
        bool ok = true;
        worst = std::max(worst, item_delta(items, n, ok));
        require(o, ok, n + " mismatch");
    }
    o.detail = fmt("max |delta| = %.3g", worst) + (o.pass ? "" : "; " + o.detail);
    return o;
}

Outcome criterion3() {
    Outcome o;
    const auto b = circle_extrema(parse_polynomial("2+3z^2+4z^3"));
    require(o, std::abs(b.c1 - 1.0) <= 1e-6 && std::abs(b.c2 - 81.0) <= 1e-6, "bounds off");
    const Outcome s = spectra_criterion({"example2.B2", "example2.B3", "example2.B4", "example2.B5"});
    require(o, s.pass, s.detail);
    o.detail = fmt("bounds (%.12g, %.12g); ", b.c1, b.c2) + s.detail;
    return o;
}

Outcome criterion4() {
    Outcome o;
    const auto p = parse_polynomial("-2+z+z^3");
    double best = INFINITY, residual = INFINITY;
    for (auto z : polynomial_roots(p)) {
        if (std::abs(z - 1.0) < best) {
            best = std::abs(z - 1.0);
            residual = std::abs(p(z));
        }
    }
    require(o, best <= 1e-8 && residual <= 1e-10, "no root at z = 1");
    require(o, !spd_verdict(p).spd, "spd verdict true");
    const auto band = autocorrelation(p);
    require(o, std::vector<double>(band.values().begin(), band.values().end()) == std::vector<double>{6, -2, 1, -2},
            "autocorrelation differs");
    const Outcome s = spectra_criterion({"example3.C2.literal", "example3.C3.literal",
                                         "example3.C4.literal", "example3.C5.literal",
                                         "example3.diagonal_discrepancy"});
    require(o, s.pass, s.detail);
    o.detail = fmt("root |z-1| = %.2g, |p| = %.2g; ", best, residual) +
               "b = (6,-2,1,-2), discrepancy flagged; " + s.detail;
    return o;
}

Outcome criterion5() {
    Outcome o;
    std::mt19937_64 rng(5);
    double worst_excess = -INFINITY;
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = random_poly(rng);
        const auto bounds = circle_extrema(p);
        const double eps = 1e-6 * std::max(1.0, bounds.c2);
        const auto band = autocorrelation(p);
        double prev_min = INFINITY;
        for (std::size_t d = 1; d <= 40; ++d) {
            const auto s = symmetric_eigenvalues(build_block(band, d));
            worst_excess = std::max({worst_excess, (bounds.c1 - s.min()) / std::max(1.0, bounds.c2),
                                     (s.max() - bounds.c2) / std::max(1.0, bounds.c2)});
            require(o, s.min() >= bounds.c1 - eps && s.max() <= bounds.c2 + eps,
                    "eigenvalue outside [C1, C2] for " + to_string(p));
            require(o, s.min() <= prev_min + 1e-12 * std::max(1.0, bounds.c2),
                    "min eigenvalue increased for " + to_string(p));
            prev_min = s.min();
        }
    }
    o.detail = fmt("200 polynomials x dims 1..40; worst relative excess %.3g", worst_excess) +
               (o.pass ? "" : "; " + o.detail);
    return o;
}

Outcome criterion6() {
    Outcome o;
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::uniform_int_distribution<int> len(1, 30), off(-20, 20);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto p = random_poly(rng);
        CoefficientVector x{off(rng), std::vector<double>(static_cast<std::size_t>(len(rng)))};
        for (double& v : x.values) v = u(rng);
        const double diff = std::abs(apply_quadratic_form(p, x) -
                                     matrix_quadratic_form(autocorrelation(p), x));
        worst = std::max(worst, diff / x.norm_squared());
    }
    require(o, worst <= 1e-9, "quadratic forms differ");
    o.detail = fmt("1000 cases; worst |diff| / ||x||^2 = %.3g", worst);
    return o;
}

Outcome criterion7() {
    Outcome o;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_int_distribution<int> len(1, 25), off(-10, 10);
    double worst = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
        const auto p = random_poly(rng);
        CoefficientVector x{off(rng), std::vector<double>(static_cast<std::size_t>(len(rng)))};
        for (double& v : x.values) v = u(rng);
        const double want = kTwoPi * apply_quadratic_form(p, x);
        const double got = frame_sum_lemma(p, StepFunction::from_sequence(x)).value;
        worst = std::max(worst, std::abs(got - want) / std::max(want, 1e-300));
    }
    require(o, worst <= 1e-10, "exact frame sum differs from 2 pi times the form");

    FrameSumGap gap;
    for (int i = 0; i < 4; ++i) {
        const auto g = frame_sum_consistency(random_poly(rng), 2, 8, kDefaultMMax, 70 + i);
        gap.max_relative_gap = std::max(gap.max_relative_gap, g.max_relative_gap);
        gap.monotone = gap.monotone && g.monotone;
    }
    require(o, gap.max_relative_gap <= 1e-3, "direct sum gap too large");
    require(o, gap.monotone, "direct sum not monotone in m_max");
    o.detail = fmt("L=1: 500 cases, worst rel %.3g; L=8, m_max=20000: worst gap %.3g, ", worst,
                   gap.max_relative_gap) +
               (gap.monotone ? "monotone" : "NOT monotone");
    return o;
}

Outcome criterion8() {
    Outcome o;
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<int> res(1, 8), len(1, 60), off(-30, 30), count(1, 6),
        idx(-6, 6);
    int checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int l = res(rng);
        std::map<std::int64_t, double> v;
        const int n = len(rng), start = off(rng);
        for (int q = 0; q < n; ++q) v[start + q] = u(rng);
        std::vector<std::int64_t> e;
        const int k = count(rng);
        while (static_cast<int>(e.size()) < k) {
            const int m = idx(rng);
            if (std::find(e.begin(), e.end(), m) == e.end()) e.push_back(m);
        }
        try {
            h0_inner_product(StepFunction(l, v), IntervalSet(e));
            ++checked;
        } catch (const IdentityViolation& ex) {
            require(o, false, ex.what());
        }
    }
    o.detail = fmt("%.0f of 1000 cases agree within 1e-10 relative", checked);
    return o;
}

Outcome criterion9() {
    Outcome o;
    std::mt19937_64 rng(9);
    int bands = 0, attempts = 0;
    double worst = 0.0;
    while (bands < 100 && attempts < 10000) {
        ++attempts;
        const auto b = autocorrelation(random_poly(rng));
        if (!(band_extrema(b).c1 > 1e-3)) continue;
        ++bands;
        try {
            const auto f = fejer_riesz_factor(b);
            const auto got = autocorrelation(f.polynomial);
            for (std::size_t m = 0; m <= std::max(b.degree(), got.degree()); ++m) {
                worst = std::max(worst, std::abs(got[m] - b[m]));
            }
        } catch (const Error& ex) {
            require(o, false, ex.what());
        }
    }
    require(o, bands == 100, "could not draw 100 bands");
    require(o, worst <= 1e-6, "roundtrip error too large");
    bool rejected = false;
    try {
        fejer_riesz_factor(parse_band("1,1"));
    } catch (const NotFactorableError&) {
        rejected = true;
    }
    require(o, rejected, "\"1,1\" was factored");
    o.detail = fmt("100 bands, worst |r*r - b|_inf = %.3g; \"1,1\" ", worst) +
               (rejected ? "rejected" : "ACCEPTED") + (o.pass ? "" : "; " + o.detail);
    return o;
}

Outcome criterion10() {
    Outcome o;
    const AutocorrSequence band({6, -2, 1, -2});
    std::string mins;
    double prev = INFINITY, last = INFINITY;
    for (std::size_t d : {5u, 10u, 20u, 40u, 80u}) {
        const double m = symmetric_eigenvalues(build_block(band, d)).min();
        require(o, m > 0.0, "non-positive minimum");
        require(o, m < prev, "minimum did not decrease");
        prev = last = m;
        mins += (mins.empty() ? "" : ", ") + fmt("%.4g", m);
    }
    require(o, last < 0.05, "dim-80 minimum not below 0.05");
    o.detail = "min eigenvalue at dims 5,10,20,40,80: " + mins;
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"first example bounds", criterion1},
        {"first example spectra",
         [] { return spectra_criterion({"example1.A2", "example1.A3", "example1.A4", "example1.A5"}); }},
        {"second example bounds and spectra", criterion3},
        {"third example roots, verdict, literal spectra", criterion4},
        {"block eigenvalues within symbol range", criterion5},
        {"quadratic form equals banded matrix form", criterion6},
        {"frame sum identity and direct sum convergence", criterion7},
        {"periodization inner product identity", criterion8},
        {"spectral factorization roundtrip", criterion9},
        {"non-definite block minimum decays", criterion10},
    };
    int failures = 0;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& ex) {
            o = {false, std::string("exception: ") + ex.what()};
        }
        failures += o.pass ? 0 : 1;
        std::printf("%s criterion %zu: %s -- %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d of %zu criteria passed in %.1f s\n",
                static_cast<int>(criteria.size()) - failures, criteria.size(), secs);
    return failures == 0 ? 0 : 1;
}
