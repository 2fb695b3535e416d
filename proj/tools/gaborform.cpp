// gaborform: command-line front end.
//
//   gaborform analyze "1+z+z^3"
//   gaborform blocks "2+3z^2+4z^3" --dims 2..5 --format csv
//   gaborform frame-check "-2+z+z^3" --support 60
//   gaborform factor "3,1,1,1"
//   gaborform repro-paper

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gaborform/circle.hpp"
#include "gaborform/eigen.hpp"
#include "gaborform/error.hpp"
#include "gaborform/factor.hpp"
#include "gaborform/frame.hpp"
#include "gaborform/repro.hpp"
#include "gaborform/report.hpp"
#include "gaborform/toeplitz.hpp"

namespace gf = gaborform;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNegative = 3;

const char* kGrammar = R"(Polynomial syntax:
  term list   a0:n0,a1:n1,...        e.g. "1:0,1:1,1:3"
  expression  sums of c, c*z^k, cz^k, z^k with + and -
              e.g. "1+z+z^3", "-2+z+z^3", "2+3z^2+4z^3", "0.5 - 1.5z^4"
Coefficients are real (integer or decimal); exponents are non-negative
integers. A common factor z^m is divided out. Angles are in radians.)";

std::vector<std::size_t> parse_dims(const std::string& text) {
    std::vector<std::size_t> dims;
    auto to_dim = [&](const std::string& s) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size() || v < 1) {
            throw gf::ParseError(0, "invalid dimension '" + s + "'");
        }
        return static_cast<std::size_t>(v);
    };
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const std::size_t lo = to_dim(text.substr(0, dots));
        const std::size_t hi = to_dim(text.substr(dots + 2));
        if (hi < lo) throw gf::ParseError(dots, "empty dimension range");
        for (std::size_t d = lo; d <= hi; ++d) dims.push_back(d);
        return dims;
    }
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) dims.push_back(to_dim(item));
    if (dims.empty()) throw gf::ParseError(0, "no dimensions given");
    return dims;
}

std::uint64_t effective_seed(std::uint64_t flag) {
    if (const char* env = std::getenv("GABORFORM_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') return v;
        std::cerr << "warning: ignoring non-numeric GABORFORM_SEED\n";
    }
    return flag;
}

std::string join12(const std::vector<double>& values, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += gf::format12(values[i]);
    }
    return out;
}

struct Globals {
    std::string format = "json";
    double tol = -1.0;  // negative: command default
    std::uint64_t seed = 42;
};

int run_analyze(const std::string& poly, const std::string& dims, bool factor,
                double threshold, const Globals& g) {
    const gf::SparsePolynomial p = gf::parse_polynomial(poly);
    gf::AnalysisOptions opts;
    opts.spd_threshold = threshold;
    opts.factor = factor;
    if (g.tol > 0.0) opts.extrema_tol = g.tol;
    if (!dims.empty()) opts.dims = parse_dims(dims);
    const gf::AnalysisReport report = gf::analyze(p, opts);
    if (g.format == "table") {
        std::cout << gf::render_table(report);
    } else {
        std::cout << gf::json(report).dump(2) << '\n';
    }
    return report.spd ? kExitOk : kExitNegative;
}

int run_blocks(const std::string& poly, const std::string& dims, const std::string& matrix_file,
               const Globals& g) {
    const double tol = g.tol > 0.0 ? g.tol : gf::kDefaultEigenTol;
    if (!matrix_file.empty()) {
        std::ifstream in(matrix_file);
        if (!in) throw gf::Error("cannot open " + matrix_file);
        const gf::Spectrum s = gf::symmetric_eigenvalues(gf::read_matrix_csv(in), tol);
        std::vector<double> ev;
        for (double v : s.eigenvalues) ev.push_back(gf::round12(v));
        if (g.format == "json") {
            std::cout << gf::json(ev).dump() << '\n';
        } else {
            std::cout << join12(ev, g.format == "csv" ? "," : "  ") << '\n';
        }
        return kExitOk;
    }
    if (poly.empty()) throw gf::ParseError(0, "blocks needs a polynomial or --matrix");

    const gf::SparsePolynomial p = gf::parse_polynomial(poly);
    const std::vector<std::size_t> d = parse_dims(dims);
    const gf::BlockBoundsReport report = gf::verify_block_bounds(p, d, tol);

    if (g.format == "csv") {
        std::cout << "dim,within_bounds,eigenvalues\n";
        for (const auto& c : report.blocks) {
            std::cout << c.dim << ',' << (c.within_bounds ? "true" : "false") << ','
                      << join12(c.spectrum.eigenvalues, ",") << '\n';
        }
    } else if (g.format == "table") {
        std::cout << "C1 = " << gf::format12(report.bounds.c1)
                  << "   C2 = " << gf::format12(report.bounds.c2) << '\n';
        for (const auto& c : report.blocks) {
            std::cout << "d = " << c.dim << (c.within_bounds ? "  ok    " : "  FAIL  ")
                      << join12(c.spectrum.eigenvalues, "  ") << '\n';
        }
    } else {
        std::cout << gf::to_json(report).dump(2) << '\n';
    }
    return report.all_within() ? kExitOk : kExitNegative;
}

struct FrameCheckArgs {
    int trials = 1000;
    int support = 40;
    int m_max = gf::kDefaultMMax;
    int resolution = 8;
    int fine_trials = 8;
    std::string function_file;
};

int run_frame_check(const std::string& poly, const FrameCheckArgs& a, const Globals& g) {
    if (a.trials < 1 || a.support < 1 || a.m_max < 1 || a.resolution < 1 || a.fine_trials < 1) {
        throw std::invalid_argument("--trials, --support, --mmax, --resolution must be >= 1");
    }
    const std::uint64_t seed = effective_seed(g.seed);
    const gf::SparsePolynomial p = gf::parse_polynomial(poly);
    const gf::FrameVerdict verdict = gf::frame_verdict(p);
    const double eps = 1e-6 * std::max(1.0, verdict.upper_bound);
    const gf::FrameRatioRange ratios = gf::empirical_frame_ratio(p, a.trials, a.support, seed);
    const bool ratios_ok = ratios.min_ratio >= verdict.lower_bound - eps &&
                           ratios.max_ratio <= verdict.upper_bound + eps;
    const gf::FrameSumGap gap =
        gf::frame_sum_consistency(p, a.fine_trials, a.resolution, a.m_max, seed);
    constexpr double kGapTol = 1e-3;
    const bool gap_ok = gap.max_relative_gap <= kGapTol && gap.monotone;

    gf::StepFunction sample;
    if (!a.function_file.empty()) {
        std::ifstream in(a.function_file);
        if (!in) throw gf::Error("cannot open " + a.function_file);
        sample = gf::json::parse(in).get<gf::StepFunction>();
    } else {
        sample = gf::StepFunction::from_sequence(gf::tapered_harmonic(a.support, verdict.spd.bounds.theta_min))
                     .refined(a.resolution);
    }
    const gf::FrameSumResult lemma = gf::frame_sum_lemma(p, sample);
    const gf::FrameSumResult direct = gf::frame_sum_direct(p, sample, a.m_max);

    const bool checks_ok = ratios_ok && gap_ok;
    if (g.format == "table") {
        std::cout << "polynomial      " << gf::to_string(p) << '\n'
                  << "frame wavelet   " << (verdict.is_mother_frame_wavelet ? "yes" : "no")
                  << "   bounds [" << gf::format12(verdict.lower_bound) << ", "
                  << gf::format12(verdict.upper_bound) << "]\n"
                  << "ratios          [" << gf::format12(ratios.min_ratio) << ", "
                  << gf::format12(ratios.max_ratio) << "]  " << (ratios_ok ? "ok" : "FAIL")
                  << "   (" << a.trials << " trials, support " << a.support << ")\n"
                  << "direct vs exact max relative gap " << gf::format12(gap.max_relative_gap)
                  << (gap.monotone ? "" : "  NOT MONOTONE") << "  " << (gap_ok ? "ok" : "FAIL")
                  << '\n'
                  << "sample f: exact " << gf::format12(lemma.value) << "   direct(m<="
                  << a.m_max << ") " << gf::format12(direct.value) << '\n';
    } else {
        gf::json terms = gf::json::array();
        for (const auto& [n, v] : lemma.per_n) {
            const auto it = direct.per_n.find(n);
            terms.push_back({{"n", n},
                             {"exact", gf::round12(v)},
                             {"direct", gf::round12(it == direct.per_n.end() ? 0.0 : it->second)}});
        }
        gf::json out{
            {"polynomial", gf::to_string(p)},
            {"bounds", {{"lower", gf::round12(verdict.lower_bound)},
                        {"upper", gf::round12(verdict.upper_bound)},
                        {"epsilon", gf::round12(eps)}}},
            {"is_mother_frame_wavelet", verdict.is_mother_frame_wavelet},
            {"ratios", {{"min", gf::round12(ratios.min_ratio)},
                        {"max", gf::round12(ratios.max_ratio)},
                        {"trials", a.trials},
                        {"support", a.support},
                        {"within_bounds", ratios_ok}}},
            {"consistency", {{"max_relative_gap", gf::round12(gap.max_relative_gap)},
                             {"tolerance", kGapTol},
                             {"monotone", gap.monotone},
                             {"resolution", a.resolution},
                             {"m_max", a.m_max},
                             {"pass", gap_ok}}},
            {"sample", {{"exact", gf::round12(lemma.value)},
                        {"direct", gf::round12(direct.value)},
                        {"per_n", terms}}},
            {"seed", seed},
        };
        std::cout << out.dump(2) << '\n';
    }
    if (!checks_ok) return kExitCheckFailed;
    return verdict.is_mother_frame_wavelet ? kExitOk : kExitNegative;
}

int run_factor(const std::string& band_text, const Globals& g) {
    const gf::AutocorrSequence band = gf::parse_band(band_text);
    const double tol = g.tol > 0.0 ? g.tol : gf::kDefaultFactorTol;
    try {
        const gf::Factorization f = gf::fejer_riesz_factor(band, tol);
        if (g.format == "json") {
            gf::json terms = gf::json::array();
            for (const auto& t : f.polynomial.terms()) {
                terms.push_back({t.exponent, gf::round12(t.coefficient)});
            }
            gf::json out{{"factorable", true},
                         {"polynomial", gf::to_string(f.polynomial)},
                         {"terms", terms},
                         {"residual", gf::round12(f.residual)},
                         {"warning", f.warning ? gf::json(*f.warning) : gf::json(nullptr)}};
            std::cout << out.dump(2) << '\n';
        } else {
            std::cout << gf::to_string(f.polynomial) << '\n';
            if (g.format == "table") std::cout << "residual " << gf::format12(f.residual) << '\n';
            if (f.warning) std::cerr << "warning: " << *f.warning << '\n';
        }
        return kExitOk;
    } catch (const gf::NotFactorableError& e) {
        if (g.format == "json") {
            std::cout << gf::json{{"factorable", false},
                                  {"min_symbol", gf::round12(e.min_value())},
                                  {"theta", gf::round12(e.theta())}}
                             .dump(2)
                      << '\n';
        } else {
            std::cout << "not factorable: symbol reaches " << gf::format12(e.min_value())
                      << " at theta = " << gf::format12(e.theta()) << '\n';
        }
        return kExitNegative;
    }
}

int run_repro(const Globals& g) {
    const auto items = gf::reproduce_examples();
    bool all = true;
    for (const auto& it : items) all = all && it.pass;
    if (g.format == "json") {
        gf::json arr = gf::json::array();
        for (const auto& it : items) {
            arr.push_back({{"name", it.name},
                           {"pass", it.pass},
                           {"max_delta", gf::round12(it.max_delta)},
                           {"tolerance", it.tolerance},
                           {"detail", it.detail}});
        }
        std::cout << gf::json{{"all_pass", all}, {"items", arr}}.dump(2) << '\n';
    } else {
        for (const auto& it : items) {
            std::cout << (it.pass ? "PASS " : "FAIL ") << it.name << "  delta "
                      << gf::format12(it.max_delta) << "  tol " << gf::format12(it.tolerance)
                      << "  " << it.detail << '\n';
        }
        std::cout << (all ? "all items pass" : "MISMATCH") << '\n';
    }
    return all ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frame wavelets of step-function form and their quadratic forms"};
    app.footer(kGrammar);
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"json", "table", "csv"}));
    app.add_option("--tol", g.tol, "Numerical tolerance (command specific default)");
    app.add_option("--seed", g.seed, "Random seed; GABORFORM_SEED overrides");

    std::string poly, dims, matrix_file, band;
    bool factor = false;
    double threshold = gf::kDefaultSpdThreshold;
    FrameCheckArgs fc;

    auto* analyze = app.add_subcommand("analyze", "Bounds, SPD verdict, unit roots, frame verdict");
    analyze->add_option("polynomial", poly, "Polynomial")->required();
    analyze->add_option("--dims", dims, "Block dimensions, a..b or a,b,c");
    analyze->add_flag("--factor", factor, "Include a spectral factorization of the band");
    analyze->add_option("--threshold", threshold, "SPD threshold on C1")
        ->check(CLI::PositiveNumber);

    auto* blocks = app.add_subcommand("blocks", "Eigenvalues of principal Toeplitz blocks");
    blocks->add_option("polynomial", poly, "Polynomial");
    blocks->add_option("--dims", dims, "Block dimensions, a..b or a,b,c")->default_val("2..5");
    blocks->add_option("--matrix", matrix_file, "Spectrum of a symmetric matrix read from CSV");

    auto* frame = app.add_subcommand("frame-check", "Empirical frame-bound and frame-sum checks");
    frame->add_option("polynomial", poly, "Polynomial")->required();
    frame->add_option("--trials", fc.trials, "Random vectors for the ratio test");
    frame->add_option("--support", fc.support, "Support width of the random vectors");
    frame->add_option("--mmax", fc.m_max, "Modulation cutoff for the direct frame sum");
    frame->add_option("--resolution", fc.resolution, "Subintervals per period for step functions");
    frame->add_option("--fine-trials", fc.fine_trials, "Random step functions for the sum check");
    frame->add_option("--function", fc.function_file, "Step function JSON for the per-n table");

    auto* fac = app.add_subcommand("factor", "Polynomial with a given autocorrelation band");
    fac->add_option("band", band, "Comma separated b_0,b_1,...,b_N")->required();

    auto* repro = app.add_subcommand("repro-paper", "Check the three published worked examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*analyze) return run_analyze(poly, dims, factor, threshold, g);
        if (*blocks) return run_blocks(poly, dims, matrix_file, g);
        if (*frame) return run_frame_check(poly, fc, g);
        if (*fac) return run_factor(band, g);
        if (*repro) return run_repro(g);
    } catch (const gf::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
