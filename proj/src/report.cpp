#include "gaborform/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace gaborform {

double round12(double v) {
    if (!std::isfinite(v) || v == 0.0) return v;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

std::string format12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

std::vector<std::pair<std::int64_t, double>> term_list(const SparsePolynomial& p) {
    std::vector<std::pair<std::int64_t, double>> out;
    for (const auto& t : p.terms()) out.emplace_back(t.exponent, round12(t.coefficient));
    return out;
}

json terms_json(const std::vector<std::pair<std::int64_t, double>>& terms) {
    json arr = json::array();
    for (const auto& [e, c] : terms) arr.push_back({e, c});
    return arr;
}

std::vector<std::pair<std::int64_t, double>> terms_from(const json& j) {
    std::vector<std::pair<std::int64_t, double>> out;
    for (const auto& t : j) out.emplace_back(t.at(0).get<std::int64_t>(), t.at(1).get<double>());
    return out;
}

}  // namespace

AnalysisReport analyze(const SparsePolynomial& p, const AnalysisOptions& options) {
    AnalysisReport r;
    r.polynomial = to_string(p);
    r.terms = term_list(p);
    r.shift = p.shift();
    const AutocorrSequence band = autocorrelation(p);
    for (double b : band.values()) r.autocorrelation.push_back(round12(b));

    const FrameVerdict verdict = frame_verdict(p, options.spd_threshold, options.extrema_tol);
    const SpectralBounds& bounds = verdict.spd.bounds;
    r.c1 = round12(bounds.c1);
    r.c2 = round12(bounds.c2);
    r.theta_min = round12(bounds.theta_min);
    r.theta_max = round12(bounds.theta_max);
    r.spd_threshold = options.spd_threshold;
    r.spd = verdict.spd.spd;
    for (const auto& u : verdict.spd.roots) {
        r.unit_roots.push_back({round12(u.theta), round12(u.residual), round12(u.modulus)});
    }
    r.is_mother_frame_wavelet = verdict.is_mother_frame_wavelet;
    r.lower_frame_bound = round12(verdict.lower_bound);
    r.upper_frame_bound = round12(verdict.upper_bound);

    if (!options.dims.empty()) {
        const BlockBoundsReport blocks = verify_block_bounds(p, options.dims);
        for (const auto& c : blocks.blocks) {
            BlockRow row{c.dim, {}, c.within_bounds};
            for (double v : c.spectrum.eigenvalues) row.eigenvalues.push_back(round12(v));
            r.blocks.push_back(std::move(row));
        }
    }
    if (options.factor) {
        const Factorization f = fejer_riesz_factor(autocorrelation(p));
        r.factorization = FactorEntry{to_string(f.polynomial), term_list(f.polynomial),
                                      round12(f.residual), f.warning};
    }
    return r;
}

bool is_consistent(const AnalysisReport& r) {
    return r.spd == (r.c1 > r.spd_threshold) && r.spd == r.is_mother_frame_wavelet &&
           r.lower_frame_bound == r.c1 && r.upper_frame_bound == r.c2;
}

void to_json(json& j, const AnalysisReport& r) {
    json roots = json::array();
    for (const auto& u : r.unit_roots) {
        roots.push_back({{"theta", u.theta}, {"residual", u.residual}, {"modulus", u.modulus}});
    }
    json blocks = json::array();
    for (const auto& b : r.blocks) {
        blocks.push_back(
            {{"dim", b.dim}, {"eigenvalues", b.eigenvalues}, {"within_bounds", b.within_bounds}});
    }
    j = json{
        {"polynomial", {{"text", r.polynomial}, {"terms", terms_json(r.terms)}, {"shift", r.shift}}},
        {"autocorrelation", r.autocorrelation},
        {"bounds",
         {{"c1", r.c1}, {"c2", r.c2}, {"theta_min", r.theta_min}, {"theta_max", r.theta_max}}},
        {"spd", {{"strongly_positive_definite", r.spd}, {"threshold", r.spd_threshold}}},
        {"unit_roots", roots},
        {"blocks", blocks},
        {"frame",
         {{"is_mother_frame_wavelet", r.is_mother_frame_wavelet},
          {"lower_bound", r.lower_frame_bound},
          {"upper_bound", r.upper_frame_bound}}},
    };
    if (r.factorization) {
        const auto& f = *r.factorization;
        j["factorization"] = {{"polynomial", f.polynomial},
                              {"terms", terms_json(f.terms)},
                              {"residual", f.residual},
                              {"warning", f.warning ? json(*f.warning) : json(nullptr)}};
    } else {
        j["factorization"] = nullptr;
    }
}

void from_json(const json& j, AnalysisReport& r) {
    const json& poly = j.at("polynomial");
    r.polynomial = poly.at("text").get<std::string>();
    r.terms = terms_from(poly.at("terms"));
    r.shift = poly.at("shift").get<std::int64_t>();
    r.autocorrelation = j.at("autocorrelation").get<std::vector<double>>();
    const json& bounds = j.at("bounds");
    r.c1 = bounds.at("c1").get<double>();
    r.c2 = bounds.at("c2").get<double>();
    r.theta_min = bounds.at("theta_min").get<double>();
    r.theta_max = bounds.at("theta_max").get<double>();
    r.spd = j.at("spd").at("strongly_positive_definite").get<bool>();
    r.spd_threshold = j.at("spd").at("threshold").get<double>();
    r.unit_roots.clear();
    for (const auto& u : j.at("unit_roots")) {
        r.unit_roots.push_back({u.at("theta").get<double>(), u.at("residual").get<double>(),
                                u.at("modulus").get<double>()});
    }
    r.blocks.clear();
    for (const auto& b : j.at("blocks")) {
        r.blocks.push_back({b.at("dim").get<std::size_t>(),
                            b.at("eigenvalues").get<std::vector<double>>(),
                            b.at("within_bounds").get<bool>()});
    }
    const json& frame = j.at("frame");
    r.is_mother_frame_wavelet = frame.at("is_mother_frame_wavelet").get<bool>();
    r.lower_frame_bound = frame.at("lower_bound").get<double>();
    r.upper_frame_bound = frame.at("upper_bound").get<double>();
    r.factorization.reset();
    if (j.contains("factorization") && !j.at("factorization").is_null()) {
        const json& f = j.at("factorization");
        FactorEntry e;
        e.polynomial = f.at("polynomial").get<std::string>();
        e.terms = terms_from(f.at("terms"));
        e.residual = f.at("residual").get<double>();
        if (!f.at("warning").is_null()) e.warning = f.at("warning").get<std::string>();
        r.factorization = std::move(e);
    }
}

void to_json(json& j, const StepFunction& f) {
    json entries = json::array();
    for (const auto& [q, v] : f.values()) entries.push_back({q, v});
    j = json{{"resolution", f.resolution()}, {"entries", entries}};
}

void from_json(const json& j, StepFunction& f) {
    std::map<std::int64_t, double> values;
    for (const auto& e : j.at("entries")) {
        if (!e.is_array() || e.size() != 2) {
            throw json::type_error::create(302, "step function entry must be [index, value]", &e);
        }
        values[e.at(0).get<std::int64_t>()] += e.at(1).get<double>();
    }
    f = StepFunction(j.at("resolution").get<int>(), std::move(values));
}

json to_json(const FrameSumResult& r) {
    json terms = json::array();
    for (const auto& [n, v] : r.per_n) terms.push_back({{"n", n}, {"term", round12(v)}});
    return json{{"value", round12(r.value)},
                {"truncation_m", r.truncation_m ? json(*r.truncation_m) : json("exact")},
                {"per_n", terms}};
}

json to_json(const BlockBoundsReport& r) {
    json rows = json::array();
    for (const auto& c : r.blocks) {
        std::vector<double> ev;
        for (double v : c.spectrum.eigenvalues) ev.push_back(round12(v));
        rows.push_back({{"dim", c.dim},
                        {"eigenvalues", ev},
                        {"min", round12(c.spectrum.min())},
                        {"max", round12(c.spectrum.max())},
                        {"within_bounds", c.within_bounds}});
    }
    return json{{"c1", round12(r.bounds.c1)},
                {"c2", round12(r.bounds.c2)},
                {"epsilon", round12(r.epsilon)},
                {"all_within_bounds", r.all_within()},
                {"blocks", rows}};
}

std::string render_table(const AnalysisReport& r) {
    std::ostringstream out;
    out << "polynomial        " << r.polynomial;
    if (r.shift != 0) out << "   (divided by z^" << r.shift << ")";
    out << "\nautocorrelation  ";
    for (double b : r.autocorrelation) out << ' ' << format12(b);
    out << "\nmin |p|^2 (C1)    " << format12(r.c1) << "   at theta = " << format12(r.theta_min)
        << "\nmax |p|^2 (C2)    " << format12(r.c2) << "   at theta = " << format12(r.theta_max)
        << "\nstrongly pos. def " << (r.spd ? "yes" : "no") << "   (threshold "
        << format12(r.spd_threshold) << ")"
        << "\nframe wavelet     " << (r.is_mother_frame_wavelet ? "yes" : "no")
        << "   bounds [" << format12(r.lower_frame_bound) << ", "
        << format12(r.upper_frame_bound) << "]\n";
    if (!r.unit_roots.empty()) {
        out << "unit roots\n";
        for (const auto& u : r.unit_roots) {
            out << "  theta = " << format12(u.theta) << "   |z| = " << format12(u.modulus)
                << "   residual = " << format12(u.residual) << '\n';
        }
    }
    for (const auto& b : r.blocks) {
        out << "block " << b.dim << (b.within_bounds ? "  ok  " : "  FAIL") << ' ';
        for (double v : b.eigenvalues) out << ' ' << format12(v);
        out << '\n';
    }
    if (r.factorization) {
        out << "factor            " << r.factorization->polynomial << "   residual "
            << format12(r.factorization->residual) << '\n';
        if (r.factorization->warning) out << "warning           " << *r.factorization->warning << '\n';
    }
    return out.str();
}

}  // namespace gaborform
