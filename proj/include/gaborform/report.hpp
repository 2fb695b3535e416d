#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gaborform/circle.hpp"
#include "gaborform/factor.hpp"
#include "gaborform/frame.hpp"
#include "gaborform/polynomial.hpp"
#include "gaborform/toeplitz.hpp"

namespace gaborform {

using json = nlohmann::json;

/// v rounded to 12 significant digits; every number in a report goes
/// through this so that printing and re-reading is exact.
double round12(double v);

/// "%.12g"
std::string format12(double v);

struct RootEntry {
    double theta = 0.0;
    double residual = 0.0;
    double modulus = 0.0;
    friend bool operator==(const RootEntry&, const RootEntry&) = default;
};

struct BlockRow {
    std::size_t dim = 0;
    std::vector<double> eigenvalues;
    bool within_bounds = false;
    friend bool operator==(const BlockRow&, const BlockRow&) = default;
};

struct FactorEntry {
    std::string polynomial;
    std::vector<std::pair<std::int64_t, double>> terms;
    double residual = 0.0;
    std::optional<std::string> warning;
    friend bool operator==(const FactorEntry&, const FactorEntry&) = default;
};

struct AnalysisReport {
    std::string polynomial;
    std::vector<std::pair<std::int64_t, double>> terms;
    std::int64_t shift = 0;
    std::vector<double> autocorrelation;
    double c1 = 0.0;
    double c2 = 0.0;
    double theta_min = 0.0;
    double theta_max = 0.0;
    double spd_threshold = kDefaultSpdThreshold;
    bool spd = false;
    std::vector<RootEntry> unit_roots;
    std::vector<BlockRow> blocks;
    bool is_mother_frame_wavelet = false;
    double lower_frame_bound = 0.0;
    double upper_frame_bound = 0.0;
    std::optional<FactorEntry> factorization;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct AnalysisOptions {
    double spd_threshold = kDefaultSpdThreshold;
    double extrema_tol = kDefaultExtremaTol;
    std::vector<std::size_t> dims;
    bool factor = false;
};

AnalysisReport analyze(const SparsePolynomial& p, const AnalysisOptions& options = {});

/// Field-by-field consistency of spd, frame verdict and c1.
bool is_consistent(const AnalysisReport& r);

void to_json(json& j, const AnalysisReport& r);
void from_json(const json& j, AnalysisReport& r);

void to_json(json& j, const StepFunction& f);
void from_json(const json& j, StepFunction& f);

json to_json(const FrameSumResult& r);
json to_json(const BlockBoundsReport& r);

std::string render_table(const AnalysisReport& r);

}  // namespace gaborform
