#include <random>

#include <gtest/gtest.h>

#include "gaborform/repro.hpp"
#include "gaborform/report.hpp"

using namespace gaborform;

TEST(Report, AnalyzeExample1) {
    AnalysisOptions opts;
    opts.dims = {2, 3, 4, 5};
    opts.factor = true;
    const auto r = analyze(parse_polynomial("1+z+z^3"), opts);
    EXPECT_TRUE(r.spd);
    EXPECT_TRUE(r.is_mother_frame_wavelet);
    EXPECT_EQ(r.autocorrelation, (std::vector<double>{3, 1, 1, 1}));
    EXPECT_NEAR(r.c1, 0.3689, 1e-3);
    EXPECT_EQ(r.c2, 9.0);
    ASSERT_EQ(r.blocks.size(), 4u);
    EXPECT_EQ(r.blocks[0].eigenvalues, (std::vector<double>{2, 4}));
    ASSERT_TRUE(r.factorization);
    EXPECT_LE(r.factorization->residual, 1e-9);
    EXPECT_TRUE(is_consistent(r));
}

TEST(Report, AnalyzeExample3) {
    const auto r = analyze(parse_polynomial("-2+z+z^3"));
    EXPECT_FALSE(r.spd);
    EXPECT_FALSE(r.is_mother_frame_wavelet);
    ASSERT_EQ(r.unit_roots.size(), 1u);
    EXPECT_NEAR(r.unit_roots[0].theta, 0.0, 1e-8);
    EXPECT_TRUE(is_consistent(r));
}

TEST(Report, JsonRoundTripIsLossless) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> coef(-5.0, 5.0);
    std::uniform_int_distribution<int> expo(1, 8);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Term> terms{{0, coef(rng)}, {expo(rng), coef(rng)}, {expo(rng), coef(rng)}};
        AnalysisOptions opts;
        opts.dims = {3, 6};
        opts.factor = trial % 2 == 0;
        const auto r = analyze(SparsePolynomial(terms), opts);
        EXPECT_TRUE(is_consistent(r));
        const std::string text = json(r).dump();
        const auto back = json::parse(text).get<AnalysisReport>();
        EXPECT_EQ(back, r);
        EXPECT_EQ(json(back).dump(), text);
    }
}

TEST(Report, SchemaKeys) {
    const json j = analyze(parse_polynomial("5"));
    for (const char* key : {"polynomial", "autocorrelation", "bounds", "spd", "unit_roots",
                            "blocks", "frame", "factorization"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(j.at("bounds").at("c1"), 25.0);
    EXPECT_TRUE(j.at("factorization").is_null());
}

TEST(Report, Round12) {
    EXPECT_EQ(round12(0.1 + 0.2), 0.3);
    EXPECT_EQ(format12(1.0 / 3.0), "0.333333333333");
    EXPECT_EQ(round12(0.0), 0.0);
}

TEST(Repro, AllItemsPass) {
    const auto items = reproduce_examples();
    EXPECT_GE(items.size(), 20u);
    for (const auto& it : items) EXPECT_TRUE(it.pass) << it.name << ": " << it.detail;
    EXPECT_EQ(printed_tolerance(2.0), 1e-9);
    EXPECT_EQ(printed_tolerance(1.35), 1e-2);
    EXPECT_EQ(parse_matrix_csv(example3_literal_csv(2))(0, 0), 4.0);
}
