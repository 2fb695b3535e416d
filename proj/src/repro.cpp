#include "gaborform/repro.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "gaborform/circle.hpp"
#include "gaborform/report.hpp"
#include "gaborform/toeplitz.hpp"

namespace gaborform {

namespace {

// Blocks of the third example as printed. Their diagonal is 4, while the
// autocorrelation of -2 + z + z^3 has b_0 = 6.
constexpr const char* kExample3Csv[] = {
    "4,-2\n"
    "-2,4\n",

    "4,-2,1\n"
    "-2,4,-2\n"
    "1,-2,4\n",

    "4,-2,1,-2\n"
    "-2,4,-2,1\n"
    "1,-2,4,-2\n"
    "-2,1,-2,4\n",

    "4,-2,1,-2,0\n"
    "-2,4,-2,1,-2\n"
    "1,-2,4,-2,1\n"
    "-2,1,-2,4,-2\n"
    "0,-2,1,-2,4\n",
};

const std::vector<std::vector<double>> kPrinted[3] = {
    {{2, 4}, {2, 2, 5}, {2, 2, 2, 6}, {1.35, 2, 2, 3, 6.65}},
    {{17, 41}, {14.77, 23, 49.23}, {12.68, 20.89, 25.32, 57.11}, {9.84, 20.69, 21, 31, 62.47}},
    {{2, 6}, {1.63, 3, 7.37}, {1, 3, 3, 9}, {0.22, 2.70, 3, 4, 10.08}},
};

ReproItem compare_spectrum(const std::string& name, const std::vector<double>& got,
                           const std::vector<double>& want) {
    ReproItem item{name, got.size() == want.size(), 0.0, 1e-2, {}};
    for (std::size_t i = 0; i < std::min(got.size(), want.size()); ++i) {
        const double delta = std::abs(got[i] - want[i]);
        const double tol = printed_tolerance(want[i]);
        item.max_delta = std::max(item.max_delta, delta);
        if (delta > tol) item.pass = false;
    }
    item.detail = "eigenvalues";
    for (double v : got) item.detail += " " + format12(v);
    return item;
}

ReproItem compare_value(const std::string& name, double got, double want, double tol) {
    const double delta = std::abs(got - want);
    return {name, delta <= tol, delta, tol, "got " + format12(got) + ", printed " + format12(want)};
}

}  // namespace

std::string example3_literal_csv(std::size_t dim) {
    if (dim < 2 || dim > 5) throw std::out_of_range("literal blocks exist for dims 2..5");
    return kExample3Csv[dim - 2];
}

std::vector<double> printed_eigenvalues(int example, std::size_t dim) {
    if (example < 1 || example > 3 || dim < 2 || dim > 5) {
        throw std::out_of_range("printed spectra exist for examples 1..3, dims 2..5");
    }
    return kPrinted[example - 1][dim - 2];
}

double printed_tolerance(double value) { return value == std::round(value) ? 1e-9 : 1e-2; }

std::vector<ReproItem> reproduce_examples() {
    std::vector<ReproItem> items;

    const SparsePolynomial p1 = parse_polynomial("1+z+z^3");
    const SpectralBounds b1 = circle_extrema(p1);
    items.push_back(compare_value("example1.c1", b1.c1, 0.3689, 1e-3));
    items.push_back(compare_value("example1.c2", b1.c2, 9.0, 1e-9));
    items.push_back({"example1.spd", spd_verdict(p1).spd, 0.0, 0.0, "expected strongly positive definite"});
    for (std::size_t d = 2; d <= 5; ++d) {
        const Spectrum s = symmetric_eigenvalues(build_block(autocorrelation(p1), d));
        items.push_back(compare_spectrum("example1.A" + std::to_string(d), s.eigenvalues,
                                         printed_eigenvalues(1, d)));
    }

    const SparsePolynomial p2 = parse_polynomial("2+3z^2+4z^3");
    const SpectralBounds b2 = circle_extrema(p2);
    items.push_back(compare_value("example2.c1", b2.c1, 1.0, 1e-6));
    items.push_back(compare_value("example2.c2", b2.c2, 81.0, 1e-6));
    for (std::size_t d = 2; d <= 5; ++d) {
        const Spectrum s = symmetric_eigenvalues(build_block(autocorrelation(p2), d));
        items.push_back(compare_spectrum("example2.B" + std::to_string(d), s.eigenvalues,
                                         printed_eigenvalues(2, d)));
    }

    const SparsePolynomial p3 = parse_polynomial("-2+z+z^3");
    {
        double best = std::numeric_limits<double>::infinity();
        double residual = 0.0;
        for (const auto& r : polynomial_roots(p3)) {
            const double d = std::abs(r - std::complex<double>(1.0, 0.0));
            if (d < best) {
                best = d;
                residual = std::abs(p3(r));
            }
        }
        items.push_back({"example3.unit_root", best < 1e-8 && residual <= 1e-10, residual, 1e-10,
                         "closest root to z = 1 at distance " + format12(best)});
    }
    const UnitRootReport v3 = spd_verdict(p3);
    items.push_back({"example3.spd", !v3.spd, v3.bounds.c1, kDefaultSpdThreshold,
                     "expected not strongly positive definite; c1 = " + format12(v3.bounds.c1)});
    for (std::size_t d = 2; d <= 5; ++d) {
        const Spectrum s = symmetric_eigenvalues(parse_matrix_csv(example3_literal_csv(d)));
        items.push_back(compare_spectrum("example3.C" + std::to_string(d) + ".literal",
                                         s.eigenvalues, printed_eigenvalues(3, d)));
    }
    const AutocorrSequence b3 = autocorrelation(p3);
    const AutocorrSequence expected({6.0, -2.0, 1.0, -2.0});
    double delta = 0.0;
    for (std::size_t m = 0; m < 4; ++m) delta = std::max(delta, std::abs(b3[m] - expected[m]));
    items.push_back({"example3.autocorrelation", b3 == expected, delta, 0.0,
                     "b = (6, -2, 1, -2) from pair enumeration"});

    const Matrix literal = parse_matrix_csv(example3_literal_csv(2));
    const bool discrepancy = literal(0, 0) != b3[0];
    items.push_back({"example3.diagonal_discrepancy", discrepancy,
                     std::abs(literal(0, 0) - b3[0]), 0.0,
                     "printed blocks have diagonal " + format12(literal(0, 0)) +
                         " but sum a_j^2 = " + format12(b3[0]) +
                         "; printed matrices are checked as given"});
    return items;
}

}  // namespace gaborform
