#pragma once

#include <string>
#include <vector>

#include "gaborform/eigen.hpp"

namespace gaborform {

/// One checked claim from the three published worked examples.
struct ReproItem {
    std::string name;
    bool pass = false;
    double max_delta = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

/// The 2x2 .. 5x5 blocks printed for the third example, exactly as printed
/// (main diagonal 4). Returned as CSV text.
std::string example3_literal_csv(std::size_t dim);

/// Printed eigenvalue list for example `example` (1..3), block `dim` (2..5),
/// ascending.
std::vector<double> printed_eigenvalues(int example, std::size_t dim);

/// Tolerance for a printed value: integers are exact (1e-9), anything with
/// decimals was rounded to two places (1e-2).
double printed_tolerance(double value);

std::vector<ReproItem> reproduce_examples();

}  // namespace gaborform
