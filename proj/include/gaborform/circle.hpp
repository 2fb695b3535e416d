#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "gaborform/polynomial.hpp"

namespace gaborform {

inline constexpr double kDefaultExtremaTol = 1e-10;
inline constexpr double kDefaultSpdThreshold = 1e-9;

/// Range [c1, c2] of q(theta) = |p(e^{i theta})|^2 over the circle.
struct SpectralBounds {
    double c1 = 0.0;
    double c2 = 0.0;
    double theta_min = 0.0;
    double theta_max = 0.0;
};

/// Global extrema of an even 2pi-periodic function given as a callable.
/// Samples [0, pi] at `samples` equispaced points and refines every sampled
/// local extremum by golden-section search.
SpectralBounds even_periodic_extrema(const std::function<double(double)>& q,
                                     std::size_t samples, double tol);

/// Extrema of |p|^2 on the unit circle. Throws std::invalid_argument if tol <= 0.
SpectralBounds circle_extrema(const SparsePolynomial& p, double tol = kDefaultExtremaTol);

/// Extrema of the symbol of an arbitrary band (may be negative).
SpectralBounds band_extrema(const AutocorrSequence& b, double tol = kDefaultExtremaTol);

/// All roots of a_0 + a_1 z + ... + a_N z^N (a_N != 0) by Aberth-Ehrlich
/// iteration. Throws ConvergenceError if the residual test fails after the
/// iteration cap.
std::vector<std::complex<double>> dense_roots(std::span<const double> coeffs,
                                              double tol = 1e-10);

/// Roots of p with multiplicity, degree() of them. Requires degree() >= 1.
std::vector<std::complex<double>> polynomial_roots(const SparsePolynomial& p,
                                                   double tol = 1e-10);

struct UnitRoot {
    double theta;     // angle in [0, 2pi)
    double residual;  // |p(e^{i theta})|
    double modulus;
};

struct UnitRootReport {
    std::vector<UnitRoot> roots;
    bool spd = false;
    SpectralBounds bounds;
};

/// Strong positive definiteness of the quadratic form of p, decided as
/// c1 > threshold. Roots within sqrt(threshold) of the unit circle are listed.
/// The extrema are located to min(extrema_tol, threshold / 10).
UnitRootReport spd_verdict(const SparsePolynomial& p, double threshold = kDefaultSpdThreshold,
                           double extrema_tol = kDefaultExtremaTol);

}  // namespace gaborform
