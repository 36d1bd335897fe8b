#ifndef STEKLOV_CONSTRUCTIONS_HPP
#define STEKLOV_CONSTRUCTIONS_HPP

#include "core/conformal.hpp"
#include "core/geometry.hpp"
#include "core/weight.hpp"

#include <functional>
#include <vector>

namespace steklov {

// Star-shaped closed boundary curve: stored as a polyline, optionally with
// its radial graph on the uniform angle grid.
class StarBoundary {
public:
    static StarBoundary circle(int m, double radius = 1.0);
    // radius samples on the uniform angle grid t_j = 2*pi*j/m.
    static StarBoundary from_radius_samples(std::vector<double> radius);
    // Parametric closed polyline, star-shaped about the origin (checked).
    static StarBoundary from_points(std::vector<Vec2> points);

    const std::vector<Vec2>& points() const { return points_; }
    double perimeter() const { return perimeter_; }
    bool has_radial_samples() const { return !radius_.empty(); }
    const std::vector<double>& radius_samples() const { return radius_; }

    // Boundary point on the ray at angle theta (radial interpolation or
    // ray/polyline intersection).
    double radius_at(double theta) const;

private:
    std::vector<Vec2> points_;
    std::vector<double> radius_;
    double perimeter_ = 0.0;
};

// 2-periodic unit triangle wave: x on [0,1], 2-x on [1,2].
double sawtooth(double x);

// Triangle wave averaged over a window of half-width w (corner rounding);
// piecewise quadratic near the extrema, identical elsewhere.
double smoothed_sawtooth(double x, double w);

struct OscillationOptions {
    int samples_per_tooth = 16;
    bool smooth = false;    // rounded corners (FEM-friendly)
    bool centered = true;   // oscillate about the base curve
};

// Boundary {x + lambda(x) d_eps(x) nu(x)} with lambda = sqrt(Theta^2 - 1) and
// tooth size eps = |boundary|/k. Requires Theta > 1 on the grid. The weight is
// read at the normalized arc-length angle of the base curve.
StarBoundary oscillating_domain(const StarBoundary& base, const BoundaryWeight& weight,
                                int teeth, const OscillationOptions& opts = {});

// Polyline line integral of a test function against arc length.
double measure_pairing(const StarBoundary& boundary,
                       const std::function<double(double, double)>& test_fn);

// P(a) = average over [0,2pi] of sqrt(1 + a^2 + 2 a cos t); strictly
// increasing, P(0) = 1, P(1) = 4/pi. Absolute error <= 1e-12.
double p_function(double a);

// Inverse of P on [1, 4/pi).
double p_inverse(double y);

struct InstabilityMap {
    ConformalMap map;   // g_n(z) = g(z) + z^{n+1} f(z)/(n+1)
    double lambda;      // the constant used for |f| = |g'| P^{-1}(lambda/|g'|)
};

// Oscillatory perturbation of a base map whose boundary measure homogenizes
// to the constant lambda. Requires max|g'| < (4/pi) min|g'| on the boundary.
InstabilityMap instability_map(const ConformalMap& base, int n);

// Theta_n = 1 + a_n cos(n t) with a_n = n^{-(1-eps)/eps}.
BoundaryWeight sharpness_weight(int n, double eps, int grid_size);
double sharpness_amplitude(int n, double eps);

} // namespace steklov

#endif
