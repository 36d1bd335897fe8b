#include "core/constructions.hpp"
#include "core/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace steklov;

namespace {
constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

BoundaryWeight constant_weight(double value, int m = 64) {
    return BoundaryWeight::from_samples(std::vector<double>(static_cast<size_t>(m), value));
}
} // namespace

TEST_CASE("triangle wave and its smoothing") {
    CHECK(sawtooth(0.25) == doctest::Approx(0.25));
    CHECK(sawtooth(1.0) == doctest::Approx(1.0));
    CHECK(sawtooth(1.75) == doctest::Approx(0.25));
    CHECK(sawtooth(2.25) == doctest::Approx(0.25));
    CHECK(sawtooth(-0.25) == doctest::Approx(0.25));

    const double w = 0.1;
    CHECK(smoothed_sawtooth(1.0, w) == doctest::Approx(1.0 - w / 2));
    CHECK(smoothed_sawtooth(0.0, w) == doctest::Approx(w / 2));
    CHECK(smoothed_sawtooth(0.5, w) == doctest::Approx(0.5));
    // Continuity at the matching points.
    CHECK(smoothed_sawtooth(1.0 - w, w) == doctest::Approx(sawtooth(1.0 - w)).epsilon(1e-12));
    CHECK(smoothed_sawtooth(w, w) == doctest::Approx(sawtooth(w)).epsilon(1e-12));
}

TEST_CASE("star boundary basics") {
    const StarBoundary c = StarBoundary::circle(1024);
    CHECK(c.perimeter() == doctest::Approx(two_pi).epsilon(1e-5));
    CHECK(c.radius_at(1.234) == doctest::Approx(1.0).epsilon(1e-10));

    // Unit square via explicit points: ray intersections.
    const StarBoundary sq = StarBoundary::from_points(
        {{1, -1}, {1, 1}, {-1, 1}, {-1, -1}});
    CHECK(sq.radius_at(0.0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(sq.radius_at(pi / 4) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK(sq.perimeter() == doctest::Approx(8.0));

    // Polar angle must wind forward once.
    CHECK_THROWS_AS((void)StarBoundary::from_points({{1, 0}, {-1, 1}, {1, 0.5}}),
                    invalid_input);
    CHECK_THROWS_AS((void)StarBoundary::from_radius_samples({1.0, -1.0, 1.0}),
                    invalid_input);
}

TEST_CASE("oscillating domain perimeter approaches the weighted perimeter") {
    const StarBoundary base = StarBoundary::circle(1024);
    const double theta = 1.25;
    const BoundaryWeight w = constant_weight(theta);
    // Teeth of slope sqrt(Theta^2-1) stretch arc length by Theta exactly in
    // the piecewise-linear case.
    const StarBoundary osc = oscillating_domain(base, w, 64);
    CHECK(osc.perimeter() == doctest::Approx(theta * two_pi).epsilon(5e-3));
    // More teeth: same limit, smaller teeth.
    const StarBoundary fine = oscillating_domain(base, w, 128);
    CHECK(fine.perimeter() == doctest::Approx(theta * two_pi).epsilon(5e-3));

    CHECK_THROWS_AS((void)oscillating_domain(base, constant_weight(0.9), 16),
                    invalid_input);
    CHECK_THROWS_AS((void)oscillating_domain(base, w, 7), invalid_input);
}

TEST_CASE("measure pairing with the constant test function gives the length") {
    const StarBoundary base = StarBoundary::circle(512);
    const double len = measure_pairing(base, [](double, double) { return 1.0; });
    CHECK(len == doctest::Approx(base.perimeter()).epsilon(1e-12));
}

TEST_CASE("P function endpoints and quadrature oracle") {
    CHECK(p_function(0.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p_function(1.0) == doctest::Approx(4.0 / pi).epsilon(1e-9));
    // Spectrally convergent trapezoid oracle at a = 0.5.
    const double a = 0.5;
    double acc = 0.0;
    const int q = 1 << 13;
    for (int j = 0; j < q; ++j)
        acc += std::sqrt(1.0 + a * a + 2.0 * a * std::cos(two_pi * j / q));
    acc /= q;
    CHECK(p_function(a) == doctest::Approx(acc).epsilon(1e-11));
    CHECK_THROWS_AS((void)p_function(-0.1), invalid_input);
}

TEST_CASE("P inverse roundtrip") {
    for (double a : {0.1, 0.4, 0.8}) {
        CHECK(p_inverse(p_function(a)) == doctest::Approx(a).epsilon(1e-10));
    }
    CHECK_THROWS_AS((void)p_inverse(0.9), invalid_input);
    CHECK_THROWS_AS((void)p_inverse(4.0 / pi), invalid_input);
}

TEST_CASE("instability map over the identity is 1 + c z^n") {
    const ConformalMap base = ConformalMap::from_deriv({{1.0, 0.0}});
    const int n = 6;
    const InstabilityMap res = instability_map(base, n);
    // For |g'| = 1 the construction gives f = c with P(c) = lambda.
    CHECK(p_function(res.lambda > 0 ? p_inverse(res.lambda) : 0.0) ==
          doctest::Approx(res.lambda).epsilon(1e-10));
    const double c = p_inverse(res.lambda);
    const auto& deriv = res.map.deriv_coeffs();
    CHECK(std::abs(deriv[0] - 1.0) < 1e-10);
    CHECK(std::abs(deriv[static_cast<size_t>(n)] - c) < 1e-9);
    for (size_t k = 1; k < deriv.size(); ++k)
        if (k != static_cast<size_t>(n)) CHECK(std::abs(deriv[k]) < 1e-9);
    // lambda sits strictly inside the admissible window (1, 4/pi).
    CHECK(res.lambda > 1.0);
    CHECK(res.lambda < 4.0 / pi);
}

TEST_CASE("instability map rejects maps violating the gap condition") {
    // |g'| ranges too widely: max > (4/pi) min.
    std::vector<cplx> deriv{{1.0, 0.0}, {0.3, 0.0}};
    const ConformalMap wide = ConformalMap::from_deriv(deriv);
    CHECK_THROWS_AS((void)instability_map(wide, 4), invalid_input);
}

TEST_CASE("sharpness weight amplitudes") {
    CHECK(sharpness_amplitude(8, 0.5) == doctest::Approx(1.0 / 8.0));
    CHECK(sharpness_amplitude(16, 0.5) == doctest::Approx(1.0 / 16.0));
    const BoundaryWeight w = sharpness_weight(8, 0.5, 256);
    CHECK(w.coeff(8).real() == doctest::Approx(1.0 / 16.0).epsilon(1e-10));
    CHECK(w.mean() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS((void)sharpness_weight(2, 0.5, 64), invalid_input);
}
