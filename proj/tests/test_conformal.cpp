#include "core/conformal.hpp"
#include "core/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace steklov;

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

TEST_CASE("power series exp and log invert each other") {
    std::vector<cplx> h{{0.2, -0.1}, {0.5, 0.3}, {-0.2, 0.0}, {0.0, 0.1}};
    const auto f = series_exp(h);
    CHECK(std::abs(f[0] - std::exp(h[0])) < 1e-14);
    const auto back = series_log(f);
    for (size_t k = 0; k < h.size(); ++k) CHECK(std::abs(back[k] - h[k]) < 1e-13);
    std::vector<cplx> zero_lead{{0.0, 0.0}, {1.0, 0.0}};
    CHECK_THROWS_AS((void)series_log(zero_lead), invalid_input);
}

TEST_CASE("identity map") {
    const ConformalMap m = ConformalMap::from_deriv_log({{0.0, 0.0}});
    CHECK(std::abs(m.eval(cplx{0.3, 0.4}) - cplx{0.3, 0.4}) < 1e-15);
    CHECK(std::abs(m.eval_deriv(cplx{0.3, 0.4}) - 1.0) < 1e-15);
    CHECK(perimeter(m) == doctest::Approx(two_pi).epsilon(1e-12));
    CHECK(univalence_margin(m) == doctest::Approx(0.0));
    CHECK(apriori_norm(m, 1.0) == doctest::Approx(0.0));
}

TEST_CASE("from_deriv matches the closed form for g' = 1 + a z^N") {
    const double a = 0.25;
    const int N = 3;
    std::vector<cplx> deriv(static_cast<size_t>(N) + 1, cplx{0.0, 0.0});
    deriv[0] = 1.0;
    deriv[static_cast<size_t>(N)] = a;
    const ConformalMap m = ConformalMap::from_deriv(deriv);
    // g(z) = z + a z^{N+1}/(N+1).
    const cplx z{0.4, -0.3};
    const cplx expect = z + a * std::pow(z, N + 1) / static_cast<double>(N + 1);
    CHECK(std::abs(m.eval(z) - expect) < 1e-13);
    CHECK(std::abs(m.eval_second_deriv(z) -
                   a * static_cast<double>(N) * std::pow(z, N - 1)) < 1e-12);
}

TEST_CASE("reconstruct recovers a polynomial derivative from its modulus") {
    const double a = 0.3;
    const int N = 4;
    const int grid = 512;
    std::vector<double> samples(static_cast<size_t>(grid));
    for (int j = 0; j < grid; ++j) {
        const cplx z = std::polar(1.0, two_pi * j / grid);
        samples[static_cast<size_t>(j)] = std::abs(1.0 + a * std::pow(z, N));
    }
    const BoundaryWeight w = BoundaryWeight::from_samples(samples);
    const ConformalMap m = reconstruct(w, 200);
    const auto& g = m.map_coeffs();
    CHECK(std::abs(g[0]) < 1e-10);
    CHECK(std::abs(g[1] - 1.0) < 1e-9);
    CHECK(std::abs(g[static_cast<size_t>(N) + 1] - a / (N + 1.0)) < 1e-9);
    for (size_t k = 2; k < 8; ++k)
        if (k != static_cast<size_t>(N) + 1) CHECK(std::abs(g[k]) < 1e-9);
    CHECK(m.tail_energy() < 1e-9);
}

TEST_CASE("boundary curve of the identity is the unit circle") {
    const ConformalMap m = ConformalMap::from_deriv_log({{0.0, 0.0}});
    const auto pts = boundary_curve(m, 16);
    for (int j = 0; j < 16; ++j) {
        const double t = two_pi * j / 16;
        CHECK(pts[static_cast<size_t>(j)].x == doctest::Approx(std::cos(t)));
        CHECK(pts[static_cast<size_t>(j)].y == doctest::Approx(std::sin(t)));
    }
    CHECK_THROWS_AS((void)boundary_curve(m, 2), invalid_input);
}

TEST_CASE("univalence margin certifies small perturbations and flags folds") {
    // g' = 1 + a z: margin sup (1-r^2)|a z/(1+a z)| stays below 1 for small a.
    const ConformalMap small = ConformalMap::from_deriv({{1.0, 0.0}, {0.15, 0.0}});
    CHECK(univalence_margin(small) < 1.0);
    // g' = e^{3z}: sup (1-r^2) r |3| over sampled radii exceeds 1.
    const ConformalMap big = ConformalMap::from_deriv_log({{0.0, 0.0}, {3.0, 0.0}});
    CHECK(univalence_margin(big) > 1.0);
}

TEST_CASE("perimeter equals the boundary integral of |g'|") {
    const ConformalMap m = ConformalMap::from_deriv({{1.0, 0.0}, {0.0, 0.0}, {0.2, 0.1}});
    double acc = 0.0;
    const int q = 1 << 14;
    for (int j = 0; j < q; ++j)
        acc += std::abs(m.eval_deriv(std::polar(1.0, two_pi * j / q)));
    acc *= two_pi / q;
    CHECK(perimeter(m) == doctest::Approx(acc).epsilon(1e-10));
}
