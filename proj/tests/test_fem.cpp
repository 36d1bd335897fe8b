#include "core/fem.hpp"
#include "core/errors.hpp"
#include "core/galerkin.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace steklov;

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

TEST_CASE("mesh structure on the disk") {
    const StarBoundary c = StarBoundary::circle(64);
    const Mesh mesh = build_mesh(c, 5);
    CHECK(mesh.nodes.size() == 5 * 64 + 1);
    CHECK(mesh.n_boundary == 64);
    CHECK(mesh.triangles.size() == 64 + 2 * 4 * 64);
    // Boundary nodes sit on the input polygon.
    for (int j = 0; j < 64; ++j) {
        const Vec2 p = mesh.nodes[static_cast<size_t>(mesh.n_interior() + j)];
        CHECK(norm(p - c.points()[static_cast<size_t>(j)]) < 1e-14);
    }
    CHECK_THROWS_AS((void)build_mesh(c, 0), invalid_input);
}

TEST_CASE("disk Steklov eigenvalues converge to 0,1,1,2,2") {
    const StarBoundary c = StarBoundary::circle(256);
    const FemSpectrum spec = solve_steklov_fem(build_mesh(c, 12), {}, 5);
    CHECK(std::abs(spec.eigenvalues[0]) < 1e-6);
    CHECK(spec.eigenvalues[1] == doctest::Approx(1.0).epsilon(2e-2));
    CHECK(spec.eigenvalues[2] == doctest::Approx(1.0).epsilon(2e-2));
    CHECK(spec.eigenvalues[3] == doctest::Approx(2.0).epsilon(4e-2));
    CHECK(spec.eigenvalues[4] == doctest::Approx(2.0).epsilon(4e-2));
}

TEST_CASE("mesh refinement reduces the sigma_1 error on the disk") {
    double prev_err = 1e300;
    for (int m : {64, 128, 256}) {
        const StarBoundary c = StarBoundary::circle(m);
        const FemSpectrum spec = solve_steklov_fem(build_mesh(c, m / 16), {}, 2);
        const double err = std::abs(spec.eigenvalues[1] - 1.0);
        CHECK(err < prev_err);
        prev_err = err;
    }
    CHECK(prev_err < 5e-3);
}

TEST_CASE("constant boundary weight rescales sigma_1") {
    const StarBoundary c = StarBoundary::circle(256);
    const Mesh mesh = build_mesh(c, 12);
    const std::vector<double> lam(256, 2.0);
    const FemSpectrum spec = solve_steklov_fem(mesh, lam, 2);
    CHECK(spec.eigenvalues[1] == doctest::Approx(0.5).epsilon(2e-2));
}

TEST_CASE("FEM with a varying weight agrees with the spectral solver") {
    const int m = 512;
    const StarBoundary c = StarBoundary::circle(m);
    std::vector<double> theta(static_cast<size_t>(m));
    std::vector<double> samples(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
        const double t = two_pi * j / m;
        theta[static_cast<size_t>(j)] = 1.0 + 0.2 * std::cos(2.0 * t);
        samples[static_cast<size_t>(j)] = theta[static_cast<size_t>(j)];
    }
    const double fem = solve_steklov_fem(build_mesh(c, 24), theta, 2).eigenvalues[1];
    const double spectral =
        sigma1_converged(BoundaryWeight::from_samples(std::move(samples)));
    CHECK(fem == doctest::Approx(spectral).epsilon(1e-2));
}

TEST_CASE("input validation") {
    const StarBoundary c = StarBoundary::circle(64);
    const Mesh mesh = build_mesh(c, 4);
    CHECK_THROWS_AS((void)solve_steklov_fem(mesh, {1.0, 2.0}, 2), invalid_input);
    CHECK_THROWS_AS((void)solve_steklov_fem(mesh, std::vector<double>(64, -1.0), 2),
                    invalid_input);
    CHECK_THROWS_AS((void)solve_steklov_fem(mesh, {}, 0), invalid_input);
}
