#include "core/galerkin.hpp"
#include "core/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace steklov;

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

BoundaryWeight constant_weight(double value, int m = 64) {
    return BoundaryWeight::from_samples(std::vector<double>(static_cast<size_t>(m), value));
}
} // namespace

TEST_CASE("unweighted disk spectrum is 0,1,1,2,2,...") {
    const auto spec = solve_spectrum(assemble(constant_weight(1.0), 16), 6);
    const double expect[7] = {0, 1, 1, 2, 2, 3, 3};
    for (int k = 0; k <= 6; ++k)
        CHECK(spec.eigenvalues[static_cast<size_t>(k)] ==
              doctest::Approx(expect[k]).epsilon(1e-12));
}

TEST_CASE("constant weight rescales the spectrum by 1/Lambda") {
    for (double lam : {0.5, 2.0, 7.3})
        CHECK(sigma1(constant_weight(lam), 32) == doctest::Approx(1.0 / lam).epsilon(1e-12));
}

TEST_CASE("mass matrix is Hermitian Toeplitz with 2*pi*hat Theta entries") {
    std::vector<double> samples(64);
    for (int j = 0; j < 64; ++j)
        samples[static_cast<size_t>(j)] = 1.0 + 0.4 * std::cos(3.0 * two_pi * j / 64);
    const BoundaryWeight w = BoundaryWeight::from_samples(samples);
    const GalerkinSystem sys = assemble(w, 8);
    const int dim = 17;
    for (int k = 0; k < dim; ++k) {
        CHECK(sys.energy(k) == doctest::Approx(two_pi * std::abs(k - 8)));
        for (int l = 0; l < dim; ++l) {
            CHECK(std::abs(sys.mass(k, l) - std::conj(sys.mass(l, k))) < 1e-12);
            CHECK(std::abs(sys.mass(k, l) - two_pi * w.coeff(l - k)) < 1e-12);
        }
    }
    CHECK(std::abs(sys.mass(0, 3) - cplx{two_pi * 0.2, 0.0}) < 1e-10);
}

TEST_CASE("truncated eigenvalues decrease as modes are added") {
    const BoundaryWeight w = random_weight(7, 8, 0.4, 256);
    double prev = 1e300;
    for (int n : {8, 16, 32, 64}) {
        const double cur = sigma1(w, n);
        CHECK(cur <= prev + 1e-12);
        prev = cur;
    }
}

TEST_CASE("doubling ladder agrees with a large fixed truncation") {
    const BoundaryWeight w = random_weight(3, 6, 0.3, 256);
    CHECK(sigma1_converged(w) == doctest::Approx(sigma1(w, 512)).epsilon(1e-9));
}

TEST_CASE("deficit is nonnegative and vanishes on the disk") {
    CHECK(deficit(constant_weight(1.0)) == doctest::Approx(0.0).epsilon(1e-10));
    const BoundaryWeight w = random_weight(9, 8, 0.35, 256);
    CHECK(deficit(w) >= -1e-10);
}

TEST_CASE("sigma_1 is invariant under the Mobius pullback") {
    const BoundaryWeight w = random_weight(21, 6, 0.3, 512);
    const BoundaryWeight p = mobius_pullback(w, cplx{0.25, 0.1});
    CHECK(sigma1_converged(p) == doctest::Approx(sigma1_converged(w)).epsilon(1e-7));
}

TEST_CASE("eigenvectors are mass-orthonormal") {
    const BoundaryWeight w = random_weight(5, 4, 0.3, 128);
    const GalerkinSystem sys = assemble(w, 16);
    const WeightedSpectrum spec = solve_spectrum(sys, 3);
    const Eigen::MatrixXcd gram =
        spec.eigenvectors.adjoint() * sys.mass * spec.eigenvectors;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(std::abs(gram(i, j) - (i == j ? 1.0 : 0.0)) < 1e-9);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS((void)assemble(constant_weight(1.0), 1), invalid_input);
    CHECK_THROWS_AS((void)solve_spectrum(assemble(constant_weight(1.0), 4), 9),
                    invalid_input);
}
