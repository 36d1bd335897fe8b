#include "core/fourier.hpp"
#include "core/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

using namespace steklov;

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

std::vector<double> sample_fn(int m, const std::function<double(double)>& f) {
    std::vector<double> out(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) out[static_cast<size_t>(j)] = f(two_pi * j / m);
    return out;
}
} // namespace

TEST_CASE("analyze recovers the coefficients of a trigonometric polynomial") {
    const auto samples = sample_fn(64, [](double t) {
        return 1.5 + std::cos(3.0 * t) - 0.25 * std::sin(7.0 * t);
    });
    const FourierSeries s = analyze(std::span<const double>(samples));
    CHECK(s.coeff(0).real() == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(s.coeff(3).real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(s.coeff(-3).real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(s.coeff(7).imag() == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(std::abs(s.coeff(5)) < 1e-12);
    CHECK(s.is_real_symmetric());
    CHECK(s.bandwidth() == 7);
}

TEST_CASE("synthesize inverts analyze on the same grid") {
    std::mt19937_64 rng(11);
    std::vector<double> samples(33);
    for (auto& v : samples) v = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const FourierSeries s = analyze(std::span<const double>(samples));
    const auto back = synthesize_real(s, 33);
    for (size_t j = 0; j < samples.size(); ++j)
        CHECK(back[j] == doctest::Approx(samples[j]).epsilon(1e-11));
}

TEST_CASE("Parseval identity on the grid") {
    const auto samples = sample_fn(128, [](double t) {
        return 0.3 + 0.7 * std::cos(2.0 * t) + 0.1 * std::sin(9.0 * t);
    });
    const FourierSeries s = analyze(std::span<const double>(samples));
    double lhs = 0.0;
    for (double v : samples) lhs += v * v;
    lhs /= static_cast<double>(samples.size());
    double rhs = 0.0;
    for (int n = -s.n_max(); n <= s.n_max(); ++n) rhs += std::norm(s.coeff(n));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("Sobolev seminorm against direct summation") {
    FourierSeries s(8, 64);
    s.set_coeff(2, {0.5, 0.0});
    s.set_coeff(-2, {0.5, 0.0});
    s.set_coeff(5, {0.0, 0.3});
    s.set_coeff(-5, {0.0, -0.3});
    s.set_coeff(0, {7.0, 0.0}); // must be ignored
    for (double sexp : {0.5, -0.5, 1.0}) {
        double direct = 0.0;
        for (int n = 1; n <= 8; ++n)
            direct += 2.0 * std::pow(n, 2.0 * sexp) * std::norm(s.coeff(n));
        CHECK(sobolev_norm(s, sexp) == doctest::Approx(std::sqrt(direct)).epsilon(1e-13));
    }
}

TEST_CASE("H^{1/2} x H^{-1/2} pairing obeys Cauchy-Schwarz") {
    std::mt19937_64 rng(5);
    auto rnd = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5; };
    FourierSeries f(10, 64), g(10, 64);
    for (int n = 1; n <= 10; ++n) {
        const cplx a{rnd(), rnd()};
        const cplx b{rnd(), rnd()};
        f.set_coeff(n, a);
        f.set_coeff(-n, std::conj(a));
        g.set_coeff(n, b);
        g.set_coeff(-n, std::conj(b));
    }
    cplx pairing{0.0, 0.0};
    for (int n = -10; n <= 10; ++n)
        if (n != 0) pairing += f.coeff(n) * std::conj(g.coeff(n));
    CHECK(std::abs(pairing) <= sobolev_norm(f, 0.5) * sobolev_norm(g, -0.5) + 1e-12);
}

TEST_CASE("harmonic extension of a pure mode") {
    FourierSeries s(4, 32);
    s.set_coeff(3, {0.5, 0.0});
    s.set_coeff(-3, {0.5, 0.0});
    const double r = 0.7, t = 1.234;
    const double expect = std::pow(r, 3) * std::cos(3.0 * t);
    CHECK(harmonic_extend(s, r, t).real() == doctest::Approx(expect).epsilon(1e-13));
    CHECK_THROWS_AS((void)harmonic_extend(s, 1.0, 0.0), invalid_input);
}

TEST_CASE("conjugate function maps cos to sin and preserves seminorms") {
    const auto samples = sample_fn(64, [](double t) { return std::cos(4.0 * t); });
    const FourierSeries s = analyze(std::span<const double>(samples));
    const FourierSeries c = conjugate_series(s);
    const auto conj_samples = synthesize_real(c, 64);
    for (int j = 0; j < 64; ++j)
        CHECK(conj_samples[static_cast<size_t>(j)] ==
              doctest::Approx(std::sin(4.0 * two_pi * j / 64)).epsilon(1e-11));
    CHECK(sobolev_norm(c, 0.5) == doctest::Approx(sobolev_norm(s, 0.5)).epsilon(1e-13));
    CHECK(sobolev_norm(c, -0.5) == doctest::Approx(sobolev_norm(s, -0.5)).epsilon(1e-13));
}

TEST_CASE("Holder seminorm of cos approaches its Lipschitz constant under refinement") {
    double prev = 0.0;
    for (int m : {32, 128, 512}) {
        const auto samples = sample_fn(m, [](double t) { return std::cos(t); });
        const double est = holder_seminorm(std::span<const double>(samples), 1.0);
        CHECK(est <= 1.0 + 1e-12); // grid estimate stays below the true value
        CHECK(est >= prev - 1e-12);
        prev = est;
    }
    CHECK(prev == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("input validation") {
    std::vector<double> one{1.0};
    CHECK_THROWS_AS((void)analyze(std::span<const double>(one)), invalid_input);
    FourierSeries s(5, 32);
    s.set_coeff(5, {1.0, 0.0});
    CHECK_THROWS_AS((void)synthesize(s, 8), invalid_input);
    std::vector<double> flat{1.0, 2.0, 3.0};
    CHECK_THROWS_AS((void)holder_seminorm(std::span<const double>(flat), 1.5), invalid_input);
    CHECK_THROWS_AS((void)holder_seminorm(std::span<const double>(flat), 0.0), invalid_input);
}
