#include "core/weightspec.hpp"
#include "core/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

using namespace steklov;

TEST_CASE("constant and trigonometric expressions") {
    const BoundaryWeight one = parse_weight("1");
    CHECK(one.mean() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(one.min_value() == doctest::Approx(1.0).epsilon(1e-12));

    const BoundaryWeight w = parse_weight("1 + 0.2*cos(8*t)");
    CHECK(w.coeff(0).real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(w.coeff(8).real() == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(w.coeff(-8).real() == doctest::Approx(0.1).epsilon(1e-12));

    const BoundaryWeight s = parse_weight("2 - 0.5*sin(3*t) + 0.25*cos(t)");
    CHECK(s.coeff(0).real() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(s.coeff(3).imag() == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(s.coeff(1).real() == doctest::Approx(0.125).epsilon(1e-12));
}

TEST_CASE("exp expressions") {
    const BoundaryWeight w = parse_weight("exp(0.1*cos(2*t))");
    CHECK(w.min_value() == doctest::Approx(std::exp(-0.1)).epsilon(1e-6));
    CHECK(w.max_value() == doctest::Approx(std::exp(0.1)).epsilon(1e-6));
    const BoundaryWeight sum = parse_weight("0.5 + exp(0.05*sin(t))");
    CHECK(sum.min_value() > 1.0);
}

TEST_CASE("non-positive weights are rejected with the attained minimum") {
    try {
        (void)parse_weight("1 + 1.5*cos(2*t)");
        FAIL("expected invalid_input");
    } catch (const invalid_input& e) {
        CHECK(std::string(e.what()).find("-0.5") != std::string::npos);
    }
}

TEST_CASE("syntax errors carry a position") {
    for (const char* bad : {"1 + bogus(2*t)", "1 + 0.1*cos(2*x)", "cos(2*t", "1 +",
                            "exp(exp(1))"}) {
        try {
            (void)parse_weight(bad);
            FAIL("expected invalid_input for: ", bad);
        } catch (const invalid_input& e) {
            CHECK(std::string(e.what()).find("position") != std::string::npos);
        }
    }
}

TEST_CASE("coefficient CSV roundtrip") {
    const std::string path = "test_weight_coeffs.csv";
    {
        std::ofstream f(path);
        f << "n,re,im\n0,1,0\n3,0.05,0.02\n";
    }
    const BoundaryWeight w = parse_weight(path);
    CHECK(w.coeff(0).real() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(w.coeff(3).real() == doctest::Approx(0.05).epsilon(1e-10));
    CHECK(w.coeff(3).imag() == doctest::Approx(0.02).epsilon(1e-10));
    // Mirrored conjugate keeps the weight real.
    CHECK(w.coeff(-3).imag() == doctest::Approx(-0.02).epsilon(1e-10));
    std::remove(path.c_str());
}

TEST_CASE("CSV header and row validation") {
    const std::string path = "test_weight_bad.csv";
    {
        std::ofstream f(path);
        f << "freq,re,im\n0,1,0\n";
    }
    CHECK_THROWS_AS((void)load_weight_csv(path, 64), invalid_input);
    {
        std::ofstream f(path);
        f << "n,re,im\n0,one,0\n";
    }
    CHECK_THROWS_AS((void)load_weight_csv(path, 64), invalid_input);
    std::remove(path.c_str());
    CHECK_THROWS_AS((void)load_weight_csv("no_such_file.csv", 64), invalid_input);
}
