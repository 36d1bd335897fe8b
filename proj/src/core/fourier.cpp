#include "core/fourier.hpp"

#include "core/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace steklov {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

FourierSeries::FourierSeries(int n_max, int grid_size)
    : n_max_(n_max), grid_size_(grid_size), c_(2 * n_max + 1, cplx{0.0, 0.0}) {
    if (n_max < 0) throw invalid_input("FourierSeries: negative n_max");
}

cplx FourierSeries::coeff(int n) const {
    if (std::abs(n) > n_max_) return {0.0, 0.0};
    return c_[static_cast<size_t>(n + n_max_)];
}

void FourierSeries::set_coeff(int n, cplx value) {
    if (std::abs(n) > n_max_) throw invalid_input("FourierSeries: index out of range");
    c_[static_cast<size_t>(n + n_max_)] = value;
}

bool FourierSeries::is_real_symmetric(double tol) const {
    double scale = 0.0;
    for (const auto& v : c_) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) return true;
    for (int n = 0; n <= n_max_; ++n) {
        if (std::abs(coeff(-n) - std::conj(coeff(n))) > tol * scale) return false;
    }
    return true;
}

int FourierSeries::bandwidth(double rel_tol) const {
    double scale = 0.0;
    for (const auto& v : c_) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) return 0;
    for (int n = n_max_; n >= 1; --n) {
        if (std::abs(coeff(n)) > rel_tol * scale || std::abs(coeff(-n)) > rel_tol * scale)
            return n;
    }
    return 0;
}

namespace {

template <typename T>
FourierSeries analyze_impl(std::span<const T> samples) {
    const int m = static_cast<int>(samples.size());
    if (m < 2) throw invalid_input("analyze: need at least 2 samples");
    const int n_max = (m - 1) / 2;
    FourierSeries out(n_max, m);
    // Direct summation; desk-scale grids make an FFT unnecessary.
    for (int n = -n_max; n <= n_max; ++n) {
        cplx acc{0.0, 0.0};
        const double w = -two_pi * n / m;
        for (int j = 0; j < m; ++j) {
            acc += cplx(samples[static_cast<size_t>(j)]) * std::polar(1.0, w * j);
        }
        out.set_coeff(n, acc / static_cast<double>(m));
    }
    return out;
}

} // namespace

FourierSeries analyze(std::span<const double> samples) { return analyze_impl(samples); }
FourierSeries analyze(std::span<const cplx> samples) { return analyze_impl(samples); }

std::vector<cplx> synthesize(const FourierSeries& series, int m) {
    if (m < 2 * series.n_max() + 1)
        throw invalid_input("synthesize: grid too small for bandwidth (aliasing)");
    std::vector<cplx> out(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
        out[static_cast<size_t>(j)] = eval_series(series, two_pi * j / m);
    }
    return out;
}

std::vector<double> synthesize_real(const FourierSeries& series, int m) {
    auto vals = synthesize(series, m);
    std::vector<double> out(vals.size());
    std::transform(vals.begin(), vals.end(), out.begin(),
                   [](cplx v) { return v.real(); });
    return out;
}

cplx eval_series(const FourierSeries& series, double t) {
    // Split into the n >= 0 and n < 0 parts, each evaluated by Horner in
    // e^{it} and e^{-it}.
    const cplx z = std::polar(1.0, t);
    const cplx zbar = std::conj(z);
    cplx pos{0.0, 0.0};
    for (int n = series.n_max(); n >= 1; --n) pos = (pos + series.coeff(n)) * z;
    cplx neg{0.0, 0.0};
    for (int n = series.n_max(); n >= 1; --n) neg = (neg + series.coeff(-n)) * zbar;
    return pos + neg + series.coeff(0);
}

double sobolev_norm(const FourierSeries& series, double s) {
    double acc = 0.0;
    for (int n = 1; n <= series.n_max(); ++n) {
        const double w = std::pow(static_cast<double>(n), 2.0 * s);
        acc += w * (std::norm(series.coeff(n)) + std::norm(series.coeff(-n)));
    }
    return std::sqrt(acc);
}

cplx harmonic_extend(const FourierSeries& series, double r, double t) {
    if (r >= 1.0 || r < 0.0)
        throw invalid_input("harmonic_extend: radius outside [0,1)");
    cplx acc = series.coeff(0);
    double rn = 1.0;
    for (int n = 1; n <= series.n_max(); ++n) {
        rn *= r;
        const cplx e = std::polar(1.0, n * t);
        acc += rn * (series.coeff(n) * e + series.coeff(-n) * std::conj(e));
    }
    return acc;
}

FourierSeries conjugate_series(const FourierSeries& series) {
    FourierSeries out(series.n_max(), series.grid_size());
    const cplx mi{0.0, -1.0};
    for (int n = 1; n <= series.n_max(); ++n) {
        out.set_coeff(n, mi * series.coeff(n));
        out.set_coeff(-n, -mi * series.coeff(-n));
    }
    return out;
}

FourierSeries truncate_series(const FourierSeries& series, int n_max) {
    const int nm = std::min(n_max, series.n_max());
    FourierSeries out(nm, series.grid_size());
    for (int n = -nm; n <= nm; ++n) out.set_coeff(n, series.coeff(n));
    return out;
}

double holder_seminorm(std::span<const double> samples, double alpha) {
    if (alpha <= 0.0 || alpha > 1.0)
        throw invalid_input("holder_seminorm: alpha outside (0,1]");
    const int m = static_cast<int>(samples.size());
    if (m < 2) throw invalid_input("holder_seminorm: need at least 2 samples");
    const double h = two_pi / m;
    double best = 0.0;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const int k = std::min(j - i, m - (j - i));
            const double dist = k * h; // arc-length distance on the circle
            const double diff = std::abs(samples[static_cast<size_t>(i)] -
                                         samples[static_cast<size_t>(j)]);
            best = std::max(best, diff / std::pow(dist, alpha));
        }
    }
    return best;
}

} // namespace steklov
