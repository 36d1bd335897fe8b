#include "core/weight.hpp"

#include "core/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace steklov {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

double uniform01(std::mt19937_64& rng) {
    // Portable: avoids unspecified std::distribution implementations.
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}
} // namespace

BoundaryWeight BoundaryWeight::from_samples(std::vector<double> samples) {
    if (samples.size() < 2) throw invalid_input("BoundaryWeight: need at least 2 samples");
    BoundaryWeight w;
    auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
    w.min_value_ = *lo;
    w.max_value_ = *hi;
    if (w.min_value_ <= 0.0)
        throw invalid_input("BoundaryWeight: weight must be strictly positive (min = " +
                            std::to_string(w.min_value_) + ")");
    w.series_ = analyze(std::span<const double>(samples));
    w.samples_ = std::move(samples);
    return w;
}

BoundaryWeight BoundaryWeight::from_series(const FourierSeries& series, int grid_size) {
    auto samples = synthesize_real(series, grid_size);
    auto w = from_samples(std::move(samples));
    return w;
}

BoundaryWeight normalize_mean(const BoundaryWeight& w) {
    const double m = w.mean();
    std::vector<double> s(w.samples());
    for (auto& v : s) v /= m;
    return BoundaryWeight::from_samples(std::move(s));
}

BoundaryWeight mobius_pullback(const BoundaryWeight& w, cplx zeta) {
    const double r2 = std::norm(zeta);
    if (r2 >= 1.0) throw invalid_input("mobius_pullback: |zeta| must be < 1");
    const int m = w.grid();
    const FourierSeries series = truncate_series(w.series(), w.bandwidth(1e-14));
    std::vector<double> out(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
        const cplx z = std::polar(1.0, two_pi * j / m);
        const cplx pre = (z - zeta) / (1.0 - std::conj(zeta) * z); // phi_{-zeta}(z)
        const double kernel = (1.0 - r2) / std::norm(1.0 - std::conj(zeta) * z);
        out[static_cast<size_t>(j)] = eval_series(series, std::arg(pre)).real() * kernel;
    }
    return BoundaryWeight::from_samples(std::move(out));
}

namespace {

// Residual for the centering gauge: first Fourier coefficient of the
// pullback by -zeta, computed directly from a (bandwidth-truncated) series.
cplx center_residual(const FourierSeries& series, int m, cplx zeta) {
    const double r2 = std::norm(zeta);
    cplx acc{0.0, 0.0};
    for (int j = 0; j < m; ++j) {
        const cplx z = std::polar(1.0, two_pi * j / m);
        const cplx pre = (z + zeta) / (1.0 + std::conj(zeta) * z); // phi_zeta(z)
        const double kernel = (1.0 - r2) / std::norm(1.0 + std::conj(zeta) * z);
        const double val = eval_series(series, std::arg(pre)).real() * kernel;
        acc += val * std::conj(z);
    }
    return acc / static_cast<double>(m);
}

struct NewtonOutcome {
    cplx zeta;
    double residual;
    int iterations;
    bool converged;
};

NewtonOutcome center_newton(const FourierSeries& series, int m, cplx zeta0,
                            int max_iter, double tol) {
    cplx zeta = zeta0;
    cplx res = center_residual(series, m, zeta);
    int it = 0;
    const double fd = 1e-7;
    while (it < max_iter && std::abs(res) > tol) {
        ++it;
        const cplx rx = center_residual(series, m, zeta + cplx{fd, 0.0});
        const cplx ry = center_residual(series, m, zeta + cplx{0.0, fd});
        // 2x2 real Jacobian of (Re res, Im res) in (Re zeta, Im zeta).
        const double a = (rx.real() - res.real()) / fd;
        const double b = (ry.real() - res.real()) / fd;
        const double c = (rx.imag() - res.imag()) / fd;
        const double d = (ry.imag() - res.imag()) / fd;
        const double det = a * d - b * c;
        if (std::abs(det) < 1e-14) break;
        const double dx = (d * (-res.real()) - b * (-res.imag())) / det;
        const double dy = (a * (-res.imag()) - c * (-res.real())) / det;
        cplx step{dx, dy};
        // Damping: halve the step until the residual decreases; keep |zeta| <= 0.95.
        double damp = 1.0;
        bool accepted = false;
        for (int h = 0; h < 30; ++h) {
            cplx cand = zeta + damp * step;
            if (std::abs(cand) > 0.95) cand *= 0.95 / std::abs(cand);
            const cplx cres = center_residual(series, m, cand);
            if (std::abs(cres) < std::abs(res)) {
                zeta = cand;
                res = cres;
                accepted = true;
                break;
            }
            damp *= 0.5;
        }
        if (!accepted) break;
    }
    return {zeta, std::abs(res), it, std::abs(res) <= tol};
}

} // namespace

CenterResult normalize_center(const BoundaryWeight& w) {
    const double tol = 1e-11;
    const int m = w.grid();
    const FourierSeries series = truncate_series(w.series(), w.bandwidth(1e-14));
    const cplx guess = std::conj(w.coeff(1));
    cplx zeta0 = std::abs(guess) > 0.8 ? guess * (0.8 / std::abs(guess)) : guess;
    NewtonOutcome out = center_newton(series, m, zeta0, 50, tol);
    if (!out.converged) {
        // Continuation in a homotopy parameter scaling Theta toward 1.
        cplx zeta = {0.0, 0.0};
        bool ok = true;
        for (double s : {0.25, 0.5, 0.75, 1.0}) {
            std::vector<double> mixed(w.samples());
            for (auto& v : mixed) v = 1.0 + s * (v / w.mean() - 1.0);
            BoundaryWeight ws = BoundaryWeight::from_samples(std::move(mixed));
            const FourierSeries ss = truncate_series(ws.series(), ws.bandwidth(1e-14));
            NewtonOutcome stage = center_newton(ss, m, zeta, 80, tol);
            zeta = stage.zeta;
            if (s == 1.0) {
                out = stage;
                ok = stage.converged;
            }
        }
        if (!ok)
            throw numerical_error("normalize_center: root finder stalled, residual = " +
                                  std::to_string(out.residual));
    }
    CenterResult result{mobius_pullback(w, -out.zeta), out.zeta, out.iterations,
                        out.residual};
    return result;
}

double hminus_half_distance(const BoundaryWeight& w) {
    // The n = 0 term is excluded by the seminorm, so the "-1" only removes
    // the mean; the seminorm of Theta itself is the distance to the nearest
    // constant. We still assume callers pass mean-normalized weights.
    return sobolev_norm(w.series(), -0.5);
}

double sup_distance(const BoundaryWeight& w) {
    double best = 0.0;
    for (double v : w.samples()) best = std::max(best, std::abs(v - 1.0));
    return best;
}

double holder_norm(const BoundaryWeight& w, double alpha) {
    double sup = 0.0;
    for (double v : w.samples()) sup = std::max(sup, std::abs(v));
    return sup + holder_seminorm(std::span<const double>(w.samples()), alpha);
}

BoundaryWeight random_weight(std::uint64_t seed, int bandwidth, double amplitude,
                             int grid_size, bool zero_first) {
    if (bandwidth < 2 || amplitude <= 0.0 || amplitude >= 1.0)
        throw invalid_input("random_weight: need bandwidth >= 2 and amplitude in (0,1)");
    std::mt19937_64 rng(seed);
    const int n_min = zero_first ? 2 : 1;
    FourierSeries p(bandwidth, grid_size);
    for (int n = n_min; n <= bandwidth; ++n) {
        const double re = uniform01(rng) - 0.5;
        const double im = uniform01(rng) - 0.5;
        const cplx c = cplx{re, im} / static_cast<double>(n);
        p.set_coeff(n, c);
        p.set_coeff(-n, std::conj(c));
    }
    auto samples = synthesize_real(p, grid_size);
    double sup = 0.0;
    for (double v : samples) sup = std::max(sup, std::abs(v));
    if (sup == 0.0) throw numerical_error("random_weight: degenerate draw");
    for (auto& v : samples) v = 1.0 + v * (amplitude / sup);
    return BoundaryWeight::from_samples(std::move(samples));
}

} // namespace steklov
