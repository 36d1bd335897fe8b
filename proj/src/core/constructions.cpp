#include "core/constructions.hpp"

#include "core/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace steklov {

namespace {
constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;
} // namespace

StarBoundary StarBoundary::circle(int m, double radius) {
    return from_radius_samples(std::vector<double>(static_cast<size_t>(m), radius));
}

StarBoundary StarBoundary::from_radius_samples(std::vector<double> radius) {
    const int m = static_cast<int>(radius.size());
    if (m < 3) throw invalid_input("StarBoundary: need at least 3 radius samples");
    StarBoundary b;
    b.points_.resize(radius.size());
    for (int j = 0; j < m; ++j) {
        const double r = radius[static_cast<size_t>(j)];
        if (r <= 0.0) throw invalid_input("StarBoundary: radius must be positive");
        const double t = two_pi * j / m;
        b.points_[static_cast<size_t>(j)] = {r * std::cos(t), r * std::sin(t)};
    }
    b.radius_ = std::move(radius);
    b.perimeter_ = polyline_length(b.points_);
    return b;
}

StarBoundary StarBoundary::from_points(std::vector<Vec2> points) {
    const size_t n = points.size();
    if (n < 3) throw invalid_input("StarBoundary: need at least 3 points");
    // Star-shapedness about the origin on the grid: polar angle strictly
    // increasing (one positive winding).
    double winding = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const Vec2 a = points[i];
        const Vec2 b = points[(i + 1) % n];
        if (norm(a) <= 0.0) throw invalid_input("StarBoundary: point at the origin");
        const double dt = std::atan2(cross(a, b), dot(a, b));
        if (dt <= 0.0)
            throw invalid_input("StarBoundary: curve is not star-shaped about the origin");
        winding += dt;
    }
    if (std::abs(winding - two_pi) > 1e-6)
        throw invalid_input("StarBoundary: curve does not wind once around the origin");
    StarBoundary b;
    b.points_ = std::move(points);
    b.perimeter_ = polyline_length(b.points_);
    return b;
}

double StarBoundary::radius_at(double theta) const {
    theta = std::fmod(theta, two_pi);
    if (theta < 0.0) theta += two_pi;
    if (!radius_.empty()) {
        const int m = static_cast<int>(radius_.size());
        const double u = theta / two_pi * m;
        const int j = static_cast<int>(std::floor(u)) % m;
        const double frac = u - std::floor(u);
        return (1.0 - frac) * radius_[static_cast<size_t>(j)] +
               frac * radius_[static_cast<size_t>((j + 1) % m)];
    }
    // Ray / polyline intersection (exactly one hit for a star-shaped curve).
    const Vec2 d{std::cos(theta), std::sin(theta)};
    const size_t n = points_.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec2 a = points_[i];
        const Vec2 b = points_[(i + 1) % n];
        const Vec2 ab = b - a;
        const double denom = cross(d, ab);
        if (std::abs(denom) < 1e-15) continue;
        const double t = cross(a, d) / denom;
        if (t < -1e-12 || t > 1.0 + 1e-12) continue;
        const Vec2 p = a + t * ab;
        const double s = dot(p, d);
        if (s > 0.0 && std::abs(cross(p, d)) < 1e-9 * std::max(1.0, s)) return s;
    }
    throw invalid_input("StarBoundary: ray intersection failed (not star-shaped?)");
}

double sawtooth(double x) {
    double u = std::fmod(x, 2.0);
    if (u < 0.0) u += 2.0;
    return u <= 1.0 ? u : 2.0 - u;
}

double smoothed_sawtooth(double x, double w) {
    double u = std::fmod(x, 2.0);
    if (u < 0.0) u += 2.0;
    if (w <= 0.0) return sawtooth(u);
    if (std::abs(u - 1.0) < w) {
        const double t = u - 1.0;
        return 1.0 - (t * t + w * w) / (2.0 * w);
    }
    if (u < w || u > 2.0 - w) {
        const double t = u < w ? u : 2.0 - u;
        return (t * t + w * w) / (2.0 * w);
    }
    return sawtooth(u);
}

StarBoundary oscillating_domain(const StarBoundary& base, const BoundaryWeight& weight,
                                int teeth, const OscillationOptions& opts) {
    if (teeth < 2 || teeth % 2 != 0)
        throw invalid_input("oscillating_domain: tooth count must be even and >= 2");
    if (opts.samples_per_tooth < 16)
        throw invalid_input("oscillating_domain: need >= 16 samples per tooth");
    if (!base.has_radial_samples())
        throw invalid_input("oscillating_domain: base must be a radial graph");

    // Smooth representation of the base curve via trigonometric interpolation
    // of the radius.
    const FourierSeries rser = analyze(std::span<const double>(base.radius_samples()));
    const FourierSeries rder = [&] {
        FourierSeries d(rser.n_max(), rser.grid_size());
        for (int n = -rser.n_max(); n <= rser.n_max(); ++n)
            d.set_coeff(n, cplx{0.0, static_cast<double>(n)} * rser.coeff(n));
        return d;
    }();
    auto speed = [&](double th) {
        const double r = eval_series(rser, th).real();
        const double rp = eval_series(rder, th).real();
        return std::hypot(r, rp);
    };

    // Arc length table on a fine parameter grid.
    const int fine = std::max(1 << 12, 64 * teeth);
    std::vector<double> cum(static_cast<size_t>(fine) + 1, 0.0);
    for (int i = 0; i < fine; ++i) {
        const double t0 = two_pi * i / fine;
        const double t1 = two_pi * (i + 1) / fine;
        cum[static_cast<size_t>(i) + 1] =
            cum[static_cast<size_t>(i)] + 0.5 * (speed(t0) + speed(t1)) * (t1 - t0);
    }
    const double total_len = cum.back();
    auto theta_at_arclen = [&](double s) {
        const auto it = std::lower_bound(cum.begin(), cum.end(), s);
        const size_t hi = std::min<size_t>(std::distance(cum.begin(), it), cum.size() - 1);
        if (hi == 0) return 0.0;
        const size_t lo = hi - 1;
        const double frac = (s - cum[lo]) / (cum[hi] - cum[lo]);
        return two_pi * (static_cast<double>(lo) + frac) / fine;
    };

    const double eps = total_len / teeth;
    const int n_out = teeth * opts.samples_per_tooth;
    std::vector<Vec2> pts(static_cast<size_t>(n_out));
    for (int i = 0; i < n_out; ++i) {
        const double s = total_len * i / n_out;
        const double th = theta_at_arclen(s);
        const double r = eval_series(rser, th).real();
        const double rp = eval_series(rder, th).real();
        const Vec2 c{r * std::cos(th), r * std::sin(th)};
        // Outward unit normal of the CCW curve (tangent rotated by -90 deg).
        const Vec2 tang{rp * std::cos(th) - r * std::sin(th),
                        rp * std::sin(th) + r * std::cos(th)};
        const double tn = norm(tang);
        const Vec2 nu{tang.y / tn, -tang.x / tn};
        const double theta_val = weight.value_at(two_pi * s / total_len);
        if (theta_val <= 1.0)
            throw invalid_input("oscillating_domain: construction requires Theta > 1");
        const double lambda = std::sqrt(theta_val * theta_val - 1.0);
        const double x = s / eps;
        const double dval = opts.smooth ? smoothed_sawtooth(x, 0.1) : sawtooth(x);
        const double f = lambda * (eps * dval - (opts.centered ? 0.5 * eps : 0.0));
        pts[static_cast<size_t>(i)] = c + f * nu;
    }
    return StarBoundary::from_points(std::move(pts));
}

double measure_pairing(const StarBoundary& boundary,
                       const std::function<double(double, double)>& test_fn) {
    const auto& pts = boundary.points();
    const size_t n = pts.size();
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const Vec2 a = pts[i];
        const Vec2 b = pts[(i + 1) % n];
        const Vec2 mid = 0.5 * (a + b);
        acc += test_fn(mid.x, mid.y) * norm(b - a);
    }
    return acc;
}

namespace {

double p_integrand(double a, double t) {
    return std::sqrt(std::max(0.0, 1.0 + a * a + 2.0 * a * std::cos(t)));
}

double adaptive_simpson(double a, double lo, double hi, double flo, double fmid,
                        double fhi, double whole, double tol, int depth) {
    const double mid = 0.5 * (lo + hi);
    const double lmid = 0.5 * (lo + mid);
    const double rmid = 0.5 * (mid + hi);
    const double flm = p_integrand(a, lmid);
    const double frm = p_integrand(a, rmid);
    const double left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
    const double right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(a, lo, mid, flo, flm, fmid, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(a, mid, hi, fmid, frm, fhi, right, 0.5 * tol, depth - 1);
}

} // namespace

double p_function(double a) {
    if (a < 0.0) throw invalid_input("p_function: a must be >= 0");
    // Even integrand: average over [0,pi].
    const double flo = p_integrand(a, 0.0);
    const double fmid = p_integrand(a, 0.5 * pi);
    const double fhi = p_integrand(a, pi);
    const double whole = pi / 6.0 * (flo + 4.0 * fmid + fhi);
    const double val =
        adaptive_simpson(a, 0.0, pi, flo, fmid, fhi, whole, 5e-13 * pi, 40);
    return val / pi;
}

double p_inverse(double y) {
    const double p_max = 4.0 / pi;
    if (y < 1.0 || y >= p_max)
        throw invalid_input("p_inverse: value outside [1, 4/pi)");
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (p_function(mid) < y) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

InstabilityMap instability_map(const ConformalMap& base, int n) {
    if (n < 1) throw invalid_input("instability_map: n must be >= 1");
    const int m = std::max(2048, 8 * base.n_terms());
    std::vector<double> gp(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j)
        gp[static_cast<size_t>(j)] = std::abs(base.eval_deriv(std::polar(1.0, two_pi * j / m)));
    const auto [lo_it, hi_it] = std::minmax_element(gp.begin(), gp.end());
    const double gap = 4.0 / pi * *lo_it;
    if (*hi_it >= gap)
        throw invalid_input("instability_map: max|g'| / min|g'| = " +
                            std::to_string(*hi_it / *lo_it) +
                            " violates the 4/pi gap condition");
    const double lambda = 0.5 * (*hi_it + gap);

    // |f| = |g'| P^{-1}(lambda/|g'|); f = exp(H log|f| + i conjugate), the
    // conjugate's additive constant fixed to 0.
    std::vector<double> logf(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
        const double g = gp[static_cast<size_t>(j)];
        logf[static_cast<size_t>(j)] = std::log(g * p_inverse(lambda / g));
    }
    const FourierSeries ell = analyze(std::span<const double>(logf));
    const int f_terms = std::max(base.n_terms(), ell.bandwidth(1e-13) + 1);
    std::vector<cplx> fb(static_cast<size_t>(f_terms));
    fb[0] = cplx{ell.coeff(0).real(), 0.0};
    for (int k = 1; k < f_terms; ++k) fb[static_cast<size_t>(k)] = 2.0 * ell.coeff(k);
    const std::vector<cplx> f = series_exp(fb);

    // g_n' = g' + z^n f + z^{n+1} f'/(n+1); the z^{n+k} coefficient picks up
    // f_k (n+1+k)/(n+1).
    const auto& gd = base.deriv_coeffs();
    std::vector<cplx> deriv(std::max(gd.size(), static_cast<size_t>(n) + f.size()),
                            cplx{0.0, 0.0});
    std::copy(gd.begin(), gd.end(), deriv.begin());
    for (size_t k = 0; k < f.size(); ++k) {
        deriv[static_cast<size_t>(n) + k] +=
            f[k] * (static_cast<double>(n) + 1.0 + static_cast<double>(k)) /
            (static_cast<double>(n) + 1.0);
    }
    return {ConformalMap::from_deriv(deriv), lambda};
}

double sharpness_amplitude(int n, double eps) {
    if (eps <= 0.0 || eps >= 1.0) throw invalid_input("sharpness: eps must be in (0,1)");
    return std::pow(static_cast<double>(n), -(1.0 - eps) / eps);
}

BoundaryWeight sharpness_weight(int n, double eps, int grid_size) {
    if (n < 4) throw invalid_input("sharpness_weight: n must be >= 4");
    const double a = sharpness_amplitude(n, eps);
    if (a >= 1.0) throw invalid_input("sharpness_weight: amplitude must stay below 1");
    std::vector<double> samples(static_cast<size_t>(grid_size));
    for (int j = 0; j < grid_size; ++j)
        samples[static_cast<size_t>(j)] = 1.0 + a * std::cos(n * two_pi * j / grid_size);
    return BoundaryWeight::from_samples(std::move(samples));
}

} // namespace steklov
