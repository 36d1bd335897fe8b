#include "core/conformal.hpp"

#include "core/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace steklov {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

cplx horner(const std::vector<cplx>& coeffs, cplx z) {
    cplx acc{0.0, 0.0};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}
} // namespace

std::vector<cplx> series_exp(const std::vector<cplx>& h) {
    const size_t n = h.size();
    std::vector<cplx> f(n, cplx{0.0, 0.0});
    if (n == 0) return f;
    f[0] = std::exp(h[0]);
    for (size_t m = 1; m < n; ++m) {
        cplx acc{0.0, 0.0};
        for (size_t k = 1; k <= m; ++k) acc += static_cast<double>(k) * h[k] * f[m - k];
        f[m] = acc / static_cast<double>(m);
    }
    return f;
}

std::vector<cplx> series_log(const std::vector<cplx>& f) {
    const size_t n = f.size();
    if (n == 0 || std::abs(f[0]) == 0.0)
        throw invalid_input("series_log: constant term must be nonzero");
    std::vector<cplx> h(n, cplx{0.0, 0.0});
    h[0] = std::log(f[0]);
    for (size_t m = 1; m < n; ++m) {
        cplx acc{0.0, 0.0};
        for (size_t k = 1; k < m; ++k) acc += static_cast<double>(k) * h[k] * f[m - k];
        h[m] = (f[m] - acc / static_cast<double>(m)) / f[0];
    }
    return h;
}

ConformalMap ConformalMap::from_deriv_log(std::vector<cplx> deriv_log_coeffs) {
    if (deriv_log_coeffs.empty())
        throw invalid_input("ConformalMap: empty coefficient list");
    ConformalMap m;
    m.deriv_log_ = std::move(deriv_log_coeffs);
    m.deriv_ = series_exp(m.deriv_log_);
    m.map_.assign(m.deriv_.size() + 1, cplx{0.0, 0.0});
    for (size_t k = 1; k < m.map_.size(); ++k)
        m.map_[k] = m.deriv_[k - 1] / static_cast<double>(k);
    return m;
}

ConformalMap ConformalMap::from_deriv(const std::vector<cplx>& deriv_coeffs) {
    ConformalMap m;
    m.deriv_log_ = series_log(deriv_coeffs);
    m.deriv_ = deriv_coeffs;
    m.log_primary_ = false;
    m.map_.assign(m.deriv_.size() + 1, cplx{0.0, 0.0});
    for (size_t k = 1; k < m.map_.size(); ++k)
        m.map_[k] = m.deriv_[k - 1] / static_cast<double>(k);
    return m;
}

cplx ConformalMap::eval(cplx z) const { return horner(map_, z); }

cplx ConformalMap::eval_deriv(cplx z) const {
    if (log_primary_) return std::exp(horner(deriv_log_, z));
    return horner(deriv_, z);
}

cplx ConformalMap::eval_deriv_log(cplx z) const {
    if (log_primary_) return horner(deriv_log_, z);
    return std::log(horner(deriv_, z));
}

cplx ConformalMap::eval_second_deriv(cplx z) const {
    if (log_primary_) return eval_deriv(z) * eval_deriv_log_prime(z);
    cplx acc{0.0, 0.0};
    for (size_t n = deriv_.size() - 1; n >= 1; --n)
        acc = acc * z + static_cast<double>(n) * deriv_[n];
    return acc;
}

cplx ConformalMap::eval_deriv_log_prime(cplx z) const {
    if (!log_primary_) return eval_second_deriv(z) / eval_deriv(z);
    cplx acc{0.0, 0.0};
    for (int n = n_terms() - 1; n >= 1; --n)
        acc = acc * z + static_cast<double>(n) * deriv_log_[static_cast<size_t>(n)];
    return acc;
}

ConformalMap reconstruct(const BoundaryWeight& weight, int n_terms) {
    if (n_terms < 1) throw invalid_input("reconstruct: n_terms must be >= 1");
    std::vector<double> log_theta(weight.samples().size());
    std::transform(weight.samples().begin(), weight.samples().end(), log_theta.begin(),
                   [](double v) { return std::log(v); });
    const FourierSeries ell = analyze(std::span<const double>(log_theta));
    const int terms = std::min(n_terms, ell.n_max() + 1);
    std::vector<cplx> b(static_cast<size_t>(terms));
    // Re(log g') on the boundary equals log Theta; matching coefficients gives
    // b_0 = hat(0), b_n = 2 hat(n). The rotation gauge b_0 real fixes g'(0) > 0.
    b[0] = cplx{ell.coeff(0).real(), 0.0};
    for (int n = 1; n < terms; ++n) b[static_cast<size_t>(n)] = 2.0 * ell.coeff(n);
    double tail = 0.0;
    for (int n = terms; n <= ell.n_max(); ++n) tail += 2.0 * std::abs(ell.coeff(n));
    ConformalMap map = ConformalMap::from_deriv_log(std::move(b));
    map.set_tail_energy(tail);
    return map;
}

std::vector<Vec2> boundary_curve(const ConformalMap& map, int m) {
    if (m < 3) throw invalid_input("boundary_curve: need at least 3 samples");
    std::vector<Vec2> pts(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
        const cplx g = map.eval(std::polar(1.0, two_pi * j / m));
        pts[static_cast<size_t>(j)] = {g.real(), g.imag()};
    }
    return pts;
}

double perimeter(const ConformalMap& map) {
    const int m = std::max(1024, 8 * map.n_terms());
    double acc = 0.0;
    for (int j = 0; j < m; ++j)
        acc += std::abs(map.eval_deriv(std::polar(1.0, two_pi * j / m)));
    return acc * two_pi / m;
}

double univalence_margin(const ConformalMap& map) {
    const int m_ang = std::max(512, 8 * map.n_terms());
    double sup = 0.0;
    auto scan_radius = [&](double r) {
        for (int j = 0; j < m_ang; ++j) {
            const cplx z = std::polar(r, two_pi * j / m_ang);
            const double v = (1.0 - r * r) * std::abs(z * map.eval_deriv_log_prime(z));
            sup = std::max(sup, v);
        }
    };
    double prev = 0.0;
    for (int j = 0; j <= 12; ++j) {
        const double r = 1.0 - std::ldexp(1.0, -j);
        scan_radius(0.5 * (prev + r));
        scan_radius(r);
        prev = r;
    }
    // Analytic cap on the rim 1 - 2^-12 < |z| < 1 from the truncated series:
    // (1-r^2) <= 2^-11 there and |z (log g')'| <= sum n |b_n|.
    double coef_sum = 0.0;
    for (int n = 1; n < map.n_terms(); ++n)
        coef_sum += n * std::abs(map.deriv_log_coeffs()[static_cast<size_t>(n)]);
    sup = std::max(sup, std::ldexp(coef_sum, -11));
    return sup;
}

double apriori_norm(const ConformalMap& map, double alpha) {
    if (alpha <= 0.0 || alpha > 1.0)
        throw invalid_input("apriori_norm: alpha outside (0,1]");
    const int m = std::max(1024, 8 * map.n_terms());
    std::vector<double> u(static_cast<size_t>(m));
    double sup = 0.0;
    for (int j = 0; j < m; ++j) {
        const double v = map.eval_deriv_log(std::polar(1.0, two_pi * j / m)).real();
        u[static_cast<size_t>(j)] = v;
        sup = std::max(sup, std::abs(v));
    }
    return sup + holder_seminorm(std::span<const double>(u), alpha);
}

} // namespace steklov
