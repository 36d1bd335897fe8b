#ifndef STEKLOV_CONFORMAL_HPP
#define STEKLOV_CONFORMAL_HPP

#include "core/geometry.hpp"
#include "core/weight.hpp"

#include <vector>

namespace steklov {

// Holomorphic g on the disk with non-vanishing derivative, stored through the
// power series of log g'. Gauge: g(0) = 0 and g'(0) > 0.
class ConformalMap {
public:
    // log g' coefficients, index = power of z.
    static ConformalMap from_deriv_log(std::vector<cplx> deriv_log_coeffs);
    // g' power series with nonzero constant term; takes the formal logarithm.
    static ConformalMap from_deriv(const std::vector<cplx>& deriv_coeffs);

    int n_terms() const { return static_cast<int>(deriv_log_.size()); }
    const std::vector<cplx>& deriv_log_coeffs() const { return deriv_log_; }
    const std::vector<cplx>& deriv_coeffs() const { return deriv_; }
    const std::vector<cplx>& map_coeffs() const { return map_; }

    double tail_energy() const { return tail_energy_; }
    void set_tail_energy(double e) { tail_energy_ = e; }

    cplx eval(cplx z) const;                 // g(z)
    cplx eval_deriv(cplx z) const;           // g'(z) = exp((log g')(z)), never 0
    cplx eval_deriv_log(cplx z) const;       // (log g')(z)
    cplx eval_deriv_log_prime(cplx z) const; // (log g')'(z) = g''/g'
    cplx eval_second_deriv(cplx z) const;    // g''(z)

private:
    ConformalMap() = default;
    std::vector<cplx> deriv_log_;
    std::vector<cplx> deriv_;
    std::vector<cplx> map_; // map_[0] = 0
    double tail_energy_ = 0.0;
    // Which series is exact: the other is its truncated exp/log companion.
    // Pointwise evaluation always goes through the exact one.
    bool log_primary_ = true;
};

// Power-series utilities (truncated to the length of the input).
std::vector<cplx> series_exp(const std::vector<cplx>& h);
std::vector<cplx> series_log(const std::vector<cplx>& f); // needs f[0] != 0

// Map with |g'| = Theta on the boundary: log g' is the analytic completion of
// the harmonic extension of log Theta, rotation gauge g'(0) > 0.
ConformalMap reconstruct(const BoundaryWeight& weight, int n_terms);

// Boundary trace g(e^{it_j}), j = 0..m-1.
std::vector<Vec2> boundary_curve(const ConformalMap& map, int m);

// Integral of |g'| over the boundary; equals |boundary of g(D)| for univalent g.
double perimeter(const ConformalMap& map);

// sup over the disk of (1-|z|^2) |z g''/g'|; a value <= 1 certifies
// injectivity. Evaluated on a radial-angular grid clustering at the boundary,
// with an analytic cap on the unsampled rim.
double univalence_margin(const ConformalMap& map);

// ||log|g'| ||_{C^{0,alpha}} on the boundary (sup + Holder seminorm).
double apriori_norm(const ConformalMap& map, double alpha);

} // namespace steklov

#endif
