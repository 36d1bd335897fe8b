#ifndef STEKLOV_WEIGHT_HPP
#define STEKLOV_WEIGHT_HPP

#include "core/fourier.hpp"

#include <cstdint>
#include <vector>

namespace steklov {

// Strictly positive boundary density Theta on the unit circle, kept in the
// dual sample/Fourier representation on the shared uniform grid.
class BoundaryWeight {
public:
    static BoundaryWeight from_samples(std::vector<double> samples);
    static BoundaryWeight from_series(const FourierSeries& series, int grid_size);

    const FourierSeries& series() const { return series_; }
    const std::vector<double>& samples() const { return samples_; }
    int grid() const { return static_cast<int>(samples_.size()); }
    double min_value() const { return min_value_; }
    double max_value() const { return max_value_; }

    // Mean value = hat Theta(0).
    double mean() const { return series_.coeff(0).real(); }
    cplx coeff(int n) const { return series_.coeff(n); }
    double value_at(double t) const { return eval_series(series_, t).real(); }
    int bandwidth(double rel_tol = 1e-13) const { return series_.bandwidth(rel_tol); }

private:
    BoundaryWeight() = default;
    FourierSeries series_;
    std::vector<double> samples_;
    double min_value_ = 0.0;
    double max_value_ = 0.0;
};

// Theta / hat Theta(0), so the result has unit mean.
BoundaryWeight normalize_mean(const BoundaryWeight& w);

// Pullback of the density under the disk automorphism phi_zeta:
// Theta(phi_{-zeta}(z)) * (1-|zeta|^2)/|1 - conj(zeta) z|^2. Preserves the
// total mass. Requires |zeta| < 1.
BoundaryWeight mobius_pullback(const BoundaryWeight& w, cplx zeta);

struct CenterResult {
    BoundaryWeight weight;  // pullback with hat Theta(+-1) = 0
    cplx zeta;              // the centering parameter, |zeta| < 1
    int iterations = 0;
    double residual = 0.0;  // |hat Theta(1)| of the returned weight
};

// Finds zeta so that mobius_pullback(w, -zeta) has vanishing first Fourier
// coefficients (center-of-mass gauge). Damped Newton with finite-difference
// Jacobian; falls back to a homotopy scaling Theta toward 1. Requires a
// positive weight with unit mean.
CenterResult normalize_center(const BoundaryWeight& w);

// ||Theta - 1||_{H^{-1/2}}.
double hminus_half_distance(const BoundaryWeight& w);

// ||Theta - 1||_{L^inf} on the grid.
double sup_distance(const BoundaryWeight& w);

// ||Theta||_{C^{0,alpha}} grid estimate: sup |Theta| + Holder seminorm.
double holder_norm(const BoundaryWeight& w, double alpha);

// Seeded random positive weight 1 + p with prescribed bandwidth and
// ||p||_inf = amplitude. With zero_first set, hat p(0) = hat p(+-1) = 0 so
// the result is normalized for the stability estimates. Deterministic for a
// given seed.
BoundaryWeight random_weight(std::uint64_t seed, int bandwidth, double amplitude,
                             int grid_size, bool zero_first = true);

} // namespace steklov

#endif
