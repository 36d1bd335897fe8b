#ifndef STEKLOV_GALERKIN_HPP
#define STEKLOV_GALERKIN_HPP

#include "core/weight.hpp"

#include <Eigen/Dense>

namespace steklov {

// Quadratic forms of the weighted Steklov problem truncated to the Fourier
// modes |n| <= n_modes. Row/column index k maps to mode n = k - n_modes.
struct GalerkinSystem {
    int n_modes = 0;
    Eigen::VectorXd energy;  // diagonal, 2*pi*|n|
    Eigen::MatrixXcd mass;   // Hermitian Toeplitz, entry (k,l) = 2*pi*hat Theta(l-k)
};

GalerkinSystem assemble(const BoundaryWeight& weight, int n_modes);

struct WeightedSpectrum {
    std::vector<double> eigenvalues;  // sigma_0 <= sigma_1 <= ...
    Eigen::MatrixXcd eigenvectors;    // mass-orthonormal coefficient columns
    int n_modes = 0;
};

// Eigenvalues of the pencil (energy, mass), nondecreasing. Each value is an
// upper bound of the true sigma_k and nonincreasing in n_modes (min-max over
// a growing trial family).
WeightedSpectrum solve_spectrum(const GalerkinSystem& system, int k_max);

// sigma_1 at a fixed truncation.
double sigma1(const BoundaryWeight& weight, int n_modes);

// Default truncation for a given weight.
int default_n_modes(const BoundaryWeight& weight);

// Converged sigma_1: n_modes doubled until successive values agree to
// rel_tol. Starts from default_n_modes.
double sigma1_converged(const BoundaryWeight& weight, double rel_tol = 1e-10);

// deff(Theta) = 1/sigma_1(D,Theta) - 1 with doubling convergence. The caller
// is expected to pass a weight with hat Theta(0) = 1 (see normalize_mean).
double deficit(const BoundaryWeight& weight);

} // namespace steklov

#endif
