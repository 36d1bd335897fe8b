#include "core/galerkin.hpp"

#include "core/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace steklov {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

GalerkinSystem assemble(const BoundaryWeight& weight, int n_modes) {
    if (n_modes < 2) throw invalid_input("assemble: n_modes must be >= 2");
    if (weight.min_value() <= 0.0) throw invalid_input("assemble: non-positive weight");
    const int dim = 2 * n_modes + 1;
    GalerkinSystem sys;
    sys.n_modes = n_modes;
    sys.energy = Eigen::VectorXd(dim);
    sys.mass = Eigen::MatrixXcd(dim, dim);
    for (int k = 0; k < dim; ++k) {
        sys.energy(k) = two_pi * std::abs(k - n_modes);
        for (int l = 0; l < dim; ++l) {
            sys.mass(k, l) = two_pi * weight.coeff(l - k);
        }
    }
    return sys;
}

WeightedSpectrum solve_spectrum(const GalerkinSystem& system, int k_max) {
    const int dim = 2 * system.n_modes + 1;
    if (k_max < 0 || k_max > 2 * system.n_modes)
        throw invalid_input("solve_spectrum: k_max out of range");
    Eigen::MatrixXcd energy = Eigen::MatrixXcd::Zero(dim, dim);
    energy.diagonal() = system.energy.cast<cplx>();
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        energy, system.mass, Eigen::ComputeEigenvectors | Eigen::Ax_lBx);
    if (solver.info() != Eigen::Success)
        throw numerical_error(
            "solve_spectrum: factorization failed (weight not positive definite?)");
    WeightedSpectrum spec;
    spec.n_modes = system.n_modes;
    spec.eigenvalues.assign(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + k_max + 1);
    spec.eigenvectors = solver.eigenvectors().leftCols(k_max + 1);
    return spec;
}

double sigma1(const BoundaryWeight& weight, int n_modes) {
    const auto sys = assemble(weight, n_modes);
    const int dim = 2 * sys.n_modes + 1;
    Eigen::MatrixXcd energy = Eigen::MatrixXcd::Zero(dim, dim);
    energy.diagonal() = sys.energy.cast<cplx>();
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        energy, sys.mass, Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
    if (solver.info() != Eigen::Success)
        throw numerical_error("sigma1: factorization failed (weight not positive definite?)");
    return solver.eigenvalues()(1);
}

int default_n_modes(const BoundaryWeight& weight) {
    return std::max(64, 4 * weight.bandwidth());
}

double sigma1_converged(const BoundaryWeight& weight, double rel_tol) {
    int n = default_n_modes(weight);
    double prev = sigma1(weight, n);
    const int n_cap = 4096;
    while (n < n_cap) {
        n *= 2;
        const double cur = sigma1(weight, n);
        if (std::abs(cur - prev) <= rel_tol * std::abs(cur)) return cur;
        prev = cur;
    }
    throw numerical_error("sigma1_converged: truncation ladder exhausted without convergence");
}

double deficit(const BoundaryWeight& weight) {
    return 1.0 / sigma1_converged(weight) - 1.0;
}

} // namespace steklov
