#include "core/fem.hpp"

#include "core/errors.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <algorithm>
#include <cmath>

namespace steklov {

Mesh build_mesh(const StarBoundary& boundary, int n_radial, double grading) {
    if (n_radial < 1) throw invalid_input("build_mesh: need at least one ring");
    if (grading < 1.0) throw invalid_input("build_mesh: grading ratio must be >= 1");
    const auto& bp = boundary.points();
    const int na = static_cast<int>(bp.size());

    // Ring radii fractions: spacings shrink by `grading` toward the boundary.
    std::vector<double> frac(static_cast<size_t>(n_radial));
    {
        double h = 1.0, acc = 0.0;
        std::vector<double> steps(static_cast<size_t>(n_radial));
        for (int i = 0; i < n_radial; ++i) {
            steps[static_cast<size_t>(i)] = h;
            acc += h;
            h /= grading;
        }
        double run = 0.0;
        for (int i = 0; i < n_radial; ++i) {
            run += steps[static_cast<size_t>(i)];
            frac[static_cast<size_t>(i)] = run / acc;
        }
    }

    Mesh mesh;
    mesh.n_boundary = na;
    mesh.nodes.reserve(static_cast<size_t>(n_radial) * na + 1);
    mesh.nodes.push_back({0.0, 0.0});
    for (int i = 0; i < n_radial; ++i) {
        const double f = frac[static_cast<size_t>(i)];
        for (int j = 0; j < na; ++j) mesh.nodes.push_back(f * bp[static_cast<size_t>(j)]);
    }
    auto ring_node = [&](int ring, int j) { return 1 + ring * na + (j % na); };

    // Fan around the center, then quads split into triangles between rings.
    for (int j = 0; j < na; ++j)
        mesh.triangles.push_back({0, ring_node(0, j), ring_node(0, j + 1)});
    for (int i = 0; i + 1 < n_radial; ++i) {
        for (int j = 0; j < na; ++j) {
            const int a = ring_node(i, j), b = ring_node(i, j + 1);
            const int c = ring_node(i + 1, j), d = ring_node(i + 1, j + 1);
            mesh.triangles.push_back({a, d, b});
            mesh.triangles.push_back({a, c, d});
        }
    }
    for (const auto& tri : mesh.triangles) {
        const Vec2 e1 = mesh.nodes[static_cast<size_t>(tri[1])] -
                        mesh.nodes[static_cast<size_t>(tri[0])];
        const Vec2 e2 = mesh.nodes[static_cast<size_t>(tri[2])] -
                        mesh.nodes[static_cast<size_t>(tri[0])];
        if (cross(e1, e2) <= 0.0)
            throw numerical_error("build_mesh: degenerate or inverted triangle");
    }
    return mesh;
}

FemSpectrum solve_steklov_fem(const Mesh& mesh, std::vector<double> boundary_weight,
                              int n_eigenvalues) {
    const int nb = mesh.n_boundary;
    const int ni = mesh.n_interior();
    const int n = nb + ni;
    if (nb < 3) throw invalid_input("solve_steklov_fem: no boundary nodes");
    if (boundary_weight.empty()) boundary_weight.assign(static_cast<size_t>(nb), 1.0);
    if (static_cast<int>(boundary_weight.size()) != nb)
        throw invalid_input("solve_steklov_fem: weight size does not match boundary");
    for (double w : boundary_weight)
        if (w <= 0.0) throw invalid_input("solve_steklov_fem: weight must be positive");
    if (n_eigenvalues < 1 || n_eigenvalues > nb)
        throw invalid_input("solve_steklov_fem: bad eigenvalue count");

    // P1 stiffness.
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(mesh.triangles.size() * 9);
    for (const auto& tri : mesh.triangles) {
        const Vec2 p0 = mesh.nodes[static_cast<size_t>(tri[0])];
        const Vec2 p1 = mesh.nodes[static_cast<size_t>(tri[1])];
        const Vec2 p2 = mesh.nodes[static_cast<size_t>(tri[2])];
        const double area2 = cross(p1 - p0, p2 - p0); // 2*area, positive
        const double gx[3] = {p1.y - p2.y, p2.y - p0.y, p0.y - p1.y};
        const double gy[3] = {p2.x - p1.x, p0.x - p2.x, p1.x - p0.x};
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                trip.emplace_back(tri[static_cast<size_t>(r)], tri[static_cast<size_t>(c)],
                                  (gx[r] * gx[c] + gy[r] * gy[c]) / (2.0 * area2));
    }
    Eigen::SparseMatrix<double> K(n, n);
    K.setFromTriplets(trip.begin(), trip.end());

    // Boundary dofs are the trailing block [ni, n).
    const Eigen::SparseMatrix<double> Kii = K.block(0, 0, ni, ni);
    const Eigen::MatrixXd Kib = Eigen::MatrixXd(K.block(0, ni, ni, nb));
    const Eigen::MatrixXd Kbb = Eigen::MatrixXd(K.block(ni, ni, nb, nb));

    Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> llt(Kii);
    if (llt.info() != Eigen::Success)
        throw numerical_error("solve_steklov_fem: interior factorization failed");
    const Eigen::MatrixXd S = Kbb - Kib.transpose() * llt.solve(Kib);

    // Weighted P1 boundary mass (weight piecewise linear along the boundary).
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(nb, nb);
    for (int j = 0; j < nb; ++j) {
        const int k = (j + 1) % nb;
        const double h = norm(mesh.nodes[static_cast<size_t>(ni + k)] -
                              mesh.nodes[static_cast<size_t>(ni + j)]);
        const double wj = boundary_weight[static_cast<size_t>(j)];
        const double wk = boundary_weight[static_cast<size_t>(k)];
        M(j, j) += h * (3.0 * wj + wk) / 12.0;
        M(k, k) += h * (wj + 3.0 * wk) / 12.0;
        M(j, k) += h * (wj + wk) / 12.0;
        M(k, j) += h * (wj + wk) / 12.0;
    }

    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(S, M);
    if (solver.info() != Eigen::Success)
        throw numerical_error("solve_steklov_fem: eigensolve failed");
    FemSpectrum out;
    out.eigenvalues.assign(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + n_eigenvalues);
    // The Schur complement is singular up to roundoff on constants; clamp.
    if (!out.eigenvalues.empty() && std::abs(out.eigenvalues[0]) < 1e-8)
        out.eigenvalues[0] = std::max(out.eigenvalues[0], 0.0);
    return out;
}

} // namespace steklov
