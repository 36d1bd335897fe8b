#ifndef STEKLOV_FEM_HPP
#define STEKLOV_FEM_HPP

#include "core/constructions.hpp"
#include "core/geometry.hpp"

#include <vector>

namespace steklov {

// Triangulation of a star-shaped region: center node, concentric rings that
// are scaled copies of the boundary polygon, geometric grading toward the
// boundary. Boundary nodes come last so the Steklov trace block is contiguous.
struct Mesh {
    std::vector<Vec2> nodes;
    std::vector<std::array<int, 3>> triangles;
    int n_boundary = 0; // boundary nodes are nodes[n_interior ..]
    int n_interior() const { return static_cast<int>(nodes.size()) - n_boundary; }
};

// n_radial rings between the center and the boundary polygon; ring spacing
// shrinks by the given ratio toward the boundary.
Mesh build_mesh(const StarBoundary& boundary, int n_radial, double grading = 1.2);

struct FemSpectrum {
    std::vector<double> eigenvalues; // ascending, starts at ~0
};

// Steklov eigenvalues via P1 elements: stiffness over the region, weighted
// P1 mass on the boundary, interior dofs eliminated by a Schur complement.
// boundary_weight holds one value per boundary node (empty = 1 everywhere).
FemSpectrum solve_steklov_fem(const Mesh& mesh, std::vector<double> boundary_weight,
                              int n_eigenvalues);

} // namespace steklov

#endif
