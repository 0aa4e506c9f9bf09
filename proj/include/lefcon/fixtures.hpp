#pragma once

#include <optional>
#include <string>

#include "lefcon/complex.hpp"
#include "lefcon/maps.hpp"
#include "lefcon/product.hpp"

namespace lefcon::fixtures {

/// Closure of the (n-1)-faces of a pure n-complex that have exactly one coface.
SimplicialComplex boundary_of(const SimplicialComplex& c);
/// (c, boundary_of(c)).
SimplicialPair manifold_pair(const SimplicialComplex& c);

SimplicialComplex point();
/// Hollow n-gon on v0..v{n-1}.
SimplicialComplex circle(int n);
/// The interval [v0, v1].
SimplicialComplex interval();
/// Boundary of the tetrahedron on v0..v3.
SimplicialComplex tetra_boundary();
/// Seven-vertex torus: triangles {i,i+1,i+3} and {i,i+2,i+3} mod 7.
SimplicialComplex torus7();
/// Staircase product of two 3-vertex circles.
SimplicialComplex staircase_torus();
/// Five-vertex Möbius band: triangles {i,i+1,i+2} mod 5.
SimplicialComplex mobius();
/// Staircase product circle(3) x interval with the two end circles as boundary.
SimplicialPair cylinder();

/// i -> i + shift mod n on circle(n).
SimplicialMap rotation(int n, int shift);
/// circle(6) -> circle(3), i -> i mod 3; degree 2.
SimplicialMap double_cover();
/// circle(6) -> circle(3) as a PL homeomorphism: 2j -> v_j, 2j+1 -> midpoint
/// of v_j and v_{j+1}.
PLMap subdivision_embedding();
/// Reflection v0 <-> v1 of the tetrahedron boundary; degree -1.
SimplicialMap tetra_reflection();
/// (a,b) -> (b,a) on the staircase torus.
SimplicialMap torus_swap();

/// A discrete system g: M' x U -> M. When `identification` is present, M' is
/// a subdivision of M and the identification is the PL homeomorphism M' -> M;
/// otherwise M' = M.
struct SystemSpec {
  std::string name;
  SimplicialPair state;
  SimplicialPair source_state;
  SimplicialComplex input;
  SimplicialMap map;
  std::optional<PLMap> identification;
};

/// g(x, u) = x.
SystemSpec projection_system(const std::string& name, const SimplicialPair& state,
                             const SimplicialComplex& input);
/// State circle(3)^n (staircase), input circle(3),
/// g((x_1,...,x_n), u) = (u, x_1, ..., x_{n-1}).
SystemSpec robot_arm(int n);
/// State circle(3) subdivided as circle(6), input a point, g the double cover.
SystemSpec degree_two_slice();
/// Cylinder state, input two isolated vertices u0, u1; g(., u0) is the
/// identity and g(., u1) collapses onto the bottom circle.
SystemSpec cylinder_collapse();
/// State circle(6), input a point, g(x, u) = x + 3.
SystemSpec hexagon_flip();

}  // namespace lefcon::fixtures
