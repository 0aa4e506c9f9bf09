#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lefcon/complex.hpp"
#include "lefcon/homology.hpp"

namespace lefcon {

/// A vertex assignment between pairs, realizing a simplicial map of pairs.
struct SimplicialMap {
  SimplicialPair source;
  SimplicialPair target;
  std::vector<int> vertex_map;

  int operator()(int v) const { return vertex_map[static_cast<std::size_t>(v)]; }

  /// Image vertex set of `s`, sorted and deduplicated.
  Simplex image(const Simplex& s) const;

  /// Same vertex assignment between the total complexes, subcomplexes dropped.
  SimplicialMap absolute() const;
  SimplicialMap with_pairs(SimplicialPair source, SimplicialPair target) const;

  friend bool operator==(const SimplicialMap&, const SimplicialMap&) = default;
};

/// Checks that every simplex goes to a simplex and that the source subcomplex
/// goes into the target subcomplex. Throws TopologyError.
void validate_map(const SimplicialMap& f);

SimplicialMap identity_map(const SimplicialPair& p);
SimplicialMap constant_map(const SimplicialPair& source, const SimplicialPair& target, int vertex);

/// g ∘ f. The target of f must equal the source of g.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/// Oriented image of a simplex: (+1/-1, sorted image) or (0, {}) when the
/// image is degenerate.
std::pair<int, Simplex> oriented_image(const std::vector<int>& vertex_map, const Simplex& s);

/// Matrix of the chain map f_#: C_k(source) -> C_k(target).
Matrix chain_map_matrix(const SimplicialMap& f, const PairHomology& src, const PairHomology& tgt, int k);

/// f_*: H_k(source) -> H_k(target) in the bases of `src` and `tgt`.
Matrix induced_homology_map(const SimplicialMap& f, const PairHomology& src,
                            const PairHomology& tgt, int k);

/// f^*: H^k(target) -> H^k(source) in the dual bases, computed by pulling
/// back the target cocycles and evaluating them on the source cycles.
Matrix induced_cohomology_map(const SimplicialMap& f, const PairHomology& src,
                              const PairHomology& tgt, int k);

HomologyClass push_forward(const SimplicialMap& f, const PairHomology& src,
                           const PairHomology& tgt, const HomologyClass& a);

/// A point of a simplicial complex in barycentric coordinates over vertices.
using Point = std::map<int, Rational>;

/// Piecewise-linear map: each source vertex goes to a point of the target and
/// the map is affine on every source simplex. Simplicial maps are the case
/// where every vertex image is a vertex.
struct PLMap {
  SimplicialComplex source;
  SimplicialComplex target;
  std::vector<Point> images;

  static PLMap from(const SimplicialMap& f);
  bool is_simplicial() const;
  Point evaluate(const Simplex& s, const Vector& barycentric) const;

  friend bool operator==(const PLMap&, const PLMap&) = default;
};

/// Weights positive and summing to 1; the vertex images of every source
/// simplex lie in one closed simplex of the target.
void validate_pl_map(const PLMap& f);

/// Vertex map sending each vertex to the heaviest vertex of its image carrier
/// (ties to the lowest index). Homotopic to f by the straight-line homotopy
/// inside carrier simplices.
SimplicialMap simplicial_approximation(const PLMap& f, const SimplicialPair& source,
                                       const SimplicialPair& target);

/// f ∘ s for a simplicial s whose target complex is f's source.
PLMap compose(const PLMap& f, const SimplicialMap& s);

}  // namespace lefcon
