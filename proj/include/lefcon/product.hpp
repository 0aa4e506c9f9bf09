#pragma once

#include <utility>
#include <vector>

#include "lefcon/complex.hpp"
#include "lefcon/homology.hpp"
#include "lefcon/maps.hpp"

namespace lefcon {

/// Staircase triangulation of |K| x |L| for pairs (K,K'), (L,L'): vertices
/// (a,b) ordered lexicographically, simplices the chains of the product order
/// whose projections are simplices of K and L. The subcomplex is
/// K x L' ∪ K' x L.
struct ProductData {
  SimplicialPair first;
  SimplicialPair second;
  SimplicialPair product;
  /// (P, K' x L) -> (K, K')
  SimplicialMap projection_first;
  /// (P, K x L') -> (L, L')
  SimplicialMap projection_second;

  int vertex(int a, int b) const { return a * second.total.vertex_count() + b; }
  int first_of(int v) const { return v / second.total.vertex_count(); }
  int second_of(int v) const { return v % second.total.vertex_count(); }
};

ProductData product_pair(const SimplicialPair& a, const SimplicialPair& b);

/// Eilenberg–Zilber shuffle of two simplices: the signed (p+q)-simplices of
/// the prism σ x τ, one per (p,q)-shuffle, sign (-1)^{#inversions}.
std::vector<std::pair<int, Simplex>> shuffle(const ProductData& prod, const Simplex& sigma,
                                             const Simplex& tau);

/// Shuffle of relative chains a ∈ C_i(K,K'), b ∈ C_j(L,L') into C_{i+j} of the
/// product pair, all over generator rows of the respective PairHomology.
Vector shuffle_chains(const ProductData& prod, const PairHomology& first, int i, const Vector& a,
                      const PairHomology& second, int j, const Vector& b,
                      const PairHomology& product);

}  // namespace lefcon
