#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "lefcon/homology.hpp"
#include "lefcon/maps.hpp"
#include "lefcon/product.hpp"

namespace lefcon {

class DegreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A cohomology class: degree plus coordinates in the dual basis.
struct CohomologyClass {
  int degree = 0;
  Vector coords;

  bool is_zero() const { return lefcon::is_zero(coords); }
  friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;
};

struct OrientationSeed {
  Simplex simplex;
  int sign = 1;
};

/// Coherent orientation of a compact n-manifold pair (M, ∂M).
struct FundamentalClass {
  SimplicialPair pair;
  int dimension = 0;
  /// O_M over the relative generators of degree n; every entry is ±1.
  Vector cycle;
  /// Ō_M: the indicator cochain of the seed simplex, scaled so <Ō_M, O_M> = 1.
  Vector cocycle;
  OrientationSeed seed;
};

/// Propagates an orientation across interior (n-1)-faces from the seed
/// (default: lexicographically least n-simplex, sign +1). The subcomplex must
/// be the closure of the (n-1)-simplices having exactly one n-coface.
/// Throws TopologyError: NonOrientable, NonManifold, Disconnected.
FundamentalClass orient(const SimplicialPair& p, int n,
                        const std::optional<OrientationSeed>& seed = std::nullopt);

/// <x, a> for a cochain and a chain over the same generators.
Rational kronecker(int cochain_degree, const Vector& x, int chain_degree, const Vector& a);

/// Chain-level cap product x ⌢ a with the Alexander–Whitney diagonal:
/// x ⌢ [v0..vm] = (-1)^{k(m-k)} x([v_{m-k}..vm]) [v0..v_{m-k}].
/// x is a relative k-cochain and a a relative m-chain on `rel`; the result is
/// an (m-k)-chain of the total complex, over the generators of `abs`.
Vector cap_chain(const PairHomology& rel, const PairHomology& abs, int k, const Vector& x, int m,
                 const Vector& a);

/// Cap of a class in H^k(N,A) with a class in H_m(N,A), landing in H_{m-k}(N).
HomologyClass cap(const PairHomology& rel, const PairHomology& abs, const CohomologyClass& x,
                  const HomologyClass& a);

/// Poincaré duality D_M: H^k(M,∂M) -> H_{n-k}(M), x ↦ x ⌢ O_M, as matrices.
class PoincareDuality {
 public:
  PoincareDuality(const FundamentalClass& fc, const PairHomology& rel, const PairHomology& abs);

  int dimension() const { return n_; }
  /// Matrix of D_M on H^k(M,∂M).
  const Matrix& matrix(int k) const;
  HomologyClass apply(const CohomologyClass& x) const;
  /// D_M^{-1} of a class in H_{n-k}(M). Throws std::logic_error when the
  /// duality matrix is singular.
  CohomologyClass inverse(const HomologyClass& a) const;
  Matrix inverse_matrix(int k) const;
  bool bijective() const;

 private:
  int n_;
  std::vector<Matrix> d_;
};

/// An oriented manifold pair with its relative and absolute homology.
struct OrientedManifold {
  FundamentalClass fundamental;
  PairHomology rel;
  PairHomology abs;
  PoincareDuality duality;

  static OrientedManifold build(const SimplicialPair& p, int n,
                                const std::optional<OrientationSeed>& seed = std::nullopt);
  static OrientedManifold build(const SimplicialPair& p,
                                const std::optional<OrientationSeed>& seed = std::nullopt) {
    return build(p, p.total.dimension(), seed);
  }

  int dimension() const { return fundamental.dimension; }
  HomologyClass fundamental_class() const;
};

/// a × v realized through the shuffle map, expressed in the product basis.
HomologyClass cross(const ProductData& prod, const PairHomology& first, const HomologyClass& a,
                    const PairHomology& second, const HomologyClass& v,
                    const PairHomology& product);

/// The scalar with f_#(O_N) = deg · O_M. Both pairs must be oriented
/// manifolds of the same dimension.
Rational degree(const SimplicialMap& f, const OrientedManifold& source,
                const OrientedManifold& target);

}  // namespace lefcon
