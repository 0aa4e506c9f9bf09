#pragma once

#include <vector>

#include "lefcon/complex.hpp"
#include "lefcon/matrix.hpp"

namespace lefcon {

/// Relative simplicial chain complex C_*(N, A): generators in degree k are the
/// k-simplices of N that are not in A.
struct ChainComplexData {
  /// generators[k][r] = index into total.simplices(k)
  std::vector<std::vector<int>> generators;
  /// position[k][simplex index] = generator row, or -1 for simplices of A
  std::vector<std::vector<int>> position;
  /// boundary[k] : C_k -> C_{k-1}, for k = 0 .. top+1 (edge cases are empty)
  std::vector<Matrix> boundary;

  int top() const { return static_cast<int>(generators.size()) - 1; }
  std::size_t rank(int k) const {
    return k < 0 || k > top() ? 0 : generators[static_cast<std::size_t>(k)].size();
  }
  /// ∂_k with the conventions above; an empty matrix of the right shape
  /// outside 0 .. top+1.
  Matrix d(int k) const;
  int generator_of(int k, int simplex_index) const;
};

/// Alternating-sign face formula ∂[v0..vk] = Σ (-1)^i [v0..^vi..vk], faces in
/// the subcomplex dropped. Asserts ∂∂ = 0.
ChainComplexData chain_complex(const SimplicialPair& p);

/// Cycle representatives a_j^k (columns) and Kronecker-dual cocycles x_j^k
/// (rows) with <x_i^k, a_j^k> = δ_ij.
struct HomologyBasis {
  std::vector<Matrix> cycles;
  std::vector<Matrix> cocycles;
  /// Basis of Im ∂_{k+1} (pivot columns of ∂_{k+1}).
  std::vector<Matrix> boundaries;

  std::size_t betti(int k) const {
    return k < 0 || k >= static_cast<int>(cycles.size())
               ? 0
               : cycles[static_cast<std::size_t>(k)].cols();
  }
};

HomologyBasis homology_basis(const ChainComplexData& c);

/// A homology class: degree plus coordinates in a chosen basis.
struct HomologyClass {
  int degree = 0;
  Vector coords;

  bool is_zero() const { return lefcon::is_zero(coords); }
  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
};

/// Everything about H_*(N, A) needed downstream: pair, chains and basis.
class PairHomology {
 public:
  explicit PairHomology(SimplicialPair pair);

  const SimplicialPair& pair() const { return pair_; }
  const ChainComplexData& chains() const { return chains_; }
  const HomologyBasis& basis() const { return basis_; }

  int top() const { return chains_.top(); }
  std::size_t betti(int k) const { return basis_.betti(k); }
  std::vector<std::size_t> betti_numbers() const;
  long euler_characteristic() const;

  /// Coordinates of a relative cycle in the cycle basis. Throws
  /// std::logic_error when `chain` is not a cycle.
  Vector coordinates(int k, const Vector& chain) const;
  /// Coordinates of a relative cocycle in the dual basis (its values on the
  /// basis cycles). Throws std::logic_error when not a cocycle.
  Vector cohomology_coordinates(int k, const Vector& cochain) const;

  Vector representative(int k, const Vector& coords) const;
  Vector cocycle_representative(int k, const Vector& coords) const;
  HomologyClass basis_class(int k, std::size_t j) const;
  HomologyClass zero_class(int k) const { return {k, Vector(betti(k))}; }

  bool is_cycle(int k, const Vector& chain) const;
  bool is_cocycle(int k, const Vector& cochain) const;

  /// Simplex of the total complex behind generator `row` in degree k.
  const Simplex& generator(int k, std::size_t row) const;
  /// Generator row of `s` or -1 when s lies in the subcomplex / is absent.
  int row_of(const Simplex& s) const;

 private:
  SimplicialPair pair_;
  ChainComplexData chains_;
  HomologyBasis basis_;
};

}  // namespace lefcon
