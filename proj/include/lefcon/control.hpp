#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lefcon/duality.hpp"
#include "lefcon/fixtures.hpp"
#include "lefcon/lefschetz.hpp"

namespace lefcon {

/// The certificate does not apply to the given data (for instance the
/// boundary condition g(∂M x U) ⊆ ∂M fails). Distinct from a negative verdict.
class InapplicableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Discrete-time control system g: M' x U -> M, M' = M or a subdivision of M
/// identified with it by a PL homeomorphism.
class DiscreteSystem {
 public:
  DiscreteSystem(const fixtures::SystemSpec& spec,
                 const std::optional<OrientationSeed>& seed = std::nullopt);

  const std::string& name() const { return name_; }
  const SimplicialPair& state() const { return state_; }
  const SimplicialPair& source_state() const { return source_state_; }
  const SimplicialComplex& input() const { return input_; }
  const ProductData& product() const { return product_; }
  const SimplicialMap& map() const { return map_; }
  bool subdivided() const { return identification_.has_value(); }
  const std::optional<PLMap>& identification() const { return identification_; }

  /// Oriented state manifold; throws TopologyError when not orientable.
  const OrientedManifold& manifold() const;
  /// Absolute homologies of M', U and M' x U.
  const PairHomology& source_homology() const;
  const PairHomology& input_homology() const;
  const PairHomology& product_homology() const;
  /// r_*^{-1}: H_k(M) -> H_k(M'), the identity when M' = M.
  const Matrix& identification_inverse(int k) const;
  /// g as a PL map and the state projection e ∘ pr: M' x U -> M.
  PLMap map_geometry() const;
  PLMap projection_geometry() const;

 private:
  std::string name_;
  SimplicialPair state_, source_state_;
  SimplicialComplex input_;
  ProductData product_, product_abs_;
  SimplicialMap map_;
  std::optional<PLMap> identification_;
  std::optional<OrientationSeed> seed_;

  struct Cache;
  std::shared_ptr<Cache> cache_;
};

/// Maximal subcomplex U' of U with g(M' x U') ⊆ ∂M. Empty when ∂M is empty.
SimplicialComplex boundary_input_subcomplex(const DiscreteSystem& sys);

/// L(g_v) = (-1)^{ns} Σ_k (-1)^k Σ_j x_j^k ⌢ g_*(r_*^{-1}(a_j^k) x v), v ∈ H_s(U).
HomologyClass fixed_point_class(const DiscreteSystem& sys, const HomologyClass& v);

/// Sweeps v over the basis of H_*(U); the oracle looks for coincidences of g
/// with the state projection.
CoincidenceVerdict equilibrium_certificate(const DiscreteSystem& sys, bool run_oracle = false);

struct SphereVerdict {
  int dimension = 0;
  /// Coefficient c_i with g_*(d x 1_i) = c_i d, one per H_0(U) basis element.
  std::vector<Rational> slice_degrees;
  bool condition_one = false;
  /// g_*(1 x v) for each basis v of H_n(U), in H_n(M).
  std::vector<Evaluation> top_inputs;
  bool condition_two = false;
  bool certified() const { return condition_one || condition_two; }
};

/// Throws TopologyError (NonManifold) when M does not have the homology of a
/// closed sphere.
SphereVerdict sphere_criteria(const DiscreteSystem& sys);

/// Every top simplex of the target is the nondegenerate image of a source simplex.
bool surjectivity_oracle(const SimplicialMap& f);

/// Nonzero iff f_*: H_n(N,A) -> H_n(M,∂M) is nonzero.
CoincidenceVerdict surjectivity_certificate(const SimplicialMap& f, const OrientedManifold& target,
                                            bool run_oracle = false);

struct ControllabilityChain {
  SimplicialPair start;
  HomologyClass a0;
  std::vector<HomologyClass> inputs;
  std::vector<HomologyClass> classes;
  int steps() const { return static_cast<int>(inputs.size()); }
};

struct ControllabilityReport {
  SimplicialComplex boundary_inputs;
  std::optional<ControllabilityChain> chain;
  /// Top simplices of M covered by the iterated images M_{i+1} = g(M_i x U)
  /// with M_0 = L, after the chain's step count. Only set with a chain.
  std::optional<bool> image_covers;
  /// surjectivity_oracle on the composed map L x U^{r+1} -> M when that map
  /// is simplicial on the iterated staircase product.
  std::optional<bool> composed_surjective;
  bool soundness_violation() const {
    return chain && ((image_covers && !*image_covers) ||
                     (composed_surjective && !*composed_surjective));
  }
};

/// Breadth-first search over basis classes for a_0 ∈ H_p(L,L'), v_i ∈ H_*(U,U')
/// with a_{r+1} ≠ 0 in H_n(M,∂M), at most `max_steps` steps (default n).
/// Throws InapplicableError when g(∂M x U) ⊄ ∂M or M is subdivided.
ControllabilityReport controllability_chain_search(const DiscreteSystem& sys,
                                                   const SimplicialComplex& start,
                                                   std::optional<int> max_steps = std::nullopt);

/// The iterated image g(...g(L x U) x U...) after `steps` steps, as a subcomplex of M.
SimplicialComplex iterated_image(const DiscreteSystem& sys, const SimplicialComplex& start,
                                 int steps);

enum class RemovabilityClause { None, A1, A2, A3 };
const char* to_string(RemovabilityClause c);

class MalformedDeclaration : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RemovabilityReport {
  RemovabilityClause clause = RemovabilityClause::None;
  bool star() const { return clause != RemovabilityClause::None; }
  /// f_*: H_n(W,W') -> H_n(D,D') is zero, when local pairs were supplied.
  std::optional<bool> local_zero;
  std::optional<Matrix> local_map;
  bool conclusion = false;
};

/// (a3) table: (m=4, n>=6), (m=5, n>=7), (m=12, n in {7,8,9} or n>=14).
bool sphere_clause_admissible(int m, int n);

RemovabilityReport removability_precondition(const std::vector<long>& f_homology, int n, int m,
                                             const std::optional<SimplicialMap>& local = std::nullopt);

/// reach[x][y]: y = g(...g(x,u_1)...,u_i) for some 1 <= i <= steps and input vertices.
std::vector<std::vector<bool>> reachability_oracle(const DiscreteSystem& sys, int steps);

}  // namespace lefcon
