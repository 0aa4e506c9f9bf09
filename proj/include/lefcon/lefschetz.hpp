#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lefcon/duality.hpp"
#include "lefcon/maps.hpp"

namespace lefcon {

/// h_k: H_k(M) -> H_{k+shift}(M), one block per source degree k.
struct GradedEndomorphism {
  int shift = 0;
  std::vector<Matrix> blocks;

  /// Throws DimensionError unless block k is b_{k+shift} x b_k.
  void check(const PairHomology& m) const;
};

/// L(h) = Σ_k (-1)^{k(k+m)} Σ_j x_j^k ⌢ h(a_j^k) in H_m(M), M absolute.
HomologyClass lefschetz_class(const GradedEndomorphism& h, const PairHomology& m);

/// Σ_k (-1)^k Trace(h_k) for a degree-0 endomorphism.
Rational alternating_trace(const GradedEndomorphism& h);

/// Sum of coordinates of a degree-0 class; each H_0 basis element is a
/// single-vertex class, so this is the augmentation.
Rational augmentation(const HomologyClass& c);

/// λ_f = Σ (-1)^k Trace(f_*k) for f: M -> M. Throws TopologyError
/// (PairMismatch) when source and target differ.
Rational lefschetz_number_self(const SimplicialMap& f, const PairHomology& m);

/// Self-map up to subdivision: f: M' -> M where M' triangulates the same
/// space as M through `identification` (a simplicial map homotopic to the
/// identification homeomorphism). λ_f = Σ (-1)^k Trace(f_*k ∘ r_*k^{-1}).
Rational lefschetz_number_self(const SimplicialMap& f, const SimplicialMap& identification);

struct Witness {
  Simplex simplex;
  Vector barycentric;
  Point image;
};

/// Exact search for x with f(x) = g(x). Simplices are scanned by dimension
/// then lexicographically; on each simplex the system
///   Σ λ_i (f(v_i) - g(v_i)) = 0,  Σ λ_i = 1
/// is solved and a unique strictly positive solution is reported. A basic
/// feasible solution always has a support that is some simplex scanned, so
/// the scan is complete.
std::optional<Witness> coincidence_oracle(const PLMap& f, const PLMap& g);

/// f(λ) == g(λ) exactly.
bool verify_witness(const PLMap& f, const PLMap& g, const Witness& w);

enum class OracleOutcome { Found, NotFound, Skipped };
const char* to_string(OracleOutcome o);

struct Evaluation {
  HomologyClass input;
  HomologyClass value;
};

struct CoincidenceVerdict {
  std::string criterion;
  std::vector<Evaluation> evaluations;
  std::optional<Rational> number;
  bool nonzero = false;
  std::optional<HomologyClass> witness_class;
  OracleOutcome oracle = OracleOutcome::Skipped;
  std::optional<Witness> witness;

  /// Nonzero certificate with an oracle that found nothing.
  bool soundness_violation() const { return nonzero && oracle == OracleOutcome::NotFound; }
};

/// Two maps (N,A) -> (M,∂M): f a map of pairs, g arbitrary on N. Both are
/// given as PL maps; homology uses their simplicial approximations and the
/// oracle uses the exact PL geometry.
class CoincidenceProblem {
 public:
  CoincidenceProblem(const SimplicialPair& source, const OrientedManifold& target, PLMap f,
                     PLMap g);

  const PairHomology& source_rel() const { return n_rel_; }
  const PairHomology& source_abs() const { return n_abs_; }
  const OrientedManifold& target() const { return *m_; }
  const SimplicialMap& f() const { return f_; }
  const SimplicialMap& g() const { return g_; }

  /// h^z_fg = g_* ∘ (⌢ z) ∘ f^* ∘ D_M^{-1}, degree s - n.
  GradedEndomorphism endomorphism(const HomologyClass& z) const;
  /// Λ_fg(z) = L(h^z_fg) ∈ H_{s-n}(M).
  HomologyClass lefschetz_homomorphism(const HomologyClass& z) const;
  /// λ_fg = Σ(-1)^k Trace(g_* D_N f^* D_M^{-1})_k for N an oriented n-manifold.
  Rational classical_number(const OrientedManifold& source) const;

  /// Sweeps z over `classes` (default: the whole basis of H_*(N,A)).
  CoincidenceVerdict certificate(const std::vector<HomologyClass>& classes = {},
                                 bool run_oracle = false) const;
  std::optional<Witness> oracle() const { return coincidence_oracle(f_pl_, g_pl_); }

 private:
  const OrientedManifold* m_;
  PLMap f_pl_, g_pl_;
  SimplicialMap f_, g_;
  PairHomology n_rel_, n_abs_;
};

/// All basis classes of H_*(p).
std::vector<HomologyClass> basis_classes(const PairHomology& p);

}  // namespace lefcon
