#include "lefcon/lefschetz.hpp"

#include <algorithm>
#include <stdexcept>

namespace lefcon {

namespace {

int parity_sign(long e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

void GradedEndomorphism::check(const PairHomology& m) const {
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const int ki = static_cast<int>(k);
    if (blocks[k].rows() != m.betti(ki + shift) || blocks[k].cols() != m.betti(ki))
      throw DimensionError("graded endomorphism block " + std::to_string(k) + " has shape " +
                           std::to_string(blocks[k].rows()) + "x" +
                           std::to_string(blocks[k].cols()) + ", expected " +
                           std::to_string(m.betti(ki + shift)) + "x" +
                           std::to_string(m.betti(ki)));
  }
}

HomologyClass lefschetz_class(const GradedEndomorphism& h, const PairHomology& m) {
  h.check(m);
  const int shift = h.shift;
  HomologyClass total = m.zero_class(shift);
  if (shift < 0 || shift > m.top()) return total;
  for (std::size_t k = 0; k < h.blocks.size(); ++k) {
    const int ki = static_cast<int>(k);
    const int sign = parity_sign(static_cast<long>(ki) * (ki + shift));
    for (std::size_t j = 0; j < m.betti(ki); ++j) {
      HomologyClass image{ki + shift, h.blocks[k].column(j)};
      if (image.is_zero()) continue;
      CohomologyClass x{ki, m.basis_class(ki, j).coords};
      HomologyClass term = cap(m, m, x, image);
      for (std::size_t i = 0; i < term.coords.size(); ++i) total.coords[i] += sign * term.coords[i];
    }
  }
  return total;
}

Rational alternating_trace(const GradedEndomorphism& h) {
  if (h.shift != 0) throw DimensionError("alternating trace needs a degree-0 endomorphism");
  Rational s = 0;
  for (std::size_t k = 0; k < h.blocks.size(); ++k)
    s += parity_sign(static_cast<long>(k)) * trace(h.blocks[k]);
  return s;
}

Rational augmentation(const HomologyClass& c) {
  Rational s = 0;
  for (const auto& x : c.coords) s += x;
  return s;
}

Rational lefschetz_number_self(const SimplicialMap& f, const PairHomology& m) {
  if (!(f.source == f.target))
    throw TopologyError(TopologyErrorKind::PairMismatch,
                        "Lefschetz number of a self-map needs source = target");
  Rational s = 0;
  for (int k = 0; k <= m.top(); ++k)
    s += parity_sign(k) * trace(induced_homology_map(f, m, m, k));
  return s;
}

Rational lefschetz_number_self(const SimplicialMap& f, const SimplicialMap& identification) {
  if (!(f.source.total == identification.source.total) ||
      !(f.target.total == identification.target.total))
    throw TopologyError(TopologyErrorKind::PairMismatch,
                        "map and identification must share source and target");
  PairHomology src(SimplicialPair::absolute(f.source.total));
  PairHomology tgt(SimplicialPair::absolute(f.target.total));
  SimplicialMap fa = f.absolute(), ra = identification.absolute();
  Rational s = 0;
  for (int k = 0; k <= std::max(src.top(), tgt.top()); ++k) {
    Matrix r = induced_homology_map(ra, src, tgt, k);
    if (r.rows() != r.cols() || rank(r) != r.cols())
      throw TopologyError(TopologyErrorKind::PairMismatch,
                          "identification does not induce an isomorphism in degree " +
                              std::to_string(k));
    Matrix rinv = *solve(r, Matrix::identity(r.rows()));
    s += parity_sign(k) * trace(induced_homology_map(fa, src, tgt, k) * rinv);
  }
  return s;
}

std::optional<Witness> coincidence_oracle(const PLMap& f, const PLMap& g) {
  if (!(f.source == g.source) || !(f.target == g.target))
    throw TopologyError(TopologyErrorKind::PairMismatch, "oracle needs maps with a common source");
  const auto& N = f.source;
  const std::size_t width = static_cast<std::size_t>(f.target.vertex_count());
  for (int d = 0; d <= N.dimension(); ++d)
    for (const auto& s : N.simplices(d)) {
      const std::size_t cols = s.size();
      Matrix a(width + 1, cols);
      for (std::size_t i = 0; i < cols; ++i) {
        for (const auto& [v, w] : f.images[static_cast<std::size_t>(s[i])])
          a(static_cast<std::size_t>(v), i) += w;
        for (const auto& [v, w] : g.images[static_cast<std::size_t>(s[i])])
          a(static_cast<std::size_t>(v), i) -= w;
        a(width, i) = 1;
      }
      Vector rhs(width + 1);
      rhs[width] = 1;
      if (rank(a) != cols) continue;
      auto lambda = solve(a, rhs);
      if (!lambda) continue;
      bool positive = true;
      for (const auto& x : *lambda) positive = positive && sgn(x) > 0;
      if (!positive) continue;
      Witness w{s, *lambda, f.evaluate(s, *lambda)};
      if (!verify_witness(f, g, w)) throw std::logic_error("oracle witness fails substitution");
      return w;
    }
  return std::nullopt;
}

bool verify_witness(const PLMap& f, const PLMap& g, const Witness& w) {
  Rational total = 0;
  for (const auto& x : w.barycentric) {
    if (sgn(x) < 0) return false;
    total += x;
  }
  return total == 1 && f.evaluate(w.simplex, w.barycentric) == g.evaluate(w.simplex, w.barycentric);
}

const char* to_string(OracleOutcome o) {
  switch (o) {
    case OracleOutcome::Found: return "found";
    case OracleOutcome::NotFound: return "not-found";
    case OracleOutcome::Skipped: return "skipped";
  }
  return "skipped";
}

std::vector<HomologyClass> basis_classes(const PairHomology& p) {
  std::vector<HomologyClass> out;
  for (int k = 0; k <= p.top(); ++k)
    for (std::size_t j = 0; j < p.betti(k); ++j) out.push_back(p.basis_class(k, j));
  return out;
}

CoincidenceProblem::CoincidenceProblem(const SimplicialPair& source, const OrientedManifold& target,
                                       PLMap f, PLMap g)
    : m_(&target),
      f_pl_(std::move(f)),
      g_pl_(std::move(g)),
      f_(simplicial_approximation(f_pl_, source, target.fundamental.pair)),
      g_(simplicial_approximation(g_pl_, SimplicialPair::absolute(source.total),
                                  SimplicialPair::absolute(target.fundamental.pair.total))),
      n_rel_(source),
      n_abs_(SimplicialPair::absolute(source.total)) {
  validate_pl_map(f_pl_);
  validate_pl_map(g_pl_);
  validate_map(f_);
  validate_map(g_);
}

GradedEndomorphism CoincidenceProblem::endomorphism(const HomologyClass& z) const {
  const auto& M = *m_;
  const int n = M.dimension();
  const int s = z.degree;
  GradedEndomorphism h{s - n, {}};
  for (int i = 0; i <= M.abs.top(); ++i) {
    const int out = i + h.shift;
    Matrix block(M.abs.betti(out), M.abs.betti(i));
    const int k = n - i;  // cohomological degree after D_M^{-1}
    if (!block.empty() && k >= 0 && k <= s) {
      Matrix dinv = M.duality.inverse_matrix(k);
      Matrix fstar = induced_cohomology_map(f_, n_rel_, M.rel, k);
      Matrix capz(n_abs_.betti(s - k), n_rel_.betti(k));
      for (std::size_t j = 0; j < n_rel_.betti(k); ++j) {
        HomologyClass c = cap(n_rel_, n_abs_, CohomologyClass{k, n_rel_.basis_class(k, j).coords}, z);
        for (std::size_t r = 0; r < c.coords.size(); ++r) capz(r, j) = c.coords[r];
      }
      Matrix gstar = induced_homology_map(g_, n_abs_, M.abs, s - k);
      block = gstar * capz * fstar * dinv;
    }
    h.blocks.push_back(std::move(block));
  }
  return h;
}

HomologyClass CoincidenceProblem::lefschetz_homomorphism(const HomologyClass& z) const {
  return lefschetz_class(endomorphism(z), m_->abs);
}

Rational CoincidenceProblem::classical_number(const OrientedManifold& source) const {
  const auto& M = *m_;
  const int n = M.dimension();
  if (source.dimension() != n)
    throw TopologyError(TopologyErrorKind::PairMismatch, "classical number needs equal dimensions");
  Rational total = 0;
  for (int i = 0; i <= n; ++i) {
    const int k = n - i;
    Matrix block = induced_homology_map(g_, n_abs_, M.abs, i) * source.duality.matrix(k) *
                   induced_cohomology_map(f_, n_rel_, M.rel, k) * M.duality.inverse_matrix(k);
    total += parity_sign(i) * trace(block);
  }
  return total;
}

CoincidenceVerdict CoincidenceProblem::certificate(const std::vector<HomologyClass>& classes,
                                                   bool run_oracle) const {
  CoincidenceVerdict v;
  v.criterion = "lefschetz-homomorphism";
  auto zs = classes.empty() ? basis_classes(n_rel_) : classes;
  for (const auto& z : zs) {
    HomologyClass value = lefschetz_homomorphism(z);
    if (!value.is_zero() && !v.nonzero) {
      v.nonzero = true;
      v.witness_class = z;
    }
    v.evaluations.push_back({z, std::move(value)});
  }
  if (run_oracle) {
    v.witness = oracle();
    v.oracle = v.witness ? OracleOutcome::Found : OracleOutcome::NotFound;
  }
  return v;
}

}  // namespace lefcon
