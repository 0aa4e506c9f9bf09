#include "lefcon/control.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace lefcon {

namespace {

int parity_sign(long e) { return e % 2 == 0 ? 1 : -1; }

Simplex project(const ProductData& prod, const Simplex& s, bool first) {
  std::set<int> out;
  for (int v : s) out.insert(first ? prod.first_of(v) : prod.second_of(v));
  return Simplex(out.begin(), out.end());
}

/// Scalar-normalized key: first nonzero coordinate scaled to 1.
std::string class_key(const HomologyClass& c) {
  std::string key = std::to_string(c.degree) + ":";
  Rational lead = 0;
  for (const auto& x : c.coords)
    if (sgn(x) != 0) {
      lead = x;
      break;
    }
  for (const auto& x : c.coords) key += to_string(Rational(x / lead)) + ",";
  return key;
}

SimplicialComplex relabel_into(const SimplicialComplex& host, const SimplicialComplex& part) {
  std::vector<Simplex> facets;
  for (int d = 0; d <= part.dimension(); ++d)
    for (const auto& s : part.simplices(d)) {
      Simplex t;
      for (int v : s) {
        auto h = host.vertex(part.labels()[static_cast<std::size_t>(v)]);
        if (!h)
          throw TopologyError(TopologyErrorKind::UnknownVertex,
                              "vertex " + part.labels()[static_cast<std::size_t>(v)] +
                                  " is not a state vertex");
        t.push_back(*h);
      }
      std::sort(t.begin(), t.end());
      if (!host.contains(t))
        throw TopologyError(TopologyErrorKind::Subcomplex,
                            host.format(t) + " is not a simplex of the state complex");
      facets.push_back(t);
    }
  return subcomplex(host, facets);
}

SimplicialComplex intersect(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<Simplex> out;
  for (int d = 0; d <= a.dimension(); ++d)
    for (const auto& s : a.simplices(d))
      if (b.contains(s)) out.push_back(s);
  return SimplicialComplex(a.labels(), out);
}

}  // namespace

struct DiscreteSystem::Cache {
  std::optional<OrientedManifold> manifold;
  std::optional<PairHomology> state_abs, source_abs, input_abs, product_abs;
  std::map<int, Matrix> rinv;
};

DiscreteSystem::DiscreteSystem(const fixtures::SystemSpec& spec,
                               const std::optional<OrientationSeed>& seed)
    : name_(spec.name),
      state_(spec.state),
      source_state_(spec.source_state),
      input_(spec.input),
      identification_(spec.identification),
      seed_(seed),
      cache_(std::make_shared<Cache>()) {
  validate_pair(state_);
  validate_pair(source_state_);
  input_.validate();
  product_ = product_pair(source_state_, SimplicialPair::absolute(input_));
  product_abs_ = product_pair(SimplicialPair::absolute(source_state_.total),
                              SimplicialPair::absolute(input_));
  if (!(spec.map.source.total == product_.product.total))
    throw TopologyError(TopologyErrorKind::PairMismatch,
                        "system map source is not the product of state and input");
  if (!(spec.map.target.total == state_.total))
    throw TopologyError(TopologyErrorKind::PairMismatch, "system map target is not the state");
  map_ = spec.map.with_pairs(product_.product, state_);
  validate_map(map_.absolute());
  if (identification_) {
    if (!(identification_->source == source_state_.total) ||
        !(identification_->target == state_.total))
      throw TopologyError(TopologyErrorKind::PairMismatch,
                          "identification must go from the source state to the state");
    validate_pl_map(*identification_);
  } else if (!(source_state_ == state_)) {
    throw TopologyError(TopologyErrorKind::PairMismatch,
                        "a subdivided source state needs an identification");
  }
}

const OrientedManifold& DiscreteSystem::manifold() const {
  if (!cache_->manifold) cache_->manifold.emplace(OrientedManifold::build(state_, seed_));
  return *cache_->manifold;
}

const PairHomology& DiscreteSystem::source_homology() const {
  if (!cache_->source_abs) cache_->source_abs.emplace(SimplicialPair::absolute(source_state_.total));
  return *cache_->source_abs;
}

const PairHomology& DiscreteSystem::input_homology() const {
  if (!cache_->input_abs) cache_->input_abs.emplace(SimplicialPair::absolute(input_));
  return *cache_->input_abs;
}

const PairHomology& DiscreteSystem::product_homology() const {
  if (!cache_->product_abs) cache_->product_abs.emplace(product_abs_.product);
  return *cache_->product_abs;
}

namespace {

const PairHomology& state_homology(const DiscreteSystem& sys,
                                   std::optional<PairHomology>& slot) {
  if (!slot) slot.emplace(SimplicialPair::absolute(sys.state().total));
  return *slot;
}

}  // namespace

const Matrix& DiscreteSystem::identification_inverse(int k) const {
  auto it = cache_->rinv.find(k);
  if (it != cache_->rinv.end()) return it->second;
  const auto& src = source_homology();
  const auto& tgt = state_homology(*this, cache_->state_abs);
  Matrix inv = Matrix::identity(tgt.betti(k));
  if (identification_) {
    SimplicialMap r = simplicial_approximation(*identification_,
                                               SimplicialPair::absolute(source_state_.total),
                                               SimplicialPair::absolute(state_.total));
    Matrix rk = induced_homology_map(r, src, tgt, k);
    if (rk.rows() != rk.cols() || rank(rk) != rk.cols())
      throw TopologyError(TopologyErrorKind::PairMismatch,
                          "identification is not a homology isomorphism in degree " +
                              std::to_string(k));
    inv = *solve(rk, Matrix::identity(rk.rows()));
  }
  return cache_->rinv.emplace(k, std::move(inv)).first->second;
}

PLMap DiscreteSystem::map_geometry() const { return PLMap::from(map_.absolute()); }

PLMap DiscreteSystem::projection_geometry() const {
  SimplicialMap pr = product_.projection_first.absolute();
  return identification_ ? compose(*identification_, pr) : PLMap::from(pr);
}

namespace {

/// g_*(r_*^{-1}(a) x v) in H_{k+s}(M), absolute homology throughout.
HomologyClass apply_input(const DiscreteSystem& sys, const PairHomology& m, const HomologyClass& a,
                          const HomologyClass& v) {
  const int deg = a.degree + v.degree;
  if (deg > m.top()) return m.zero_class(deg);
  HomologyClass lifted{a.degree, sys.identification_inverse(a.degree) * a.coords};
  auto prod = product_pair(SimplicialPair::absolute(sys.source_state().total),
                           SimplicialPair::absolute(sys.input()));
  HomologyClass c = cross(prod, sys.source_homology(), lifted, sys.input_homology(), v,
                          sys.product_homology());
  return push_forward(sys.map().absolute(), sys.product_homology(), m, c);
}

}  // namespace

SimplicialComplex boundary_input_subcomplex(const DiscreteSystem& sys) {
  const auto& prod = sys.product();
  const auto& U = sys.input();
  std::set<Simplex> bad_seeds;
  for (int d = 0; d <= prod.product.total.dimension(); ++d)
    for (const auto& s : prod.product.total.simplices(d))
      if (!sys.state().sub.contains(sys.map().image(s))) bad_seeds.insert(project(prod, s, false));
  std::vector<Simplex> keep;
  for (int d = 0; d <= U.dimension(); ++d)
    for (const auto& t : U.simplices(d)) {
      bool bad = false;
      for (const auto& b : bad_seeds)
        if (std::includes(t.begin(), t.end(), b.begin(), b.end())) {
          bad = true;
          break;
        }
      if (!bad) keep.push_back(t);
    }
  return SimplicialComplex(U.labels(), keep);
}

HomologyClass fixed_point_class(const DiscreteSystem& sys, const HomologyClass& v) {
  const auto& U = sys.input_homology();
  if (v.degree < 0 || v.coords.size() != U.betti(v.degree))
    throw DimensionError("input class does not match H_" + std::to_string(v.degree) + "(U)");
  PairHomology m(SimplicialPair::absolute(sys.state().total));
  const int n = sys.state().total.dimension();
  const int s = v.degree;
  HomologyClass total = m.zero_class(s);
  if (s > n) return total;
  for (int k = 0; k + s <= n; ++k) {
    for (std::size_t j = 0; j < m.betti(k); ++j) {
      HomologyClass image = apply_input(sys, m, m.basis_class(k, j), v);
      if (image.is_zero()) continue;
      HomologyClass term = cap(m, m, CohomologyClass{k, m.basis_class(k, j).coords}, image);
      for (std::size_t i = 0; i < term.coords.size(); ++i)
        total.coords[i] += parity_sign(k) * term.coords[i];
    }
  }
  if (parity_sign(static_cast<long>(n) * s) < 0)
    for (auto& x : total.coords) x = -x;
  return total;
}

CoincidenceVerdict equilibrium_certificate(const DiscreteSystem& sys, bool run_oracle) {
  CoincidenceVerdict v;
  v.criterion = "fixed-point-class";
  for (const auto& u : basis_classes(sys.input_homology())) {
    HomologyClass value = fixed_point_class(sys, u);
    if (!value.is_zero() && !v.nonzero) {
      v.nonzero = true;
      v.witness_class = u;
    }
    v.evaluations.push_back({u, std::move(value)});
  }
  if (run_oracle) {
    v.witness = coincidence_oracle(sys.map_geometry(), sys.projection_geometry());
    v.oracle = v.witness ? OracleOutcome::Found : OracleOutcome::NotFound;
  }
  return v;
}

SphereVerdict sphere_criteria(const DiscreteSystem& sys) {
  PairHomology m(SimplicialPair::absolute(sys.state().total));
  const int n = sys.state().total.dimension();
  bool sphere = n >= 1 && sys.state().sub.size() == 0 && m.betti(0) == 1 && m.betti(n) == 1;
  for (int k = 1; k < n; ++k) sphere = sphere && m.betti(k) == 0;
  if (!sphere)
    throw TopologyError(TopologyErrorKind::NonManifold,
                        "state does not have the homology of a closed sphere");
  SphereVerdict out;
  out.dimension = n;
  const HomologyClass d = m.basis_class(n, 0);
  const HomologyClass one = m.basis_class(0, 0);
  const Rational expected = parity_sign(n + 1);
  const auto& U = sys.input_homology();
  for (std::size_t i = 0; i < U.betti(0); ++i) {
    HomologyClass image = apply_input(sys, m, d, U.basis_class(0, i));
    Rational c = image.coords[0] / d.coords[0];
    out.condition_one = out.condition_one || c != expected;
    out.slice_degrees.push_back(c);
  }
  for (std::size_t i = 0; i < U.betti(n); ++i) {
    HomologyClass v = U.basis_class(n, i);
    HomologyClass image = apply_input(sys, m, one, v);
    out.condition_two = out.condition_two || !image.is_zero();
    out.top_inputs.push_back({v, image});
  }
  return out;
}

bool surjectivity_oracle(const SimplicialMap& f) {
  const int n = f.target.total.dimension();
  if (n < 0) return true;
  std::set<Simplex> covered;
  if (n <= f.source.total.dimension())
    for (const auto& s : f.source.total.simplices(n)) {
      Simplex img = f.image(s);
      if (static_cast<int>(img.size()) == n + 1) covered.insert(img);
    }
  for (const auto& t : f.target.total.simplices(n))
    if (!covered.count(t)) return false;
  return true;
}

CoincidenceVerdict surjectivity_certificate(const SimplicialMap& f, const OrientedManifold& target,
                                            bool run_oracle) {
  if (!(f.target == target.fundamental.pair))
    throw TopologyError(TopologyErrorKind::PairMismatch,
                        "map target is not the oriented manifold pair");
  validate_map(f);
  const int n = target.dimension();
  PairHomology src(f.source);
  Matrix top = induced_homology_map(f, src, target.rel, n);
  CoincidenceVerdict v;
  v.criterion = "top-degree-image";
  for (std::size_t j = 0; j < src.betti(n); ++j) {
    HomologyClass value{n, top.column(j)};
    if (!value.is_zero() && !v.nonzero) {
      v.nonzero = true;
      v.witness_class = src.basis_class(n, j);
    }
    v.evaluations.push_back({src.basis_class(n, j), std::move(value)});
  }
  if (run_oracle) v.oracle = surjectivity_oracle(f) ? OracleOutcome::Found : OracleOutcome::NotFound;
  return v;
}

SimplicialComplex iterated_image(const DiscreteSystem& sys, const SimplicialComplex& start,
                                 int steps) {
  const auto& prod = sys.product();
  SimplicialComplex cur = relabel_into(sys.state().total, start);
  for (int i = 0; i < steps; ++i) {
    std::set<Simplex> next;
    for (int d = 0; d <= prod.product.total.dimension(); ++d)
      for (const auto& s : prod.product.total.simplices(d))
        if (cur.contains(project(prod, s, true))) next.insert(sys.map().image(s));
    cur = SimplicialComplex(cur.labels(), std::vector<Simplex>(next.begin(), next.end()));
  }
  return cur;
}

ControllabilityReport controllability_chain_search(const DiscreteSystem& sys,
                                                   const SimplicialComplex& start,
                                                   std::optional<int> max_steps) {
  if (sys.subdivided())
    throw InapplicableError("controllability needs the system map defined on M x U itself");
  const auto& M = sys.state();
  const int n = M.total.dimension();
  const int r_max = max_steps.value_or(n);
  const auto& g = sys.map();
  for (int d = 0; d <= sys.product().product.total.dimension(); ++d)
    for (const auto& s : sys.product().product.total.simplices(d))
      if (M.sub.contains(project(sys.product(), s, true)) && !M.sub.contains(g.image(s)))
        throw InapplicableError("boundary condition fails: " +
                                sys.product().product.total.format(s) + " is sent off the boundary");

  ControllabilityReport report;
  report.boundary_inputs = boundary_input_subcomplex(sys);
  SimplicialPair upair{sys.input(), report.boundary_inputs};
  SimplicialComplex L = relabel_into(M.total, start);
  SimplicialPair lpair{L, intersect(L, M.sub)};

  ProductData pl = product_pair(lpair, upair);
  ProductData pm = product_pair(M, upair);
  SimplicialMap f0{pl.product, M, g.vertex_map};
  SimplicialMap f{pm.product, M, g.vertex_map};
  validate_map(f0);
  validate_map(f);

  PairHomology hl(lpair), hu(upair), hpl(pl.product), hm(M), hpm(pm.product);
  std::map<int, Matrix> f0_star, f_star;
  auto step = [&](const ProductData& prod, const PairHomology& first, const PairHomology& hp,
                  const SimplicialMap& map, std::map<int, Matrix>& cache, const HomologyClass& a,
                  const HomologyClass& v) {
    const int deg = a.degree + v.degree;
    if (deg > n) return hm.zero_class(deg);
    HomologyClass c = cross(prod, first, a, hu, v, hp);
    auto it = cache.find(deg);
    if (it == cache.end()) it = cache.emplace(deg, induced_homology_map(map, hp, hm, deg)).first;
    return HomologyClass{deg, it->second * c.coords};
  };

  struct Node {
    HomologyClass a0;
    std::vector<HomologyClass> inputs, classes;
  };
  std::set<std::string> seen;
  std::vector<Node> frontier;
  const auto inputs = basis_classes(hu);
  auto visit = [&](Node node, std::vector<Node>& next) {
    const auto& c = node.classes.back();
    if (c.is_zero() || !seen.insert(class_key(c)).second) return false;
    if (c.degree == n) {
      report.chain = ControllabilityChain{lpair, node.a0, node.inputs, node.classes};
      return true;
    }
    next.push_back(std::move(node));
    return false;
  };

  bool done = false;
  if (r_max >= 1)
    for (const auto& a0 : basis_classes(hl)) {
      for (const auto& v : inputs)
        if ((done = visit({a0, {v}, {step(pl, hl, hpl, f0, f0_star, a0, v)}}, frontier))) break;
      if (done) break;
    }
  for (int level = 2; !done && level <= r_max && !frontier.empty(); ++level) {
    std::vector<Node> next;
    for (const auto& node : frontier) {
      for (const auto& v : inputs) {
        Node child = node;
        child.inputs.push_back(v);
        child.classes.push_back(step(pm, hm, hpm, f, f_star, node.classes.back(), v));
        if ((done = visit(std::move(child), next))) break;
      }
      if (done) break;
    }
    frontier = std::move(next);
  }
  if (!report.chain) return report;

  const int steps = report.chain->steps();
  SimplicialComplex image = iterated_image(sys, start, steps);
  bool covers = true;
  for (const auto& t : M.total.simplices(n)) covers = covers && image.contains(t);
  report.image_covers = covers;

  ProductData composed = pl;
  std::vector<int> vm = g.vertex_map;
  const int width = sys.input().vertex_count();
  for (int i = 1; i < steps; ++i) {
    ProductData next = product_pair(composed.product, upair);
    std::vector<int> nvm;
    for (int w = 0; w < next.product.total.vertex_count(); ++w)
      nvm.push_back(
          g.vertex_map[static_cast<std::size_t>(vm[static_cast<std::size_t>(next.first_of(w))] * width +
                                                next.second_of(w))]);
    composed = std::move(next);
    vm = std::move(nvm);
  }
  SimplicialMap F{composed.product, M, vm};
  try {
    validate_map(F);
    report.composed_surjective = surjectivity_oracle(F);
  } catch (const TopologyError&) {
    report.composed_surjective = std::nullopt;
  }
  return report;
}

const char* to_string(RemovabilityClause c) {
  switch (c) {
    case RemovabilityClause::A1: return "a1";
    case RemovabilityClause::A2: return "a2";
    case RemovabilityClause::A3: return "a3";
    case RemovabilityClause::None: return "none";
  }
  return "none";
}

bool sphere_clause_admissible(int m, int n) {
  switch (m) {
    case 4: return n >= 6;
    case 5: return n >= 7;
    case 12: return (n >= 7 && n <= 9) || n >= 14;
    default: return false;
  }
}

RemovabilityReport removability_precondition(const std::vector<long>& f_homology, int n, int m,
                                             const std::optional<SimplicialMap>& local) {
  if (f_homology.empty()) throw MalformedDeclaration("empty homology declaration");
  for (long b : f_homology)
    if (b < 0) throw MalformedDeclaration("negative homology dimension");
  const bool higher = std::any_of(f_homology.begin() + 1, f_homology.end(),
                                  [](long b) { return b != 0; });
  if (f_homology[0] == 0 && higher)
    throw MalformedDeclaration("H_0 is zero while higher homology is not");
  if (n < 0 || m < 0) throw MalformedDeclaration("negative dimension");

  RemovabilityReport r;
  auto dim = [&](int k) {
    return k < static_cast<int>(f_homology.size()) ? f_homology[static_cast<std::size_t>(k)] : 0L;
  };
  bool sphere = m >= 1 && dim(0) >= 1 && dim(m) == dim(0);
  for (int k = 1; k < static_cast<int>(f_homology.size()); ++k)
    if (k != m) sphere = sphere && dim(k) == 0;
  if (n == 2)
    r.clause = RemovabilityClause::A1;
  else if (!higher)
    r.clause = RemovabilityClause::A2;
  else if (sphere && sphere_clause_admissible(m, n))
    r.clause = RemovabilityClause::A3;

  if (local) {
    validate_map(*local);
    PairHomology src(local->source), tgt(local->target);
    r.local_map = induced_homology_map(*local, src, tgt, n);
    r.local_zero = r.local_map->is_zero();
  }
  r.conclusion = r.star() && r.local_zero.value_or(false);
  return r;
}

std::vector<std::vector<bool>> reachability_oracle(const DiscreteSystem& sys, int steps) {
  if (sys.subdivided())
    throw InapplicableError("reachability needs the system map defined on M x U itself");
  const int nx = sys.state().total.vertex_count();
  const auto& prod = sys.product();
  std::vector<std::vector<bool>> one(static_cast<std::size_t>(nx), std::vector<bool>(nx, false));
  for (const auto& s : prod.product.total.simplices(0)) {
    const int v = s[0];
    one[static_cast<std::size_t>(prod.first_of(v))][static_cast<std::size_t>(sys.map()(v))] = true;
  }
  auto reach = std::vector<std::vector<bool>>(one.size(), std::vector<bool>(one.size(), false));
  auto cur = one;
  for (int i = 1; i <= steps; ++i) {
    for (std::size_t x = 0; x < cur.size(); ++x)
      for (std::size_t y = 0; y < cur.size(); ++y)
        if (cur[x][y]) reach[x][y] = true;
    if (i == steps) break;
    auto next = std::vector<std::vector<bool>>(cur.size(), std::vector<bool>(cur.size(), false));
    for (std::size_t x = 0; x < cur.size(); ++x)
      for (std::size_t y = 0; y < cur.size(); ++y)
        if (cur[x][y])
          for (std::size_t z = 0; z < cur.size(); ++z)
            if (one[y][z]) next[x][z] = true;
    cur = std::move(next);
  }
  return reach;
}

}  // namespace lefcon
