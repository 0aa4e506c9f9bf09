#include "properties.hpp"

#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>

#include "lefcon/commands.hpp"
#include "lefcon/control.hpp"
#include "lefcon/duality.hpp"
#include "lefcon/fixtures.hpp"
#include "lefcon/lefschetz.hpp"
#include "lefcon/product.hpp"
#include "lefcon/workspace.hpp"
#include "support.hpp"

namespace testing {

using namespace lefcon;
namespace fx = lefcon::fixtures;

namespace {

using Rng = std::mt19937;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Rational small_rational(Rng& rng) {
  Rational q(uniform(rng, -4, 4), uniform(rng, 1, 3));
  q.canonicalize();
  return q;
}

Vector random_vector(Rng& rng, std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = small_rational(rng);
  return v;
}

Matrix random_matrix(Rng& rng, std::size_t r, std::size_t c, double density = 0.6) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (coin(rng, density)) m(i, j) = small_rational(rng);
  return m;
}

Simplex random_simplex(Rng& rng, int vertices, int dim) {
  std::vector<int> all(static_cast<std::size_t>(vertices));
  for (int i = 0; i < vertices; ++i) all[static_cast<std::size_t>(i)] = i;
  std::shuffle(all.begin(), all.end(), rng);
  Simplex s(all.begin(), all.begin() + std::min(dim + 1, vertices));
  std::sort(s.begin(), s.end());
  return s;
}

/// Every vertex is a 0-simplex, plus a few random facets.
SimplicialComplex random_complex(Rng& rng, int vertices, int max_dim, int facets) {
  std::vector<Simplex> fs;
  for (int v = 0; v < vertices; ++v) fs.push_back({v});
  for (int i = 0; i < facets; ++i) fs.push_back(random_simplex(rng, vertices, uniform(rng, 1, max_dim)));
  return SimplicialComplex::closure(SimplicialComplex::numbered_labels(vertices), fs);
}

SimplicialComplex random_sub(Rng& rng, const SimplicialComplex& total, double p) {
  std::vector<Simplex> picked;
  for (int d = 0; d <= std::min(1, total.dimension()); ++d)
    for (const auto& s : total.simplices(d))
      if (coin(rng, p)) picked.push_back(s);
  return SimplicialComplex::closure(total.labels(), picked);
}

SimplicialPair random_pair(Rng& rng, int max_vertices = 7, int max_dim = 3) {
  auto total = random_complex(rng, uniform(rng, 2, max_vertices), max_dim, uniform(rng, 1, 5));
  auto sub = random_sub(rng, total, 0.25);
  return {total, sub};
}

std::vector<Simplex> all_simplices(const SimplicialComplex& c) {
  std::vector<Simplex> out;
  for (int d = 0; d <= c.dimension(); ++d)
    out.insert(out.end(), c.simplices(d).begin(), c.simplices(d).end());
  return out;
}

/// A random vertex assignment out of `source`, with the target closed up so
/// that the assignment is a simplicial map of pairs.
SimplicialMap random_map(Rng& rng, const SimplicialPair& source, int target_vertices) {
  std::vector<int> vm(static_cast<std::size_t>(source.total.vertex_count()));
  for (auto& v : vm) v = uniform(rng, 0, target_vertices - 1);
  auto image = [&](const Simplex& s) {
    std::set<int> out;
    for (int v : s) out.insert(vm[static_cast<std::size_t>(v)]);
    return Simplex(out.begin(), out.end());
  };
  std::vector<Simplex> facets, sub;
  for (int v = 0; v < target_vertices; ++v) facets.push_back({v});
  for (int i = uniform(rng, 0, 2); i > 0; --i)
    facets.push_back(random_simplex(rng, target_vertices, uniform(rng, 1, 2)));
  for (const auto& s : all_simplices(source.total)) facets.push_back(image(s));
  for (const auto& s : all_simplices(source.sub)) sub.push_back(image(s));
  if (coin(rng, 0.5)) sub.push_back({uniform(rng, 0, target_vertices - 1)});
  auto labels = SimplicialComplex::numbered_labels(target_vertices);
  SimplicialPair target{SimplicialComplex::closure(labels, facets),
                        SimplicialComplex::closure(labels, sub)};
  return {source, target, vm};
}

/// Simplicial map C_a -> C_b built as a closed walk that moves at most one
/// step per edge.
SimplicialMap random_circle_map(Rng& rng, int a, int b) {
  auto src = SimplicialPair::absolute(fx::circle(a));
  auto tgt = SimplicialPair::absolute(fx::circle(b));
  auto adjacent = [b](int x, int y) {
    int d = ((x - y) % b + b) % b;
    return d == 0 || d == 1 || d == b - 1;
  };
  for (;;) {
    std::vector<int> vm{uniform(rng, 0, b - 1)};
    for (int i = 1; i < a; ++i) vm.push_back(((vm.back() + uniform(rng, -1, 1)) % b + b) % b);
    if (adjacent(vm.back(), vm.front())) return {src, tgt, vm};
  }
}

/// Any vertex assignment on the boundary of the tetrahedron is simplicial.
SimplicialMap random_sphere_map(Rng& rng) {
  auto s2 = SimplicialPair::absolute(fx::tetra_boundary());
  std::vector<int> vm(4);
  for (auto& v : vm) v = uniform(rng, 0, 3);
  return {s2, s2, vm};
}

struct Tracker {
  PropertyResult result;
  explicit Tracker(std::string name) { result.name = std::move(name); }
  void check(bool ok, const std::string& what) {
    if (ok) return;
    if (result.failures++ == 0) result.first_failure = "case " + std::to_string(result.cases) + ": " + what;
  }
  void next() { ++result.cases; }
};

template <typename F>
PropertyResult sweep(const std::string& name, std::uint32_t seed, int cases, F body) {
  Tracker t(name);
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    try {
      body(rng, t);
    } catch (const std::exception& e) {
      t.check(false, std::string("exception: ") + e.what());
    }
    t.next();
  }
  return t.result;
}

PropertyResult boundary_squares(std::uint32_t seed) {
  return sweep("boundary of boundary vanishes", seed, 150, [](Rng& rng, Tracker& t) {
    auto p = random_pair(rng);
    auto c = chain_complex(p);
    for (int k = 1; k <= c.top(); ++k) t.check((c.d(k) * c.d(k + 1)).is_zero(), "d d != 0");
  });
}

PropertyResult kronecker_delta(std::uint32_t seed) {
  return sweep("homology bases are kronecker dual", seed, 150, [](Rng& rng, Tracker& t) {
    PairHomology h(random_pair(rng));
    for (int k = 0; k <= h.top(); ++k) {
      const auto& b = h.basis();
      auto kk = static_cast<std::size_t>(k);
      t.check(b.cocycles[kk] * b.cycles[kk] == Matrix::identity(h.betti(k)), "pairing != I");
      for (std::size_t j = 0; j < h.betti(k); ++j) {
        t.check(h.is_cycle(k, b.cycles[kk].column(j)), "basis cycle is not a cycle");
        t.check(h.is_cocycle(k, b.cocycles[kk].row(j)), "basis cocycle is not a cocycle");
      }
    }
  });
}

PropertyResult functoriality(std::uint32_t seed) {
  return sweep("induced maps are functorial", seed, 120, [](Rng& rng, Tracker& t) {
    auto k = random_pair(rng, 6, 2);
    auto f = random_map(rng, k, uniform(rng, 2, 6));
    auto g = random_map(rng, f.target, uniform(rng, 2, 6));
    validate_map(f);
    validate_map(g);
    auto gf = compose(g, f);
    PairHomology hk(k), hl(f.target), hm(g.target);
    for (int d = 0; d <= hk.top(); ++d) {
      t.check(induced_homology_map(gf, hk, hm, d) ==
                  induced_homology_map(g, hl, hm, d) * induced_homology_map(f, hk, hl, d),
              "(g f)_* != g_* f_*");
      t.check(induced_cohomology_map(gf, hk, hm, d) ==
                  induced_cohomology_map(f, hk, hl, d) * induced_cohomology_map(g, hl, hm, d),
              "(g f)^* != f^* g^*");
      t.check(induced_homology_map(identity_map(k), hk, hk, d) == Matrix::identity(hk.betti(d)),
              "id_* != I");
    }
  });
}

PropertyResult kunneth(std::uint32_t seed) {
  return sweep("product betti numbers follow the kunneth formula", seed, 100,
               [](Rng& rng, Tracker& t) {
                 auto a = random_pair(rng, 5, 2);
                 auto b = random_pair(rng, 4, 1);
                 auto prod = product_pair(a, b);
                 PairHomology ha(a), hb(b), hp(prod.product);
                 for (int k = 0; k <= hp.top(); ++k) {
                   std::size_t expected = 0;
                   for (int i = 0; i <= k; ++i) expected += ha.betti(i) * hb.betti(k - i);
                   t.check(hp.betti(k) == expected, "rank mismatch in degree " + std::to_string(k));
                 }
               });
}

PropertyResult cap_pairing(std::uint32_t seed) {
  return sweep("cap into degree zero is the kronecker pairing", seed, 150,
               [](Rng& rng, Tracker& t) {
                 auto p = random_pair(rng);
                 PairHomology rel(p), abs(SimplicialPair::absolute(p.total));
                 for (int k = 0; k <= rel.top(); ++k) {
                   if (rel.betti(k) == 0) continue;
                   auto x = random_vector(rng, rel.betti(k));
                   auto a = random_vector(rng, rel.betti(k));
                   Rational expected = 0;
                   for (std::size_t i = 0; i < x.size(); ++i) expected += x[i] * a[i];
                   auto c = cap(rel, abs, CohomologyClass{k, x}, HomologyClass{k, a});
                   t.check(c.degree == 0 && augmentation(c) == expected, "<x,a> != e(x cap a)");
                   t.check(kronecker(k, rel.cocycle_representative(k, x), k,
                                     rel.representative(k, a)) == expected,
                           "chain pairing != coordinate pairing");
                 }
               });
}

PropertyResult matrix_algebra(std::uint32_t seed) {
  return sweep("exact linear algebra identities", seed, 200, [](Rng& rng, Tracker& t) {
    auto r = static_cast<std::size_t>(uniform(rng, 1, 6));
    auto c = static_cast<std::size_t>(uniform(rng, 1, 6));
    auto m = random_matrix(rng, r, c);
    auto red = rref(m);
    t.check(rref(red.reduced).reduced == red.reduced, "rref not idempotent");
    auto ker = kernel_basis(m);
    t.check(ker.size() == c - red.rank, "nullity != cols - rank");
    for (const auto& v : ker) t.check(is_zero(m * v), "kernel vector not annihilated");
    auto x0 = random_vector(rng, c);
    auto b = m * x0;
    auto x = solve(m, b);
    t.check(x && m * *x == b, "consistent system not solved exactly");
    auto noise = random_vector(rng, r);
    if (auto y = solve(m, noise)) t.check(m * *y == noise, "reported solution is wrong");
    auto k = static_cast<std::size_t>(uniform(rng, 1, 5));
    auto a = random_matrix(rng, r, k);
    auto bb = random_matrix(rng, k, r);
    t.check(trace(a * bb) == trace(bb * a), "trace(AB) != trace(BA)");
  });
}

PropertyResult degree_zero_class(std::uint32_t seed) {
  std::vector<SimplicialComplex> spaces{fx::circle(3), fx::tetra_boundary(), fx::torus7(),
                                        fx::staircase_torus(), fx::cylinder().total};
  std::vector<std::shared_ptr<PairHomology>> hs;
  for (const auto& s : spaces) hs.push_back(std::make_shared<PairHomology>(SimplicialPair::absolute(s)));
  int next = 0;
  return sweep("degree-zero lefschetz class is the alternating trace", seed, 250,
               [&](Rng& rng, Tracker& t) {
                 const auto& h = *hs[static_cast<std::size_t>(next++ % hs.size())];
                 GradedEndomorphism e{0, {}};
                 for (int k = 0; k <= h.top(); ++k)
                   e.blocks.push_back(random_matrix(rng, h.betti(k), h.betti(k)));
                 t.check(augmentation(lefschetz_class(e, h)) == alternating_trace(e),
                         "L(h) != sum (-1)^k tr h_k");
               });
}

PropertyResult cross_products(std::uint32_t seed) {
  return sweep("cross product is bilinear and projects back", seed, 100,
               [](Rng& rng, Tracker& t) {
                 auto a = random_pair(rng, 5, 2);
                 auto b = SimplicialPair::absolute(random_complex(rng, uniform(rng, 1, 4), 1, uniform(rng, 0, 3)));
                 auto prod = product_pair(a, b);
                 PairHomology ha(a), hb(b), hp(prod.product);
                 for (int i = 0; i <= ha.top(); ++i)
                   for (int j = 0; j <= hb.top(); ++j) {
                     if (ha.betti(i) == 0 || hb.betti(j) == 0) continue;
                     HomologyClass x{i, random_vector(rng, ha.betti(i))};
                     HomologyClass y{i, random_vector(rng, ha.betti(i))};
                     HomologyClass v{j, random_vector(rng, hb.betti(j))};
                     HomologyClass w{j, random_vector(rng, hb.betti(j))};
                     Rational s = small_rational(rng);
                     auto add = [&](const HomologyClass& p, const HomologyClass& q, const Rational& c) {
                       HomologyClass out = p;
                       for (std::size_t r = 0; r < out.coords.size(); ++r) out.coords[r] += c * q.coords[r];
                       return out;
                     };
                     auto X = [&](const HomologyClass& p, const HomologyClass& q) {
                       return cross(prod, ha, p, hb, q, hp);
                     };
                     t.check(X(add(x, y, s), v) == add(X(x, v), X(y, v), s), "not linear in a");
                     t.check(X(x, add(v, w, s)) == add(X(x, v), X(x, w), s), "not linear in v");
                     auto back = push_forward(prod.projection_first, hp, ha, X(x, v));
                     HomologyClass expected = ha.zero_class(i + j);
                     if (j == 0) expected = add(expected, x, augmentation(v));
                     t.check(back == expected, "pi_* (a x v) != e(v) a");
                   }
               });
}

PropertyResult degree_multiplicative(std::uint32_t seed) {
  std::map<int, std::shared_ptr<OrientedManifold>> circles;
  auto circle = [&](int n) -> const OrientedManifold& {
    auto& slot = circles[n];
    if (!slot) slot = std::make_shared<OrientedManifold>(OrientedManifold::build(SimplicialPair::absolute(fx::circle(n))));
    return *slot;
  };
  auto s2 = std::make_shared<OrientedManifold>(OrientedManifold::build(SimplicialPair::absolute(fx::tetra_boundary())));
  return sweep("degree is multiplicative", seed, 200, [&](Rng& rng, Tracker& t) {
    if (coin(rng, 0.5)) {
      int a = uniform(rng, 3, 7), b = uniform(rng, 3, 7), c = uniform(rng, 3, 7);
      auto f = random_circle_map(rng, a, b);
      auto g = random_circle_map(rng, b, c);
      t.check(degree(compose(g, f), circle(a), circle(c)) ==
                  degree(g, circle(b), circle(c)) * degree(f, circle(a), circle(b)),
              "circle degrees");
    } else {
      auto f = random_sphere_map(rng);
      auto g = random_sphere_map(rng);
      auto df = degree(f, *s2, *s2);
      t.check(degree(compose(g, f), *s2, *s2) == degree(g, *s2, *s2) * df, "sphere degrees");
      std::set<int> image(f.vertex_map.begin(), f.vertex_map.end());
      t.check((image.size() == 4) == (df != 0), "only bijections have nonzero degree");
    }
  });
}

bool exact_witness(const PLMap& f, const PLMap& g, const Witness& w) {
  Rational sum = 0;
  for (const auto& l : w.barycentric) {
    if (sgn(l) <= 0) return false;
    sum += l;
  }
  return sum == 1 && verify_witness(f, g, w) && f.evaluate(w.simplex, w.barycentric) == w.image &&
         g.evaluate(w.simplex, w.barycentric) == w.image;
}

PropertyResult witnesses(std::uint32_t seed) {
  auto s2 = std::make_shared<OrientedManifold>(OrientedManifold::build(SimplicialPair::absolute(fx::tetra_boundary())));
  auto c3 = std::make_shared<OrientedManifold>(OrientedManifold::build(SimplicialPair::absolute(fx::circle(3))));
  auto c6 = SimplicialPair::absolute(fx::circle(6));
  auto e = fx::subdivision_embedding();
  auto cover = fx::double_cover();
  return sweep("oracle witnesses are exact and certificates are sound", seed, 120,
               [&](Rng& rng, Tracker& t) {
                 std::unique_ptr<CoincidenceProblem> p;
                 PLMap f, g;
                 switch (uniform(rng, 0, 2)) {
                   case 0:
                     f = PLMap::from(random_sphere_map(rng));
                     g = PLMap::from(random_sphere_map(rng));
                     p = std::make_unique<CoincidenceProblem>(s2->rel.pair(), *s2, f, g);
                     break;
                   case 1:
                     f = PLMap::from(random_circle_map(rng, uniform(rng, 3, 6), 3));
                     g = PLMap::from(random_circle_map(rng, static_cast<int>(f.source.vertex_count()), 3));
                     p = std::make_unique<CoincidenceProblem>(SimplicialPair::absolute(f.source), *c3, f, g);
                     break;
                   default:
                     f = compose(e, random_circle_map(rng, 6, 6));
                     g = PLMap::from(compose(cover, random_circle_map(rng, 6, 6)));
                     if (coin(rng, 0.5)) std::swap(f, g);
                     p = std::make_unique<CoincidenceProblem>(c6, *c3, f, g);
                 }
                 auto v = p->certificate({}, true);
                 t.check(!v.soundness_violation(), "nonzero certificate without a coincidence");
                 if (v.witness) t.check(exact_witness(f, g, *v.witness), "witness is not a coincidence");
                 t.check((v.oracle == OracleOutcome::Found) == v.witness.has_value(), "oracle outcome");
               });
}

PropertyResult classical_recovery(std::uint32_t seed) {
  std::map<int, std::shared_ptr<OrientedManifold>> circles;
  auto s2 = std::make_shared<OrientedManifold>(OrientedManifold::build(SimplicialPair::absolute(fx::tetra_boundary())));
  return sweep("coincidence numbers recover fixed point numbers", seed, 150,
               [&](Rng& rng, Tracker& t) {
                 SimplicialMap phi;
                 const OrientedManifold* m;
                 if (coin(rng, 0.5)) {
                   int n = uniform(rng, 3, 6);
                   auto& slot = circles[n];
                   if (!slot) slot = std::make_shared<OrientedManifold>(OrientedManifold::build(SimplicialPair::absolute(fx::circle(n))));
                   m = slot.get();
                   phi = random_circle_map(rng, n, n);
                 } else {
                   m = s2.get();
                   phi = random_sphere_map(rng);
                 }
                 const auto& pair = m->rel.pair();
                 Rational lambda = lefschetz_number_self(phi, m->abs);
                 auto id = PLMap::from(identity_map(pair));
                 auto p = PLMap::from(phi);
                 CoincidenceProblem a(pair, *m, id, p);
                 CoincidenceProblem b(pair, *m, p, id);
                 auto z = m->fundamental_class();
                 Rational la = augmentation(a.lefschetz_homomorphism(z));
                 Rational lb = augmentation(b.lefschetz_homomorphism(z));
                 t.check(la == lambda, "lambda(id, f) != lambda(f)");
                 t.check(lb == (m->dimension() % 2 == 0 ? lambda : -lambda),
                         "lambda(f, id) != (-1)^n lambda(f)");
                 t.check(a.classical_number(*m) == la && b.classical_number(*m) == lb,
                         "classical trace formula disagrees");
               });
}

std::string random_workspace(Rng& rng) {
  std::ostringstream out;
  int complexes = uniform(rng, 1, 3);
  std::vector<std::pair<std::string, SimplicialComplex>> made;
  for (int i = 0; i < complexes; ++i) {
    auto c = random_complex(rng, uniform(rng, 1, 5), 2, uniform(rng, 0, 3));
    std::string name = "K" + std::to_string(i);
    out << "complex " << name << "\n  vertices";
    for (const auto& l : c.labels()) out << " v" << l;
    out << "\n";
    for (int d = std::max(1, c.dimension()); d >= 1; --d)
      for (const auto& s : c.simplices(d)) {
        out << "  facet";
        for (int v : s) out << " v" << v;
        out << "\n";
      }
    out << "end\n";
    made.emplace_back(name, c);
    if (coin(rng, 0.5)) {
      out << "pair P" << i << " " << name;
      if (coin(rng, 0.5)) out << " sub " << name;
      out << "\n";
    }
  }
  out << "complex D\n  vertices a b c\n  facet a b c\nend\n";
  for (std::size_t i = 0; i < made.size(); ++i) {
    if (coin(rng, 0.3)) continue;
    out << "map m" << i << " " << made[i].first << " -> D\n";
    for (int v = 0; v < made[i].second.vertex_count(); ++v) {
      out << "  v" << v << " ->";
      std::vector<std::string> names{"a", "b", "c"};
      std::shuffle(names.begin(), names.end(), rng);
      int terms = uniform(rng, 1, 3);
      if (terms == 1) {
        out << " " << names[0];
      } else {
        std::vector<int> w;
        for (int j = 0; j < terms; ++j) w.push_back(uniform(rng, 1, 5));
        int total = 0;
        for (int x : w) total += x;
        for (int j = 0; j < terms; ++j) {
          Rational q(w[static_cast<std::size_t>(j)], total);
          q.canonicalize();
          out << (j ? " + " : " ") << q.get_str() << " " << names[static_cast<std::size_t>(j)];
        }
      }
      out << "\n";
    }
    out << "end\n";
  }
  if (coin(rng, 0.5)) out << "# trailing comment\n";
  out << "orientation o D " << (coin(rng, 0.5) ? "+" : "-") << " a b c\n";
  return out.str();
}

PropertyResult workspace_round_trip(std::uint32_t seed) {
  return sweep("workspace serialization round-trips", seed, 150, [](Rng& rng, Tracker& t) {
    auto text = random_workspace(rng);
    auto ws = Workspace::parse(text);
    auto once = serialize(ws.document());
    auto again = Workspace::parse(once);
    t.check(again.document() == ws.document(), "reparsed document differs");
    t.check(serialize(again.document()) == once, "serialization not stable");
    t.check(again.pairs() == ws.pairs(), "resolved pairs differ");
    for (const auto& [name, m] : ws.maps())
      t.check(again.map(name).geometry == m.geometry, "resolved map " + name + " differs");
  });
}

PropertyResult deterministic_reports(std::uint32_t seed) {
  struct Call {
    std::string file, command;
    std::map<std::string, std::string> values;
    bool oracle = false;
  };
  std::vector<Call> calls{
      {"sphere.lef", "betti", {{"pair", "S2"}}},
      {"torus7.lef", "euler", {{"pair", "T7"}}},
      {"mobius.lef", "orient", {{"pair", "band"}}},
      {"circles.lef", "degree", {{"map", "cover"}}},
      {"circles.lef", "coincidence", {{"f", "e"}, {"g", "cover"}}, true},
      {"circles.lef", "lefschetz-class", {{"f", "id6"}, {"g", "rot"}}},
      {"sphere.lef", "equilibrium", {{"system", "still"}}, true},
      {"circles.lef", "sphere-check", {{"system", "slice"}}},
      {"robot_arm_1.lef", "controllability", {{"system", "arm"}, {"from", "start"}}},
      {"circles.lef", "reachability", {{"system", "flip"}, {"steps", "3"}}},
  };
  std::vector<std::string> first(calls.size());
  return sweep("reports are byte-identical across runs", seed, 120, [&](Rng& rng, Tracker& t) {
    auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(calls.size()) - 1));
    const auto& c = calls[i];
    auto ws = Workspace::parse(read_file(fixture_path(c.file)));
    CommandOptions o;
    o.values = c.values;
    o.oracle = c.oracle;
    auto r = run_command(&ws, c.command, o);
    auto bytes = render_json(r) + "\n" + render_text(r);
    if (first[i].empty()) first[i] = bytes;
    t.check(bytes == first[i], c.command + " report changed between runs");
  });
}

}  // namespace

const std::vector<Property>& properties() {
  static const std::vector<Property> all{
      {"boundary", boundary_squares},
      {"kronecker", kronecker_delta},
      {"functoriality", functoriality},
      {"kunneth", kunneth},
      {"cap-pairing", cap_pairing},
      {"matrix", matrix_algebra},
      {"trace", degree_zero_class},
      {"cross", cross_products},
      {"degree", degree_multiplicative},
      {"witness", witnesses},
      {"recovery", classical_recovery},
      {"round-trip", workspace_round_trip},
      {"determinism", deterministic_reports},
  };
  return all;
}

}  // namespace testing
