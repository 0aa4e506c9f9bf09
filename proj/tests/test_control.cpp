#include "doctest.h"
#include "lefcon/control.hpp"

using namespace lefcon;
namespace fx = lefcon::fixtures;

TEST_CASE("projection systems give the euler characteristic") {
  std::vector<std::pair<SimplicialPair, long>> states = {
      {SimplicialPair::absolute(fx::circle(3)), 0},
      {SimplicialPair::absolute(fx::tetra_boundary()), 2},
      {SimplicialPair::absolute(fx::torus7()), 0},
      {fx::cylinder(), 0}};
  for (const auto& [state, chi] : states) {
    DiscreteSystem sys(fx::projection_system("p", state, fx::interval()));
    auto c = fixed_point_class(sys, sys.input_homology().basis_class(0, 0));
    CHECK(c == HomologyClass{0, {Rational(chi)}});
  }
}

TEST_CASE("degree two slice") {
  DiscreteSystem sys(fx::degree_two_slice());
  auto c = fixed_point_class(sys, sys.input_homology().basis_class(0, 0));
  CHECK(c == HomologyClass{0, {Rational(-1)}});
  auto v = equilibrium_certificate(sys, true);
  CHECK(v.nonzero);
  CHECK(v.oracle == OracleOutcome::Found);
  auto s = sphere_criteria(sys);
  CHECK(s.condition_one);
  CHECK(s.slice_degrees.size() == 1);
  CHECK(abs(s.slice_degrees[0]) == 2);
}

TEST_CASE("robot arm controllability") {
  for (int n : {1, 2}) {
    DiscreteSystem sys(fx::robot_arm(n));
    SimplicialComplex pt = SimplicialComplex::closure({sys.state().total.labels()[0]}, {{0}});
    auto r = controllability_chain_search(sys, pt);
    REQUIRE(r.chain);
    CHECK(r.chain->steps() == n);
    CHECK(r.image_covers == std::optional<bool>(true));
    CHECK(r.composed_surjective == std::optional<bool>(true));
    for (const auto& v : r.chain->inputs) CHECK(v.degree == 1);
  }
}

TEST_CASE("cylinder boundary inputs") {
  DiscreteSystem sys(fx::cylinder_collapse());
  auto u = boundary_input_subcomplex(sys);
  CHECK(u.size() == 1);
  CHECK(u.contains({1}));
}

namespace {

fx::SystemSpec sphere_slice(const SimplicialMap& slice) {
  auto s2 = SimplicialPair::absolute(fx::tetra_boundary());
  auto prod = product_pair(s2, SimplicialPair::absolute(fx::point()));
  std::vector<int> vm;
  for (int v = 0; v < prod.product.total.vertex_count(); ++v) vm.push_back(slice(prod.first_of(v)));
  return {"s", s2, s2, fx::point(), {prod.product, s2, vm}, std::nullopt};
}

}  // namespace

TEST_CASE("boundary inputs") {
  DiscreteSystem p(fx::projection_system("p", SimplicialPair::absolute(fx::tetra_boundary()),
                                         fx::interval()));
  CHECK(boundary_input_subcomplex(p).size() == 0);
  auto spec = fx::cylinder_collapse();
  for (std::size_t v = 0; v < spec.map.vertex_map.size(); ++v) {
    const int x = static_cast<int>(v) / 2;
    spec.map.vertex_map[v] = x - x % 2;
  }
  DiscreteSystem all(spec);
  CHECK(boundary_input_subcomplex(all) == all.input());
}

TEST_CASE("sphere slices") {
  auto s2 = SimplicialPair::absolute(fx::tetra_boundary());
  DiscreteSystem refl(sphere_slice(fx::tetra_reflection()));
  DiscreteSystem cst(sphere_slice(constant_map(s2, s2, 0)));
  DiscreteSystem id(sphere_slice(identity_map(s2)));
  auto one = HomologyClass{0, {Rational(1)}};
  CHECK(fixed_point_class(refl, one) == HomologyClass{0, {Rational(0)}});
  CHECK(fixed_point_class(cst, one) == HomologyClass{0, {Rational(1)}});
  CHECK(fixed_point_class(id, one) == HomologyClass{0, {Rational(2)}});
  for (const DiscreteSystem* sys : {&refl, &cst, &id}) {
    auto v = equilibrium_certificate(*sys, true);
    CHECK(v.nonzero == sphere_criteria(*sys).certified());
    CHECK_FALSE(v.soundness_violation());
  }
  CHECK_FALSE(sphere_criteria(refl).certified());
}

TEST_CASE("top-degree inputs that act trivially give the zero class") {
  DiscreteSystem sys(
      fx::projection_system("p", SimplicialPair::absolute(fx::circle(3)), fx::circle(3)));
  auto d = sys.input_homology().basis_class(1, 0);
  CHECK(fixed_point_class(sys, d) == HomologyClass{1, {Rational(0)}});
  auto s = sphere_criteria(sys);
  CHECK_FALSE(s.condition_one);
  CHECK_FALSE(s.condition_two);
  CHECK(s.top_inputs.size() == 1);
}

TEST_CASE("equilibrium on the torus projection is not certified") {
  DiscreteSystem sys(
      fx::projection_system("p", SimplicialPair::absolute(fx::torus7()), fx::point()));
  auto v = equilibrium_certificate(sys, true);
  CHECK_FALSE(v.nonzero);
  CHECK(v.oracle == OracleOutcome::Found);
}

TEST_CASE("sphere criteria reject non-spheres") {
  DiscreteSystem sys(
      fx::projection_system("p", SimplicialPair::absolute(fx::torus7()), fx::point()));
  CHECK_THROWS_AS(sphere_criteria(sys), TopologyError);
}

TEST_CASE("surjectivity") {
  auto c3 = SimplicialPair::absolute(fx::circle(3));
  auto m = OrientedManifold::build(c3);
  auto id = surjectivity_certificate(identity_map(c3), m, true);
  CHECK(id.nonzero);
  CHECK(id.oracle == OracleOutcome::Found);
  auto cst = surjectivity_certificate(constant_map(c3, c3, 0), m, true);
  CHECK_FALSE(cst.nonzero);
  CHECK(cst.oracle == OracleOutcome::NotFound);
  CHECK(surjectivity_oracle(fx::double_cover()));
  CHECK_FALSE(surjectivity_oracle(constant_map(c3, c3, 1)));
}

TEST_CASE("two-factor system from a circle needs one step") {
  DiscreteSystem sys(fx::robot_arm(2));
  auto ring = SimplicialComplex::closure({"0*0", "1*0", "2*0"}, {{0, 1}, {1, 2}, {0, 2}});
  auto r = controllability_chain_search(sys, ring);
  REQUIRE(r.chain);
  CHECK(r.chain->steps() == 1);
  CHECK(r.chain->a0.degree == 1);
  CHECK(r.composed_surjective == std::optional<bool>(true));
}

TEST_CASE("subdivided systems are outside the controllability certificate") {
  DiscreteSystem sys(fx::degree_two_slice());
  CHECK_THROWS_AS(controllability_chain_search(sys, fx::point()), InapplicableError);
}

TEST_CASE("controllability search runs on a manifold with boundary") {
  auto state = fx::cylinder();
  auto prod = product_pair(state, SimplicialPair::absolute(fx::point()));
  std::vector<int> vm;
  for (int v = 0; v < prod.product.total.vertex_count(); ++v) vm.push_back(prod.first_of(v));
  fx::SystemSpec ok{"ok", state, state, fx::point(), {prod.product, state, vm}, std::nullopt};
  DiscreteSystem good(ok);
  auto pt = SimplicialComplex::closure({"0*0"}, {{0}});
  ControllabilityReport r;
  CHECK_NOTHROW(r = controllability_chain_search(good, pt));
  CHECK_FALSE(r.soundness_violation());
}

TEST_CASE("removability clause checks") {
  CHECK(removability_precondition({3, 1}, 2, 1).clause == RemovabilityClause::A1);
  CHECK(removability_precondition({1, 0, 0}, 5, 2).clause == RemovabilityClause::A2);
  CHECK(removability_precondition({1, 0, 0, 0, 1}, 5, 4).clause == RemovabilityClause::None);
  CHECK(removability_precondition({1, 0, 0, 0, 1}, 6, 4).clause == RemovabilityClause::A3);
  CHECK(removability_precondition({2, 0, 0, 0, 2}, 6, 4).clause == RemovabilityClause::A3);
  CHECK(removability_precondition({2, 0, 0, 0, 1}, 6, 4).clause == RemovabilityClause::None);
  CHECK_THROWS_AS(removability_precondition({}, 6, 4), MalformedDeclaration);
  CHECK_THROWS_AS(removability_precondition({0, 1}, 6, 4), MalformedDeclaration);
  auto r = removability_precondition({1, 0}, 6, 4);
  CHECK(r.star());
  CHECK_FALSE(r.conclusion);

  auto full = SimplicialComplex::closure({"a", "b", "c"}, {{0, 1, 2}});
  SimplicialPair disk{full, fx::boundary_of(full)};
  auto collapse = constant_map(disk, disk, 0);
  auto z = removability_precondition({1}, 2, 0, collapse);
  CHECK(z.local_zero == std::optional<bool>(true));
  CHECK(z.conclusion);
  auto keep = removability_precondition({1}, 2, 0, identity_map(disk));
  CHECK(keep.local_zero == std::optional<bool>(false));
  CHECK_FALSE(keep.conclusion);
}

TEST_CASE("reachability") {
  DiscreteSystem still(
      fx::projection_system("p", SimplicialPair::absolute(fx::tetra_boundary()), fx::interval()));
  auto r = reachability_oracle(still, 3);
  for (std::size_t x = 0; x < r.size(); ++x)
    for (std::size_t y = 0; y < r.size(); ++y) CHECK(r[x][y] == (x == y));
  for (int n : {1, 2}) {
    DiscreteSystem arm(fx::robot_arm(n));
    for (const auto& row : reachability_oracle(arm, n))
      for (bool b : row) CHECK(b);
  }
  DiscreteSystem flip(fx::hexagon_flip());
  auto f = reachability_oracle(flip, 5);
  CHECK(f[0] == std::vector<bool>{true, false, false, true, false, false});
}

TEST_CASE("cross-then-induce agrees with inducing on the product basis") {
  DiscreteSystem sys(fx::robot_arm(2));
  const auto& U = sys.input_homology();
  const auto& S = sys.source_homology();
  const auto& P = sys.product_homology();
  PairHomology M(SimplicialPair::absolute(sys.state().total));
  auto prod = product_pair(SimplicialPair::absolute(sys.state().total),
                           SimplicialPair::absolute(sys.input()));
  for (const auto& a : basis_classes(S))
    for (const auto& v : basis_classes(U)) {
      const int k = a.degree + v.degree;
      if (k > 2) continue;
      Vector chain = shuffle_chains(prod, S, a.degree, S.representative(a.degree, a.coords), U,
                                    v.degree, U.representative(v.degree, v.coords), P);
      Vector pushed = chain_map_matrix(sys.map().absolute(), P, M, k) * chain;
      Vector direct = M.coordinates(k, pushed);
      auto via_basis = push_forward(sys.map().absolute(), P, M, cross(prod, S, a, U, v, P));
      CHECK(via_basis.coords == direct);
    }
}
