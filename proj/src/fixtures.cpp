#include "lefcon/fixtures.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace lefcon::fixtures {

namespace {

Simplex sorted(Simplex s) {
  std::sort(s.begin(), s.end());
  return s;
}

SimplicialComplex cyclic(int n, const std::vector<std::vector<int>>& patterns) {
  std::vector<Simplex> facets;
  for (int i = 0; i < n; ++i)
    for (const auto& p : patterns) {
      Simplex s;
      for (int o : p) s.push_back((i + o) % n);
      facets.push_back(sorted(s));
    }
  return SimplicialComplex::closure(SimplicialComplex::numbered_labels(n), facets);
}

SimplicialMap product_map(const ProductData& src, const SimplicialPair& target,
                          const std::function<int(int, int)>& f) {
  std::vector<int> vm;
  for (int v = 0; v < src.product.total.vertex_count(); ++v)
    vm.push_back(f(src.first_of(v), src.second_of(v)));
  return {src.product, target, vm};
}

}  // namespace

SimplicialComplex boundary_of(const SimplicialComplex& c) {
  const int n = c.dimension();
  std::map<Simplex, int> cofaces;
  if (n >= 1)
    for (const auto& s : c.simplices(n))
      for (const auto& f : facets_of(s)) ++cofaces[f];
  std::vector<Simplex> faces;
  for (const auto& [f, count] : cofaces)
    if (count == 1) faces.push_back(f);
  return SimplicialComplex::closure(c.labels(), faces);
}

SimplicialPair manifold_pair(const SimplicialComplex& c) { return {c, boundary_of(c)}; }

SimplicialComplex point() { return SimplicialComplex::closure({"pt"}, {{0}}); }

SimplicialComplex circle(int n) { return cyclic(n, {{0, 1}}); }

SimplicialComplex interval() {
  return SimplicialComplex::closure(SimplicialComplex::numbered_labels(2), {{0, 1}});
}

SimplicialComplex tetra_boundary() { return cyclic(4, {{0, 1, 2}}); }

SimplicialComplex torus7() { return cyclic(7, {{0, 1, 3}, {0, 2, 3}}); }

SimplicialComplex staircase_torus() {
  auto c = SimplicialPair::absolute(circle(3));
  return product_pair(c, c).product.total;
}

SimplicialComplex mobius() { return cyclic(5, {{0, 1, 2}}); }

SimplicialPair cylinder() {
  auto i = interval();
  SimplicialPair ends{i, SimplicialComplex::closure(i.labels(), {{0}, {1}})};
  return product_pair(SimplicialPair::absolute(circle(3)), ends).product;
}

SimplicialMap rotation(int n, int shift) {
  auto c = SimplicialPair::absolute(circle(n));
  std::vector<int> vm;
  for (int i = 0; i < n; ++i) vm.push_back(((i + shift) % n + n) % n);
  return {c, c, vm};
}

SimplicialMap double_cover() {
  return {SimplicialPair::absolute(circle(6)), SimplicialPair::absolute(circle(3)),
          {0, 1, 2, 0, 1, 2}};
}

PLMap subdivision_embedding() {
  PLMap e{circle(6), circle(3), {}};
  const Rational half(1, 2);
  for (int j = 0; j < 3; ++j) {
    e.images.push_back({{j, Rational(1)}});
    e.images.push_back({{j, half}, {(j + 1) % 3, half}});
  }
  return e;
}

SimplicialMap tetra_reflection() {
  auto s = SimplicialPair::absolute(tetra_boundary());
  return {s, s, {1, 0, 2, 3}};
}

SimplicialMap torus_swap() {
  auto c = SimplicialPair::absolute(circle(3));
  auto prod = product_pair(c, c);
  return product_map(prod, prod.product, [&](int a, int b) { return prod.vertex(b, a); })
      .with_pairs(prod.product, prod.product);
}

SystemSpec projection_system(const std::string& name, const SimplicialPair& state,
                             const SimplicialComplex& input) {
  auto prod = product_pair(state, SimplicialPair::absolute(input));
  return {name, state, state, input,
          product_map(prod, state, [](int x, int) { return x; }), std::nullopt};
}

SystemSpec robot_arm(int n) {
  auto c3 = SimplicialPair::absolute(circle(3));
  SimplicialPair state = c3;
  for (int i = 1; i < n; ++i) state = product_pair(state, c3).product;
  auto prod = product_pair(state, c3);
  // State vertex index x = Σ x_i 3^{n-i}; the shift drops x_n and prepends u.
  int top = 1;
  for (int i = 1; i < n; ++i) top *= 3;
  return {"arm" + std::to_string(n), state, state, c3.total,
          product_map(prod, state, [top](int x, int u) { return u * top + x / 3; }),
          std::nullopt};
}

SystemSpec degree_two_slice() {
  auto src = SimplicialPair::absolute(circle(6));
  auto prod = product_pair(src, SimplicialPair::absolute(point()));
  return {"slice2", SimplicialPair::absolute(circle(3)), src, point(),
          product_map(prod, SimplicialPair::absolute(circle(3)), [](int x, int) { return x % 3; }),
          subdivision_embedding()};
}

SystemSpec cylinder_collapse() {
  auto state = cylinder();
  SimplicialComplex input = SimplicialComplex::closure({"u0", "u1"}, {{0}, {1}});
  auto prod = product_pair(state, SimplicialPair::absolute(input));
  // Cylinder vertex x = 2 * circle index + interval index.
  return {"collapse", state, state, input,
          product_map(prod, state, [](int x, int u) { return u == 0 ? x : x - x % 2; }),
          std::nullopt};
}

SystemSpec hexagon_flip() {
  auto state = SimplicialPair::absolute(circle(6));
  auto prod = product_pair(state, SimplicialPair::absolute(point()));
  return {"flip", state, state, point(),
          product_map(prod, state, [](int x, int) { return (x + 3) % 6; }), std::nullopt};
}

}  // namespace lefcon::fixtures
