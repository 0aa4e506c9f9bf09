#include "lefcon/product.hpp"

#include <set>
#include <stdexcept>

namespace lefcon {

namespace {

// Enumerates the monotone lattice paths from (0,0) to (p,q); each path is the
// step sequence (false = step in the first factor).
void lattice_paths(int p, int q, std::vector<bool>& cur, std::vector<std::vector<bool>>& out) {
  if (p == 0 && q == 0) {
    out.push_back(cur);
    return;
  }
  if (p > 0) {
    cur.push_back(false);
    lattice_paths(p - 1, q, cur, out);
    cur.pop_back();
  }
  if (q > 0) {
    cur.push_back(true);
    lattice_paths(p, q - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<bool>> lattice_paths(int p, int q) {
  std::vector<bool> cur;
  std::vector<std::vector<bool>> out;
  lattice_paths(p, q, cur, out);
  return out;
}

Simplex project(const Simplex& s, int width, bool first) {
  std::set<int> out;
  for (int v : s) out.insert(first ? v / width : v % width);
  return Simplex(out.begin(), out.end());
}

}  // namespace

std::vector<std::pair<int, Simplex>> shuffle(const ProductData& prod, const Simplex& sigma,
                                             const Simplex& tau) {
  const int p = static_cast<int>(sigma.size()) - 1;
  const int q = static_cast<int>(tau.size()) - 1;
  std::vector<std::pair<int, Simplex>> out;
  for (const auto& path : lattice_paths(p, q)) {
    std::size_t a = 0, b = 0;
    Simplex s{prod.vertex(sigma[0], tau[0])};
    int inversions = 0, second_steps = 0;
    for (bool step_second : path) {
      if (step_second) {
        ++b;
        ++second_steps;
      } else {
        ++a;
        inversions += second_steps;
      }
      s.push_back(prod.vertex(sigma[a], tau[b]));
    }
    out.emplace_back(inversions % 2 == 0 ? 1 : -1, std::move(s));
  }
  return out;
}

ProductData product_pair(const SimplicialPair& a, const SimplicialPair& b) {
  const auto& K = a.total;
  const auto& L = b.total;
  const int width = L.vertex_count();
  std::vector<std::string> labels;
  for (const auto& x : K.labels())
    for (const auto& y : L.labels()) labels.push_back(x + "*" + y);
  {
    std::set<std::string> uniq(labels.begin(), labels.end());
    if (uniq.size() != labels.size())
      throw TopologyError(TopologyErrorKind::Duplicate, "product vertex labels collide");
  }

  ProductData prod;
  prod.first = a;
  prod.second = b;
  std::set<Simplex> all;
  for (int p = 0; p <= K.dimension(); ++p)
    for (const auto& sigma : K.simplices(p))
      for (int q = 0; q <= L.dimension(); ++q)
        for (const auto& tau : L.simplices(q))
          for (const auto& path : lattice_paths(p, q)) {
            std::size_t i = 0, j = 0;
            Simplex s{sigma[0] * width + tau[0]};
            for (bool step_second : path) {
              (step_second ? j : i) += 1;
              s.push_back(sigma[i] * width + tau[j]);
            }
            const std::size_t n = s.size();
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
              Simplex f;
              for (std::size_t t = 0; t < n; ++t)
                if (mask & (1u << t)) f.push_back(s[t]);
              all.insert(std::move(f));
            }
          }
  SimplicialComplex total(labels, std::vector<Simplex>(all.begin(), all.end()));

  std::vector<Simplex> sub, sub_first, sub_second;
  for (const auto& s : all) {
    bool in_a = a.sub.contains(project(s, width, true));
    bool in_b = b.sub.contains(project(s, width, false));
    if (in_a || in_b) sub.push_back(s);
    if (in_a) sub_first.push_back(s);
    if (in_b) sub_second.push_back(s);
  }
  prod.product = {total, SimplicialComplex(labels, sub)};

  std::vector<int> pa, pb;
  for (int v = 0; v < total.vertex_count(); ++v) {
    pa.push_back(v / width);
    pb.push_back(v % width);
  }
  prod.projection_first = {{total, SimplicialComplex(labels, sub_first)}, a, pa};
  prod.projection_second = {{total, SimplicialComplex(labels, sub_second)}, b, pb};
  return prod;
}

Vector shuffle_chains(const ProductData& prod, const PairHomology& first, int i, const Vector& a,
                      const PairHomology& second, int j, const Vector& b,
                      const PairHomology& product) {
  Vector out(product.chains().rank(i + j));
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (sgn(a[r]) == 0) continue;
    const Simplex& sigma = first.generator(i, r);
    for (std::size_t c = 0; c < b.size(); ++c) {
      if (sgn(b[c]) == 0) continue;
      const Simplex& tau = second.generator(j, c);
      Rational coef = a[r] * b[c];
      for (const auto& [sign, s] : shuffle(prod, sigma, tau)) {
        int row = product.row_of(s);
        if (row < 0) throw std::logic_error("shuffle simplex is not a relative generator");
        out[static_cast<std::size_t>(row)] += sign * coef;
      }
    }
  }
  return out;
}

}  // namespace lefcon
