#include "lefcon/maps.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lefcon {

Simplex SimplicialMap::image(const Simplex& s) const {
  Simplex out;
  for (int v : s) out.push_back((*this)(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SimplicialMap SimplicialMap::absolute() const {
  return {SimplicialPair::absolute(source.total), SimplicialPair::absolute(target.total),
          vertex_map};
}

SimplicialMap SimplicialMap::with_pairs(SimplicialPair src, SimplicialPair tgt) const {
  return {std::move(src), std::move(tgt), vertex_map};
}

void validate_map(const SimplicialMap& f) {
  const auto& src = f.source.total;
  const auto& tgt = f.target.total;
  if (f.vertex_map.size() != static_cast<std::size_t>(src.vertex_count()))
    throw TopologyError(TopologyErrorKind::NotSimplicial,
                        "vertex assignment does not cover the source vertices");
  for (int v : f.vertex_map)
    if (v < 0 || v >= tgt.vertex_count())
      throw TopologyError(TopologyErrorKind::UnknownVertex, "image vertex out of range");
  for (int d = 0; d <= src.dimension(); ++d)
    for (const auto& s : src.simplices(d)) {
      Simplex img = f.image(s);
      if (!tgt.contains(img))
        throw TopologyError(TopologyErrorKind::NotSimplicial,
                            src.format(s) + " maps to " + tgt.format(img) +
                                ", which is not a simplex of the target");
    }
  for (int d = 0; d <= f.source.sub.dimension(); ++d)
    for (const auto& s : f.source.sub.simplices(d)) {
      Simplex img = f.image(s);
      if (!f.target.sub.contains(img))
        throw TopologyError(TopologyErrorKind::NotMapOfPairs,
                            src.format(s) + " lies in the source subcomplex but its image " +
                                tgt.format(img) + " is outside the target subcomplex");
    }
}

SimplicialMap identity_map(const SimplicialPair& p) {
  std::vector<int> vm(static_cast<std::size_t>(p.total.vertex_count()));
  for (std::size_t i = 0; i < vm.size(); ++i) vm[i] = static_cast<int>(i);
  return {p, p, std::move(vm)};
}

SimplicialMap constant_map(const SimplicialPair& source, const SimplicialPair& target, int vertex) {
  return {source, target,
          std::vector<int>(static_cast<std::size_t>(source.total.vertex_count()), vertex)};
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (!(f.target.total == g.source.total))
    throw TopologyError(TopologyErrorKind::PairMismatch, "maps are not composable");
  std::vector<int> vm;
  for (int v : f.vertex_map) vm.push_back(g(v));
  return {f.source, g.target, std::move(vm)};
}

std::pair<int, Simplex> oriented_image(const std::vector<int>& vertex_map, const Simplex& s) {
  Simplex img;
  img.reserve(s.size());
  for (int v : s) img.push_back(vertex_map[static_cast<std::size_t>(v)]);
  int sign = 1;
  // insertion sort, counting transpositions
  for (std::size_t i = 1; i < img.size(); ++i)
    for (std::size_t j = i; j > 0 && img[j - 1] >= img[j]; --j) {
      if (img[j - 1] == img[j]) return {0, {}};
      std::swap(img[j - 1], img[j]);
      sign = -sign;
    }
  return {sign, img};
}

Matrix chain_map_matrix(const SimplicialMap& f, const PairHomology& src, const PairHomology& tgt,
                        int k) {
  Matrix m(tgt.chains().rank(k), src.chains().rank(k));
  for (std::size_t col = 0; col < src.chains().rank(k); ++col) {
    auto [sign, img] = oriented_image(f.vertex_map, src.generator(k, col));
    if (sign == 0) continue;
    int row = tgt.row_of(img);
    if (row < 0) {
      if (!tgt.pair().total.contains(img))
        throw TopologyError(TopologyErrorKind::NotSimplicial,
                            "image " + tgt.pair().total.format(img) + " is not a simplex");
      continue;
    }
    m(static_cast<std::size_t>(row), col) += sign;
  }
  return m;
}

Matrix induced_homology_map(const SimplicialMap& f, const PairHomology& src,
                            const PairHomology& tgt, int k) {
  Matrix out(tgt.betti(k), src.betti(k));
  if (out.empty()) return out;
  Matrix pushed = chain_map_matrix(f, src, tgt, k) * src.basis().cycles[static_cast<std::size_t>(k)];
  if (!(tgt.chains().d(k) * pushed).is_zero())
    throw std::logic_error("image of a cycle representative is not a cycle in the target");
  return tgt.basis().cocycles[static_cast<std::size_t>(k)] * pushed;
}

Matrix induced_cohomology_map(const SimplicialMap& f, const PairHomology& src,
                              const PairHomology& tgt, int k) {
  Matrix out(src.betti(k), tgt.betti(k));
  if (out.empty()) return out;
  // rows of `pulled` are the cocycles x_i^k ∘ f_#
  Matrix pulled = tgt.basis().cocycles[static_cast<std::size_t>(k)] * chain_map_matrix(f, src, tgt, k);
  for (std::size_t i = 0; i < tgt.betti(k); ++i) {
    Vector coords = src.cohomology_coordinates(k, pulled.row(i));
    for (std::size_t j = 0; j < coords.size(); ++j) out(j, i) = coords[j];
  }
  return out;
}

HomologyClass push_forward(const SimplicialMap& f, const PairHomology& src,
                           const PairHomology& tgt, const HomologyClass& a) {
  return {a.degree, induced_homology_map(f, src, tgt, a.degree) * a.coords};
}

PLMap PLMap::from(const SimplicialMap& f) {
  PLMap m{f.source.total, f.target.total, {}};
  for (int v : f.vertex_map) m.images.push_back(Point{{v, Rational(1)}});
  return m;
}

bool PLMap::is_simplicial() const {
  for (const auto& p : images)
    if (p.size() != 1) return false;
  return true;
}

Point PLMap::evaluate(const Simplex& s, const Vector& barycentric) const {
  Point out;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (const auto& [v, w] : images[static_cast<std::size_t>(s[i])]) out[v] += barycentric[i] * w;
  for (auto it = out.begin(); it != out.end();)
    it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  return out;
}

void validate_pl_map(const PLMap& f) {
  if (f.images.size() != static_cast<std::size_t>(f.source.vertex_count()))
    throw TopologyError(TopologyErrorKind::NotSimplicial,
                        "vertex images do not cover the source vertices");
  for (std::size_t v = 0; v < f.images.size(); ++v) {
    Rational total = 0;
    for (const auto& [t, w] : f.images[v]) {
      if (t < 0 || t >= f.target.vertex_count())
        throw TopologyError(TopologyErrorKind::UnknownVertex, "image vertex out of range");
      if (sgn(w) <= 0)
        throw TopologyError(TopologyErrorKind::NotSimplicial, "barycentric weight must be positive");
      total += w;
    }
    if (total != 1)
      throw TopologyError(TopologyErrorKind::NotSimplicial,
                          "barycentric weights of vertex " + f.source.labels()[v] + " do not sum to 1");
  }
  for (int d = 0; d <= f.source.dimension(); ++d)
    for (const auto& s : f.source.simplices(d)) {
      std::set<int> carrier;
      for (int v : s)
        for (const auto& [t, w] : f.images[static_cast<std::size_t>(v)]) carrier.insert(t);
      Simplex c(carrier.begin(), carrier.end());
      if (!f.target.contains(c))
        throw TopologyError(TopologyErrorKind::NotSimplicial,
                            f.source.format(s) + " is not carried by a simplex of the target");
    }
}

SimplicialMap simplicial_approximation(const PLMap& f, const SimplicialPair& source,
                                       const SimplicialPair& target) {
  std::vector<int> vm;
  for (const auto& p : f.images) {
    int best = -1;
    Rational best_w = 0;
    for (const auto& [t, w] : p)
      if (best < 0 || w > best_w) best = t, best_w = w;
    vm.push_back(best);
  }
  return {source, target, std::move(vm)};
}

PLMap compose(const PLMap& f, const SimplicialMap& s) {
  PLMap out{s.source.total, f.target, {}};
  for (int v : s.vertex_map) out.images.push_back(f.images[static_cast<std::size_t>(v)]);
  return out;
}

}  // namespace lefcon
