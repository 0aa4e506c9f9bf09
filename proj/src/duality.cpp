#include "lefcon/duality.hpp"

#include <deque>
#include <map>
#include <set>

namespace lefcon {

FundamentalClass orient(const SimplicialPair& p, int n, const std::optional<OrientationSeed>& seed) {
  const auto& M = p.total;
  if (n < 0 || M.dimension() != n)
    throw TopologyError(TopologyErrorKind::NonManifold,
                        "complex has dimension " + std::to_string(M.dimension()) + ", expected " +
                            std::to_string(n));
  const auto& top = M.simplices(n);

  // purity: every simplex is a face of some n-simplex
  std::set<Simplex> covered;
  for (const auto& s : top) {
    const std::size_t sz = s.size();
    for (unsigned mask = 1; mask < (1u << sz); ++mask) {
      Simplex f;
      for (std::size_t i = 0; i < sz; ++i)
        if (mask & (1u << i)) f.push_back(s[i]);
      covered.insert(std::move(f));
    }
  }
  if (covered.size() != M.size())
    throw TopologyError(TopologyErrorKind::NonManifold, "complex is not pure");

  // (n-1)-face -> list of (n-simplex index, face position)
  std::map<Simplex, std::vector<std::pair<int, int>>> cofaces;
  for (std::size_t t = 0; t < top.size(); ++t) {
    auto faces = facets_of(top[t]);
    for (std::size_t i = 0; i < faces.size(); ++i)
      cofaces[faces[i]].emplace_back(static_cast<int>(t), static_cast<int>(i));
  }
  std::vector<Simplex> boundary_faces;
  for (const auto& [face, cf] : cofaces) {
    if (cf.size() == 1) boundary_faces.push_back(face);
    else if (cf.size() != 2)
      throw TopologyError(TopologyErrorKind::NonManifold,
                          M.format(face) + " has " + std::to_string(cf.size()) + " cofaces");
  }
  SimplicialComplex expected = SimplicialComplex::closure(M.labels(), boundary_faces);
  if (!(expected == SimplicialComplex(M.labels(), [&] {
        std::vector<Simplex> all;
        for (int d = 0; d <= p.sub.dimension(); ++d)
          for (const auto& s : p.sub.simplices(d)) all.push_back(s);
        return all;
      }())))
    throw TopologyError(TopologyErrorKind::NonManifold,
                        "subcomplex is not the boundary of the manifold");

  OrientationSeed sd = seed.value_or(OrientationSeed{top.empty() ? Simplex{} : top.front(), 1});
  int seed_index = M.index_of(sd.simplex);
  if (seed_index < 0 || static_cast<int>(sd.simplex.size()) != n + 1 || (sd.sign != 1 && sd.sign != -1))
    throw TopologyError(TopologyErrorKind::Orientation, "invalid orientation seed");

  std::vector<int> sign(top.size(), 0);
  sign[static_cast<std::size_t>(seed_index)] = sd.sign;
  std::deque<int> queue{seed_index};
  while (!queue.empty()) {
    int t = queue.front();
    queue.pop_front();
    auto faces = facets_of(top[static_cast<std::size_t>(t)]);
    for (std::size_t i = 0; i < faces.size(); ++i) {
      const auto& cf = cofaces[faces[i]];
      if (cf.size() != 2) continue;
      const auto& other = cf[0].first == t ? cf[1] : cf[0];
      int face_sign = (i % 2 == 0 ? 1 : -1) * (other.second % 2 == 0 ? 1 : -1);
      int want = -sign[static_cast<std::size_t>(t)] * face_sign;
      int& have = sign[static_cast<std::size_t>(other.first)];
      if (have == 0) {
        have = want;
        queue.push_back(other.first);
      } else if (have != want) {
        throw TopologyError(TopologyErrorKind::NonOrientable,
                            "orientation conflict across " + M.format(faces[i]));
      }
    }
  }
  for (std::size_t t = 0; t < top.size(); ++t)
    if (sign[t] == 0)
      throw TopologyError(TopologyErrorKind::Disconnected,
                          M.format(top[t]) + " is not reachable from the seed simplex");

  FundamentalClass fc;
  fc.pair = p;
  fc.dimension = n;
  fc.seed = sd;
  fc.cycle.assign(top.size(), 0);
  fc.cocycle.assign(top.size(), 0);
  // top simplices are never in the boundary, so generator rows equal indices
  for (std::size_t t = 0; t < top.size(); ++t) fc.cycle[t] = sign[t];
  fc.cocycle[static_cast<std::size_t>(seed_index)] = sd.sign;
  return fc;
}

Rational kronecker(int cochain_degree, const Vector& x, int chain_degree, const Vector& a) {
  if (cochain_degree != chain_degree)
    throw DegreeError("Kronecker pairing of a degree " + std::to_string(cochain_degree) +
                      " cochain with a degree " + std::to_string(chain_degree) + " chain");
  if (x.size() != a.size()) throw DimensionError("Kronecker pairing: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0 && sgn(a[i]) != 0) s += x[i] * a[i];
  return s;
}

Vector cap_chain(const PairHomology& rel, const PairHomology& abs, int k, const Vector& x, int m,
                 const Vector& a) {
  if (k < 0 || k > m) throw DegreeError("cap product needs 0 <= k <= m");
  Vector out(abs.chains().rank(m - k));
  if (a.empty()) return out;
  const int sign = ((k * (m - k)) % 2 == 0) ? 1 : -1;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (sgn(a[r]) == 0) continue;
    const Simplex& s = rel.generator(m, r);
    Simplex back(s.begin() + (m - k), s.end());
    int xrow = rel.row_of(back);
    if (xrow < 0 || sgn(x[static_cast<std::size_t>(xrow)]) == 0) continue;
    Simplex front(s.begin(), s.begin() + (m - k) + 1);
    int frow = abs.row_of(front);
    if (frow < 0) throw std::logic_error("front face missing from the absolute complex");
    out[static_cast<std::size_t>(frow)] += sign * x[static_cast<std::size_t>(xrow)] * a[r];
  }
  return out;
}

HomologyClass cap(const PairHomology& rel, const PairHomology& abs, const CohomologyClass& x,
                  const HomologyClass& a) {
  if (x.degree > a.degree || x.degree < 0)
    throw DegreeError("cap product of H^" + std::to_string(x.degree) + " with H_" +
                      std::to_string(a.degree));
  const int out_deg = a.degree - x.degree;
  if (a.degree > rel.top() || x.degree > rel.top()) return abs.zero_class(out_deg);
  Vector chain = cap_chain(rel, abs, x.degree, rel.cocycle_representative(x.degree, x.coords),
                           a.degree, rel.representative(a.degree, a.coords));
  return {out_deg, abs.coordinates(out_deg, chain)};
}

PoincareDuality::PoincareDuality(const FundamentalClass& fc, const PairHomology& rel,
                                 const PairHomology& abs)
    : n_(fc.dimension) {
  for (int k = 0; k <= n_; ++k) {
    Matrix dk(abs.betti(n_ - k), rel.betti(k));
    for (std::size_t j = 0; j < rel.betti(k); ++j) {
      Vector x = rel.basis().cocycles[static_cast<std::size_t>(k)].row(j);
      Vector chain = cap_chain(rel, abs, k, x, n_, fc.cycle);
      Vector coords = abs.coordinates(n_ - k, chain);
      for (std::size_t i = 0; i < coords.size(); ++i) dk(i, j) = coords[i];
    }
    d_.push_back(std::move(dk));
  }
}

const Matrix& PoincareDuality::matrix(int k) const {
  if (k < 0 || k > n_) throw DegreeError("Poincaré duality degree out of range");
  return d_[static_cast<std::size_t>(k)];
}

HomologyClass PoincareDuality::apply(const CohomologyClass& x) const {
  return {n_ - x.degree, matrix(x.degree) * x.coords};
}

Matrix PoincareDuality::inverse_matrix(int k) const {
  const Matrix& dk = matrix(k);
  if (dk.rows() != dk.cols() || rank(dk) != dk.cols())
    throw std::logic_error("Poincaré duality matrix is singular in degree " + std::to_string(k));
  auto inv = solve(dk, Matrix::identity(dk.rows()));
  return *inv;
}

CohomologyClass PoincareDuality::inverse(const HomologyClass& a) const {
  const int k = n_ - a.degree;
  if (k < 0 || k > n_) throw DegreeError("Poincaré duality degree out of range");
  return {k, inverse_matrix(k) * a.coords};
}

bool PoincareDuality::bijective() const {
  for (const auto& dk : d_)
    if (dk.rows() != dk.cols() || rank(dk) != dk.cols()) return false;
  return true;
}

OrientedManifold OrientedManifold::build(const SimplicialPair& p, int n,
                                         const std::optional<OrientationSeed>& seed) {
  FundamentalClass fc = orient(p, n, seed);
  PairHomology rel(p);
  PairHomology abs(SimplicialPair::absolute(p.total));
  PoincareDuality d(fc, rel, abs);
  return {std::move(fc), std::move(rel), std::move(abs), std::move(d)};
}

HomologyClass OrientedManifold::fundamental_class() const {
  return {dimension(), rel.coordinates(dimension(), fundamental.cycle)};
}

HomologyClass cross(const ProductData& prod, const PairHomology& first, const HomologyClass& a,
                    const PairHomology& second, const HomologyClass& v,
                    const PairHomology& product) {
  const int deg = a.degree + v.degree;
  if (deg > product.top()) return product.zero_class(deg);
  Vector chain = shuffle_chains(prod, first, a.degree, first.representative(a.degree, a.coords),
                                second, v.degree, second.representative(v.degree, v.coords),
                                product);
  return {deg, product.coordinates(deg, chain)};
}

Rational degree(const SimplicialMap& f, const OrientedManifold& source,
                const OrientedManifold& target) {
  const int n = target.dimension();
  if (source.dimension() != n)
    throw TopologyError(TopologyErrorKind::Orientation, "manifolds differ in dimension");
  Vector pushed = chain_map_matrix(f, source.rel, target.rel, n) * source.fundamental.cycle;
  Rational deg = kronecker(n, target.fundamental.cocycle, n, pushed);
  for (std::size_t i = 0; i < pushed.size(); ++i)
    if (pushed[i] != deg * target.fundamental.cycle[i])
      throw std::logic_error("image of the fundamental cycle is not a multiple of O_M");
  return deg;
}

}  // namespace lefcon
