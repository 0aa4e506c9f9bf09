#include "lefcon/complex.hpp"

#include <algorithm>
#include <set>

namespace lefcon {

const char* to_string(TopologyErrorKind kind) {
  switch (kind) {
    case TopologyErrorKind::FaceClosure: return "face-closure violation";
    case TopologyErrorKind::Subcomplex: return "subcomplex violation";
    case TopologyErrorKind::Ordering: return "ordering violation";
    case TopologyErrorKind::Duplicate: return "duplicate simplex";
    case TopologyErrorKind::UnknownVertex: return "unknown vertex";
    case TopologyErrorKind::NotSimplicial: return "not simplicial";
    case TopologyErrorKind::NotMapOfPairs: return "not a map of pairs";
    case TopologyErrorKind::NonOrientable: return "non-orientable";
    case TopologyErrorKind::NonManifold: return "non-manifold";
    case TopologyErrorKind::Disconnected: return "disconnected";
    case TopologyErrorKind::Orientation: return "orientation unavailable";
    case TopologyErrorKind::PairMismatch: return "pair mismatch";
  }
  return "topology error";
}

SimplicialComplex::SimplicialComplex(std::vector<std::string> labels,
                                     std::vector<Simplex> simplices)
    : labels_(std::move(labels)) {
  for (auto& s : simplices) {
    if (s.empty()) continue;
    std::size_t d = s.size() - 1;
    if (by_dim_.size() <= d) by_dim_.resize(d + 1);
    by_dim_[d].push_back(std::move(s));
  }
  for (auto& level : by_dim_) std::sort(level.begin(), level.end());
  index();
}

SimplicialComplex SimplicialComplex::closure(std::vector<std::string> labels,
                                             const std::vector<Simplex>& facets) {
  std::set<Simplex> all;
  for (Simplex f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    const std::size_t n = f.size();
    if (n == 0) continue;
    if (n > 20) throw std::invalid_argument("facet too large");
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) s.push_back(f[i]);
      all.insert(std::move(s));
    }
  }
  return SimplicialComplex(std::move(labels), std::vector<Simplex>(all.begin(), all.end()));
}

std::vector<std::string> SimplicialComplex::numbered_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::optional<int> SimplicialComplex::vertex(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

const std::vector<Simplex>& SimplicialComplex::simplices(int dim) const {
  static const std::vector<Simplex> none;
  if (dim < 0 || dim >= static_cast<int>(by_dim_.size())) return none;
  return by_dim_[static_cast<std::size_t>(dim)];
}

std::size_t SimplicialComplex::size() const {
  std::size_t n = 0;
  for (const auto& level : by_dim_) n += level.size();
  return n;
}

int SimplicialComplex::index_of(const Simplex& s) const {
  if (s.empty() || s.size() > lookup_.size()) return -1;
  const auto& m = lookup_[s.size() - 1];
  auto it = m.find(s);
  return it == m.end() ? -1 : it->second;
}

void SimplicialComplex::index() {
  lookup_.assign(by_dim_.size(), {});
  for (std::size_t d = 0; d < by_dim_.size(); ++d)
    for (std::size_t i = 0; i < by_dim_[d].size(); ++i)
      lookup_[d].emplace(by_dim_[d][i], static_cast<int>(i));
}

std::string SimplicialComplex::format(const Simplex& s) const {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    bool known = s[i] >= 0 && s[i] < vertex_count();
    out += known ? labels_[static_cast<std::size_t>(s[i])] : "?" + std::to_string(s[i]);
  }
  return out + "}";
}

void SimplicialComplex::validate() const {
  for (std::size_t d = 0; d < by_dim_.size(); ++d) {
    const auto& level = by_dim_[d];
    for (std::size_t i = 0; i < level.size(); ++i) {
      const Simplex& s = level[i];
      for (int v : s)
        if (v < 0 || v >= vertex_count())
          throw TopologyError(TopologyErrorKind::UnknownVertex, format(s));
      for (std::size_t j = 1; j < s.size(); ++j)
        if (s[j - 1] >= s[j])
          throw TopologyError(TopologyErrorKind::Ordering,
                              format(s) + " is not strictly increasing");
      if (i > 0 && level[i - 1] == s)
        throw TopologyError(TopologyErrorKind::Duplicate, format(s));
      if (d > 0)
        for (const auto& f : facets_of(s))
          if (!contains(f))
            throw TopologyError(TopologyErrorKind::FaceClosure,
                                "face " + format(f) + " of " + format(s) + " is missing");
    }
  }
}

std::vector<Simplex> facets_of(const Simplex& s) {
  std::vector<Simplex> out;
  if (s.size() < 2) return out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Simplex f;
    f.reserve(s.size() - 1);
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j != i) f.push_back(s[j]);
    out.push_back(std::move(f));
  }
  return out;
}

SimplicialPair SimplicialPair::absolute(SimplicialComplex c) {
  SimplicialComplex empty(c.labels(), {});
  return {std::move(c), std::move(empty)};
}

SimplicialComplex subcomplex(const SimplicialComplex& total, const std::vector<Simplex>& facets) {
  return SimplicialComplex::closure(total.labels(), facets);
}

void validate_pair(const SimplicialPair& p) {
  p.total.validate();
  p.sub.validate();
  if (p.sub.labels() != p.total.labels())
    throw TopologyError(TopologyErrorKind::Subcomplex,
                        "subcomplex does not share the vertex set of the total complex");
  for (int d = 0; d <= p.sub.dimension(); ++d)
    for (const auto& s : p.sub.simplices(d))
      if (!p.total.contains(s))
        throw TopologyError(TopologyErrorKind::Subcomplex,
                            p.sub.format(s) + " is not a simplex of the total complex");
}

long euler_characteristic(const SimplicialComplex& c) {
  long chi = 0;
  for (int d = 0; d <= c.dimension(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(c.count(d));
  return chi;
}

}  // namespace lefcon
