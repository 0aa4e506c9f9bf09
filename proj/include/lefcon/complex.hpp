#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lefcon {

/// Vertex indices in strictly increasing order.
using Simplex = std::vector<int>;

enum class TopologyErrorKind {
  FaceClosure,
  Subcomplex,
  Ordering,
  Duplicate,
  UnknownVertex,
  NotSimplicial,
  NotMapOfPairs,
  NonOrientable,
  NonManifold,
  Disconnected,
  Orientation,
  PairMismatch,
};

const char* to_string(TopologyErrorKind kind);

class TopologyError : public std::runtime_error {
 public:
  TopologyError(TopologyErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  TopologyErrorKind kind() const { return kind_; }

 private:
  TopologyErrorKind kind_;
};

/// A finite simplicial complex over a totally ordered vertex set. Vertex i
/// carries labels()[i]; the order of vertices is the order of indices.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Stores exactly the given simplices (no closure). Tuples must already be
  /// sorted; use validate() to check the invariants.
  SimplicialComplex(std::vector<std::string> labels, std::vector<Simplex> simplices);

  /// Builds the complex generated by `facets`: every face of every facet is
  /// added. Facet tuples may be given in any order.
  static SimplicialComplex closure(std::vector<std::string> labels,
                                   const std::vector<Simplex>& facets);

  /// Labels "0", "1", ..., "n-1".
  static std::vector<std::string> numbered_labels(int n);

  const std::vector<std::string>& labels() const { return labels_; }
  int vertex_count() const { return static_cast<int>(labels_.size()); }
  std::optional<int> vertex(const std::string& label) const;

  /// Highest simplex dimension, -1 for the empty complex.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  const std::vector<Simplex>& simplices(int dim) const;
  std::size_t count(int dim) const { return simplices(dim).size(); }
  std::size_t size() const;

  /// Position of `s` within simplices(s.size()-1), or -1.
  int index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s) >= 0; }

  /// Throws TopologyError (Ordering, Duplicate, FaceClosure, UnknownVertex).
  void validate() const;

  std::string format(const Simplex& s) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.labels_ == b.labels_ && a.by_dim_ == b.by_dim_;
  }

 private:
  void index();

  std::vector<std::string> labels_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::map<Simplex, int>> lookup_;
};

/// The faces of `s` obtained by deleting one vertex, in deletion order
/// (face i omits s[i]).
std::vector<Simplex> facets_of(const Simplex& s);

/// A complex with a distinguished subcomplex sharing its vertex indexing.
struct SimplicialPair {
  SimplicialComplex total;
  SimplicialComplex sub;

  /// (c, empty)
  static SimplicialPair absolute(SimplicialComplex c);

  bool in_sub(const Simplex& s) const { return sub.contains(s); }

  friend bool operator==(const SimplicialPair&, const SimplicialPair&) = default;
};

/// Builds the subcomplex of `total` consisting of the given simplices and all
/// their faces, indexed like `total`.
SimplicialComplex subcomplex(const SimplicialComplex& total, const std::vector<Simplex>& facets);

/// Throws TopologyError (FaceClosure, Subcomplex, Ordering, ...) if any
/// invariant of the pair fails.
void validate_pair(const SimplicialPair& p);

/// Alternating simplex count.
long euler_characteristic(const SimplicialComplex& c);

}  // namespace lefcon
