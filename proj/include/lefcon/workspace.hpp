#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lefcon/duality.hpp"
#include "lefcon/fixtures.hpp"
#include "lefcon/maps.hpp"

namespace lefcon {

enum class ParseErrorKind { Syntax, DanglingReference, DuplicateName, Invariant };
const char* to_string(ParseErrorKind k);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, int line, int column, const std::string& message);
  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  ParseErrorKind kind_;
  int line_, column_;
  std::string message_;
};

/// A name as written in the source; positions are ignored by ==.
struct Ref {
  std::string name;
  int line = 0;
  int column = 0;
  bool operator==(const Ref& o) const { return name == o.name; }
};

struct ComplexDecl {
  Ref name;
  std::vector<Ref> vertices;
  std::vector<std::vector<Ref>> facets;
  bool operator==(const ComplexDecl&) const = default;
};

enum class PairForm { Absolute, Sub, Product, Boundary };

/// pair N C | pair N C sub D | pair N product P Q | pair N boundary C
struct PairDecl {
  Ref name;
  PairForm form = PairForm::Absolute;
  Ref first;
  Ref second;
  bool operator==(const PairDecl&) const = default;
};

struct Term {
  Rational weight;
  Ref vertex;
  bool operator==(const Term&) const = default;
};

struct ImageDecl {
  Ref vertex;
  std::vector<Term> terms;
  bool operator==(const ImageDecl&) const = default;
};

struct MapDecl {
  Ref name;
  Ref source;
  Ref target;
  std::vector<ImageDecl> images;
  bool operator==(const MapDecl&) const = default;
};

struct SystemDecl {
  Ref name;
  Ref state;
  Ref input;
  Ref map;
  std::optional<Ref> source;
  std::optional<Ref> identification;
  std::optional<Ref> orientation;
  bool operator==(const SystemDecl&) const = default;
};

struct OrientationDecl {
  Ref name;
  Ref pair;
  int sign = 1;
  std::vector<Ref> simplex;
  bool operator==(const OrientationDecl&) const = default;
};

enum class DeclKind { Complex, Pair, Map, System, Orientation };

struct WorkspaceDocument {
  std::vector<ComplexDecl> complexes;
  std::vector<PairDecl> pairs;
  std::vector<MapDecl> maps;
  std::vector<SystemDecl> systems;
  std::vector<OrientationDecl> orientations;
  /// Declaration order, for serialization.
  std::vector<std::pair<DeclKind, std::size_t>> order;
  bool operator==(const WorkspaceDocument&) const = default;
};

/// Syntax only; throws ParseError with 1-based line and column.
WorkspaceDocument parse_document(const std::string& text);
std::string serialize(const WorkspaceDocument& doc);

/// Unknown name or wrong kind of object asked for by a command.
class LookupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ResolvedMap {
  SimplicialPair source;
  SimplicialPair target;
  PLMap geometry;
  std::optional<SimplicialMap> simplicial;
};

struct ResolvedSystem {
  fixtures::SystemSpec spec;
  std::optional<OrientationSeed> seed;
};

struct ResolvedOrientation {
  std::string pair;
  OrientationSeed seed;
};

/// A parsed and fully resolved workspace: every reference checked, every
/// object built and validated.
class Workspace {
 public:
  /// Throws ParseError (syntax, dangling reference, duplicate name, invariant).
  static Workspace parse(const std::string& text);
  static Workspace resolve(WorkspaceDocument doc);

  const WorkspaceDocument& document() const { return doc_; }

  /// A declared pair, or a declared complex read as the absolute pair.
  SimplicialPair pair(const std::string& name) const;
  /// A declared complex, or the total complex of a declared pair.
  const SimplicialComplex& complex(const std::string& name) const;
  const ResolvedMap& map(const std::string& name) const;
  const ResolvedSystem& system(const std::string& name) const;
  const ResolvedOrientation& orientation(const std::string& name) const;

  const std::map<std::string, SimplicialComplex>& complexes() const { return complexes_; }
  const std::map<std::string, SimplicialPair>& pairs() const { return pairs_; }
  const std::map<std::string, ResolvedMap>& maps() const { return maps_; }
  const std::map<std::string, ResolvedSystem>& systems() const { return systems_; }

 private:
  WorkspaceDocument doc_;
  std::map<std::string, SimplicialComplex> complexes_;
  std::map<std::string, SimplicialPair> pairs_;
  std::map<std::string, ResolvedMap> maps_;
  std::map<std::string, ResolvedSystem> systems_;
  std::map<std::string, ResolvedOrientation> orientations_;
  friend class Resolver;
};

}  // namespace lefcon
