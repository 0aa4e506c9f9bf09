#include "lefcon/workspace.hpp"

#include "lefcon/control.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

namespace lefcon {

const char* to_string(ParseErrorKind k) {
  switch (k) {
    case ParseErrorKind::Syntax: return "syntax error";
    case ParseErrorKind::DanglingReference: return "dangling reference";
    case ParseErrorKind::DuplicateName: return "duplicate name";
    case ParseErrorKind::Invariant: return "invariant violation";
  }
  return "syntax error";
}

ParseError::ParseError(ParseErrorKind kind, int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                         to_string(kind) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

struct Token {
  std::string text;
  int line;
  int column;
  Ref ref() const { return {text, line, column}; }
};

std::vector<Token> tokenize(const std::string& line, int number) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#')
      ++i;
    out.push_back({line.substr(start, i - start), number, static_cast<int>(start) + 1});
  }
  return out;
}

[[noreturn]] void syntax(const Token& t, const std::string& msg) {
  throw ParseError(ParseErrorKind::Syntax, t.line, t.column, msg);
}

bool is_rational(const std::string& s) {
  try {
    parse_rational(s);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

const std::set<std::string> kReserved = {"complex", "pair",  "map",  "system", "orientation",
                                         "end",     "->",    "+",    "-",      "sub",
                                         "product", "boundary", "vertices", "facet"};

Ref name_token(const Token& t) {
  if (kReserved.count(t.text)) syntax(t, "'" + t.text + "' is reserved and cannot be a name");
  return t.ref();
}

std::vector<Ref> refs(const std::vector<Token>& toks, std::size_t from) {
  std::vector<Ref> out;
  for (std::size_t i = from; i < toks.size(); ++i) out.push_back(name_token(toks[i]));
  return out;
}

}  // namespace

WorkspaceDocument parse_document(const std::string& text) {
  WorkspaceDocument doc;
  enum class Block { None, Complex, Map } block = Block::None;
  Token opener{"", 0, 0};
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto toks = tokenize(line, number);
    if (toks.empty()) continue;
    const Token& head = toks[0];
    if (block == Block::Complex) {
      auto& c = doc.complexes.back();
      if (head.text == "end") {
        if (toks.size() != 1) syntax(toks[1], "unexpected token after 'end'");
        block = Block::None;
      } else if (head.text == "vertices") {
        for (auto& r : refs(toks, 1)) c.vertices.push_back(r);
      } else if (head.text == "facet") {
        if (toks.size() < 2) syntax(head, "facet needs at least one vertex");
        c.facets.push_back(refs(toks, 1));
      } else {
        syntax(head, "expected 'vertices', 'facet' or 'end' inside complex");
      }
      continue;
    }
    if (block == Block::Map) {
      auto& m = doc.maps.back();
      if (head.text == "end") {
        if (toks.size() != 1) syntax(toks[1], "unexpected token after 'end'");
        block = Block::None;
        continue;
      }
      if (toks.size() < 3 || toks[1].text != "->")
        syntax(toks.size() < 2 ? head : toks[1], "expected '<vertex> -> <image>'");
      ImageDecl img{name_token(head), {}};
      std::size_t i = 2;
      while (true) {
        std::size_t end = i;
        while (end < toks.size() && toks[end].text != "+") ++end;
        const std::size_t len = end - i;
        if (len == 1) {
          img.terms.push_back({Rational(1), name_token(toks[i])});
        } else if (len == 2) {
          if (!is_rational(toks[i].text)) syntax(toks[i], "expected a rational weight");
          img.terms.push_back({parse_rational(toks[i].text), name_token(toks[i + 1])});
        } else {
          syntax(len == 0 ? toks[std::min(i, toks.size() - 1)] : toks[i + 2],
                 "expected '[weight] vertex' terms separated by '+'");
        }
        if (end == toks.size()) break;
        if (end + 1 == toks.size()) syntax(toks[end], "dangling '+'");
        i = end + 1;
      }
      m.images.push_back(std::move(img));
      continue;
    }

    if (head.text == "complex") {
      if (toks.size() != 2) syntax(toks.size() < 2 ? head : toks[2], "expected 'complex <name>'");
      doc.complexes.push_back({name_token(toks[1]), {}, {}});
      doc.order.emplace_back(DeclKind::Complex, doc.complexes.size() - 1);
      block = Block::Complex;
      opener = head;
    } else if (head.text == "pair") {
      PairDecl p;
      if (toks.size() < 3) syntax(head, "expected 'pair <name> ...'");
      p.name = name_token(toks[1]);
      if (toks.size() == 3) {
        p.form = PairForm::Absolute;
        p.first = name_token(toks[2]);
      } else if (toks.size() == 4 && toks[2].text == "boundary") {
        p.form = PairForm::Boundary;
        p.first = name_token(toks[3]);
      } else if (toks.size() == 5 && toks[2].text == "product") {
        p.form = PairForm::Product;
        p.first = name_token(toks[3]);
        p.second = name_token(toks[4]);
      } else if (toks.size() == 5 && toks[3].text == "sub") {
        p.form = PairForm::Sub;
        p.first = name_token(toks[2]);
        p.second = name_token(toks[4]);
      } else {
        syntax(toks[2], "expected '<complex>', '<complex> sub <complex>', 'product <pair> <pair>' "
                        "or 'boundary <complex>'");
      }
      doc.pairs.push_back(p);
      doc.order.emplace_back(DeclKind::Pair, doc.pairs.size() - 1);
    } else if (head.text == "map") {
      if (toks.size() != 5 || toks[3].text != "->")
        syntax(toks.size() > 3 ? toks[3] : head, "expected 'map <name> <source> -> <target>'");
      doc.maps.push_back({name_token(toks[1]), name_token(toks[2]), name_token(toks[4]), {}});
      doc.order.emplace_back(DeclKind::Map, doc.maps.size() - 1);
      block = Block::Map;
      opener = head;
    } else if (head.text == "system") {
      if (toks.size() < 2) syntax(head, "expected 'system <name> ...'");
      SystemDecl s;
      s.name = name_token(toks[1]);
      std::set<std::string> seen;
      if ((toks.size() - 2) % 2 != 0) syntax(toks.back(), "system clauses come in key/value pairs");
      for (std::size_t i = 2; i + 1 < toks.size(); i += 2) {
        const auto& key = toks[i];
        if (!seen.insert(key.text).second) syntax(key, "repeated clause '" + key.text + "'");
        Ref value = name_token(toks[i + 1]);
        if (key.text == "state") s.state = value;
        else if (key.text == "input") s.input = value;
        else if (key.text == "map") s.map = value;
        else if (key.text == "source") s.source = value;
        else if (key.text == "identification") s.identification = value;
        else if (key.text == "orientation") s.orientation = value;
        else syntax(key, "unknown system clause '" + key.text + "'");
      }
      for (const char* req : {"state", "input", "map"})
        if (!seen.count(req)) syntax(head, std::string("system needs a '") + req + "' clause");
      doc.systems.push_back(s);
      doc.order.emplace_back(DeclKind::System, doc.systems.size() - 1);
    } else if (head.text == "orientation") {
      if (toks.size() < 5) syntax(head, "expected 'orientation <name> <pair> +|- <vertices>'");
      OrientationDecl o;
      o.name = name_token(toks[1]);
      o.pair = name_token(toks[2]);
      if (toks[3].text == "+") o.sign = 1;
      else if (toks[3].text == "-") o.sign = -1;
      else syntax(toks[3], "orientation sign must be '+' or '-'");
      o.simplex = refs(toks, 4);
      doc.orientations.push_back(o);
      doc.order.emplace_back(DeclKind::Orientation, doc.orientations.size() - 1);
    } else {
      syntax(head, "unknown declaration '" + head.text + "'");
    }
  }
  if (block != Block::None) syntax(opener, "block is not closed with 'end'");
  return doc;
}

namespace {

std::string join(const std::vector<Ref>& v) {
  std::string out;
  for (const auto& r : v) out += " " + r.name;
  return out;
}

}  // namespace

std::string serialize(const WorkspaceDocument& doc) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [kind, i] : doc.order) {
    if (!first && (kind == DeclKind::Complex || kind == DeclKind::Map)) out << "\n";
    first = false;
    switch (kind) {
      case DeclKind::Complex: {
        const auto& c = doc.complexes[i];
        out << "complex " << c.name.name << "\n";
        if (!c.vertices.empty()) out << "  vertices" << join(c.vertices) << "\n";
        for (const auto& f : c.facets) out << "  facet" << join(f) << "\n";
        out << "end\n";
        break;
      }
      case DeclKind::Pair: {
        const auto& p = doc.pairs[i];
        out << "pair " << p.name.name << " ";
        switch (p.form) {
          case PairForm::Absolute: out << p.first.name; break;
          case PairForm::Sub: out << p.first.name << " sub " << p.second.name; break;
          case PairForm::Product: out << "product " << p.first.name << " " << p.second.name; break;
          case PairForm::Boundary: out << "boundary " << p.first.name; break;
        }
        out << "\n";
        break;
      }
      case DeclKind::Map: {
        const auto& m = doc.maps[i];
        out << "map " << m.name.name << " " << m.source.name << " -> " << m.target.name << "\n";
        for (const auto& img : m.images) {
          out << "  " << img.vertex.name << " ->";
          if (img.terms.size() == 1 && img.terms[0].weight == 1) {
            out << " " << img.terms[0].vertex.name;
          } else {
            for (std::size_t t = 0; t < img.terms.size(); ++t)
              out << (t ? " + " : " ") << to_string(img.terms[t].weight) << " "
                  << img.terms[t].vertex.name;
          }
          out << "\n";
        }
        out << "end\n";
        break;
      }
      case DeclKind::System: {
        const auto& s = doc.systems[i];
        out << "system " << s.name.name << " state " << s.state.name << " input " << s.input.name
            << " map " << s.map.name;
        if (s.source) out << " source " << s.source->name;
        if (s.identification) out << " identification " << s.identification->name;
        if (s.orientation) out << " orientation " << s.orientation->name;
        out << "\n";
        break;
      }
      case DeclKind::Orientation: {
        const auto& o = doc.orientations[i];
        out << "orientation " << o.name.name << " " << o.pair.name << " "
            << (o.sign > 0 ? "+" : "-") << join(o.simplex) << "\n";
        break;
      }
    }
  }
  return out.str();
}

class Resolver {
 public:
  explicit Resolver(Workspace& ws) : ws_(ws), doc_(ws.doc_) {}

  void run() {
    index(doc_.complexes, complex_idx_);
    index(doc_.pairs, pair_idx_);
    index(doc_.maps, map_idx_);
    index(doc_.systems, system_idx_);
    index(doc_.orientations, orientation_idx_);
    for (const auto& [kind, i] : doc_.order) {
      switch (kind) {
        case DeclKind::Complex: complex(doc_.complexes[i].name); break;
        case DeclKind::Pair: pair(doc_.pairs[i].name); break;
        case DeclKind::Map: map(doc_.maps[i].name); break;
        case DeclKind::System: system(doc_.systems[i]); break;
        case DeclKind::Orientation: orientation(doc_.orientations[i]); break;
      }
    }
  }

 private:
  Workspace& ws_;
  const WorkspaceDocument& doc_;
  std::map<std::string, std::size_t> complex_idx_, pair_idx_, map_idx_, system_idx_,
      orientation_idx_;
  std::set<std::string> visiting_;

  template <class D>
  static void index(const std::vector<D>& decls, std::map<std::string, std::size_t>& idx) {
    for (std::size_t i = 0; i < decls.size(); ++i)
      if (!idx.emplace(decls[i].name.name, i).second)
        throw ParseError(ParseErrorKind::DuplicateName, decls[i].name.line, decls[i].name.column,
                         "'" + decls[i].name.name + "' is already declared");
  }

  [[noreturn]] static void dangling(const Ref& r, const std::string& what) {
    throw ParseError(ParseErrorKind::DanglingReference, r.line, r.column,
                     "'" + r.name + "' does not name " + what);
  }
  [[noreturn]] static void invariant(const Ref& r, const std::string& msg) {
    throw ParseError(ParseErrorKind::Invariant, r.line, r.column, msg);
  }

  template <class F>
  static auto guarded(const Ref& at, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const TopologyError& e) {
      invariant(at, e.what());
    } catch (const DimensionError& e) {
      invariant(at, e.what());
    }
  }

  static int vertex_of(const SimplicialComplex& c, const Ref& r) {
    auto v = c.vertex(r.name);
    if (!v) dangling(r, "a vertex here");
    return *v;
  }

  static Simplex simplex_of(const SimplicialComplex& c, const std::vector<Ref>& labels) {
    Simplex s;
    for (const auto& r : labels) s.push_back(vertex_of(c, r));
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      invariant(labels.front(), "repeated vertex in simplex");
    return s;
  }

  const SimplicialComplex& complex(const Ref& r) {
    if (auto it = ws_.complexes_.find(r.name); it != ws_.complexes_.end()) return it->second;
    auto idx = complex_idx_.find(r.name);
    if (idx == complex_idx_.end()) {
      if (pair_idx_.count(r.name)) return pair(r).total;
      dangling(r, "a complex");
    }
    const auto& d = doc_.complexes[idx->second];
    std::vector<std::string> labels;
    std::set<std::string> seen;
    for (const auto& v : d.vertices) {
      if (!seen.insert(v.name).second) invariant(v, "vertex '" + v.name + "' declared twice");
      labels.push_back(v.name);
    }
    SimplicialComplex shell(labels, {});
    std::vector<Simplex> facets;
    for (int v = 0; v < static_cast<int>(labels.size()); ++v) facets.push_back({v});
    for (const auto& f : d.facets) facets.push_back(simplex_of(shell, f));
    auto c = guarded(d.name, [&] {
      auto out = SimplicialComplex::closure(labels, facets);
      out.validate();
      return out;
    });
    return ws_.complexes_.emplace(r.name, std::move(c)).first->second;
  }

  const SimplicialPair& pair(const Ref& r) {
    if (auto it = ws_.pairs_.find(r.name); it != ws_.pairs_.end()) return it->second;
    auto idx = pair_idx_.find(r.name);
    if (idx == pair_idx_.end()) {
      if (complex_idx_.count(r.name)) {
        complex(r);
        return absolute_.emplace(r.name, SimplicialPair::absolute(complex(r))).first->second;
      }
      dangling(r, "a pair or complex");
    }
    if (!visiting_.insert(r.name).second) invariant(r, "pair '" + r.name + "' refers to itself");
    const auto& d = doc_.pairs[idx->second];
    SimplicialPair p;
    switch (d.form) {
      case PairForm::Absolute: p = SimplicialPair::absolute(complex(d.first)); break;
      case PairForm::Boundary:
        p = guarded(d.name, [&] { return fixtures::manifold_pair(complex(d.first)); });
        break;
      case PairForm::Product: {
        const auto& a = pair(d.first);
        const auto& b = pair(d.second);
        p = guarded(d.name, [&] { return product_pair(a, b).product; });
        break;
      }
      case PairForm::Sub: {
        const auto& total = complex(d.first);
        const auto& sub = complex(d.second);
        std::vector<Simplex> simplices;
        for (int k = 0; k <= sub.dimension(); ++k)
          for (const auto& s : sub.simplices(k)) {
            Simplex t;
            for (int v : s) {
              auto tv = total.vertex(sub.labels()[static_cast<std::size_t>(v)]);
              if (!tv)
                invariant(d.second, "vertex '" + sub.labels()[static_cast<std::size_t>(v)] +
                                        "' of the subcomplex is not a vertex of '" +
                                        d.first.name + "'");
              t.push_back(*tv);
            }
            std::sort(t.begin(), t.end());
            simplices.push_back(t);
          }
        std::sort(simplices.begin(), simplices.end(),
                  [](const Simplex& a, const Simplex& b) { return a.size() < b.size() || (a.size() == b.size() && a < b); });
        p = {total, SimplicialComplex(total.labels(), simplices)};
        guarded(d.name, [&] {
          validate_pair(p);
          return 0;
        });
        break;
      }
    }
    visiting_.erase(r.name);
    return ws_.pairs_.emplace(r.name, std::move(p)).first->second;
  }

  const ResolvedMap& map(const Ref& r) {
    if (auto it = ws_.maps_.find(r.name); it != ws_.maps_.end()) return it->second;
    auto idx = map_idx_.find(r.name);
    if (idx == map_idx_.end()) dangling(r, "a map");
    const auto& d = doc_.maps[idx->second];
    ResolvedMap m{pair(d.source), pair(d.target), {}, std::nullopt};
    const auto& src = m.source.total;
    const auto& tgt = m.target.total;
    std::vector<std::optional<Point>> images(static_cast<std::size_t>(src.vertex_count()));
    bool simplicial = true;
    for (const auto& img : d.images) {
      const int v = vertex_of(src, img.vertex);
      auto& slot = images[static_cast<std::size_t>(v)];
      if (slot) invariant(img.vertex, "vertex '" + img.vertex.name + "' is assigned twice");
      Point p;
      for (const auto& t : img.terms) {
        const int w = vertex_of(tgt, t.vertex);
        if (p.count(w)) invariant(t.vertex, "vertex '" + t.vertex.name + "' repeated in image");
        p[w] = t.weight;
      }
      simplicial = simplicial && p.size() == 1 && p.begin()->second == 1;
      slot = std::move(p);
    }
    m.geometry = PLMap{src, tgt, {}};
    for (int v = 0; v < src.vertex_count(); ++v) {
      if (!images[static_cast<std::size_t>(v)])
        invariant(d.name, "map '" + d.name.name + "' does not assign vertex '" +
                              src.labels()[static_cast<std::size_t>(v)] + "'");
      m.geometry.images.push_back(*images[static_cast<std::size_t>(v)]);
    }
    guarded(d.name, [&] {
      validate_pl_map(m.geometry);
      return 0;
    });
    if (simplicial) {
      SimplicialMap f{m.source, m.target, {}};
      for (const auto& p : m.geometry.images) f.vertex_map.push_back(p.begin()->first);
      guarded(d.name, [&] {
        validate_map(f);
        return 0;
      });
      m.simplicial = std::move(f);
    }
    return ws_.maps_.emplace(r.name, std::move(m)).first->second;
  }

  void orientation(const OrientationDecl& d) {
    const auto& p = pair(d.pair);
    Simplex s = simplex_of(p.total, d.simplex);
    ws_.orientations_.emplace(d.name.name, ResolvedOrientation{d.pair.name, {s, d.sign}});
  }

  void system(const SystemDecl& d) {
    fixtures::SystemSpec spec;
    spec.name = d.name.name;
    spec.state = pair(d.state);
    spec.source_state = d.source ? pair(*d.source) : spec.state;
    spec.input = complex(d.input);
    const auto& g = map(d.map);
    if (!g.simplicial) invariant(d.map, "system map '" + d.map.name + "' must be simplicial");
    spec.map = *g.simplicial;
    if (d.identification) spec.identification = map(*d.identification).geometry;
    std::optional<OrientationSeed> seed;
    if (d.orientation) {
      auto idx = orientation_idx_.find(d.orientation->name);
      if (idx == orientation_idx_.end()) dangling(*d.orientation, "an orientation");
      const auto& od = doc_.orientations[idx->second];
      if (!(pair(od.pair).total == spec.state.total))
        invariant(*d.orientation, "orientation '" + od.name.name + "' is not on the state");
      seed = OrientationSeed{simplex_of(spec.state.total, od.simplex), od.sign};
    }
    guarded(d.name, [&] {
      DiscreteSystem check(spec, seed);
      return 0;
    });
    ws_.systems_.emplace(d.name.name, ResolvedSystem{spec, seed});
  }

  std::map<std::string, SimplicialPair> absolute_;
};

Workspace Workspace::parse(const std::string& text) { return resolve(parse_document(text)); }

Workspace Workspace::resolve(WorkspaceDocument doc) {
  Workspace ws;
  ws.doc_ = std::move(doc);
  Resolver(ws).run();
  return ws;
}

SimplicialPair Workspace::pair(const std::string& name) const {
  if (auto it = pairs_.find(name); it != pairs_.end()) return it->second;
  if (auto it = complexes_.find(name); it != complexes_.end())
    return SimplicialPair::absolute(it->second);
  throw LookupError("no pair or complex named '" + name + "'");
}

const SimplicialComplex& Workspace::complex(const std::string& name) const {
  if (auto it = complexes_.find(name); it != complexes_.end()) return it->second;
  if (auto it = pairs_.find(name); it != pairs_.end()) return it->second.total;
  throw LookupError("no complex named '" + name + "'");
}

const ResolvedMap& Workspace::map(const std::string& name) const {
  if (auto it = maps_.find(name); it != maps_.end()) return it->second;
  throw LookupError("no map named '" + name + "'");
}

const ResolvedSystem& Workspace::system(const std::string& name) const {
  if (auto it = systems_.find(name); it != systems_.end()) return it->second;
  throw LookupError("no system named '" + name + "'");
}

const ResolvedOrientation& Workspace::orientation(const std::string& name) const {
  if (auto it = orientations_.find(name); it != orientations_.end()) return it->second;
  throw LookupError("no orientation named '" + name + "'");
}

}  // namespace lefcon
