#include "lefcon/commands.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include "lefcon/control.hpp"
#include "lefcon/lefschetz.hpp"

namespace lefcon {

using json = nlohmann::ordered_json;

namespace {

std::string q(const Rational& x) { return to_string(x); }

json rationals(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(q(x));
  return out;
}

json class_json(const HomologyClass& c) {
  return json{{"degree", c.degree}, {"coordinates", rationals(c.coords)}};
}

json simplex_json(const SimplicialComplex& c, const Simplex& s) {
  json out = json::array();
  for (int v : s) out.push_back(c.labels()[static_cast<std::size_t>(v)]);
  return out;
}

json point_json(const SimplicialComplex& c, const Point& p) {
  json out = json::object();
  for (const auto& [v, w] : p) out[c.labels()[static_cast<std::size_t>(v)]] = q(w);
  return out;
}

json witness_json(const PLMap& f, const Witness& w) {
  return json{{"simplex", simplex_json(f.source, w.simplex)},
              {"barycentric", rationals(w.barycentric)},
              {"image", point_json(f.target, w.image)}};
}

json verdict_json(const CoincidenceVerdict& v, const PLMap* geometry) {
  json evals = json::array();
  for (const auto& e : v.evaluations)
    evals.push_back(json{{"input", class_json(e.input)}, {"value", class_json(e.value)}});
  json out{{"criterion", v.criterion}, {"evaluations", evals}, {"nonzero", v.nonzero}};
  out["witness_class"] = v.witness_class ? class_json(*v.witness_class) : json(nullptr);
  out["oracle"] = to_string(v.oracle);
  if (v.witness && geometry) out["oracle_witness"] = witness_json(*geometry, *v.witness);
  return out;
}

int verdict_code(bool certified, bool violation) {
  if (violation) return kSoundnessViolation;
  return certified ? kCertified : kNotCertified;
}

const char* verdict_word(int code) {
  switch (code) {
    case kCertified: return "certified";
    case kNotCertified: return "not-certified";
    case kSoundnessViolation: return "soundness-violation";
    default: return "input-error";
  }
}

class Context {
 public:
  Context(const Workspace* ws, const std::string& command, const CommandOptions& o)
      : ws_(ws), o_(o) {
    report_["command"] = command;
    report_["inputs"] = json::object();
    if (!o.workspace.empty()) report_["inputs"]["workspace"] = o.workspace;
  }

  const Workspace& ws() const {
    if (!ws_) throw UsageError("this command needs --workspace");
    return *ws_;
  }

  std::string required(const std::string& flag) {
    auto it = o_.values.find(flag);
    if (it == o_.values.end() || it->second.empty()) throw UsageError("missing --" + flag);
    report_["inputs"][flag] = it->second;
    return it->second;
  }

  std::optional<std::string> optional(const std::string& flag) {
    auto it = o_.values.find(flag);
    if (it == o_.values.end()) return std::nullopt;
    report_["inputs"][flag] = it->second;
    return it->second;
  }

  int integer(const std::string& text, const std::string& flag) {
    try {
      std::size_t used = 0;
      long v = std::stol(text, &used);
      if (used != text.size() || v < 0 || v > 1000000) throw std::invalid_argument(text);
      return static_cast<int>(v);
    } catch (const std::exception&) {
      throw UsageError("--" + flag + " expects a non-negative integer, got '" + text + "'");
    }
  }

  bool oracle() {
    report_["inputs"]["oracle"] = o_.oracle;
    return o_.oracle;
  }

  const std::vector<std::string>& z() {
    if (!o_.z.empty()) report_["inputs"]["z"] = o_.z;
    return o_.z;
  }

  std::optional<OrientationSeed> seed(const std::string& flag, const SimplicialPair& p) {
    auto name = optional(flag);
    if (!name) return std::nullopt;
    const auto& o = ws().orientation(*name);
    if (!(ws().pair(o.pair).total == p.total))
      throw UsageError("orientation '" + *name + "' does not belong to this pair");
    return o.seed;
  }

  const SimplicialMap& simplicial(const std::string& name) {
    const auto& m = ws().map(name);
    if (!m.simplicial) throw UsageError("map '" + name + "' is not simplicial");
    return *m.simplicial;
  }

  CommandResult finish(json result, int code) {
    report_["result"] = std::move(result);
    report_["verdict"] = verdict_word(code);
    report_["exit_code"] = code;
    return {std::move(report_), code};
  }

  CommandResult computed(json result) {
    report_["result"] = std::move(result);
    report_["verdict"] = "computed";
    report_["exit_code"] = 0;
    return {std::move(report_), 0};
  }

 private:
  const Workspace* ws_;
  const CommandOptions& o_;
  json report_;
};

HomologyClass select_class(const std::string& spec, const PairHomology& h,
                           const std::optional<OrientedManifold>& oriented) {
  if (spec == "fundamental") {
    if (!oriented) throw UsageError("'fundamental' needs an oriented source");
    return oriented->fundamental_class();
  }
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("class selector must be 'k:j' or 'fundamental'");
  int k = 0;
  std::size_t j = 0;
  try {
    k = std::stoi(spec.substr(0, colon));
    j = static_cast<std::size_t>(std::stoul(spec.substr(colon + 1)));
  } catch (const std::exception&) {
    throw UsageError("malformed class selector '" + spec + "'");
  }
  if (k < 0 || j >= h.betti(k))
    throw UsageError("class selector '" + spec + "' is outside the homology basis");
  return h.basis_class(k, j);
}

std::optional<OrientedManifold> try_orient(const SimplicialPair& p,
                                           const std::optional<OrientationSeed>& seed) {
  try {
    return OrientedManifold::build(p, seed);
  } catch (const TopologyError&) {
    return std::nullopt;
  }
}

CommandResult betti(Context& c) {
  auto name = c.required("pair");
  PairHomology h(c.ws().pair(name));
  json b = json::array();
  for (auto x : h.betti_numbers()) b.push_back(x);
  return c.computed(json{{"dimension", h.top()}, {"betti", b},
                         {"euler_characteristic", h.euler_characteristic()}});
}

CommandResult euler(Context& c) {
  auto name = c.required("pair");
  PairHomology h(c.ws().pair(name));
  long counts = 0;
  for (int k = 0; k <= h.top(); ++k)
    counts += (k % 2 == 0 ? 1 : -1) * static_cast<long>(h.chains().rank(k));
  json result{{"euler_characteristic", counts}, {"from_homology", h.euler_characteristic()}};
  if (counts != h.euler_characteristic()) return c.finish(result, kSoundnessViolation);
  return c.computed(result);
}

CommandResult orient_cmd(Context& c) {
  auto name = c.required("pair");
  auto p = c.ws().pair(name);
  auto seed = c.seed("orientation", p);
  try {
    auto fc = orient(p, p.total.dimension(), seed);
    PairHomology rel(p);
    json cycle = json::array();
    for (std::size_t r = 0; r < fc.cycle.size(); ++r)
      cycle.push_back(json{{"simplex", simplex_json(p.total, rel.generator(fc.dimension, r))},
                           {"coefficient", q(fc.cycle[r])}});
    return c.finish(json{{"orientable", true},
                         {"dimension", fc.dimension},
                         {"seed", json{{"simplex", simplex_json(p.total, fc.seed.simplex)},
                                       {"sign", fc.seed.sign}}},
                         {"fundamental_cycle", cycle}},
                    kCertified);
  } catch (const TopologyError& e) {
    return c.finish(json{{"orientable", false}, {"error", to_string(e.kind())},
                         {"message", e.what()}},
                    kNotCertified);
  }
}

CommandResult degree_cmd(Context& c) {
  auto name = c.required("map");
  const auto& f = c.simplicial(name);
  auto src = OrientedManifold::build(f.source, c.seed("source-orientation", f.source));
  auto tgt = OrientedManifold::build(f.target, c.seed("target-orientation", f.target));
  return c.computed(json{{"degree", q(degree(f, src, tgt))}});
}

/// Degree-0 endomorphism f_* r_*^{-1} of H_*(M), r the identification (or none).
GradedEndomorphism self_endomorphism(const SimplicialMap& f, const std::optional<SimplicialMap>& r,
                                     const PairHomology& src, const PairHomology& tgt) {
  GradedEndomorphism h{0, {}};
  for (int k = 0; k <= tgt.top(); ++k) {
    Matrix fk = induced_homology_map(f.absolute(), src, tgt, k);
    if (r) {
      Matrix rk = induced_homology_map(r->absolute(), src, tgt, k);
      if (rk.rows() != rk.cols() || rank(rk) != rk.cols())
        throw TopologyError(TopologyErrorKind::PairMismatch,
                            "identification is not a homology isomorphism");
      fk = fk * *solve(rk, Matrix::identity(rk.rows()));
    } else if (!(f.source.total == f.target.total)) {
      throw TopologyError(TopologyErrorKind::PairMismatch,
                          "a self-map needs source = target or an --identification");
    }
    h.blocks.push_back(fk);
  }
  return h;
}

struct SelfMapData {
  const SimplicialMap* f;
  std::optional<SimplicialMap> r;
  PLMap reference;
};

SelfMapData self_map(Context& c) {
  auto name = c.required("map");
  SelfMapData d{&c.simplicial(name), std::nullopt, {}};
  auto ident = c.optional("identification");
  const auto& f = *d.f;
  if (ident) {
    const auto& e = c.ws().map(*ident);
    if (!(e.geometry.source == f.source.total) || !(e.geometry.target == f.target.total))
      throw UsageError("identification must share source and target with the map");
    d.r = simplicial_approximation(e.geometry, SimplicialPair::absolute(f.source.total),
                                   SimplicialPair::absolute(f.target.total));
    d.reference = e.geometry;
  } else {
    d.reference = PLMap::from(identity_map(SimplicialPair::absolute(f.source.total)));
  }
  return d;
}

CommandResult lefschetz_number_cmd(Context& c) {
  auto d = self_map(c);
  const bool run = c.oracle();
  PairHomology src(SimplicialPair::absolute(d.f->source.total));
  PairHomology tgt(SimplicialPair::absolute(d.f->target.total));
  auto h = self_endomorphism(*d.f, d.r, src, tgt);
  json traces = json::array();
  for (const auto& b : h.blocks) traces.push_back(q(trace(b)));
  Rational lambda = alternating_trace(h);
  json result{{"lefschetz_number", q(lambda)}, {"traces", traces}, {"nonzero", sgn(lambda) != 0}};
  bool violation = false;
  result["oracle"] = "skipped";
  if (run) {
    PLMap f = PLMap::from(d.f->absolute());
    auto w = coincidence_oracle(f, d.reference);
    result["oracle"] = w ? "found" : "not-found";
    if (w) result["oracle_witness"] = witness_json(f, *w);
    violation = sgn(lambda) != 0 && !w;
  }
  return c.finish(result, verdict_code(sgn(lambda) != 0, violation));
}

std::unique_ptr<CoincidenceProblem> coincidence_problem(Context& c,
                                                        std::optional<OrientedManifold>& target) {
  auto fname = c.required("f");
  auto gname = c.required("g");
  const auto& f = c.ws().map(fname);
  const auto& g = c.ws().map(gname);
  if (!(f.source.total == g.source.total) || !(f.target.total == g.target.total))
    throw UsageError("f and g must share source and target complexes");
  target.emplace(OrientedManifold::build(f.target, c.seed("target-orientation", f.target)));
  return std::make_unique<CoincidenceProblem>(f.source, *target, f.geometry, g.geometry);
}

CommandResult lefschetz_class_cmd(Context& c) {
  if (c.optional("map").has_value()) {
    auto d = self_map(c);
    PairHomology src(SimplicialPair::absolute(d.f->source.total));
    PairHomology tgt(SimplicialPair::absolute(d.f->target.total));
    auto h = self_endomorphism(*d.f, d.r, src, tgt);
    return c.computed(json{{"shift", 0},
                           {"class", class_json(lefschetz_class(h, tgt))},
                           {"alternating_trace", q(alternating_trace(h))}});
  }
  std::optional<OrientedManifold> target;
  auto problem = coincidence_problem(c, target);
  const auto& zs = c.z();
  if (zs.size() > 1) throw UsageError("lefschetz-class takes at most one --z");
  auto source = try_orient(problem->source_rel().pair(),
                           c.seed("source-orientation", problem->source_rel().pair()));
  HomologyClass z = select_class(zs.empty() ? "fundamental" : zs[0], problem->source_rel(), source);
  auto h = problem->endomorphism(z);
  json blocks = json::array();
  for (const auto& b : h.blocks) {
    json rows = json::array();
    for (std::size_t i = 0; i < b.rows(); ++i) rows.push_back(rationals(b.row(i)));
    blocks.push_back(rows);
  }
  return c.computed(json{{"z", class_json(z)},
                         {"shift", h.shift},
                         {"blocks", blocks},
                         {"class", class_json(lefschetz_class(h, target->abs))}});
}

CommandResult coincidence_cmd(Context& c) {
  std::optional<OrientedManifold> target;
  auto problem = coincidence_problem(c, target);
  const bool run = c.oracle();
  auto source = try_orient(problem->source_rel().pair(),
                           c.seed("source-orientation", problem->source_rel().pair()));
  std::vector<HomologyClass> zs;
  for (const auto& s : c.z()) zs.push_back(select_class(s, problem->source_rel(), source));
  auto v = problem->certificate(zs, run);
  PLMap f = c.ws().map(c.required("f")).geometry;
  json result = verdict_json(v, &f);
  if (source && source->dimension() == target->dimension() &&
      source->fundamental.pair == problem->source_rel().pair())
    result["classical_number"] = q(problem->classical_number(*source));
  return c.finish(result, verdict_code(v.nonzero, v.soundness_violation()));
}

DiscreteSystem load_system(Context& c) {
  auto name = c.required("system");
  const auto& s = c.ws().system(name);
  return DiscreteSystem(s.spec, s.seed);
}

CommandResult equilibrium_cmd(Context& c) {
  auto sys = load_system(c);
  const bool run = c.oracle();
  auto v = equilibrium_certificate(sys, run);
  PLMap g = sys.map_geometry();
  return c.finish(verdict_json(v, &g), verdict_code(v.nonzero, v.soundness_violation()));
}

CommandResult sphere_cmd(Context& c) {
  auto sys = load_system(c);
  auto s = sphere_criteria(sys);
  json degrees = json::array();
  for (const auto& d : s.slice_degrees) degrees.push_back(q(d));
  json tops = json::array();
  for (const auto& e : s.top_inputs)
    tops.push_back(json{{"input", class_json(e.input)}, {"value", class_json(e.value)}});
  return c.finish(json{{"dimension", s.dimension},
                       {"slice_degrees", degrees},
                       {"excluded_degree", q(Rational(s.dimension % 2 == 0 ? -1 : 1))},
                       {"condition_one", s.condition_one},
                       {"top_inputs", tops},
                       {"condition_two", s.condition_two}},
                  verdict_code(s.certified(), false));
}

CommandResult surjectivity_cmd(Context& c) {
  auto name = c.required("map");
  const auto& f = c.simplicial(name);
  const bool run = c.oracle();
  auto target = OrientedManifold::build(f.target, c.seed("orientation", f.target));
  auto v = surjectivity_certificate(f, target, run);
  json result = verdict_json(v, nullptr);
  result["onto"] = v.oracle == OracleOutcome::Skipped ? json(nullptr)
                                                       : json(v.oracle == OracleOutcome::Found);
  return c.finish(result, verdict_code(v.nonzero, v.soundness_violation()));
}

CommandResult controllability_cmd(Context& c) {
  auto sys = load_system(c);
  auto from = c.required("from");
  std::optional<int> steps;
  if (auto s = c.optional("max-steps")) steps = c.integer(*s, "max-steps");
  auto r = controllability_chain_search(sys, c.ws().complex(from), steps);
  json result{{"boundary_inputs", json::array()}};
  for (int d = 0; d <= r.boundary_inputs.dimension(); ++d)
    for (const auto& s : r.boundary_inputs.simplices(d))
      result["boundary_inputs"].push_back(simplex_json(r.boundary_inputs, s));
  result["max_steps"] = steps.value_or(sys.state().total.dimension());
  if (r.chain) {
    json inputs = json::array(), classes = json::array();
    for (const auto& v : r.chain->inputs) inputs.push_back(class_json(v));
    for (const auto& a : r.chain->classes) classes.push_back(class_json(a));
    json degrees = json::array({r.chain->a0.degree});
    for (const auto& a : r.chain->classes) degrees.push_back(a.degree);
    result["chain"] = json{{"a0", class_json(r.chain->a0)},
                           {"inputs", inputs},
                           {"classes", classes},
                           {"degrees", degrees},
                           {"steps", r.chain->steps()}};
    result["image_covers"] = *r.image_covers;
    result["composed_surjective"] =
        r.composed_surjective ? json(*r.composed_surjective) : json(nullptr);
  } else {
    result["chain"] = nullptr;
  }
  return c.finish(result, verdict_code(r.chain.has_value(), r.soundness_violation()));
}

CommandResult removability_cmd(Context& c) {
  auto dims_text = c.required("F-homology");
  std::vector<long> dims;
  std::stringstream ss(dims_text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw MalformedDeclaration("empty entry in homology declaration");
    dims.push_back(c.integer(item, "F-homology"));
  }
  const int n = c.integer(c.required("n"), "n");
  const int m = c.integer(c.required("m"), "m");
  std::optional<SimplicialMap> local;
  if (auto name = c.optional("local-map")) local = c.simplicial(*name);
  auto r = removability_precondition(dims, n, m, local);
  json result{{"clause", to_string(r.clause)}, {"star", r.star()}};
  result["local_zero"] = r.local_zero ? json(*r.local_zero) : json(nullptr);
  if (r.local_map) {
    json rows = json::array();
    for (std::size_t i = 0; i < r.local_map->rows(); ++i) rows.push_back(rationals(r.local_map->row(i)));
    result["local_map"] = rows;
  }
  result["conclusion"] = r.conclusion;
  return c.finish(result, verdict_code(local ? r.conclusion : r.star(), false));
}

CommandResult reachability_cmd(Context& c) {
  auto sys = load_system(c);
  const int steps = c.integer(c.required("steps"), "steps");
  auto reach = reachability_oracle(sys, steps);
  const auto& labels = sys.state().total.labels();
  json rel = json::object();
  bool all = true;
  for (std::size_t x = 0; x < reach.size(); ++x) {
    json row = json::array();
    for (std::size_t y = 0; y < reach.size(); ++y) {
      if (reach[x][y]) row.push_back(labels[y]);
      all = all && reach[x][y];
    }
    rel[labels[x]] = row;
  }
  return c.finish(json{{"steps", steps}, {"reachable", rel}, {"all_pairs", all}},
                  verdict_code(all, false));
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "betti",       "euler",        "orient",          "degree",        "lefschetz-number",
      "lefschetz-class", "coincidence", "equilibrium", "sphere-check", "surjectivity",
      "controllability", "removability", "reachability"};
  return names;
}

CommandResult run_command(const Workspace* ws, const std::string& command,
                          const CommandOptions& options) {
  Context c(ws, command, options);
  if (command == "betti") return betti(c);
  if (command == "euler") return euler(c);
  if (command == "orient") return orient_cmd(c);
  if (command == "degree") return degree_cmd(c);
  if (command == "lefschetz-number") return lefschetz_number_cmd(c);
  if (command == "lefschetz-class") return lefschetz_class_cmd(c);
  if (command == "coincidence") return coincidence_cmd(c);
  if (command == "equilibrium") return equilibrium_cmd(c);
  if (command == "sphere-check") return sphere_cmd(c);
  if (command == "surjectivity") return surjectivity_cmd(c);
  if (command == "controllability") return controllability_cmd(c);
  if (command == "removability") return removability_cmd(c);
  if (command == "reachability") return reachability_cmd(c);
  throw UsageError("unknown command '" + command + "'");
}

std::string render_json(const CommandResult& r) { return r.report.dump(2) + "\n"; }

std::string render_text(const CommandResult& r) {
  std::ostringstream out;
  out << r.report["command"].get<std::string>() << ": " << r.report["verdict"].get<std::string>()
      << "\n";
  for (const auto& [key, value] : r.report["result"].items())
    out << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
        << "\n";
  return out.str();
}

}  // namespace lefcon
