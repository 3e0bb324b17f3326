#include "remo/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "remo/errors.hpp"
#include "remo/io.hpp"
#include "remo/random.hpp"

namespace remo {

namespace {

struct Input {
  BuildingSet building;
  std::optional<Graph> graph;
};

struct Report {
  Json result = Json::object();
  Json certificates = Json::array();
  int status = kExitPositive;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Input load(const RunConfig& config) {
  if (config.input.empty()) throw Error(ErrorCode::InvalidArgument, "missing input file");
  const std::string text = read_file(config.input);
  if (config.graph) {
    Graph g = parse_graph(text);
    BuildingSet b = graphical_building_set(g);
    return {std::move(b), std::move(g)};
  }
  return {parse_building_set(text), std::nullopt};
}

SkewParams gamma_of(const RunConfig& config) {
  return SkewParams(config.gamma ? parse_rational(*config.gamma) : Rational(3));
}

std::string nested_text(const GroundSet& ground, const NestedSet& n) {
  std::string out = "{";
  for (std::size_t i = 0; i < n.members().size(); ++i) {
    if (i) out += ",";
    out += ground.format(n.members()[i]);
  }
  return out + "}";
}

Json pair_json(const GroundSet& ground, const std::optional<BlockPair>& pair) {
  if (!pair) return nullptr;
  return Json::array({block_to_json(ground, pair->first), block_to_json(ground, pair->second)});
}

Json vertices_json(const GroundSet& ground, const std::vector<TreeVertex>& vertices) {
  Json out = Json::array();
  for (const auto& v : vertices) {
    out.push_back(Json{{"nested", nested_to_json(ground, v.nested)["nested"]},
                       {"tree", tree_to_json(ground, v.tree)},
                       {"point", point_to_json(v.point)}});
  }
  return out;
}

void fill_realization(Report& r, const GroundSet& ground, const Realization& real) {
  r.result["realizable"] = real.realizable;
  r.result["maximal_nested_sets"] = real.vertices.size();
  r.result["flips_checked"] = real.flips_checked;
  if (real.realizable) {
    r.result["vertices"] = vertices_json(ground, real.vertices);
  } else {
    for (const auto& c : real.failures) r.certificates.push_back(flip_certificate_to_json(ground, c));
    r.status = kExitNegative;
  }
}

Report cmd_validate(const Input& in) {
  Report r;
  r.result["valid"] = true;
  r.result["ground"] = in.building.ground().names();
  r.result["blocks"] = in.building.blocks().size();
  return r;
}

Report cmd_analyze(const Input& in) {
  const BuildingSet& b = in.building;
  Report r;
  r.result["ground"] = b.ground().names();
  r.result["blocks"] = b.blocks().size();
  r.result["connected"] = true;
  r.result["intersection_closed"] = b.closed_under_intersection();
  r.result["intersection_witness"] = pair_json(b.ground(), b.intersection_witness());
  const auto exchange = exchangeable_closure_holds(b);
  r.result["exchangeable_closure"] = exchange.holds;
  r.result["exchangeable_witness"] = pair_json(b.ground(), exchange.witness);
  if (in.graph) r.result["chordful"] = is_chordful(*in.graph);
  if (b.n() > kMaxEnumerationGround) {
    r.result["realizable"] = nullptr;
    return r;
  }
  const Realization real = is_removahedron_realizable(b);
  r.result["realizable"] = real.realizable;
  if (!real.realizable) r.certificates.push_back(flip_certificate_to_json(b.ground(), real.failures.front()));
  return r;
}

Report cmd_nested(const Input& in, const RunConfig& config) {
  const BuildingSet& b = in.building;
  Report r;
  const auto sets = nested_complex(b, config.maximal);
  r.result["maximal_only"] = config.maximal;
  r.result["count"] = sets.size();
  Json list = Json::array();
  for (const auto& n : sets) list.push_back(nested_text(b.ground(), n));
  r.result["nested_sets"] = std::move(list);
  return r;
}

Report cmd_realize(const Input& in, const RunConfig& config) {
  Report r;
  fill_realization(r, in.building.ground(),
                   is_removahedron_realizable(in.building, {.all_certificates = config.certificates}));
  return r;
}

Report cmd_skew(const Input& in, const RunConfig& config) {
  const SkewParams params = gamma_of(config);
  Report r;
  r.result["gamma"] = to_string(params.gamma());
  fill_realization(r, in.building.ground(),
                   skew_realization(in.building, params, {.all_certificates = config.certificates}));
  return r;
}

Report cmd_decompose(const Input& in) {
  const BuildingSet& b = in.building;
  const MinkowskiWeights w = canonical_weights(b);
  const DeformationRHS z = weights_to_rhs(w);
  Report r;
  r.result["weights"] = weights_to_json(w)["weights"];
  r.result["expression"] = minkowski_expression(w);
  Json rhs = Json::array();
  for (Block block : b.blocks()) {
    rhs.push_back(Json{{"block", block_to_json(b.ground(), block)}, {"z", to_string(z[block])}});
  }
  r.result["block_rhs"] = std::move(rhs);
  return r;
}

struct CheckList {
  Json entries = Json::array();
  bool all_passed = true;

  void add(const std::string& name, bool passed, const std::string& detail = {}) {
    Json e{{"check", name}, {"passed", passed}};
    if (!detail.empty()) e["detail"] = detail;
    entries.push_back(std::move(e));
    all_passed = all_passed && passed;
  }
};

Report cmd_verify_instance(const Input& in, const RunConfig& config) {
  const BuildingSet& b = in.building;
  if (b.n() > kMaxOracleGround) {
    throw Error(ErrorCode::GroundTooLarge, "verify needs at most " + std::to_string(kMaxOracleGround) + " elements");
  }
  CheckList checks;
  const Realization real = is_removahedron_realizable(b, {.all_certificates = true});

  bool subtree = true;
  for (const auto& v : real.vertices) {
    for (int s = 0; s < b.n(); ++s) {
      const Block d = v.tree.descendants_of(s);
      subtree = subtree && v.point.sum_over(d) == pairs_with_repetition(d.size());
    }
  }
  checks.add("subtree_identity", subtree);

  const FlipGraph graph = flip_graph(b);
  bool symmetric = true;
  for (const auto& e : graph.edges) {
    const BTree t = btree_from_nested(b, graph.maximal[e.from]);
    const BTree u = btree_from_nested(b, graph.maximal[e.to]);
    symmetric = symmetric && delta(t, u) == delta(u, t);
  }
  checks.add("delta_cross_check_and_symmetry", symmetric, std::to_string(graph.edges.size()) + " flips");

  const HPolytope remo = removahedron_hrep(b);
  const VertexSet vs = enumerate_vertices(remo);
  const FanCheck fan = normal_fan_matches(b, vs);
  checks.add("oracle_agrees_with_flip_criterion", fan.matches == real.realizable,
             fan.matches ? "normal fan matches" : fan.reason);
  if (real.realizable) {
    std::vector<RationalPoint> points;
    for (const auto& v : real.vertices) points.push_back(v.point);
    std::sort(points.begin(), points.end());
    checks.add("oracle_vertices_equal_tree_points", points == vs.vertices);
  }
  if (b.closed_under_intersection()) {
    const HPolytope defo = deformation_hrep(weights_to_rhs(canonical_weights(b)));
    checks.add("minkowski_equals_removahedron", polytopes_equal(remo, defo));
  }

  const SkewParams params = gamma_of(config);
  const Realization skew = skew_realization(b, params);
  checks.add("skew_delta_positive", skew.realizable, "gamma " + to_string(params.gamma()));
  checks.add("skew_normal_fan", normal_fan_matches(b, skew_removahedron_hrep(b, params)).matches);

  Report r;
  r.result["realizable"] = real.realizable;
  r.result["checks"] = std::move(checks.entries);
  r.result["consistent"] = checks.all_passed;
  if (!real.realizable) {
    for (const auto& c : real.failures) {
      r.certificates.push_back(flip_certificate_to_json(b.ground(), c));
      if (!config.certificates) break;
    }
  }
  r.status = !checks.all_passed ? kExitInconsistent : real.realizable ? kExitPositive : kExitNegative;
  return r;
}

// Chordful, intersection-closed and realizable must coincide on every graph.
Report cmd_verify_random(const RunConfig& config) {
  Rng rng(*config.seed);
  std::uniform_int_distribution<int> size(3, 7);
  std::uniform_real_distribution<double> density(0.1, 0.8);
  int chordful_count = 0;
  Json discrepancies = Json::array();
  for (int i = 0; i < config.count; ++i) {
    const Graph g = random_connected_graph(rng, size(rng), density(rng));
    const BuildingSet b = graphical_building_set(g);
    const bool chordful = is_chordful(g);
    const bool closed = b.closed_under_intersection();
    const bool realizable = is_removahedron_realizable(b).realizable;
    chordful_count += chordful;
    if (chordful != closed || closed != realizable) {
      Json edges = Json::array();
      for (auto [u, v] : g.edges()) edges.push_back(Json::array({g.vertices().name(u), g.vertices().name(v)}));
      discrepancies.push_back(Json{{"vertices", g.n()},
                                   {"edges", std::move(edges)},
                                   {"chordful", chordful},
                                   {"intersection_closed", closed},
                                   {"realizable", realizable}});
    }
  }
  Report r;
  r.result["seed"] = *config.seed;
  r.result["graphs"] = config.count;
  r.result["chordful"] = chordful_count;
  r.result["discrepancies"] = discrepancies.size();
  r.certificates = std::move(discrepancies);
  r.status = r.certificates.empty() ? kExitPositive : kExitInconsistent;
  return r;
}

Json export_json(const Input& in, const RunConfig& config) {
  const BuildingSet& b = in.building;
  const bool skew = config.gamma.has_value();
  const HPolytope p = skew ? skew_removahedron_hrep(b, gamma_of(config)) : removahedron_hrep(b);
  if (config.format != "vrep") return hrep_to_json(p);
  const VertexSet vs = enumerate_vertices(p);
  std::vector<TreeVertex> trees;
  if (b.n() <= kMaxEnumerationGround) {
    trees = skew ? skew_realization(b, gamma_of(config)).vertices : is_removahedron_realizable(b).vertices;
  }
  return vrep_to_json(b.ground(), vs, trees);
}

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

bool is_flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& e : j) {
    if (e.is_object() || (e.is_array() && !is_flat(e))) return false;
  }
  return true;
}

std::string flat_text(const Json& j) {
  if (!j.is_array()) return scalar_text(j);
  std::string out = "[";
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i) out += ", ";
    out += flat_text(j[i]);
  }
  return out + "]";
}

// Indented "key: value" rendering of a JSON report.
void render_text(std::ostream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_flat(value)) {
        out << pad << key << ": " << flat_text(value) << '\n';
      } else {
        out << pad << key << ":\n";
        render_text(out, value, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (is_flat(e)) {
        out << pad << "- " << flat_text(e) << '\n';
      } else {
        // First line of the nested block shares the "- " marker.
        std::ostringstream nested;
        render_text(nested, e, indent + 2);
        std::string text = nested.str();
        text.replace(0, pad.size() + 2, pad + "- ");
        out << text;
      }
    }
  } else {
    out << pad << scalar_text(j) << '\n';
  }
}

Report dispatch(const RunConfig& config) {
  const std::string& c = config.command;
  if (c == "verify" && config.input.empty() && config.seed) return cmd_verify_random(config);
  const Input in = load(config);
  if (c == "validate") return cmd_validate(in);
  if (c == "analyze") return cmd_analyze(in);
  if (c == "nested") return cmd_nested(in, config);
  if (c == "realize") return cmd_realize(in, config);
  if (c == "skew") return cmd_skew(in, config);
  if (c == "decompose") return cmd_decompose(in);
  if (c == "verify") return cmd_verify_instance(in, config);
  if (c == "export") {
    Report r;
    r.result = export_json(in, config);
    return r;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown command '" + c + "'");
}

void emit(std::ostream& out, const RunConfig& config, const Report& r) {
  if (config.format == "json") {
    const Json envelope{{"command", config.command}, {"result", r.result}, {"certificates", r.certificates}};
    out << envelope.dump(2) << '\n';
  } else if (config.command == "export") {
    out << r.result.dump(2) << '\n';
  } else {
    render_text(out, r.result, 0);
    if (!r.certificates.empty()) {
      out << "certificates:\n";
      render_text(out, r.certificates, 2);
    }
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.gamma) static_cast<void>(gamma_of(config));
    const Report r = dispatch(config);
    emit(out, config, r);
    return r.status;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (config.format == "json") {
      Json witness = Json::array();
      for (Block b : e.witness()) witness.push_back(b.indices());
      const Json envelope{{"command", config.command},
                          {"error", {{"code", to_string(e.code())}, {"message", e.what()}, {"witness", witness}}}};
      out << envelope.dump(2) << '\n';
    }
    return e.is_input_error() ? kExitInputError : kExitInconsistent;
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Removahedron realizability, Minkowski decompositions and exact polytope checks"};
  RunConfig config;
  std::uint64_t seed = 0;
  app.add_option("command", config.command, "validate | analyze | nested | realize | skew | decompose | verify | export")
      ->required()
      ->check(CLI::IsMember({"validate", "analyze", "nested", "realize", "skew", "decompose", "verify", "export"}));
  app.add_option("input", config.input, "building-set JSON file, or edge list with --graph");
  app.add_flag("--graph", config.graph, "read an edge list and use its graphical building set");
  app.add_flag("--maximal", config.maximal, "nested: list maximal nested sets only");
  auto* gamma = app.add_option("--gamma", "skew parameter P/Q, greater than 2 (default 3)");
  app.add_option("--format", config.format, "text | json | hrep | vrep")
      ->check(CLI::IsMember({"text", "json", "hrep", "vrep"}));
  app.add_flag("--certificates", config.certificates, "list every failing flip");
  auto* seed_opt = app.add_option("--seed", seed, "verify without input: seed of the random graph suite");
  app.add_option("--count", config.count, "verify without input: number of random graphs")
      ->check(CLI::PositiveNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitPositive : kExitInputError;
  }
  if (*gamma) config.gamma = gamma->as<std::string>();
  if (*seed_opt) config.seed = seed;
  return run(config, out, err);
}

}  // namespace remo
