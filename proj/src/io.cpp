#include "remo/io.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "remo/errors.hpp"

namespace remo {

namespace {

std::string line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return std::to_string(line) + ":" + std::to_string(column);
}

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, "at " + where + ": " + what);
}

std::vector<std::string> string_array(const Json& node, const std::string& where) {
  if (!node.is_array()) schema_error(where, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    if (!node[i].is_string()) schema_error(where + "/" + std::to_string(i), "expected a string");
    out.push_back(node[i].get<std::string>());
  }
  return out;
}

}  // namespace

BuildingSet parse_building_set(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    throw Error(ErrorCode::ParseError, "at " + line_column(text, offset) + ": malformed JSON");
  }
  if (!doc.is_object()) schema_error("/", "expected an object");
  if (!doc.contains("ground")) schema_error("/ground", "missing");
  if (!doc.contains("blocks")) schema_error("/blocks", "missing");
  GroundSet ground(string_array(doc["ground"], "/ground"));
  const Json& blocks_node = doc["blocks"];
  if (!blocks_node.is_array()) schema_error("/blocks", "expected an array of blocks");
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < blocks_node.size(); ++i) {
    const std::string where = "/blocks/" + std::to_string(i);
    const auto names = string_array(blocks_node[i], where);
    for (std::size_t k = 0; k < names.size(); ++k) {
      if (!ground.has(names[k])) schema_error(where + "/" + std::to_string(k), "unknown element '" + names[k] + "'");
    }
    blocks.push_back(ground.block_of(names));
  }
  return make_building_set(std::move(ground), std::move(blocks));
}

Graph parse_graph(std::string_view text) {
  struct Token {
    std::string value;
    std::size_t column;
  };
  std::vector<std::pair<std::size_t, std::vector<Token>>> lines;
  std::size_t line_no = 0, start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    std::vector<Token> tokens;
    for (std::size_t i = 0; i < line.size();) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      tokens.push_back(Token{std::string(line.substr(i, j - i)), i + 1});
      i = j;
    }
    if (!tokens.empty()) lines.emplace_back(line_no, std::move(tokens));
    start = end + 1;
  }
  if (lines.empty()) throw Error(ErrorCode::ParseError, "at 1:1: missing vertex line");

  std::vector<std::string> names;
  for (const auto& t : lines.front().second) names.push_back(t.value);
  const auto position = [](std::size_t line, std::size_t column) {
    return std::to_string(line) + ":" + std::to_string(column);
  };
  std::optional<GroundSet> vertices;
  try {
    vertices.emplace(names);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, "at " + position(lines.front().first, 1) + ": " + e.what());
  }

  std::vector<std::pair<int, int>> edges;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& [number, tokens] = lines[k];
    if (tokens.size() != 2) {
      const std::size_t column = tokens.size() > 2 ? tokens[2].column : tokens.back().column;
      throw Error(ErrorCode::ParseError, "at " + position(number, column) + ": expected exactly two vertices");
    }
    int ends[2];
    for (int e = 0; e < 2; ++e) {
      if (!vertices->has(tokens[static_cast<std::size_t>(e)].value)) {
        throw Error(ErrorCode::ParseError, "at " + position(number, tokens[static_cast<std::size_t>(e)].column) +
                                               ": unknown vertex '" + tokens[static_cast<std::size_t>(e)].value + "'");
      }
      ends[e] = vertices->index_of(tokens[static_cast<std::size_t>(e)].value);
    }
    if (ends[0] == ends[1]) {
      throw Error(ErrorCode::ParseError, "at " + position(number, tokens[1].column) + ": self-loop");
    }
    edges.emplace_back(ends[0], ends[1]);
  }
  return Graph(std::move(*vertices), edges);
}

Json block_to_json(const GroundSet& ground, Block b) { return Json(ground.names_of(b)); }

Json building_set_to_json(const BuildingSet& b) {
  Json blocks = Json::array();
  for (Block block : b.blocks()) blocks.push_back(block_to_json(b.ground(), block));
  return Json{{"ground", b.ground().names()}, {"blocks", std::move(blocks)}};
}

Json nested_to_json(const GroundSet& ground, const NestedSet& n) {
  Json members = Json::array();
  for (Block m : n.members()) members.push_back(block_to_json(ground, m));
  return Json{{"nested", std::move(members)}};
}

namespace {

Json node_to_json(const GroundSet& ground, const BTree& t, int node) {
  Json children = Json::array();
  for (int c : t.node(node).children) children.push_back(node_to_json(ground, t, c));
  return Json{{"label", ground.names_of(t.node(node).label)}, {"children", std::move(children)}};
}

}  // namespace

Json tree_to_json(const GroundSet& ground, const BTree& t) { return node_to_json(ground, t, t.root()); }

Json point_to_json(const RationalPoint& p) {
  Json out = Json::array();
  for (const auto& c : p.coords()) out.push_back(to_string(c));
  return out;
}

Json hrep_to_json(const HPolytope& p) {
  Json constraints = Json::array();
  for (const auto& h : p.constraints) {
    constraints.push_back(Json{{"block", block_to_json(p.ground, h.block)}, {"rhs", to_string(h.rhs)}});
  }
  return Json{{"sum", to_string(p.sum)}, {"constraints", std::move(constraints)}};
}

Json vrep_to_json(const GroundSet& ground, const VertexSet& v, const std::vector<TreeVertex>& trees) {
  Json vertices = Json::array();
  for (const auto& point : v.vertices) {
    Json tree = nullptr;
    for (const auto& tv : trees) {
      if (tv.point == point) {
        tree = tree_to_json(ground, tv.tree);
        break;
      }
    }
    vertices.push_back(Json{{"tree", std::move(tree)}, {"point", point_to_json(point)}});
  }
  return Json{{"vertices", std::move(vertices)}};
}

Json weights_to_json(const MinkowskiWeights& w) {
  Json entries = Json::array();
  for (const auto& [block, y] : w.weights()) {
    entries.push_back(Json{{"block", block_to_json(w.ground(), block)}, {"y", to_string(y)}});
  }
  return Json{{"weights", std::move(entries)}};
}

namespace {

Json child_class_to_json(const GroundSet& ground, const ChildClass& c) {
  Json elements = Json::array();
  for (int e : c.elements) elements.push_back(ground.name(e));
  return Json{{"elements", std::move(elements)}, {"delta", c.delta}, {"pi", c.pi}};
}

}  // namespace

Json flip_certificate_to_json(const GroundSet& ground, const FlipCertificate& c) {
  const auto& ctx = c.context;
  return Json{{"from", nested_to_json(ground, c.from)["nested"]},
              {"to", nested_to_json(ground, c.to)["nested"]},
              {"removed", block_to_json(ground, ctx.removed)},
              {"added", block_to_json(ground, ctx.added)},
              {"s", ground.name(ctx.s)},
              {"s_prime", ground.name(ctx.s_prime)},
              {"S", child_class_to_json(ground, ctx.S)},
              {"S_prime", child_class_to_json(ground, ctx.S_prime)},
              {"R", child_class_to_json(ground, ctx.R)},
              {"R_prime", child_class_to_json(ground, ctx.R_prime)},
              {"delta", to_string(c.delta)}};
}

std::string minkowski_expression(const MinkowskiWeights& w) {
  std::vector<std::pair<Block, Rational>> terms(w.weights().begin(), w.weights().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
    return a.first < b.first;
  });
  std::string out;
  for (const auto& [block, y] : terms) {
    if (!out.empty()) out += " + ";
    if (y != 1) out += to_string(y) + " ";
    out += "Δ_" + w.ground().format(block);
  }
  return out;
}

}  // namespace remo
