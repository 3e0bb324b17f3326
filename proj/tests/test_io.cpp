#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "remo/errors.hpp"
#include "remo/io.hpp"

using namespace remo;
using namespace remo::testing;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(REMO_TEST_DATA) + "/" + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string parse_message(std::string_view text, bool graph = false) {
  try {
    if (graph) {
      parse_graph(text);
    } else {
      parse_building_set(text);
    }
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    return e.what();
  }
  return "";
}

NestedSet ns(const std::vector<std::vector<int>>& lists) {
  std::vector<Block> m;
  for (const auto& l : lists) m.push_back(blk(l));
  return NestedSet(m);
}

}  // namespace

TEST_CASE("fixture files parse to the fixtures") {
  CHECK(parse_building_set(slurp("b0.json")).blocks() == b0().blocks());
  CHECK(parse_building_set(slurp("b1.json")).blocks() == b1().blocks());
  CHECK(parse_building_set(slurp("b2.json")).blocks() == b2().blocks());
  CHECK(parse_building_set(slurp("b3.json")).blocks() == b3().blocks());
  CHECK(parse_building_set(slurp("b4.json")).blocks() == b4().blocks());
  CHECK(parse_building_set(slurp("b5prime.json")).blocks() == b5prime().blocks());
  const Graph c4 = parse_graph(slurp("c4.edges"));
  CHECK(c4.n() == 4);
  CHECK(c4.edges().size() == 4);
  CHECK(graphical_building_set(c4).blocks() == graphical_building_set(cycle_graph(4)).blocks());
}

TEST_CASE("named elements keep file order") {
  const BuildingSet b = parse_building_set(R"({"ground": ["b", "a"], "blocks": [["a"], ["b"], ["a", "b"]]})");
  CHECK(b.ground().names() == std::vector<std::string>{"b", "a"});
  CHECK(b.contains(Block::full(2)));
}

TEST_CASE("positioned parse errors") {
  CHECK(parse_message("{\"ground\": [\"1\"],\n  \"blocks\": [[\"1\"]").find("at 2:") != std::string::npos);
  CHECK(parse_message(R"({"ground": ["1", "2"], "blocks": [["1"], ["2"], [1]]})").find("/blocks/2/0") !=
        std::string::npos);
  CHECK(parse_message(R"({"blocks": []})").find("/ground") != std::string::npos);
  CHECK(parse_message("1 2 3\n1 2\n2\n", true).find("at 3:") != std::string::npos);
  CHECK(parse_message("1 2 3\n1 2\n2 9\n", true).find("3:3") != std::string::npos);
  CHECK(parse_message("1 2\n1 1\n", true).find("at 2:") != std::string::npos);
  CHECK(parse_message("", true).find("1:1") != std::string::npos);
}

TEST_CASE("validation errors pass through parsing") {
  try {
    parse_building_set(R"({"ground": ["1", "2"], "blocks": [["1"], ["1", "2"]]})");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingSingleton);
  }
  CHECK(parse_message(R"({"ground": ["1"], "blocks": [["1"], ["7"]]})").find("/blocks/1/0") != std::string::npos);
}

TEST_CASE("serialization formats") {
  const BuildingSet b = b5prime();
  CHECK(block_to_json(b.ground(), blk({1, 2})).dump() == R"(["1","2"])");
  CHECK(nested_to_json(b.ground(), ns({{1}, {1, 2}})).dump() == R"({"nested":[["1"],["1","2"]]})");
  const BTree t = btree_from_nested(b, ns({{1}, {1, 2}}));
  CHECK(tree_to_json(b.ground(), t).dump() ==
        R"({"label":["3"],"children":[{"label":["2"],"children":[{"label":["1"],"children":[]}]}]})");
  CHECK(point_to_json(RationalPoint({Rational(1), Rational(2, 3)})).dump() == R"(["1","2/3"])");
  const Json h = hrep_to_json(removahedron_hrep(b0()));
  CHECK(h["sum"] == "10");
  CHECK(h["constraints"][1].dump() == R"({"block":["1","2"],"rhs":"3"})");
  CHECK(weights_to_json(canonical_weights(b)).dump() ==
        R"({"weights":[{"block":["1"],"y":"1"},{"block":["1","2"],"y":"1"},{"block":["1","2","3"],"y":"2"},)"
        R"({"block":["2"],"y":"1"},{"block":["3"],"y":"1"}]})");
  CHECK(building_set_to_json(b).dump() == R"({"ground":["1","2","3"],"blocks":[["1"],["1","2"],["1","2","3"],["2"],["3"]]})");
  CHECK(parse_building_set(building_set_to_json(b3()).dump()).blocks() == b3().blocks());
}

TEST_CASE("vertex representation carries trees") {
  const BuildingSet b = b5prime();
  const Realization r = is_removahedron_realizable(b);
  const Json v = vrep_to_json(b.ground(), enumerate_vertices(removahedron_hrep(b)), r.vertices);
  REQUIRE(v["vertices"].size() == 4);
  CHECK(v["vertices"][0]["point"].dump() == R"(["1","2","3"])");
  CHECK(v["vertices"][0]["tree"]["label"].dump() == R"(["3"])");
}

TEST_CASE("flip certificates") {
  const Realization r = is_removahedron_realizable(b1());
  const Json c = flip_certificate_to_json(b1().ground(), r.failures.front());
  for (const char* key : {"from", "to", "removed", "added", "s", "s_prime", "S", "S_prime", "R", "R_prime", "delta"}) {
    CHECK(c.contains(key));
  }
  CHECK(c["R"].contains("pi"));
  CHECK(parse_rational(c["delta"].get<std::string>()) <= 0);
}

TEST_CASE("decomposition expression") {
  CHECK(minkowski_expression(canonical_weights(b5prime())) == "2 Δ_{1,2,3} + Δ_{1,2} + Δ_{1} + Δ_{2} + Δ_{3}");
  const MinkowskiWeights half(GroundSet::range(2), {{blk({1, 2}), Rational(1, 2)}});
  CHECK(minkowski_expression(half) == "1/2 Δ_{1,2}");
}
