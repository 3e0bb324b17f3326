#include <doctest.h>

#include <algorithm>

#include "remo/block.hpp"
#include "remo/errors.hpp"
#include "remo/rational.hpp"

using namespace remo;

namespace {

std::vector<int> ints(Block b) { return b.indices(); }

}  // namespace

TEST_CASE("block set operations") {
  const Block a = Block::from_indices(std::vector<int>{0, 2});
  const Block b = Block::from_indices(std::vector<int>{2, 3});
  CHECK(a.size() == 2);
  CHECK(a.contains(2));
  CHECK_FALSE(a.contains(1));
  CHECK((a | b) == Block::from_indices(std::vector<int>{0, 2, 3}));
  CHECK((a & b) == Block::singleton(2));
  CHECK((a - b) == Block::singleton(0));
  CHECK(a.intersects(b));
  CHECK(Block::singleton(2).proper_subset_of(a));
  CHECK_FALSE(a.proper_subset_of(a));
  CHECK(a.first() == 0);
  CHECK(ints(Block::full(3)) == std::vector<int>{0, 1, 2});
}

TEST_CASE("block order is lexicographic on sorted member lists") {
  // {1} < {1,2} < {1,2,3} < {1,3} < {2} < {2,3} < {3}, written 0-based.
  std::vector<Block> expected;
  for (auto v : std::vector<std::vector<int>>{{0}, {0, 1}, {0, 1, 2}, {0, 2}, {1}, {1, 2}, {2}}) {
    expected.push_back(Block::from_indices(v));
  }
  std::vector<Block> shuffled(expected.rbegin(), expected.rend());
  std::sort(shuffled.begin(), shuffled.end());
  CHECK(shuffled == expected);
}

TEST_CASE("block order agrees with vector comparison on every pair over five elements") {
  for (Block::Mask x = 1; x < 32; ++x) {
    for (Block::Mask y = 1; y < 32; ++y) {
      const auto vx = Block(x).indices(), vy = Block(y).indices();
      CHECK(((Block(x) <=> Block(y)) < 0) == (vx < vy));
    }
  }
}

TEST_CASE("ground set validation and formatting") {
  const GroundSet g({"a", "b", "c"});
  CHECK(g.index_of("b") == 1);
  CHECK(g.format(Block::from_indices(std::vector<int>{0, 2})) == "{a,c}");
  CHECK(GroundSet::range(3).names() == std::vector<std::string>{"1", "2", "3"});
  CHECK_THROWS_AS(g.index_of("z"), Error);
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code([] { GroundSet(std::vector<std::string>{}); }) == ErrorCode::EmptyGround);
  CHECK(code([] { GroundSet(std::vector<std::string>{"x", "x"}); }) == ErrorCode::DuplicateElement);
  CHECK(code([] { GroundSet::range(kMaxGround + 1); }) == ErrorCode::GroundTooLarge);
}

TEST_CASE("rational parsing and rendering") {
  CHECK(parse_rational("5/2") == Rational(5, 2));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("4/2") == Rational(2));
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(7)) == "7");
  CHECK(to_string(Rational(-1, 3)) == "-1/3");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK(power(Rational(5, 2), 3) == Rational(125, 8));
  CHECK(pairs_with_repetition(4) == 10);
}
