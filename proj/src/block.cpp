#include "remo/block.hpp"

#include "remo/errors.hpp"

namespace remo {

Block Block::from_indices(std::span<const int> indices) {
  Mask bits = 0;
  for (int i : indices) bits |= Mask{1} << i;
  return Block(bits);
}

std::vector<int> Block::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int i) { out.push_back(i); });
  return out;
}

GroundSet::GroundSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error(ErrorCode::EmptyGround, "ground set must be nonempty");
  if (names_.size() > static_cast<std::size_t>(kMaxGround)) {
    throw Error(ErrorCode::GroundTooLarge, "ground set has " + std::to_string(names_.size()) +
                                               " elements, limit is " + std::to_string(kMaxGround));
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], static_cast<int>(i)).second) {
      throw Error(ErrorCode::DuplicateElement, "element '" + names_[i] + "' appears twice");
    }
  }
}

GroundSet GroundSet::range(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return GroundSet(std::move(names));
}

int GroundSet::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw Error(ErrorCode::ElementNotInGround, "unknown element '" + name + "'");
  return it->second;
}

Block GroundSet::block_of(std::span<const std::string> names) const {
  Block b;
  for (const auto& n : names) b = b | Block::singleton(index_of(n));
  return b;
}

std::vector<std::string> GroundSet::names_of(Block b) const {
  std::vector<std::string> out;
  b.for_each([&](int i) { out.push_back(name(i)); });
  return out;
}

std::string GroundSet::format(Block b) const {
  std::string out = "{";
  bool first = true;
  b.for_each([&](int i) {
    if (!first) out += ",";
    out += name(i);
    first = false;
  });
  return out + "}";
}

}  // namespace remo
