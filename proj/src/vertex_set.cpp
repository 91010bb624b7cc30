#include "eocd/vertex_set.hpp"

#include "eocd/error.hpp"

#include <bit>
#include <string>

namespace eocd {

VertexSet::VertexSet(int universe) : universe_(universe) {
  if (universe < 0)
    throw Error("VertexSet: negative universe");
  words_.assign((static_cast<std::size_t>(universe) + 63) / 64, 0);
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> members) {
  VertexSet s(universe);
  for (int v : members)
    s.insert(v);
  return s;
}

VertexSet VertexSet::from(int universe, std::span<const int> members) {
  VertexSet s(universe);
  for (int v : members)
    s.insert(v);
  return s;
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (int v = 0; v < universe; ++v)
    s.insert(v);
  return s;
}

void VertexSet::insert(int v) {
  if (v < 0 || v >= universe_)
    throw Error("vertex " + std::to_string(v) + " outside 0.." + std::to_string(universe_ - 1));
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(int v) {
  if (v < 0 || v >= universe_)
    return;
  words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

int VertexSet::size() const {
  int total = 0;
  for (auto w : words_)
    total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const {
  for (auto w : words_)
    if (w)
      return false;
  return true;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int v) { out.push_back(v); });
  return out;
}

void VertexSet::check_compatible(const VertexSet& other) const {
  if (universe_ != other.universe_)
    throw Error("VertexSet: universe mismatch (" + std::to_string(universe_) + " vs " +
                std::to_string(other.universe_) + ")");
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i])
      return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i])
      return false;
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= ~other.words_[i];
  return *this;
}

} // namespace eocd
