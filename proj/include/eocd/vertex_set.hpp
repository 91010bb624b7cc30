#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace eocd {

/// Dense subset of the vertex range 0..universe-1, one bit per vertex.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(int universe);

  static VertexSet of(int universe, std::initializer_list<int> members);
  static VertexSet from(int universe, std::span<const int> members);
  static VertexSet full(int universe);

  int universe() const { return universe_; }

  bool contains(int v) const {
    return v >= 0 && v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u);
  }
  void insert(int v);
  void erase(int v);

  int size() const;
  bool empty() const;

  /// Members in increasing order.
  std::vector<int> members() const;

  template <typename F> void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int bit = __builtin_ctzll(bits);
        f(static_cast<int>(w * 64 + bit));
        bits &= bits - 1;
      }
    }
  }

  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
  void check_compatible(const VertexSet& other) const;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

} // namespace eocd
