#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace eocd {

/// Generalized exact cover by dancing links.
///
/// Columns 0..primary-1 must be covered exactly once; columns
/// primary..primary+secondary-1 at most once. Each row is a set of
/// columns and is identified by its insertion index. The search branches
/// on the primary column with the fewest live rows (lowest column id on
/// ties) and tries rows in insertion order, so solutions are reported in
/// a deterministic order.
class ExactCover {
public:
  ExactCover(int primary, int secondary = 0);

  /// Adds a row; duplicate columns within a row are ignored. Returns its id.
  int add_row(std::span<const int> columns);

  int row_count() const { return static_cast<int>(row_start_.size()); }

  /// Visitor receives the chosen row ids (ascending) and returns true to
  /// continue enumerating or false to stop.
  using Visitor = std::function<bool(std::span<const int>)>;

  /// Runs the search; returns the number of solutions visited.
  std::uint64_t search(const Visitor& visit);

  /// Stores the first solution in search order; false when none exists.
  bool first(std::vector<int>& rows);

  /// Number of nodes expanded by the most recent search.
  std::uint64_t nodes() const { return nodes_; }

private:
  struct Node {
    int left, right, up, down, column, row;
  };

  void cover(int c);
  void uncover(int c);
  bool recurse(const Visitor& visit, std::uint64_t& count);

  int primary_;
  int columns_;
  std::vector<Node> nodes_store_;
  std::vector<int> size_;
  std::vector<int> row_start_;
  std::vector<int> partial_;
  std::uint64_t nodes_ = 0;
};

} // namespace eocd
