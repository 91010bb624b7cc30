#include "eocd/exact_cover.hpp"

#include "eocd/error.hpp"

#include <algorithm>
#include <string>

namespace eocd {

// Node 0 is the root; node c+1 heads column c. Secondary headers are left
// out of the root list so they are never chosen for branching.
ExactCover::ExactCover(int primary, int secondary)
    : primary_(primary), columns_(primary + secondary) {
  if (primary < 0 || secondary < 0)
    throw Error("ExactCover: negative column count");
  nodes_store_.resize(columns_ + 1);
  size_.assign(columns_, 0);
  for (int i = 0; i <= columns_; ++i) {
    auto& h = nodes_store_[i];
    h.up = h.down = i;
    h.column = i - 1;
    h.row = -1;
    h.left = h.right = i;
  }
  int prev = 0;
  for (int c = 0; c < primary_; ++c) {
    int idx = c + 1;
    nodes_store_[prev].right = idx;
    nodes_store_[idx].left = prev;
    prev = idx;
  }
  nodes_store_[prev].right = 0;
  nodes_store_[0].left = prev;
}

int ExactCover::add_row(std::span<const int> columns) {
  std::vector<int> cols(columns.begin(), columns.end());
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  const int row = row_count();
  if (cols.empty()) {
    row_start_.push_back(-1);
    return row;
  }
  int first = -1;
  for (int c : cols) {
    if (c < 0 || c >= columns_)
      throw Error("ExactCover: column " + std::to_string(c) + " out of range");
    int idx = static_cast<int>(nodes_store_.size());
    int head = c + 1;
    Node node{};
    node.column = c;
    node.row = row;
    node.down = head;
    node.up = nodes_store_[head].up;
    if (first == -1) {
      node.left = node.right = idx;
      first = idx;
    } else {
      node.right = first;
      node.left = nodes_store_[first].left;
    }
    nodes_store_.push_back(node);
    nodes_store_[node.up].down = idx;
    nodes_store_[head].up = idx;
    if (idx != first) {
      nodes_store_[node.left].right = idx;
      nodes_store_[first].left = idx;
    }
    ++size_[c];
  }
  row_start_.push_back(first);
  return row;
}

void ExactCover::cover(int c) {
  auto& ns = nodes_store_;
  int head = c + 1;
  ns[ns[head].right].left = ns[head].left;
  ns[ns[head].left].right = ns[head].right;
  for (int i = ns[head].down; i != head; i = ns[i].down) {
    for (int j = ns[i].right; j != i; j = ns[j].right) {
      ns[ns[j].down].up = ns[j].up;
      ns[ns[j].up].down = ns[j].down;
      --size_[ns[j].column];
    }
  }
}

void ExactCover::uncover(int c) {
  auto& ns = nodes_store_;
  int head = c + 1;
  for (int i = ns[head].up; i != head; i = ns[i].up) {
    for (int j = ns[i].left; j != i; j = ns[j].left) {
      ++size_[ns[j].column];
      ns[ns[j].down].up = j;
      ns[ns[j].up].down = j;
    }
  }
  ns[ns[head].right].left = head;
  ns[ns[head].left].right = head;
}

bool ExactCover::recurse(const Visitor& visit, std::uint64_t& count) {
  ++nodes_;
  auto& ns = nodes_store_;
  if (ns[0].right == 0) {
    ++count;
    std::vector<int> rows = partial_;
    std::sort(rows.begin(), rows.end());
    return visit(rows);
  }
  int best = -1;
  for (int h = ns[0].right; h != 0; h = ns[h].right) {
    int c = ns[h].column;
    if (best == -1 || size_[c] < size_[best])
      best = c;
    if (size_[best] == 0)
      break;
  }
  if (size_[best] == 0)
    return true;

  cover(best);
  bool keep_going = true;
  for (int r = ns[best + 1].down; r != best + 1 && keep_going; r = ns[r].down) {
    partial_.push_back(ns[r].row);
    for (int j = ns[r].right; j != r; j = ns[j].right)
      cover(ns[j].column);
    keep_going = recurse(visit, count);
    for (int j = ns[r].left; j != r; j = ns[j].left)
      uncover(ns[j].column);
    partial_.pop_back();
  }
  uncover(best);
  return keep_going;
}

std::uint64_t ExactCover::search(const Visitor& visit) {
  nodes_ = 0;
  partial_.clear();
  std::uint64_t count = 0;
  recurse(visit, count);
  return count;
}

bool ExactCover::first(std::vector<int>& rows) {
  bool found = false;
  search([&](std::span<const int> sol) {
    rows.assign(sol.begin(), sol.end());
    found = true;
    return false;
  });
  return found;
}

} // namespace eocd
