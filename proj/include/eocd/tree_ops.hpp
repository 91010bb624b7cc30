#pragma once

#include "eocd/graph.hpp"
#include "eocd/vertex_set.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eocd {

enum class TreeOp { O1 = 1, O2, O3, O4, O5 };

/// One extension of an EOCD tree.
///
///   O1  attach = [u]                     new = [v]
///       u ∈ D∩P; adds leaf v at u.
///   O2  attach = [w]                     new = [x, u, v]
///       w ∉ D; adds path x-u-v and edge wx.
///   O3  attach = [t]                     new = [z, w, x, u, v]
///       t ∈ D−P; adds path z-w-x-u-v and edge tz.
///   O4  attach = [v, u, x]               new = [y]
///       path v-u-x, deg v = 1, deg u = 2, u,x ∈ D, u ∈ P; adds leaf y at x.
///   O5  attach = [u, x, w, z, w', x']    new = [v]
///       deg u = deg x' = 1, deg x = deg w = deg w' = 2, u,x,w',x' ∈ D,
///       x,w' ∈ P; adds leaf v at u.
struct TreeOpStep {
  TreeOp op = TreeOp::O1;
  std::vector<int> attach;
  std::vector<int> added;

  friend bool operator==(const TreeOpStep&, const TreeOpStep&) = default;
};

/// Tree with an EOD set d and an ECD set p.
struct EocdTree {
  Graph tree;
  VertexSet d;
  VertexSet p;
};

/// K2 on vertices 0,1 with D = {0,1}, P = {0}.
EocdTree k2_tree();

/// Construction history starting at k2_tree(). Steps use construction ids
/// (each step appends its new vertices after the existing ones). When
/// relabel is non-empty, replay maps construction id i to relabel[i].
struct TreeOpSequence {
  std::vector<TreeOpStep> steps;
  std::vector<int> relabel;
};

int vertices_added(TreeOp op);

/// Applies one step. The new vertex ids must be order(), order()+1, ...
/// Throws eocd::Error naming the failed precondition clause.
EocdTree apply_step(const EocdTree& state, const TreeOpStep& step);

/// Replays a sequence from K2 (and applies the relabeling, if any).
EocdTree replay(const TreeOpSequence& seq);

/// Existence of an EOD set and an ECD set on a tree, each decided by its
/// own leaf-up dynamic program. Throws eocd::Error if t is not a tree.
std::optional<std::pair<VertexSet, VertexSet>> is_eocd_tree(const Graph& t);

/// Peels the tree back to K2 following the rooted case analysis on a
/// deepest leaf, validating the certificate after every removal. The
/// returned sequence replays to exactly (t, d, p).
TreeOpSequence decompose(const Graph& t, const VertexSet& d, const VertexSet& p);

/// Grows a tree from K2 by `steps` random feasible operations: an
/// operation kind is drawn uniformly among the feasible kinds, then an
/// attachment uniformly among its feasible attachments.
struct RandomTree {
  EocdTree state;
  TreeOpSequence sequence;
};
RandomTree random_eocd_tree(int steps, std::uint64_t seed);

/// Every feasible (op, attachment) for the current state, new ids filled in.
std::vector<TreeOpStep> feasible_steps(const EocdTree& state);

std::string to_string(TreeOp op);
void write_sequence(std::ostream& out, const TreeOpSequence& seq);
TreeOpSequence read_sequence(std::istream& in);

} // namespace eocd
