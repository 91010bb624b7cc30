#pragma once

#include "eocd/graph.hpp"
#include "eocd/vertex_set.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eocd {

/// An EOD set D together with an ECD set P and the induced four-way
/// partition of V into D∩P, D−P, P−D and R = V − (D∪P).
class EocdCertificate {
public:
  EocdCertificate(VertexSet d, VertexSet p);

  const VertexSet& d() const { return d_; }
  const VertexSet& p() const { return p_; }
  const VertexSet& dp() const { return dp_; }
  const VertexSet& d_only() const { return d_only_; }
  const VertexSet& p_only() const { return p_only_; }
  const VertexSet& r() const { return r_; }

private:
  VertexSet d_, p_, dp_, d_only_, p_only_, r_;
};

enum class SearchMode {
  Any,               // D and P unrelated
  EmptyIntersection, // D ∩ P = ∅
  EmptyPMinusD,      // P ⊆ D
};

/// First vertex whose coverage count differs from one, with that count.
struct CoverDefect {
  int vertex;
  int times_covered;
};

/// Why the closed (ECD) or open (EOD) neighborhoods of s fail to partition
/// V; nullopt when they do partition it.
std::optional<CoverDefect> ecd_defect(const Graph& g, const VertexSet& p);
std::optional<CoverDefect> eod_defect(const Graph& g, const VertexSet& d);

bool is_ecd_set(const Graph& g, const VertexSet& p);
/// Graphs with an isolated vertex have no EOD set; this returns false.
bool is_eod_set(const Graph& g, const VertexSet& d);

/// Exact-cover search over closed neighborhoods.
std::optional<VertexSet> find_ecd(const Graph& g);
/// Exact-cover search over open neighborhoods.
std::optional<VertexSet> find_eod(const Graph& g);

/// All ECD / EOD sets, in search order (stops after `limit`).
std::vector<VertexSet> all_ecd_sets(const Graph& g, std::size_t limit = SIZE_MAX);
std::vector<VertexSet> all_eod_sets(const Graph& g, std::size_t limit = SIZE_MAX);

/// In Any mode D and P are searched independently; the constrained modes
/// run one joint exact cover in which every vertex contributes a D-row
/// and a P-row (or a combined D&P row) sharing an at-most-once column.
std::optional<EocdCertificate> find_eocd(const Graph& g, SearchMode mode = SearchMode::Any);

/// Minimum dominating set by iterative deepening (lower bound n/(Δ+1),
/// greedy upper bound).
VertexSet minimum_dominating_set(const Graph& g);
/// Minimum total dominating set; throws eocd::Error on isolated vertices.
VertexSet minimum_total_dominating_set(const Graph& g);

int gamma(const Graph& g);
int gamma_t(const Graph& g);

struct StructureCheck {
  std::string name;
  bool passed = true;
  std::optional<int> witness; // offending vertex when failed
};

struct StructureReport {
  std::vector<StructureCheck> checks;
  int p4_copies = 0; // k with ⟨(P−D) ∪ partners⟩ = k·P4

  bool all_passed() const;
};

/// Checks each structural property of an EOCD certificate's partition.
/// Throws eocd::Error when the certificate itself is invalid.
StructureReport classify_partition(const Graph& g, const EocdCertificate& cert);

/// ⟨A⟩ is a disjoint union of P4s and every vertex outside A is adjacent
/// to exactly one degree-1 and exactly one degree-2 vertex of ⟨A⟩.
bool check_empty_dp_characterization(const Graph& g, const VertexSet& a);

/// ⟨D⟩ is a perfect matching on D, every matching edge has an endpoint of
/// degree one in G, and every vertex outside D is adjacent to exactly one
/// matched vertex on the non-leaf side (the P-endpoint).
bool check_empty_pd_characterization(const Graph& g, const VertexSet& d);

} // namespace eocd
