#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vgit/sigma.hpp"

namespace vgit {

// A Deligne-Mumford stable genus-0 dual graph: a tree with legs labelled by
// the marks {1..n}, every vertex of valence (edges + legs) >= 3. Vertices are
// 0-based indices without semantic meaning; trees are compared through their
// edge splits, which determine the tree up to isomorphism fixing the legs.
struct DualTree {
  int n = 0;
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;  // unordered vertex pairs
  std::vector<int> leg_vertex;             // mark i sits at leg_vertex[i-1]

  static DualTree single_vertex(int n);

  void validate() const;  // throws ValidationError with the offending item

  int valence(int v) const;
  MarkedSubset legs_at(int v) const;
  std::vector<std::vector<int>> neighbors() const;

  // Leg sets of the connected components of T minus vertex v, one per
  // incident edge, ordered by edge index.
  std::vector<MarkedSubset> complement_leg_components(int v) const;

  // Legs of the component of T minus edge e containing edges[e].first / .second.
  std::pair<MarkedSubset, MarkedSubset> edge_split(int e) const;

  // Sorted canonical (mark-1 side) masks of all edge splits. Equal split sets
  // characterize leg-fixing isomorphism.
  std::vector<std::uint64_t> canonical_splits() const;
  std::string canonical_key() const;
  bool isomorphic(const DualTree& o) const {
    return n == o.n && canonical_splits() == o.canonical_splits();
  }

  // Identifies a vertex independently of the numbering: its own legs plus the
  // sorted complement component masks.
  std::string vertex_fingerprint(int v) const;
};

// One-edge specialization: vertex `parent` of the source tree splits into the
// two vertices `child_keep` (reusing the parent's id) and `child_new` (the new
// highest id), joined by a fresh edge; all other vertices keep their ids.
struct Specialization {
  DualTree tree;
  int parent = 0;
  int child_keep = 0;
  int child_new = 0;
};

// Every way to split one vertex so that both halves keep valence >= 3.
std::vector<Specialization> specializations(const DualTree& T);

// Per-edge split map: edge index -> the two leg sets.
std::vector<std::pair<MarkedSubset, MarkedSubset>> edge_subsets(const DualTree& T);

// All DM trees on n legs (cap-guarded), enumerated through pairwise-compatible
// families of splits and returned in a deterministic order.
std::vector<DualTree> all_dm_trees(int n, const EnumLimits& lim = EnumLimits::from_env());

// Builds the unique tree whose edge splits are the given pairwise-compatible
// canonical masks.
DualTree tree_from_splits(int n, const std::vector<std::uint64_t>& splits);

// The 1-dimensional boundary stratum datum: four disjoint nonempty subsets
// covering {1..n}, canonically ordered by smallest element.
struct FCurvePartition {
  std::array<MarkedSubset, 4> parts;

  static FCurvePartition make(const std::array<MarkedSubset, 4>& parts);
  // Convenience: consecutive blocks of sizes a,b,c,rest over {1..n}.
  static FCurvePartition by_sizes(int a, int b, int c, int n);

  std::string str() const;
};

// Sum of sigma over the four parts; the spine component of the F-curve has
// degree d minus this sum, so the F-curve is contracted in the model exactly
// when the sum equals d. On-wall parts are rejected.
int fcurve_sigma_sum(const FCurvePartition& P, const Linearization& L);

}  // namespace vgit
