#include "vgit/trees.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>
#include <sstream>

#include "vgit/errors.hpp"

namespace vgit {

DualTree DualTree::single_vertex(int n) {
  DualTree t;
  t.n = n;
  t.num_vertices = 1;
  t.leg_vertex.assign(n, 0);
  return t;
}

int DualTree::valence(int v) const {
  int val = 0;
  for (const auto& [a, b] : edges) val += (a == v) + (b == v);
  for (int lv : leg_vertex) val += (lv == v);
  return val;
}

MarkedSubset DualTree::legs_at(int v) const {
  std::uint64_t m = 0;
  for (int i = 0; i < n; ++i)
    if (leg_vertex[i] == v) m |= std::uint64_t{1} << i;
  return {m, n};
}

std::vector<std::vector<int>> DualTree::neighbors() const {
  std::vector<std::vector<int>> adj(num_vertices);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

void DualTree::validate() const {
  if (n < 1) throw ValidationError("tree must carry at least one leg");
  if (num_vertices < 1) throw ValidationError("tree must have at least one vertex");
  if (static_cast<int>(edges.size()) != num_vertices - 1)
    throw ValidationError("tree needs exactly " + std::to_string(num_vertices - 1) +
                          " edges, got " + std::to_string(edges.size()));
  if (static_cast<int>(leg_vertex.size()) != n)
    throw ValidationError("expected " + std::to_string(n) + " leg entries");
  for (size_t e = 0; e < edges.size(); ++e) {
    auto [a, b] = edges[e];
    if (a < 0 || a >= num_vertices || b < 0 || b >= num_vertices || a == b)
      throw ValidationError("edge " + std::to_string(e) + " = (" + std::to_string(a) + "," +
                            std::to_string(b) + ") is invalid");
  }
  for (int i = 0; i < n; ++i)
    if (leg_vertex[i] < 0 || leg_vertex[i] >= num_vertices)
      throw ValidationError("leg of mark " + std::to_string(i + 1) + " points at vertex " +
                            std::to_string(leg_vertex[i]) + ", out of range");
  // connectivity
  std::vector<int> seen(num_vertices, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  auto adj = neighbors();
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  for (int v = 0; v < num_vertices; ++v) {
    if (!seen[v]) throw ValidationError("vertex " + std::to_string(v) + " is disconnected");
    if (valence(v) < 3)
      throw ValidationError("vertex " + std::to_string(v) + " has valence " +
                            std::to_string(valence(v)) + " < 3 (not DM-stable)");
  }
}

namespace {

// Component leg masks of T minus one vertex, seeded from each incident edge.
std::uint64_t side_legs(const DualTree& T, int blocked, int start,
                        const std::vector<std::vector<int>>& adj) {
  std::uint64_t m = 0;
  std::vector<int> seen(T.num_vertices, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  seen[blocked] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    m |= T.legs_at(v).mask();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return m;
}

}  // namespace

std::vector<MarkedSubset> DualTree::complement_leg_components(int v) const {
  auto adj = neighbors();
  std::vector<MarkedSubset> out;
  for (const auto& [a, b] : edges) {
    if (a == v)
      out.emplace_back(side_legs(*this, v, b, adj), n);
    else if (b == v)
      out.emplace_back(side_legs(*this, v, a, adj), n);
  }
  return out;
}

std::pair<MarkedSubset, MarkedSubset> DualTree::edge_split(int e) const {
  auto adj = neighbors();
  auto [a, b] = edges[e];
  MarkedSubset sa{side_legs(*this, b, a, adj), n};
  return {sa, sa.complement()};
}

std::vector<std::uint64_t> DualTree::canonical_splits() const {
  std::vector<std::uint64_t> out;
  out.reserve(edges.size());
  for (size_t e = 0; e < edges.size(); ++e)
    out.push_back(edge_split(static_cast<int>(e)).first.canonical().mask());
  std::sort(out.begin(), out.end());
  return out;
}

std::string DualTree::canonical_key() const {
  std::ostringstream os;
  os << n << ":";
  for (auto m : canonical_splits()) os << m << ",";
  return os.str();
}

std::string DualTree::vertex_fingerprint(int v) const {
  std::vector<std::uint64_t> comps;
  for (const auto& c : complement_leg_components(v)) comps.push_back(c.mask());
  std::sort(comps.begin(), comps.end());
  std::ostringstream os;
  os << legs_at(v).mask() << "|";
  for (auto m : comps) os << m << ",";
  return os.str();
}

std::vector<Specialization> specializations(const DualTree& T) {
  std::vector<Specialization> out;
  struct Item {
    bool is_leg;
    int idx;  // mark index (1-based) or edge index
  };
  for (int v = 0; v < T.num_vertices; ++v) {
    std::vector<Item> items;
    for (int i = 1; i <= T.n; ++i)
      if (T.leg_vertex[i - 1] == v) items.push_back({true, i});
    for (size_t e = 0; e < T.edges.size(); ++e)
      if (T.edges[e].first == v || T.edges[e].second == v)
        items.push_back({false, static_cast<int>(e)});
    const int val = static_cast<int>(items.size());
    if (val < 4) continue;
    // subsets containing item 0, both halves of size >= 2
    const std::uint64_t count = std::uint64_t{1} << (val - 1);
    for (std::uint64_t rest = 0; rest < count; ++rest) {
      int moved = std::popcount(rest);
      // item 0 stays with child_keep; `rest` picks the items moving to child_new
      if (moved < 2 || val - moved < 2) continue;
      DualTree t = T;
      int fresh = t.num_vertices++;
      for (int j = 1; j < val; ++j) {
        if (!((rest >> (j - 1)) & 1)) continue;
        const Item& it = items[j];
        if (it.is_leg) {
          t.leg_vertex[it.idx - 1] = fresh;
        } else {
          auto& [a, b] = t.edges[it.idx];
          (a == v ? a : b) = fresh;
        }
      }
      t.edges.emplace_back(v, fresh);
      out.push_back({std::move(t), v, v, fresh});
    }
  }
  return out;
}

std::vector<std::pair<MarkedSubset, MarkedSubset>> edge_subsets(const DualTree& T) {
  std::vector<std::pair<MarkedSubset, MarkedSubset>> out;
  out.reserve(T.edges.size());
  for (size_t e = 0; e < T.edges.size(); ++e) out.push_back(T.edge_split(static_cast<int>(e)));
  return out;
}

DualTree tree_from_splits(int n, const std::vector<std::uint64_t>& splits) {
  DualTree t = DualTree::single_vertex(n);
  auto adj_branch_legs = [&](int v, int through_edge) {
    auto adj = t.neighbors();
    auto [a, b] = t.edges[through_edge];
    return side_legs(t, v, a == v ? b : a, adj);
  };
  for (std::uint64_t S : splits) {
    // locate the unique vertex whose incident branches and legs split cleanly
    // along S | S^c, then pull the S side off onto a fresh vertex.
    int v = 0;
    for (;;) {
      int descend = -1;
      for (size_t e = 0; e < t.edges.size() && descend < 0; ++e) {
        auto [a, b] = t.edges[e];
        if (a != v && b != v) continue;
        std::uint64_t branch = adj_branch_legs(v, static_cast<int>(e));
        if ((branch & S) && (branch & ~S)) descend = (a == v ? b : a);
      }
      if (descend < 0) break;
      v = descend;
    }
    DualTree next = t;
    int fresh = next.num_vertices++;
    for (size_t e = 0; e < t.edges.size(); ++e) {
      auto [a, b] = t.edges[e];
      if (a != v && b != v) continue;
      std::uint64_t branch = adj_branch_legs(v, static_cast<int>(e));
      if ((branch & ~S) == 0) {
        auto& [na, nb] = next.edges[e];
        (na == v ? na : nb) = fresh;
      }
    }
    for (int i = 0; i < n; ++i)
      if (t.leg_vertex[i] == v && ((S >> i) & 1)) next.leg_vertex[i] = fresh;
    next.edges.emplace_back(v, fresh);
    t = std::move(next);
  }
  return t;
}

namespace {

// Splits with both sides >= 2 pair off trees with their edge sets; two
// mark-1-containing splits are compatible exactly when they are nested or
// their complements are disjoint.
bool compatible(std::uint64_t a, std::uint64_t b, std::uint64_t full) {
  return (a & ~b) == 0 || (b & ~a) == 0 || (a | b) == full;
}

void families_rec(const std::vector<std::uint64_t>& splits, std::uint64_t full, size_t from,
                  std::vector<std::uint64_t>& chosen, int n, std::vector<DualTree>& out) {
  out.push_back(tree_from_splits(n, chosen));
  for (size_t j = from; j < splits.size(); ++j) {
    bool ok = true;
    for (std::uint64_t c : chosen)
      if (!compatible(c, splits[j], full)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(splits[j]);
    families_rec(splits, full, j + 1, chosen, n, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<DualTree> all_dm_trees(int n, const EnumLimits& lim) {
  if (n < 3) throw ValidationError("dual trees need n >= 3");
  require_tree_cap(n, lim, "all_dm_trees");
  const std::uint64_t full = MarkedSubset::full_mask(n);
  std::vector<std::uint64_t> splits;
  for_each_canonical_mask(n, [&](std::uint64_t m) {
    int c = std::popcount(m);
    if (c >= 2 && c <= n - 2) splits.push_back(m);
  });
  std::vector<DualTree> out;
  std::vector<std::uint64_t> chosen;
  families_rec(splits, full, 0, chosen, n, out);
  return out;
}

FCurvePartition FCurvePartition::make(const std::array<MarkedSubset, 4>& parts) {
  const int n = parts[0].n();
  std::uint64_t seen = 0;
  for (const auto& p : parts) {
    if (p.n() != n) throw ValidationError("F-curve parts disagree on n");
    if (p.empty_set()) throw ValidationError("F-curve parts must be nonempty");
    if (seen & p.mask()) throw ValidationError("F-curve parts must be disjoint");
    seen |= p.mask();
  }
  if (seen != MarkedSubset::full_mask(n))
    throw ValidationError("F-curve parts must cover all marks");
  std::array<MarkedSubset, 4> sorted = parts;
  std::sort(sorted.begin(), sorted.end(), [](const MarkedSubset& a, const MarkedSubset& b) {
    return std::countr_zero(a.mask()) < std::countr_zero(b.mask());
  });
  return FCurvePartition{sorted};
}

FCurvePartition FCurvePartition::by_sizes(int a, int b, int c, int n) {
  int d = n - a - b - c;
  if (a < 1 || b < 1 || c < 1 || d < 1)
    throw ValidationError("F-curve block sizes must be positive and sum below n");
  auto block = [&](int lo, int len) {
    std::vector<int> marks(len);
    std::iota(marks.begin(), marks.end(), lo);
    return MarkedSubset::of_marks(marks, n);
  };
  return make({block(1, a), block(1 + a, b), block(1 + a + b, c), block(1 + a + b + c, d)});
}

std::string FCurvePartition::str() const {
  std::ostringstream os;
  os << "(" << parts[0].str() << " | " << parts[1].str() << " | " << parts[2].str() << " | "
     << parts[3].str() << ")";
  return os.str();
}

int fcurve_sigma_sum(const FCurvePartition& P, const Linearization& L) {
  int sum = 0;
  std::vector<std::pair<std::uint64_t, int>> violated;
  for (const auto& p : P.parts) {
    int k = 0;
    if (on_wall_of(p, L, &k)) {
      auto c = p.canonical();
      violated.emplace_back(c.mask(), p.is_canonical() ? k : L.d() - 1 - k);
    }
  }
  if (!violated.empty())
    throw OnWallError("fcurve_sigma_sum: some parts lie on walls of " + L.str(),
                      std::move(violated));
  for (const auto& p : P.parts) sum += sigma(p, L);
  return sum;
}

}  // namespace vgit
