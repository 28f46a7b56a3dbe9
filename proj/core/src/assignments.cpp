#include "vgit/assignments.hpp"

#include <algorithm>
#include <sstream>

#include "vgit/errors.hpp"
#include "vgit/sampling.hpp"
#include "vgit/walls.hpp"

namespace vgit {

ExtremalAssignment ExtremalAssignment::empty() { return {}; }

ExtremalAssignment ExtremalAssignment::unmarked() {
  ExtremalAssignment z;
  z.kind_ = Kind::Unmarked;
  return z;
}

ExtremalAssignment ExtremalAssignment::tails_within(std::vector<MarkedSubset> groups) {
  if (groups.empty()) throw ValidationError("tails_within needs at least one group");
  for (const auto& g : groups)
    if (g.empty_set() || g.is_full())
      throw ValidationError("tails_within groups must be nonempty proper subsets");
  ExtremalAssignment z;
  z.kind_ = Kind::TailsWithin;
  z.groups_ = std::move(groups);
  return z;
}

ExtremalAssignment ExtremalAssignment::git(Linearization L) {
  require_generic(L, "git_assignment");
  ExtremalAssignment z;
  z.kind_ = Kind::Git;
  z.lin_ = std::move(L);
  return z;
}

ExtremalAssignment ExtremalAssignment::explicit_table(
    int n, const std::vector<std::pair<DualTree, std::vector<int>>>& entries) {
  ExtremalAssignment z;
  z.kind_ = Kind::Explicit;
  for (const auto& [tree, assigned] : entries) {
    if (tree.n != n) throw ValidationError("explicit assignment entry has wrong n");
    tree.validate();
    if (static_cast<int>(assigned.size()) >= tree.num_vertices)
      throw ValidationError("explicit assignment entry assigns every vertex (not proper)");
    auto& fps = z.explicit_[tree.canonical_key()];
    for (int v : assigned) {
      if (v < 0 || v >= tree.num_vertices)
        throw ValidationError("explicit assignment entry names a missing vertex");
      fps.insert(tree.vertex_fingerprint(v));
    }
  }
  return z;
}

ExtremalAssignment git_assignment(const Linearization& L) { return ExtremalAssignment::git(L); }

std::vector<bool> ExtremalAssignment::assigned(const DualTree& T) const {
  std::vector<bool> out(T.num_vertices, false);
  switch (kind_) {
    case Kind::Empty:
      break;
    case Kind::Unmarked:
      for (int v = 0; v < T.num_vertices; ++v) out[v] = T.legs_at(v).empty_set();
      break;
    case Kind::TailsWithin: {
      // mark every vertex lying in an edge side whose legs sit inside a group
      auto adj = T.neighbors();
      for (size_t e = 0; e < T.edges.size(); ++e) {
        auto [sa, sb] = T.edge_split(static_cast<int>(e));
        for (int pass = 0; pass < 2; ++pass) {
          const MarkedSubset& side = pass ? sb : sa;
          bool inside = false;
          for (const auto& g : groups_)
            if (side.subset_of(g)) inside = true;
          if (!inside) continue;
          // flood the side of the edge
          int start = pass ? T.edges[e].second : T.edges[e].first;
          int blocked = pass ? T.edges[e].first : T.edges[e].second;
          std::vector<int> seen(T.num_vertices, 0);
          seen[blocked] = 1;
          seen[start] = 1;
          std::vector<int> stack{start};
          while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[v] = true;
            for (int w : adj[v])
              if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
              }
          }
        }
      }
      break;
    }
    case Kind::Git: {
      auto deg = degree_assignment(T, *lin_);
      for (int v = 0; v < T.num_vertices; ++v) out[v] = deg[v] == 0;
      break;
    }
    case Kind::Explicit: {
      auto it = explicit_.find(T.canonical_key());
      if (it == explicit_.end()) break;
      for (int v = 0; v < T.num_vertices; ++v)
        if (it->second.count(T.vertex_fingerprint(v))) out[v] = true;
      break;
    }
  }
  return out;
}

std::string ExtremalAssignment::describe() const {
  switch (kind_) {
    case Kind::Empty:
      return "empty assignment";
    case Kind::Unmarked:
      return "unmarked components assigned";
    case Kind::TailsWithin: {
      std::ostringstream os;
      os << "tails with legs inside";
      for (const auto& g : groups_) os << " " << g.str();
      return os.str();
    }
    case Kind::Git:
      return "induced by " + lin_->str();
    case Kind::Explicit:
      return "explicit table over " + std::to_string(explicit_.size()) + " tree classes";
  }
  return "?";
}

ExtremalityReport check_extremal(const ExtremalAssignment& Z, int n, const EnumLimits& lim) {
  ExtremalityReport rep;
  auto trees = all_dm_trees(n, lim);
  for (const auto& T : trees) {
    ++rep.trees_checked;
    auto zT = Z.assigned(T);
    if (std::all_of(zT.begin(), zT.end(), [](bool b) { return b; })) {
      rep.counterexample = "assignment is not proper on " + T.canonical_key();
      return rep;
    }
    for (const auto& S : specializations(T)) {
      ++rep.specializations_checked;
      auto zS = Z.assigned(S.tree);
      for (int v = 0; v < T.num_vertices; ++v) {
        bool parts_assigned = v == S.parent ? (zS[S.child_keep] && zS[S.child_new]) : zS[v];
        if (zT[v] && !parts_assigned) {
          rep.counterexample = "closure fails (=>): vertex " + std::to_string(v) + " of " +
                               T.canonical_key() + " is assigned but its parts are not";
          return rep;
        }
        if (!zT[v] && parts_assigned) {
          rep.counterexample = "closure fails (<=): vertex " + std::to_string(v) + " of " +
                               T.canonical_key() + " is unassigned but all its parts are assigned";
          return rep;
        }
      }
    }
  }
  rep.extremal = true;
  return rep;
}

namespace {

bool assignments_agree(const ExtremalAssignment& Z, const Linearization& L,
                       const std::vector<DualTree>& trees, std::string* mismatch) {
  ExtremalAssignment G = git_assignment(L);
  for (const auto& T : trees) {
    if (Z.assigned(T) != G.assigned(T)) {
      if (mismatch) *mismatch = T.canonical_key();
      return false;
    }
  }
  return true;
}

// The two-group pattern of size >= 2 each admits the analytic obstruction.
std::optional<std::string> pairwise_weight_contradiction(const ExtremalAssignment& Z) {
  if (Z.kind() != ExtremalAssignment::Kind::TailsWithin) return std::nullopt;
  std::vector<MarkedSubset> big;
  for (const auto& g : Z.groups())
    if (g.card() >= 2) big.push_back(g);
  if (big.size() < 2) return std::nullopt;
  for (size_t a = 0; a < big.size(); ++a)
    for (size_t b = a + 1; b < big.size(); ++b)
      if (!big[a].disjoint(big[b])) return std::nullopt;
  std::ostringstream os;
  os << "any realizing linearization must give every 2-mark tail inside " << big[0].str()
     << " and inside " << big[1].str()
     << " sigma 0, forcing the in-group pair weights below 1; the lightest marks i in "
     << big[0].str() << " and j in " << big[1].str()
     << " then satisfy c_i + c_j < 1, so the mixed tail {i,j} is contracted as well, "
        "contradicting the rule (it lies in neither group). No d admits a witness.";
  return os.str();
}

}  // namespace

RealizabilityResult realizability_search(const ExtremalAssignment& Z, int d, int n,
                                         int random_samples, const EnumLimits& lim) {
  RealizabilityResult res;
  if (auto analytic = pairwise_weight_contradiction(Z)) {
    res.certificate = RealizabilityResult::Certificate::PairwiseWeightContradiction;
    res.detail = *analytic;
    return res;
  }
  auto trees = all_dm_trees(n, lim);

  std::vector<Linearization> candidates;
  // known chamber families
  if (d == n) {
    for (long denom : {10L * n, 40L * n}) {
      Rational eps(1, denom);
      candidates.push_back(Linearization(
          d, n, (Rational(1) + Rational(d) * eps) / Rational(d - 1),
          std::vector<Rational>(n, Rational(1) - eps)));
    }
  }
  for (int num = 1; num <= 7; ++num) {
    Rational gamma(2 * num + 1, 16);
    Rational c = (Rational(d + 1) - Rational(d - 1) * gamma) / Rational(n);
    if (gamma <= Rational(0) || gamma >= Rational(1)) continue;
    if (c <= Rational(0) || c >= Rational(1)) continue;
    candidates.push_back(Linearization::symmetric(d, n, gamma));
  }
  // both sides of every wall
  for (const auto& w : enumerate_walls(d, n, lim)) {
    try {
      Linearization at = exclusive_wall_witness(w, lim);
      auto [plus, minus] = perturb_across(w, at, lim);
      candidates.push_back(plus);
      candidates.push_back(minus);
    } catch (const Error&) {
      // isolated witness not found; random sampling still covers the region
    }
  }
  Sampler sampler(0x5eedULL ^ (static_cast<std::uint64_t>(d) << 32) ^ n);
  for (int i = 0; i < random_samples; ++i) {
    try {
      candidates.push_back(sampler.generic_point(d, n, lim));
    } catch (const Error&) {
      break;
    }
  }

  std::vector<ChamberSignature> seen;
  std::ostringstream chambers;
  for (const auto& L : candidates) {
    if (!is_generic(L, lim)) continue;
    ChamberSignature sig = ChamberSignature::of(L, lim);
    bool fresh = std::none_of(seen.begin(), seen.end(),
                              [&](const ChamberSignature& s) { return s == sig; });
    if (!fresh) continue;
    seen.push_back(sig);
    std::string mismatch;
    if (assignments_agree(Z, L, trees, &mismatch)) {
      res.witness = L;
      res.chambers_sampled = static_cast<long>(seen.size());
      return res;
    }
    chambers << "  chamber " << seen.size() << " (rep " << L.str() << "): assignment differs on "
             << mismatch << "\n";
  }
  res.chambers_sampled = static_cast<long>(seen.size());
  res.certificate = RealizabilityResult::Certificate::ChamberExhaustion;
  res.detail = "no sampled chamber realizes the assignment (" +
               std::to_string(res.chambers_sampled) + " distinct chambers, " +
               std::to_string(enumerate_walls(d, n, lim).size()) +
               " walls; sampling covers both sides of every wall plus random interior "
               "points):\n" +
               chambers.str();
  return res;
}

}  // namespace vgit
