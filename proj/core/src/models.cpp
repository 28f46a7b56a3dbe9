#include "vgit/models.hpp"

#include <algorithm>
#include <sstream>

#include "vgit/errors.hpp"
#include "vgit/walls.hpp"

namespace vgit {

std::string to_string(ModelID::Tag tag) {
  switch (tag) {
    case ModelID::Tag::Hassett:
      return "Hassett";
    case ModelID::Tag::MbarN:
      return "MbarN";
    case ModelID::Tag::Boggi:
      return "Boggi";
    case ModelID::Tag::TripleStyle:
      return "TripleStyle";
    case ModelID::Tag::Unidentified:
      return "Unidentified";
  }
  return "?";
}

namespace {

bool boggi_sigma_identity(const Linearization& L, const EnumLimits& lim) {
  const int n = L.n();
  if (L.is_symmetric()) {
    for (int m = 2; m <= n - 2; ++m)
      if (sigma_by_card(m, L) != m) return false;
    return true;
  }
  require_subset_cap(n, lim, "Boggi identification");
  bool ok = true;
  for_each_canonical_subset(L, [&](std::uint64_t mask, const Rational& c_I) {
    if (!ok) return;
    MarkedSubset I(mask, n);
    int m = I.card();
    if (m >= 2 && m <= n - 2 && sigma_of_weight(c_I, L) != m) ok = false;
    int mc = n - m;
    if (mc >= 2 && mc <= n - 2 && L.d() - sigma_of_weight(c_I, L) != mc) ok = false;
  });
  return ok;
}

std::string assignment_summary(const Linearization& L, const EnumLimits& lim) {
  std::ostringstream os;
  if (L.n() > lim.tree_legs) {
    os << "n exceeds the tree cap (" << lim.tree_legs << "); no assignment summary";
    return os.str();
  }
  ExtremalAssignment Z = git_assignment(L);
  long assigned = 0, trees_hit = 0, trees = 0;
  std::uint64_t fingerprint = 1469598103934665603ULL;
  for (const auto& T : all_dm_trees(L.n(), lim)) {
    ++trees;
    auto z = Z.assigned(T);
    std::uint64_t mask = 0;
    bool any = false;
    // fingerprint over the canonical key and assigned pattern
    for (char c : T.canonical_key()) fingerprint = (fingerprint ^ c) * 1099511628211ULL;
    for (int v = 0; v < T.num_vertices; ++v)
      if (z[v]) {
        any = true;
        ++assigned;
        mask |= std::uint64_t{1} << v;
      }
    fingerprint = (fingerprint ^ mask) * 1099511628211ULL;
    trees_hit += any;
  }
  os << "assignment over " << trees << " trees: " << assigned << " assigned vertices on "
     << trees_hit << " trees, fingerprint " << std::hex << fingerprint;
  return os.str();
}

}  // namespace

ModelID identify(const Linearization& L, const EnumLimits& lim) {
  require_generic(L, "identify", lim);
  ModelID id;
  const Rational one(1);
  Rational bound(1, 2);
  for (const Rational& c : L.weights()) bound = std::max(bound, one - c);
  if (L.gamma() > bound) {
    bool pairs_heavy = true;
    std::vector<Rational> sorted = L.weights();
    std::sort(sorted.begin(), sorted.end());
    if (sorted[0] + sorted[1] <= one) pairs_heavy = false;
    id.tag = pairs_heavy ? ModelID::Tag::MbarN : ModelID::Tag::Hassett;
    id.hassett_weights = L.weights();
    id.summary = pairs_heavy ? "no marks may collide: the weighted space is the full moduli "
                               "of stable marked curves"
                             : "weighted stable curves with weights c";
    return id;
  }
  if (L.d() == L.n() && boggi_sigma_identity(L, lim)) {
    id.tag = ModelID::Tag::Boggi;
    id.summary = "sigma(I) = |I| on all middle cardinalities: unmarked components contract";
    return id;
  }
  bool no_marks_at_nodes = true;
  for (const Rational& c : L.weights())
    if (!(L.gamma() > one - c)) no_marks_at_nodes = false;
  if (L.gamma() <= Rational(1, 2) && no_marks_at_nodes) {
    id.tag = ModelID::Tag::TripleStyle;
    id.summary = "multinodal degenerations without marks at singular points (gamma <= 1/2 "
                 "admits multiplicity >= 3)";
    return id;
  }
  id.tag = ModelID::Tag::Unidentified;
  id.summary = assignment_summary(L, lim);
  return id;
}

HassettDegree hassett_embedding_degree(const std::vector<Rational>& c, const EnumLimits& lim) {
  const int n = static_cast<int>(c.size());
  if (n < 4) throw ValidationError("need at least 4 weights");
  Rational total(0);
  const Rational one(1);
  Rational bound(1, 2);
  for (const Rational& w : c) {
    if (w <= Rational(0) || w >= one)
      throw ValidationError("weights must lie strictly between 0 and 1");
    total += w;
    bound = std::max(bound, one - w);
  }
  if (total <= Rational(2))
    throw ValidationError("weight total " + total.str() + " must exceed 2");

  int d = 2;
  for (;; ++d) {
    Rational gamma = (Rational(d + 1) - total) / Rational(d - 1);
    if (gamma > bound) break;
  }
  Rational gamma = (Rational(d + 1) - total) / Rational(d - 1);
  HassettDegree out{d, gamma, c, false};

  Linearization L(d, n, gamma, c);
  if (is_generic(L, lim)) return out;

  // nudge inside the Hassett chamber: shrink the weights slightly, keeping
  // every subset sum on its side of 1 (sums equal to 1 move below, which
  // leaves the allowed collisions unchanged).
  require_subset_cap(n, lim, "hassett_embedding_degree perturbation");
  Rational delta(1, 1 << 10);
  for (int attempt = 0; attempt < 64; ++attempt, delta /= Rational(2)) {
    std::vector<Rational> w;
    Rational shrink = one - delta;
    Rational total2(0);
    for (int i = 0; i < n; ++i) {
      // slightly asymmetric shrink separates coincident subset sums
      Rational f = one - delta * Rational(i + 1) / Rational(n + 1);
      w.push_back(c[i] * f);
      total2 += w.back();
    }
    (void)shrink;
    Rational gamma2 = (Rational(d + 1) - total2) / Rational(d - 1);
    Rational bound2(1, 2);
    for (const Rational& x : w) bound2 = std::max(bound2, one - x);
    if (!(gamma2 > bound2) || gamma2 >= one) continue;
    Linearization L2(d, n, gamma2, w);
    if (!L2.is_interior() || !is_generic(L2, lim)) continue;
    // Hassett chamber preserved: strict subset sums keep their side
    bool same_chamber_weights = true;
    for_each_canonical_mask(n, [&](std::uint64_t mask) {
      if (!same_chamber_weights) return;
      MarkedSubset I(mask, n);
      for (const MarkedSubset& S : {I, I.complement()}) {
        Rational before(0), after(0);
        for (int i : S.marks()) {
          before += c[i - 1];
          after += w[i - 1];
        }
        if (before > one && !(after > one)) same_chamber_weights = false;
        if (before < one && !(after < one)) same_chamber_weights = false;
        // before == 1 moves below: allowed collisions unchanged
      }
    });
    if (!same_chamber_weights) continue;
    out.gamma = gamma2;
    out.weights = std::move(w);
    out.perturbed = true;
    return out;
  }
  throw Error("failed to find a generic point of the Hassett chamber");
}

Linearization boggi_params(int n, const EnumLimits& lim) {
  if (n < 4) throw ValidationError("boggi_params needs n >= 4");
  const int d = n;
  Rational eps(1, 10L * n);
  for (int attempt = 0; attempt < 64; ++attempt, eps /= Rational(2)) {
    Rational gamma = (Rational(1) + Rational(d) * eps) / Rational(d - 1);
    Linearization L(d, n, gamma, std::vector<Rational>(n, Rational(1) - eps));
    if (!L.is_interior() || !is_generic(L, lim)) continue;
    if (!boggi_sigma_identity(L, lim)) continue;
    return L;
  }
  throw Error("failed to construct a generic point of the Boggi chamber");
}

}  // namespace vgit
