#include "vgit/walls.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <sstream>

#include "vgit/errors.hpp"

namespace vgit {

Wall Wall::make(MarkedSubset I, int k, int d) {
  if (!I.proper_nonempty()) throw ValidationError("wall subset must be nonempty and proper");
  if (k < 0 || k > d - 1)
    throw ValidationError("wall level k=" + std::to_string(k) + " out of [0, d-1]");
  if (!I.is_canonical()) {
    I = I.complement();
    k = d - 1 - k;
  }
  return Wall{I, k, d};
}

std::string Wall::str() const {
  std::ostringstream os;
  os << "(" << subset.str() << ", k=" << k << ")";
  return os.str();
}

namespace {

// Feasible gamma interval for the wall (I, k): on the hyperplane,
// c_I = 1 + k(1-gamma), and the interior box demands
//   0 < c_I < |I|  and  0 < c - c_I < n - |I|   with c = d+1-(d-1)gamma.
// Every constraint is affine in gamma; intersect exactly.
// Returns the open interval (lo, 1) or nullopt when empty.
std::optional<Rational> feasible_gamma_lower_bound(int d, int n, int m, int k) {
  // c_I = (1+k) - k*gamma >= 1 on the wall, so c_I > 0 always holds and
  // c_I < m fails outright for m == 1 when k == 0 (c_I == 1).
  Rational lo(0);
  if (k == 0) {
    if (m < 2) return std::nullopt;
  } else {
    // k(1-gamma) < m-1  <=>  gamma > (k-m+1)/k
    lo = std::max(lo, Rational(k - m + 1, k));
  }
  int kc = d - 1 - k;  // complement level
  if (kc == 0) {
    if (n - m < 2) return std::nullopt;
  } else {
    // c - c_I = 1 + kc(1-gamma) < n-m-1+1  <=>  gamma > 1 - (n-m-1)/kc
    lo = std::max(lo, Rational(1) - Rational(n - m - 1, kc));
  }
  if (lo >= Rational(1)) return std::nullopt;
  return lo;
}

Linearization witness_at(const Wall& w, const Rational& gamma,
                         const Rational& in_delta, const Rational& out_delta) {
  const int d = w.d, n = w.n(), m = w.subset.card();
  Rational c_I = Rational(1 + w.k) - Rational(w.k) * gamma;
  Rational c_total = Rational(d + 1) - Rational(d - 1) * gamma;
  Rational c_out = c_total - c_I;
  // Uniform within each side, plus per-mark offsets that cancel within the
  // side so c_I and the cross-section stay exact.
  std::vector<Rational> weights(n, Rational(0));
  auto spread = [&](const std::vector<int>& marks, const Rational& total, const Rational& delta) {
    const long sz = static_cast<long>(marks.size());
    Rational base = total / Rational(sz);
    // offsets j - (sz-1)/2 scaled by delta sum to zero
    for (long j = 0; j < sz; ++j) {
      Rational off = delta * (Rational(2 * j) - Rational(sz - 1)) / Rational(2);
      weights[marks[j] - 1] = base + off;
    }
  };
  spread(w.subset.marks(), c_I, in_delta);
  spread(w.subset.complement().marks(), c_out, out_delta);
  return Linearization(d, n, gamma, std::move(weights));
}

}  // namespace

std::vector<Wall> enumerate_walls(int d, int n, const EnumLimits& lim) {
  if (d < 1 || n < 4) throw ValidationError("enumerate_walls requires d >= 1, n >= 4");
  require_subset_cap(n, lim, "enumerate_walls");
  std::vector<Wall> out;
  for_each_canonical_mask(n, [&](std::uint64_t mask) {
    int m = std::popcount(mask);
    for (int k = 0; k <= d - 1; ++k) {
      if (feasible_gamma_lower_bound(d, n, m, k))
        out.push_back(Wall{MarkedSubset(mask, n), k, d});
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

Linearization wall_witness(const Wall& w) {
  auto lo = feasible_gamma_lower_bound(w.d, w.n(), w.subset.card(), w.k);
  if (!lo) throw ValidationError("wall " + w.str() + " does not meet the interior region");
  Rational gamma = (*lo + Rational(1)) / Rational(2);
  Linearization L = witness_at(w, gamma, Rational(0), Rational(0));
  int k = 0;
  bool on = on_wall_of(w.subset, L, &k);
  assert(on && k == w.k);
  (void)on;
  return L;
}

Linearization exclusive_wall_witness(const Wall& w, const EnumLimits& lim) {
  auto lo = feasible_gamma_lower_bound(w.d, w.n(), w.subset.card(), w.k);
  if (!lo) throw ValidationError("wall " + w.str() + " does not meet the interior region");
  // A generic point of the hyperplane lies on no other wall; spread the
  // weights apart and shrink until exclusivity holds.
  Rational gamma = (*lo + Rational(1)) / Rational(2);
  Rational base_delta(1, 64);
  for (int attempt = 0; attempt < 128; ++attempt, base_delta /= Rational(7)) {
    // Nudge gamma off arithmetic coincidences as attempts grow.
    Rational g = gamma + (attempt % 2 ? base_delta / Rational(3) : Rational(0));
    if (g <= *lo || g >= Rational(1)) continue;
    Rational in_delta = base_delta / Rational(w.subset.card() + 1);
    Rational out_delta = base_delta / Rational(w.n() - w.subset.card() + 2);
    Linearization L = witness_at(w, g, in_delta, out_delta);
    if (!L.is_interior()) continue;
    auto violated = violated_walls(L, lim);
    if (violated.size() == 1 && violated[0].first == w.subset.mask() &&
        violated[0].second == w.k)
      return L;
  }
  throw Error("failed to isolate a witness on exactly the wall " + w.str());
}

std::optional<Rational> symmetric_slice_wall_gamma(int d, int n, int m, int k) {
  if (m < 1 || m > n - 1 || k < 0 || k > d - 1) return std::nullopt;
  // m * c(gamma) = 1 + k(1-gamma) with c(gamma) = (d+1-(d-1)gamma)/n:
  //   gamma (nk - m(d-1)) = n(1+k) - m(d+1)
  Rational den = Rational(n) * Rational(k) - Rational(m) * Rational(d - 1);
  Rational num = Rational(n) * Rational(1 + k) - Rational(m) * Rational(d + 1);
  if (den == Rational(0)) return std::nullopt;
  Rational gamma = num / den;
  if (gamma <= Rational(0) || gamma >= Rational(1)) return std::nullopt;
  if (!Linearization::symmetric(d, n, gamma).is_interior()) return std::nullopt;
  return gamma;
}

ChamberSignature ChamberSignature::of(const Linearization& L, const EnumLimits& lim) {
  require_generic(L, "signature", lim);
  ChamberSignature sig;
  sig.d_ = L.d();
  sig.n_ = L.n();
  if (L.is_symmetric()) {
    sig.symmetric_ = true;
    sig.by_card_.resize(L.n() + 1);
    for (int m = 0; m <= L.n(); ++m)
      sig.by_card_[m] = sigma_of_weight(Rational(m) * L.weight(1), L);
  } else {
    require_subset_cap(L.n(), lim, "signature");
    sig.by_mask_.assign(std::size_t{1} << (L.n() - 1), -1);
    for_each_canonical_subset(L, [&](std::uint64_t mask, const Rational& c_I) {
      sig.by_mask_[mask >> 1] = static_cast<signed char>(sigma_of_weight(c_I, L));
    });
  }
  return sig;
}

int ChamberSignature::sigma_of_card(int card) const {
  if (!symmetric_) throw ValidationError("signature is not in symmetric form");
  return by_card_.at(card);
}

int ChamberSignature::sigma_of(const MarkedSubset& I) const {
  MarkedSubset c = I.canonical();
  if (symmetric_) return by_card_.at(c.card());
  int v = by_mask_.at(c.mask() >> 1);
  assert(v >= 0);
  return v;
}

bool operator==(const ChamberSignature& a, const ChamberSignature& b) {
  if (a.d_ != b.d_ || a.n_ != b.n_) return false;
  if (a.symmetric_ && b.symmetric_) return a.by_card_ == b.by_card_;
  if (!a.symmetric_ && !b.symmetric_) return a.by_mask_ == b.by_mask_;
  const ChamberSignature& card = a.symmetric_ ? a : b;
  const ChamberSignature& mask = a.symmetric_ ? b : a;
  bool eq = true;
  for_each_canonical_mask(mask.n_, [&](std::uint64_t m) {
    if (!eq) return;
    if (mask.by_mask_[m >> 1] != card.by_card_[std::popcount(m)]) eq = false;
  });
  return eq;
}

bool same_chamber(const Linearization& a, const Linearization& b, const EnumLimits& lim) {
  if (!a.same_cross_section(b))
    throw ValidationError("same_chamber requires linearizations on one cross-section");
  return ChamberSignature::of(a, lim) == ChamberSignature::of(b, lim);
}

namespace {

// phi(I, L(t)) = k is affine in t: A + B t = 0 with
//   A = c_I(0) - 1 - k (1 - gamma(0)),  B = (c_I(1) - c_I(0)) + k (gamma(1) - gamma(0)).
std::optional<Rational> crossing_parameter(const Rational& cI0, const Rational& cI1,
                                           const Rational& g0, const Rational& g1, int k) {
  Rational A = cI0 - Rational(1) - Rational(k) * (Rational(1) - g0);
  Rational B = (cI1 - cI0) + Rational(k) * (g1 - g0);
  if (B == Rational(0)) {
    assert(A != Rational(0));  // otherwise an endpoint sits on the wall
    return std::nullopt;
  }
  Rational t = -A / B;
  if (t <= Rational(0) || t >= Rational(1)) return std::nullopt;
  return t;
}

}  // namespace

std::vector<ScanEvent> segment_scan(const Linearization& L0, const Linearization& L1,
                                    const EnumLimits& lim) {
  if (!L0.same_cross_section(L1))
    throw ValidationError("segment_scan requires endpoints on one cross-section");
  require_generic(L0, "segment_scan endpoint", lim);
  require_generic(L1, "segment_scan endpoint", lim);

  const int d = L0.d(), n = L0.n();
  const bool symmetric = L0.is_symmetric() && L1.is_symmetric();
  std::map<Rational, std::vector<Wall>> hits;
  std::map<Rational, std::vector<long>> sizes;

  if (symmetric) {
    const Rational c0 = L0.weight(1), c1 = L1.weight(1);
    for (int m = 1; m <= n - 1; ++m) {
      // class-canonical representative: (m, k) vs (n-m, d-1-k)
      for (int k = 0; k <= d - 1; ++k) {
        if (m * 2 > n) continue;
        if (m * 2 == n && k > d - 1 - k) continue;
        auto t = crossing_parameter(Rational(m) * c0, Rational(m) * c1, L0.gamma(), L1.gamma(), k);
        if (!t) continue;
        hits[*t].push_back(Wall{MarkedSubset::prefix(m, n), k, d});
        // number of subsets in the class pair {m, n-m}
        long binom = 1;
        for (int i = 1; i <= m; ++i) binom = binom * (n - m + i) / i;
        sizes[*t].push_back(binom);
      }
    }
  } else {
    require_subset_cap(n, lim, "segment_scan");
    for_each_canonical_subset2(
        L0, L1, [&](std::uint64_t mask, const Rational& cI0, const Rational& cI1) {
          for (int k = 0; k <= d - 1; ++k) {
            auto t = crossing_parameter(cI0, cI1, L0.gamma(), L1.gamma(), k);
            if (t) hits[*t].push_back(Wall{MarkedSubset(mask, n), k, d});
          }
        });
  }

  std::vector<ScanEvent> events;
  events.reserve(hits.size());
  for (auto& [t, walls] : hits) {
    ScanEvent ev;
    ev.t = t;
    ev.gamma = (Rational(1) - t) * L0.gamma() + t * L1.gamma();
    std::sort(walls.begin(), walls.end());
    ev.walls = std::move(walls);
    ev.symmetric_classes = symmetric;
    if (symmetric) ev.class_sizes = std::move(sizes[t]);
    events.push_back(std::move(ev));
  }
  return events;
}

}  // namespace vgit
