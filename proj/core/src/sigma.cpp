#include "vgit/sigma.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "vgit/errors.hpp"

namespace vgit {

namespace {

void require_interior(const Linearization& L, const char* op) {
  if (!L.is_interior())
    throw ValidationError(std::string(op) +
                          " requires an interior linearization (0 < gamma, c_i < 1); got " +
                          L.str() + "; boundary points route to classify_exterior");
}

}  // namespace

Rational phi_of_weight(const Rational& c_I, const Linearization& L) {
  if (L.gamma() == Rational(1))
    throw ValidationError(
        "phi undefined at gamma = 1 (exterior wall; see classify_exterior)");
  return (c_I - Rational(1)) / (Rational(1) - L.gamma());
}

Rational phi(const MarkedSubset& I, const Linearization& L) {
  return phi_of_weight(L.subset_weight(I), L);
}

int sigma_of_weight(const Rational& c_I, const Linearization& L) {
  const Rational one(1);
  if (c_I < one) return 0;
  if (c_I > L.total_weight() - one) return L.d();
  long s = phi_of_weight(c_I, L).ceil();
  assert(s >= 0 && s <= L.d());
  return static_cast<int>(s);
}

int sigma(const MarkedSubset& I, const Linearization& L) {
  require_interior(L, "sigma");
  return sigma_of_weight(L.subset_weight(I), L);
}

int sigma_by_card(int card, const Linearization& L) {
  require_interior(L, "sigma");
  if (!L.is_symmetric())
    throw ValidationError("sigma_by_card requires symmetric weights");
  return sigma_of_weight(Rational(card) * L.weight(1), L);
}

bool on_wall_of(const MarkedSubset& I, const Linearization& L, int* k_out) {
  const Rational one(1);
  Rational c_I = L.subset_weight(I);
  if (c_I < one || c_I > L.total_weight() - one) return false;
  Rational p = phi_of_weight(c_I, L);
  if (!p.is_integer()) return false;
  long k = p.floor();
  assert(k >= 0 && k <= L.d() - 1);
  if (k_out) *k_out = static_cast<int>(k);
  return true;
}

std::vector<std::pair<std::uint64_t, int>> violated_walls(const Linearization& L,
                                                          const EnumLimits& lim) {
  require_interior(L, "wall detection");
  std::vector<std::pair<std::uint64_t, int>> out;
  const int n = L.n();
  if (L.is_symmetric()) {
    // phi depends only on |I|; expand violating cardinality classes to
    // canonical masks only when n is small enough, else report one
    // representative per class.
    for (int m = 1; m <= n - 1; ++m) {
      Rational c_I = Rational(m) * L.weight(1);
      int k = 0;
      MarkedSubset rep = MarkedSubset::prefix(m, n);
      if (!on_wall_of(rep, L, &k)) continue;
      if (n <= lim.subset_bits) {
        for_each_canonical_mask(n, [&](std::uint64_t mask) {
          MarkedSubset s{mask, n};
          if (s.card() == m)
            out.emplace_back(mask, k);
          else if (s.card() == n - m && m != n - m)
            out.emplace_back(mask, L.d() - 1 - k);
        });
      } else {
        out.emplace_back(rep.mask(), k);
      }
      (void)c_I;
    }
  } else {
    require_subset_cap(n, lim, "wall detection");
    for_each_canonical_subset(L, [&](std::uint64_t mask, const Rational& c_I) {
      const Rational one(1);
      if (c_I < one || c_I > L.total_weight() - one) return;
      Rational p = phi_of_weight(c_I, L);
      if (!p.is_integer()) return;
      out.emplace_back(mask, static_cast<int>(p.floor()));
    });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_generic(const Linearization& L, const EnumLimits& lim) {
  require_interior(L, "is_generic");
  if (L.is_symmetric()) {
    for (int m = 1; m <= L.n() - 1; ++m)
      if (on_wall_of(MarkedSubset::prefix(m, L.n()), L)) return false;
    return true;
  }
  require_subset_cap(L.n(), lim, "is_generic");
  bool generic = true;
  for_each_canonical_subset(L, [&](std::uint64_t, const Rational& c_I) {
    if (!generic) return;
    const Rational one(1);
    if (c_I < one || c_I > L.total_weight() - one) return;
    if (phi_of_weight(c_I, L).is_integer()) generic = false;
  });
  return generic;
}

void require_generic(const Linearization& L, const char* op, const EnumLimits& lim) {
  require_interior(L, op);
  auto violated = violated_walls(L, lim);
  if (violated.empty()) return;
  std::ostringstream os;
  os << op << " requires a generic linearization, but " << L.str() << " lies on "
     << violated.size() << " wall hyperplane(s):";
  size_t shown = 0;
  for (const auto& [mask, k] : violated) {
    if (shown++ == 8) {
      os << " ...";
      break;
    }
    os << " (" << MarkedSubset(mask, L.n()).str() << ", k=" << k << ")";
  }
  throw OnWallError(os.str(), std::move(violated));
}

int SigmaOracle::sigma_mask(std::uint64_t mask) {
  auto it = memo_.find(mask);
  if (it != memo_.end()) return it->second;
  int s = vgit::sigma(MarkedSubset(mask, L_.n()), L_);
  memo_.emplace(mask, s);
  return s;
}

}  // namespace vgit
