#include "vgit/wallcross.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "vgit/errors.hpp"

namespace vgit {

std::string to_string(CrossingReport::Label label) {
  switch (label) {
    case CrossingReport::Label::DivisorialForward:
      return "DivisorialForward";
    case CrossingReport::Label::DivisorialBackward:
      return "DivisorialBackward";
    case CrossingReport::Label::Flip:
      return "Flip";
    case CrossingReport::Label::RegularForward:
      return "RegularForward";
    case CrossingReport::Label::RegularBackward:
      return "RegularBackward";
    case CrossingReport::Label::BijectiveBothWays:
      return "BijectiveBothWays";
  }
  return "?";
}

namespace {

// Subset DP over the ground set: which (block count capped at 3, sigma sum)
// pairs are achievable by full partitions of each submask. Blocks always
// contain their lowest element, so each partition is generated once.
std::optional<std::vector<MarkedSubset>> partition_search(const MarkedSubset& ground, int target,
                                                          const Linearization& L,
                                                          const EnumLimits& lim) {
  if (target < 0) return std::nullopt;
  const auto marks = ground.marks();
  const int g = static_cast<int>(marks.size());
  if (g < 3) return std::nullopt;
  require_partition_cap(g, lim, "partition search");

  const std::uint64_t full = (g == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << g) - 1);
  // sigma per compact submask, filled by popcount-ascending order via
  // incremental weights would need Gray order; a direct pass is fine here.
  std::vector<int> sig(full + 1, 0);
  {
    std::vector<Rational> weight(full + 1, Rational(0));
    for (std::uint64_t sub = 1; sub <= full; ++sub) {
      int low = std::countr_zero(sub);
      weight[sub] = weight[sub & (sub - 1)] + L.weight(marks[low]);
      sig[sub] = sigma_of_weight(weight[sub], L);
    }
  }

  // achievable[sub] : bitset over blocks (capped at 3) x sums 0..target
  const int cols = target + 1;
  std::vector<std::vector<std::uint8_t>> ach(full + 1,
                                             std::vector<std::uint8_t>(4 * cols, 0));
  ach[0][0] = 1;  // zero blocks, zero sum
  for (std::uint64_t sub = 1; sub <= full; ++sub) {
    int low = std::countr_zero(sub);
    std::uint64_t rest_bits = sub & ~(std::uint64_t{1} << low);
    // block B = {low} | bsub, bsub subset of rest_bits
    std::uint64_t bsub = 0;
    while (true) {
      std::uint64_t B = bsub | (std::uint64_t{1} << low);
      int s = sig[B];
      if (s <= target) {
        std::uint64_t remain = sub & ~B;
        const auto& from = ach[remain];
        auto& to = ach[sub];
        for (int b = 0; b < 4; ++b) {
          int nb = std::min(3, b + 1);
          for (int sum = 0; sum + s <= target; ++sum)
            if (from[b * cols + sum]) to[nb * cols + sum + s] = 1;
        }
      }
      if (bsub == rest_bits) break;
      bsub = (bsub - rest_bits) & rest_bits;
    }
  }
  if (!ach[full][3 * cols + target]) return std::nullopt;

  // reconstruct one witnessing partition
  std::vector<MarkedSubset> blocks;
  std::uint64_t sub = full;
  int bneed = 3, sneed = target;
  while (sub) {
    int low = std::countr_zero(sub);
    std::uint64_t rest_bits = sub & ~(std::uint64_t{1} << low);
    bool advanced = false;
    std::uint64_t bsub = 0;
    while (!advanced) {
      std::uint64_t B = bsub | (std::uint64_t{1} << low);
      int s = sig[B];
      if (s <= sneed) {
        std::uint64_t remain = sub & ~B;
        for (int b = 0; b < 4 && !advanced; ++b) {
          if (std::min(3, b + 1) != bneed) continue;
          if (!ach[remain][b * cols + (sneed - s)]) continue;
          std::vector<int> block_marks;
          for (int j = 0; j < g; ++j)
            if ((B >> j) & 1) block_marks.push_back(marks[j]);
          blocks.push_back(MarkedSubset::of_marks(block_marks, L.n()));
          sub = remain;
          bneed = b;
          sneed -= s;
          advanced = true;
        }
      }
      if (advanced) break;
      if (bsub == rest_bits) break;
      bsub = (bsub - rest_bits) & rest_bits;
    }
    if (!advanced) throw Error("internal: partition reconstruction failed");
  }
  assert(bneed == 0 && sneed == 0);
  return blocks;
}

}  // namespace

std::optional<std::vector<MarkedSubset>> partition_with_sigma_sum(const MarkedSubset& ground,
                                                                  int target,
                                                                  const Linearization& L,
                                                                  const EnumLimits& lim) {
  return partition_search(ground, target, L, lim);
}

CrossingReport classify_crossing(const Wall& W, const Linearization& L_wall,
                                 const EnumLimits& lim) {
  {
    int k = 0;
    if (!on_wall_of(W.subset, L_wall, &k) || k != W.k)
      throw ValidationError("linearization does not lie on the wall " + W.str());
    auto violated = violated_walls(L_wall, lim);
    if (violated.size() != 1)
      throw OnWallError("classify_crossing requires a point on exactly one wall; " +
                            L_wall.str() + " lies on " + std::to_string(violated.size()),
                        std::move(violated));
  }
  CrossingReport rep;
  rep.wall = W;
  const int d = W.d, n = W.n(), k = W.k, m = W.subset.card();
  rep.forward_divisorial = (k == 0 && 3 <= m && m <= n - 2);
  rep.backward_divisorial = (k == d - 1 && 2 <= m && m <= n - 3);
  rep.forward_witness = partition_with_sigma_sum(W.subset, k, L_wall, lim);
  rep.backward_witness =
      partition_with_sigma_sum(W.subset.complement(), d - 1 - k, L_wall, lim);
  rep.forward_contracts_curve = rep.forward_witness.has_value();
  rep.backward_contracts_curve = rep.backward_witness.has_value();

  using Label = CrossingReport::Label;
  if (rep.forward_divisorial)
    rep.label = Label::DivisorialForward;
  else if (rep.backward_divisorial)
    rep.label = Label::DivisorialBackward;
  else if (rep.forward_contracts_curve && rep.backward_contracts_curve)
    rep.label = Label::Flip;
  else if (!rep.forward_contracts_curve && rep.backward_contracts_curve)
    rep.label = Label::RegularForward;
  else if (rep.forward_contracts_curve && !rep.backward_contracts_curve)
    rep.label = Label::RegularBackward;
  else
    rep.label = Label::BijectiveBothWays;

  if (rep.label == Label::Flip) assert(k != 0 && k != d - 1);
  return rep;
}

bool projection_bijective(const Linearization& L, int mark, const EnumLimits& lim) {
  if (L.d() < 2) throw ValidationError("projection undefined: d >= 2 required");
  if (mark < 1 || mark > L.n()) throw ValidationError("projection mark out of range");
  if (!(L.weight(mark) > Rational(1) - L.gamma()))
    throw ValidationError("projection undefined: needs c_i > 1 - gamma, got c_" +
                          std::to_string(mark) + " = " + L.weight(mark).str() + " vs " +
                          (Rational(1) - L.gamma()).str());
  require_generic(L, "projection_bijective", lim);
  MarkedSubset rest = MarkedSubset::of_marks({mark}, L.n()).complement();
  return !partition_with_sigma_sum(rest, L.d() - 1, L, lim).has_value();
}

GluingData gluing_data(const MarkedSubset& I, const Linearization& L) {
  require_generic(L, "gluing_data");
  if (I.empty_set() || I.is_full())
    throw ValidationError("gluing_data needs a nonempty proper subset");
  GluingData g;
  g.subset = I;
  g.sigma_I = sigma(I, L);
  if (g.sigma_I == 0)
    throw ValidationError("sigma(I) = 0: the marks of " + I.str() +
                          " collide and there is no tail factor");
  Rational c_I = L.subset_weight(I);
  g.b = (Rational(1) - L.gamma()) * Rational(g.sigma_I) - (c_I - Rational(1)) + L.gamma();
  g.tail_d = g.sigma_I;
  g.tail_n = I.card() + 1;
  g.tail_gamma = L.gamma();
  for (int i : I.marks()) g.tail_weights.push_back(L.weight(i));
  g.tail_weights.push_back(g.b);
  g.one_factor = (g.sigma_I == L.d());
  // exact cross-section identity of the induced vector
  Rational lhs = Rational(g.tail_d - 1) * g.tail_gamma;
  for (const Rational& w : g.tail_weights) lhs += w;
  if (lhs != Rational(g.tail_d + 1))
    throw Error("internal: induced tail vector misses its cross-section");
  return g;
}

std::optional<Linearization> GluingData::tail_linearization() const {
  if (tail_n < 4 || tail_d < 1) return std::nullopt;
  return Linearization(tail_d, tail_n, tail_gamma, tail_weights);
}

ExteriorReport classify_exterior(const Linearization& L) {
  const Rational zero(0), one(1);
  if (L.is_interior())
    throw ValidationError("linearization is interior; exterior classification needs a "
                          "boundary point");
  auto in_closure = [&] {
    if (L.gamma() < zero || L.gamma() > one) return false;
    for (const Rational& c : L.weights())
      if (c < zero || c > one) return false;
    return true;
  }();
  if (!in_closure)
    throw ValidationError("linearization lies outside the closed cross-section box");

  ExteriorReport rep{ExteriorKind::SLtwoQuotient, 0, "", std::nullopt};
  if (L.gamma() == one) {
    rep.kind = ExteriorKind::SLtwoQuotient;
    rep.detail = "gamma = 1: the quotient is the weighted point-configuration quotient of "
                 "(P^1)^n with weights c";
    return rep;
  }
  if (L.gamma() == zero) {
    rep.kind = ExteriorKind::PointConfigQuotient;
    rep.detail = "gamma = 0: the Chow factor is weightless and the quotient is the "
                 "point-configuration quotient in P^d";
    return rep;
  }
  for (int i = 1; i <= L.n(); ++i) {
    if (L.weight(i) == one) {
      rep.kind = ExteriorKind::ProjectionWall;
      rep.mark = i;
      std::ostringstream os;
      os << "c_" << i << " = 1: the wall-crossing map is projection from mark " << i;
      if (L.d() >= 2) {
        std::vector<Rational> w = L.weights();
        w[i - 1] = w[i - 1] - (one - L.gamma());
        rep.projection_target = Linearization(L.d() - 1, L.n(), L.gamma(), std::move(w));
        os << "; target degree " << (L.d() - 1) << " with c_" << i << " -> "
           << rep.projection_target->weight(i).str();
      } else {
        os << "; d = 1 leaves no projection target";
      }
      rep.detail = os.str();
      return rep;
    }
  }
  for (int i = 1; i <= L.n(); ++i) {
    if (L.weight(i) == zero) {
      rep.kind = ExteriorKind::ForgetfulWall;
      rep.mark = i;
      rep.detail = "c_" + std::to_string(i) + " = 0: mark " + std::to_string(i) +
                   " is forgotten across this wall";
      return rep;
    }
  }
  throw ValidationError("boundary point does not match any exterior wall case");
}

}  // namespace vgit
