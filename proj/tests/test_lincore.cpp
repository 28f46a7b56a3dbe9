#include <doctest.h>

#include "vgit/errors.hpp"
#include "vgit/sampling.hpp"
#include "vgit/sigma.hpp"

using namespace vgit;

namespace {

Linearization sym519(const Rational& gamma) { return Linearization::symmetric(5, 19, gamma); }

// the piecewise sigma table at gamma = 4/9 + eps for small eps > 0
int table_plus(int k) {
  if (k <= 4) return 0;
  if (k <= 7) return 1;
  if (k <= 9) return 2;
  if (k <= 11) return 3;
  if (k <= 14) return 4;
  return 5;
}

}  // namespace

TEST_CASE("cross-section identity is validated exactly") {
  CHECK_NOTHROW(Linearization::symmetric(5, 19, Rational(4, 9)));
  std::vector<Rational> w(19, Rational(2, 9));
  w[0] = Rational(1, 5);  // breaks the identity by 2/9 - 1/5 = 1/45
  CHECK_THROWS_WITH_AS(Linearization(5, 19, Rational(4, 9), w).str(),
                       doctest::Contains("residual -1/45"), ValidationError);
}

TEST_CASE("interior flag tracks the open box") {
  CHECK(sym519(Rational(4, 9)).is_interior());
  CHECK_FALSE(Linearization::symmetric(9, 9, Rational(1)).is_interior());   // gamma = 1
  CHECK_FALSE(Linearization::symmetric(9, 9, Rational(1, 8)).is_interior());  // c_i = 1
}

TEST_CASE("phi vanishes exactly when the subset weight is 1") {
  // d=9, n=9 symmetric at gamma = 11/16 has every pair weight exactly 1
  Linearization L = Linearization::symmetric(9, 9, Rational(11, 16));
  CHECK(L.weight(1) == Rational(1, 2));
  CHECK(phi(MarkedSubset::prefix(2, 9), L) == Rational(0));
  // weight exactly 1 at any interior point
  CHECK(phi_of_weight(Rational(1), sym519(Rational(1, 2))) == Rational(0));
}

TEST_CASE("closed form of the symmetric flip slice: phi(I_k) = (2k-9)/5 at gamma = 4/9") {
  Linearization L = sym519(Rational(4, 9));
  CHECK(L.weight(1) == Rational(2, 9));
  for (int k = 1; k <= 18; ++k) {
    // independent closed form from the cross-section identity
    Rational expect = Rational(2 * k - 9, 5);
    CHECK(phi(MarkedSubset::prefix(k, 19), L) == expect);
  }
  CHECK(phi(MarkedSubset::prefix(7, 19), L) == Rational(1));  // on the wall
}

TEST_CASE("the documented near-wall value phi(I_7) = 94748/94829") {
  Linearization L = sym519(Rational(4, 9) + Rational(1, 1000));
  CHECK(phi(MarkedSubset::prefix(7, 19), L) == Rational(94748, 94829));
  CHECK(sigma_by_card(7, L) == 1);
}

TEST_CASE("phi rejects gamma = 1") {
  std::vector<Rational> w(9, Rational(2, 9));
  Linearization L(9, 9, Rational(1), w);
  CHECK_THROWS_AS(phi(MarkedSubset::prefix(2, 9), L), ValidationError);
}

TEST_CASE("sigma edge values: empty set gives 0, full set gives d") {
  Linearization L = sym519(Rational(4, 9) + Rational(1, 1000));
  CHECK(sigma(MarkedSubset::empty(19), L) == 0);
  CHECK(sigma(MarkedSubset::full(19), L) == 5);
}

TEST_CASE("sigma table on both sides of the gamma = 4/9 wall (d=5, n=19)") {
  Linearization plus = sym519(Rational(4, 9) + Rational(1, 1000));
  Linearization minus = sym519(Rational(4, 9) - Rational(1, 1000));
  for (int k = 1; k <= 18; ++k) {
    CHECK(sigma_by_card(k, plus) == table_plus(k));
    int expected_minus = table_plus(k);
    if (k == 7) expected_minus = 2;
    if (k == 12) expected_minus = 3;
    CHECK(sigma_by_card(k, minus) == expected_minus);
    // the cardinality shortcut agrees with a literal subset evaluation
    CHECK(sigma(MarkedSubset::prefix(k, 19), plus) == table_plus(k));
  }
}

TEST_CASE("is_generic spots the flip wall and clears its neighbours") {
  CHECK_FALSE(is_generic(sym519(Rational(4, 9))));
  CHECK(is_generic(sym519(Rational(4, 9) + Rational(1, 1000))));
  CHECK(is_generic(Linearization::symmetric(9, 9, Rational(2, 5))));
  CHECK_FALSE(is_generic(Linearization::symmetric(9, 9, Rational(11, 16))));
}

TEST_CASE("violated_walls reports the crossing hyperplanes canonically") {
  auto v = violated_walls(sym519(Rational(4, 9)));
  REQUIRE_FALSE(v.empty());
  // every violated subset has size 7 or 12 and the matching level
  for (const auto& [mask, k] : v) {
    MarkedSubset I(mask, 19);
    CHECK(I.contains(1));
    CHECK((I.card() == 7 || I.card() == 12));
    CHECK(k == (I.card() == 7 ? 1 : 3));
  }
}

TEST_CASE("require_generic throws OnWallError carrying the hyperplanes") {
  CHECK_THROWS_AS(require_generic(sym519(Rational(4, 9)), "test"), OnWallError);
  try {
    require_generic(sym519(Rational(4, 9)), "test");
  } catch (const OnWallError& e) {
    CHECK_FALSE(e.walls.empty());
  }
}

TEST_CASE("property: subadditivity over random disjoint families") {
  Sampler sampler(11);
  for (int trial = 0; trial < 600; ++trial) {
    int n = static_cast<int>(sampler.integer(4, 12));
    int d = static_cast<int>(sampler.integer(1, 9));
    Linearization L = sampler.interior_point(d, n);
    // random disjoint family
    int m = static_cast<int>(sampler.integer(2, 4));
    std::vector<MarkedSubset> parts;
    std::uint64_t used = 0;
    for (int j = 0; j < m; ++j) {
      std::uint64_t pick = 0;
      for (int i = 0; i < n; ++i)
        if (!((used >> i) & 1) && sampler.integer(0, 2) == 0) pick |= std::uint64_t{1} << i;
      used |= pick;
      parts.emplace_back(pick, n);
    }
    MarkedSubset whole(used, n);
    int sum = 0;
    for (const auto& p : parts) sum += sigma(p, L);
    CHECK(sigma(whole, L) >= sum);
  }
}

TEST_CASE("property: additivity at generic points, sigma range, heavy bound") {
  Sampler sampler(13);
  for (int trial = 0; trial < 400; ++trial) {
    int n = static_cast<int>(sampler.integer(4, 12));
    int d = static_cast<int>(sampler.integer(1, 9));
    Linearization L = sampler.generic_point(d, n);
    for (int rep = 0; rep < 8; ++rep) {
      std::uint64_t mask = sampler.integer(0, (1L << n) - 1);
      MarkedSubset I(mask, n);
      int s = sigma(I, L);
      CHECK(s >= 0);
      CHECK(s <= d);
      CHECK(sigma(I.complement(), L) == d - s);
      if (s == d) CHECK(L.subset_weight(I) > L.total_weight() - Rational(1));
    }
  }
}

TEST_CASE("property: wall residuals are affine along segments of the cross-section") {
  // segment_scan solves c_I(t) - 1 - k (1 - gamma(t)) = 0; that residual is
  // affine in t (phi itself is a ratio of affine functions once gamma moves).
  Sampler sampler(17);
  auto residual = [](const MarkedSubset& I, const Linearization& L, int k) {
    return L.subset_weight(I) - Rational(1) - Rational(k) * (Rational(1) - L.gamma());
  };
  for (int trial = 0; trial < 200; ++trial) {
    int n = static_cast<int>(sampler.integer(4, 10));
    int d = static_cast<int>(sampler.integer(1, 7));
    Linearization a = sampler.interior_point(d, n);
    Linearization b = sampler.interior_point(d, n);
    Linearization mid = Linearization::lerp(a, b, Rational(1, 2));
    std::uint64_t mask = sampler.integer(1, (1L << n) - 2);
    MarkedSubset I(mask, n);
    int k = static_cast<int>(sampler.integer(0, d - 1));
    CHECK(residual(I, mid, k) == (residual(I, a, k) + residual(I, b, k)) / Rational(2));
  }
}

TEST_CASE("property: phi is affine along constant-gamma segments") {
  Sampler sampler(19);
  for (int trial = 0; trial < 200; ++trial) {
    int n = static_cast<int>(sampler.integer(4, 10));
    int d = static_cast<int>(sampler.integer(1, 7));
    Linearization a = sampler.interior_point(d, n);
    // move weight between the first two marks keeping gamma and the total
    Rational shift = a.weight(1) / Rational(3);
    std::vector<Rational> w = a.weights();
    w[0] -= shift;
    w[1] += shift;
    Linearization b(d, n, a.gamma(), std::move(w));
    Linearization mid = Linearization::lerp(a, b, Rational(1, 2));
    std::uint64_t mask = sampler.integer(1, (1L << n) - 2);
    MarkedSubset I(mask, n);
    CHECK(phi(I, mid) == (phi(I, a) + phi(I, b)) / Rational(2));
  }
}
