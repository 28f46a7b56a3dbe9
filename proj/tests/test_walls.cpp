#include <doctest.h>

#include <algorithm>
#include <set>

#include "vgit/errors.hpp"
#include "vgit/sampling.hpp"
#include "vgit/walls.hpp"

using namespace vgit;

TEST_CASE("wall canonicalization identifies complements") {
  Wall w = Wall::make(MarkedSubset::of_marks({2, 3, 4}, 6), 0, 3);
  CHECK(w.subset == MarkedSubset::of_marks({1, 5, 6}, 6));
  CHECK(w.k == 2);
  auto [comp, ck] = w.complement_presentation();
  CHECK(comp == MarkedSubset::of_marks({2, 3, 4}, 6));
  CHECK(ck == 0);
}

TEST_CASE("d=1, n=4 has exactly the three pair walls") {
  auto walls = enumerate_walls(1, 4);
  REQUIRE(walls.size() == 3);
  std::set<std::uint64_t> masks;
  for (const auto& w : walls) {
    CHECK(w.k == 0);
    CHECK(w.subset.card() == 2);
    CHECK(w.subset.contains(1));
    masks.insert(w.subset.mask());
  }
  CHECK(masks.size() == 3);  // {1,2}, {1,3}, {1,4}
}

TEST_CASE("singleton and cosingleton walls never meet the interior region") {
  for (auto [d, n] : {std::pair{1, 4}, {2, 5}, {3, 6}, {5, 19}}) {
    for (const auto& w : enumerate_walls(d, n)) {
      CHECK(w.subset.card() >= 2);
      CHECK(w.subset.card() <= n - 2);
    }
  }
}

TEST_CASE("wall counts at desk scale") {
  CHECK(enumerate_walls(1, 5).size() == 10);  // sizes 2,3 containing mark 1
  CHECK(enumerate_walls(3, 6).size() == 75);  // 25 canonical subsets x 3 levels
  CHECK(enumerate_walls(2, 4).size() == 6);   // 3 pair subsets x 2 levels
}

TEST_CASE("no wall is emitted together with its complement presentation") {
  for (auto [d, n] : {std::pair{2, 5}, {3, 6}}) {
    auto walls = enumerate_walls(d, n);
    std::set<std::pair<std::uint64_t, int>> seen;
    for (const auto& w : walls) seen.insert({w.subset.mask(), w.k});
    for (const auto& w : walls) {
      auto [comp, ck] = w.complement_presentation();
      CHECK_FALSE(seen.count({comp.mask(), ck}));
    }
  }
}

TEST_CASE("every emitted wall carries an interior witness, checked by substitution") {
  for (auto [d, n] : {std::pair{1, 4}, {2, 5}, {3, 6}, {5, 8}}) {
    for (const auto& w : enumerate_walls(d, n)) {
      Linearization L = wall_witness(w);
      CHECK(L.is_interior());
      int k = -1;
      CHECK(on_wall_of(w.subset, L, &k));
      CHECK(k == w.k);
    }
  }
}

TEST_CASE("exclusive witnesses avoid all other walls") {
  for (auto [d, n] : {std::pair{1, 4}, {3, 6}}) {
    for (const auto& w : enumerate_walls(d, n)) {
      Linearization L = exclusive_wall_witness(w);
      auto violated = violated_walls(L);
      REQUIRE(violated.size() == 1);
      CHECK(violated[0].first == w.subset.mask());
      CHECK(violated[0].second == w.k);
    }
  }
}

TEST_CASE("symmetric slice gammas of the d=n=9 family") {
  CHECK(symmetric_slice_wall_gamma(9, 9, 2, 1) == Rational(2, 7));
  CHECK(symmetric_slice_wall_gamma(9, 9, 3, 2) == Rational(1, 2));
  CHECK(symmetric_slice_wall_gamma(9, 9, 2, 0) == Rational(11, 16));
  CHECK(symmetric_slice_wall_gamma(9, 9, 3, 0) == Rational(7, 8));
  CHECK(symmetric_slice_wall_gamma(9, 9, 4, 0) == Rational(31, 32));
  CHECK(symmetric_slice_wall_gamma(9, 9, 4, 2) == Rational(13, 14));
  CHECK(symmetric_slice_wall_gamma(9, 9, 4, 1) == Rational(22, 23));
  // the pair weight hits 1 at gamma = 1/8, so the slice is interior above it
  CHECK_FALSE(Linearization::symmetric(9, 9, Rational(1, 8)).is_interior());
  CHECK(Linearization::symmetric(9, 9, Rational(1, 8) + Rational(1, 100)).is_interior());
}

TEST_CASE("signature reproduces the flip table and determines complements") {
  Linearization plus = Linearization::symmetric(5, 19, Rational(4, 9) + Rational(1, 1000));
  ChamberSignature sig = ChamberSignature::of(plus);
  CHECK(sig.symmetric());
  CHECK(sig.sigma_of_card(7) == 1);
  CHECK(sig.sigma_of_card(12) == 4);
  // complement half is derived
  MarkedSubset I = MarkedSubset::prefix(7, 19);
  CHECK(sig.sigma_of(I.complement()) == 5 - sig.sigma_of(I));
  CHECK_THROWS_AS(ChamberSignature::of(Linearization::symmetric(5, 19, Rational(4, 9))),
                  OnWallError);
}

TEST_CASE("same_chamber on the d=n=9 slice") {
  auto sym = [](long p, long q) { return Linearization::symmetric(9, 9, Rational(p, q)); };
  CHECK(same_chamber(sym(3, 10), sym(3, 10)));
  CHECK(same_chamber(sym(3, 10), sym(9, 20)));       // both inside (2/7, 1/2)
  CHECK_FALSE(same_chamber(sym(3, 10), sym(3, 5)));  // crosses gamma = 1/2
}

TEST_CASE("segment_scan: degenerate segment yields no events") {
  Linearization L = Linearization::symmetric(9, 9, Rational(3, 10));
  CHECK(segment_scan(L, L).empty());
}

TEST_CASE("segment_scan rejects on-wall endpoints") {
  Linearization on = Linearization::symmetric(5, 19, Rational(4, 9));
  Linearization off = Linearization::symmetric(5, 19, Rational(9, 20));
  CHECK_THROWS_AS(segment_scan(on, off), OnWallError);
}

TEST_CASE("segment_scan of the d=n=9 symmetric slice") {
  auto sym = [](long p, long q) { return Linearization::symmetric(9, 9, Rational(p, q)); };
  auto events = segment_scan(sym(3, 10), sym(999, 1000));
  REQUIRE_FALSE(events.empty());
  std::vector<Rational> gammas;
  for (const auto& ev : events) gammas.push_back(ev.gamma);
  CHECK(std::is_sorted(gammas.begin(), gammas.end()));
  auto has = [&](long p, long q) {
    return std::find(gammas.begin(), gammas.end(), Rational(p, q)) != gammas.end();
  };
  CHECK(has(1, 2));
  CHECK(has(11, 16));
  CHECK(has(7, 8));
  CHECK(has(31, 32));
  // unlabeled stability-only walls are reported, not suppressed
  CHECK(has(13, 14));
  CHECK(has(22, 23));
  CHECK(has(4, 5));
  // nothing inside the open chamber (2/7, 1/2)
  for (const auto& g : gammas) CHECK_FALSE((g > Rational(2, 7) && g < Rational(1, 2)));
  // scanning inside one chamber sees nothing; widening to 27/100 picks up 2/7
  CHECK(segment_scan(sym(29, 100), sym(3, 10)).empty());
  auto low = segment_scan(sym(27, 100), sym(3, 10));
  REQUIRE(low.size() == 1);
  CHECK(low[0].gamma == Rational(2, 7));
}

TEST_CASE("segment_scan groups simultaneous hyperplanes (gamma = 4/5)") {
  auto sym = [](long p, long q) { return Linearization::symmetric(9, 9, Rational(p, q)); };
  auto events = segment_scan(sym(3, 10), sym(999, 1000));
  bool found = false;
  for (const auto& ev : events) {
    if (ev.gamma != Rational(4, 5)) continue;
    found = true;
    // classes (3,1) and (4,3) cross together
    REQUIRE(ev.walls.size() == 2);
    CHECK(ev.symmetric_classes);
    CHECK(ev.walls[0].subset.card() == 3);
    CHECK(ev.walls[0].k == 1);
    CHECK(ev.walls[1].subset.card() == 4);
    CHECK(ev.walls[1].k == 3);
  }
  CHECK(found);
}

TEST_CASE("segment_scan of the flip slice isolates the gamma = 4/9 event") {
  auto sym = [](const Rational& g) { return Linearization::symmetric(5, 19, g); };
  Rational center(4, 9), eps(1, 100);
  auto events = segment_scan(sym(center - eps), sym(center + eps));
  REQUIRE(events.size() == 1);
  CHECK(events[0].gamma == center);
  REQUIRE(events[0].walls.size() == 1);
  CHECK(events[0].walls[0].subset.card() == 7);
  CHECK(events[0].walls[0].k == 1);
  CHECK(events[0].symmetric_classes);
}

TEST_CASE("segment_scan is invariant under reparameterization") {
  Sampler sampler(23);
  for (int trial = 0; trial < 30; ++trial) {
    int n = static_cast<int>(sampler.integer(4, 8));
    int d = static_cast<int>(sampler.integer(1, 5));
    Linearization a = sampler.generic_point(d, n);
    Linearization b = sampler.generic_point(d, n);
    auto fwd = segment_scan(a, b);
    auto rev = segment_scan(b, a);
    REQUIRE(fwd.size() == rev.size());
    for (size_t i = 0; i < fwd.size(); ++i) {
      const auto& f = fwd[i];
      const auto& r = rev[rev.size() - 1 - i];
      CHECK(f.t == Rational(1) - r.t);
      CHECK(f.walls == r.walls);
    }
  }
}

TEST_CASE("empty scans certify equal signatures and conversely") {
  Sampler sampler(29);
  int equal_seen = 0, crossing_seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int n = static_cast<int>(sampler.integer(4, 10));
    int d = static_cast<int>(sampler.integer(1, 6));
    Linearization a = sampler.generic_point(d, n);
    Linearization b = sampler.generic_point(d, n);
    bool no_crossing = segment_scan(a, b).empty();
    bool equal = same_chamber(a, b);
    CHECK(no_crossing == equal);
    (equal ? equal_seen : crossing_seen)++;
  }
  CHECK(crossing_seen > 0);  // the trials actually exercised crossings
}

TEST_CASE("every random-segment event lies on an emitted wall (d=1, n=4)") {
  auto walls = enumerate_walls(1, 4);
  Sampler sampler(31);
  for (int trial = 0; trial < 200; ++trial) {
    Linearization a = sampler.generic_point(1, 4);
    Linearization b = sampler.generic_point(1, 4);
    for (const auto& ev : segment_scan(a, b))
      for (const auto& w : ev.walls)
        CHECK(std::find(walls.begin(), walls.end(), w) != walls.end());
  }
}
