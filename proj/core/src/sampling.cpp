#include "vgit/sampling.hpp"

#include "vgit/errors.hpp"
#include "vgit/sigma.hpp"

namespace vgit {

long Sampler::integer(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

Rational Sampler::rational_in(const Rational& lo, const Rational& hi, long max_den) {
  long q = integer(std::max<long>(2, max_den / 2), max_den);
  // strictly inside (lo, hi): pick p with lo < p/q < hi
  long p_lo = (lo * Rational(q)).floor() + 1;
  long p_hi = (hi * Rational(q)).ceil() - 1;
  if (p_lo > p_hi) {
    // interval narrower than 1/q; refine
    return rational_in(lo, hi, max_den * 4);
  }
  return Rational(integer(p_lo, p_hi), q);
}

Linearization Sampler::interior_point(int d, int n) {
  // feasible gamma: total weight d+1-(d-1)gamma must fall in (0, n)
  Rational glo(0);
  if (d >= 2 && d + 1 > n) glo = Rational(d + 1 - n, d - 1);
  Rational gamma = rational_in(glo, Rational(1));
  Rational total = Rational(d + 1) - Rational(d - 1) * gamma;
  for (int damp = 0;; ++damp) {
    long base = damp * 200;
    std::vector<Rational> raw(n);
    Rational sum(0);
    for (int i = 0; i < n; ++i) {
      raw[i] = Rational(integer(1 + base, 1000 + base));
      sum += raw[i];
    }
    std::vector<Rational> w(n);
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      w[i] = raw[i] * total / sum;
      if (w[i] >= Rational(1)) ok = false;
    }
    if (!ok) continue;  // damping flattens the draw toward total/n < 1
    return Linearization(d, n, gamma, std::move(w));
  }
}

Linearization Sampler::generic_point(int d, int n, const EnumLimits& lim) {
  for (int tries = 0; tries < 256; ++tries) {
    Linearization L = interior_point(d, n);
    if (is_generic(L, lim)) return L;
  }
  throw Error("failed to sample a generic interior point");
}

DualTree Sampler::random_tree(int n) {
  DualTree t = DualTree::single_vertex(n);
  int steps = static_cast<int>(integer(0, std::max(0, n - 2)));
  for (int i = 0; i < steps; ++i) {
    auto next = specializations(t);
    if (next.empty()) break;
    t = next[static_cast<size_t>(integer(0, static_cast<long>(next.size()) - 1))].tree;
  }
  return t;
}

}  // namespace vgit
