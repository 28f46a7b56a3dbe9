#pragma once

#include <string>
#include <vector>

#include "vgit/rational.hpp"
#include "vgit/subset.hpp"

namespace vgit {

// A linearization point (gamma, c_1..c_n) on the cross-section
//   (d-1)*gamma + sum c_i = d+1
// for the degree-d quotients. The identity is validated exactly on
// construction; violations are rejected with the exact residual.
//
// Boundary points (gamma or some c_i equal to 0 or 1) are representable but
// flagged non-interior; most operations demand an interior point.
class Linearization {
 public:
  Linearization(int d, int n, Rational gamma, std::vector<Rational> weights);

  // The symmetric point with c_i = (d+1-(d-1)*gamma)/n for all i.
  static Linearization symmetric(int d, int n, const Rational& gamma);

  int d() const { return d_; }
  int n() const { return n_; }
  const Rational& gamma() const { return gamma_; }
  const Rational& weight(int mark) const { return weights_[mark - 1]; }
  const std::vector<Rational>& weights() const { return weights_; }

  Rational total_weight() const;                      // c = sum c_i
  Rational subset_weight(const MarkedSubset& I) const;  // c_I

  // Interior of the cross-section: 0 < gamma < 1 and 0 < c_i < 1.
  bool is_interior() const;
  bool is_symmetric() const;

  // Affine interpolation (1-t)*a + t*b; stays on the cross-section.
  static Linearization lerp(const Linearization& a, const Linearization& b, const Rational& t);

  bool same_cross_section(const Linearization& o) const { return d_ == o.d_ && n_ == o.n_; }

  friend bool operator==(const Linearization&, const Linearization&) = default;

  std::string str() const;

 private:
  int d_;
  int n_;
  Rational gamma_;
  std::vector<Rational> weights_;
};

}  // namespace vgit
