#include "vgit/linearization.hpp"

#include <algorithm>
#include <sstream>

#include "vgit/errors.hpp"

namespace vgit {

std::vector<int> MarkedSubset::marks() const {
  std::vector<int> out;
  out.reserve(card());
  for (int i = 1; i <= n_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string MarkedSubset::str() const {
  std::string s = "{";
  bool first = true;
  for (int m : marks()) {
    if (!first) s += ",";
    s += std::to_string(m);
    first = false;
  }
  return s + "}";
}

MarkedSubset MarkedSubset::of_marks(const std::vector<int>& marks, int n) {
  std::uint64_t m = 0;
  for (int i : marks) {
    if (i < 1 || i > n)
      throw ValidationError("mark index " + std::to_string(i) + " out of range 1.." +
                            std::to_string(n));
    m |= std::uint64_t{1} << (i - 1);
  }
  return {m, n};
}

Linearization::Linearization(int d, int n, Rational gamma, std::vector<Rational> weights)
    : d_(d), n_(n), gamma_(std::move(gamma)), weights_(std::move(weights)) {
  if (d_ < 1) throw ValidationError("d must be >= 1");
  if (n_ < 4) throw ValidationError("n must be >= 4");
  if (n_ > 63) throw ValidationError("n must be <= 63");
  if (static_cast<int>(weights_.size()) != n_)
    throw ValidationError("expected " + std::to_string(n_) + " weights, got " +
                          std::to_string(weights_.size()));
  Rational lhs = Rational(d_ - 1) * gamma_;
  for (const Rational& c : weights_) lhs += c;
  Rational residual = lhs - Rational(d_ + 1);
  if (residual != Rational(0))
    throw ValidationError("cross-section identity (d-1)*gamma + sum(c_i) = d+1 violated, residual " +
                          residual.str());
}

Linearization Linearization::symmetric(int d, int n, const Rational& gamma) {
  Rational c = (Rational(d + 1) - Rational(d - 1) * gamma) / Rational(n);
  return Linearization(d, n, gamma, std::vector<Rational>(n, c));
}

Rational Linearization::total_weight() const {
  Rational s = 0;
  for (const Rational& c : weights_) s += c;
  return s;
}

Rational Linearization::subset_weight(const MarkedSubset& I) const {
  Rational s = 0;
  std::uint64_t m = I.mask();
  while (m) {
    int bit = std::countr_zero(m);
    s += weights_[bit];
    m &= m - 1;
  }
  return s;
}

bool Linearization::is_interior() const {
  const Rational zero(0), one(1);
  if (gamma_ <= zero || gamma_ >= one) return false;
  return std::all_of(weights_.begin(), weights_.end(),
                     [&](const Rational& c) { return c > zero && c < one; });
}

bool Linearization::is_symmetric() const {
  return std::all_of(weights_.begin(), weights_.end(),
                     [&](const Rational& c) { return c == weights_[0]; });
}

Linearization Linearization::lerp(const Linearization& a, const Linearization& b,
                                  const Rational& t) {
  if (!a.same_cross_section(b))
    throw ValidationError("cannot interpolate linearizations on different cross-sections");
  Rational s = Rational(1) - t;
  std::vector<Rational> w;
  w.reserve(a.n_);
  for (int i = 0; i < a.n_; ++i) w.push_back(s * a.weights_[i] + t * b.weights_[i]);
  return Linearization(a.d_, a.n_, s * a.gamma_ + t * b.gamma_, std::move(w));
}

std::string Linearization::str() const {
  std::ostringstream os;
  os << "(d=" << d_ << ", n=" << n_ << ", gamma=" << gamma_.str();
  if (is_symmetric()) {
    os << ", c_i=" << weights_[0].str();
  } else {
    os << ", c=[";
    for (int i = 0; i < n_; ++i) {
      if (i) os << ",";
      os << weights_[i].str();
    }
    os << "]";
  }
  os << ")";
  return os.str();
}

}  // namespace vgit
