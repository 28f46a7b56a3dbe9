#include "vgit/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "vgit/errors.hpp"

namespace vgit {

Rational::Rational(long num, long den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.v_ == 0) throw ValidationError("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&] {
    throw ValidationError("malformed rational \"" + std::string(text) +
                          "\" (expected \"p/q\" or \"p\")");
  };
  if (text.empty()) fail();
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  if (!is_int(num) || !is_int(den)) fail();
  if (!num.empty() && num[0] == '+') num.remove_prefix(1);  // mpq_set_str rejects '+'
  if (!den.empty() && den[0] == '+') den.remove_prefix(1);
  mpq_class v;
  if (mpq_set_str(v.get_mpq_t(), (std::string(num) + "/" + std::string(den)).c_str(), 10) != 0)
    fail();
  if (v.get_den() == 0)
    throw ValidationError("rational \"" + std::string(text) + "\" has zero denominator");
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

long Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  if (!q.fits_slong_p()) throw ValidationError("rational floor out of range: " + str());
  return q.get_si();
}

long Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  if (!q.fits_slong_p()) throw ValidationError("rational ceil out of range: " + str());
  return q.get_si();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace vgit
