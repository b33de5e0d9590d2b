#include "torsionlab/rational.hpp"

#include <cctype>
#include <ostream>

#include "torsionlab/errors.hpp"

namespace torsionlab {

Rational::Rational(long num, long den) {
  if (den == 0) fail(errc::bad_args, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
  if (s.empty()) fail(errc::parse_error, "empty rational literal");
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '-' && ch != '/')
      fail(errc::parse_error, "bad rational literal: " + s);
  }
  mpq_class v;
  if (v.set_str(s, 10) != 0) fail(errc::parse_error, "bad rational literal: " + s);
  if (v.get_den() == 0) fail(errc::parse_error, "zero denominator in rational literal: " + s);
  v.canonicalize();
  return Rational(v);
}

std::string Rational::to_string() const {
  if (is_integer()) return num_string();
  return num_string() + "/" + den_string();
}

Rational Rational::abs() const {
  Rational r(*this);
  r.v_ = ::abs(r.v_);
  return r;
}

long Rational::to_long() const {
  if (!is_integer()) fail(errc::non_integer_ratio, "value " + to_string() + " is not an integer");
  if (!v_.get_num().fits_slong_p()) fail(errc::bad_args, "integer out of range: " + to_string());
  return v_.get_num().get_si();
}

Rational Rational::operator-() const {
  Rational r(*this);
  r.v_ = -r.v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(errc::bad_args, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational pow(const Rational& r, long e) {
  if (e < 0) {
    if (r.is_zero()) fail(errc::bad_args, "zero to a negative power");
    return pow(Rational(1) / r, -e);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), r.raw().get_num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), r.raw().get_den().get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(mpq_class(num, den));
}

Rational binomial(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(mpq_class(b));
}

Rational factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace torsionlab
