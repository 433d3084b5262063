#include "symvol/algebra/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace symvol {

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (sgn(denominator) == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto is_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  auto to_bigint = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return BigInt(std::string(s), 10);
  };

  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer(text)) {
      throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
    }
    return Rational(to_bigint(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  }
  const BigInt denominator = to_bigint(den);
  if (sgn(denominator) == 0) {
    throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
  }
  return Rational(to_bigint(num), denominator);
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& other) {
  mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), other.value_.get_mpq_t());
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  mpq_sub(value_.get_mpq_t(), value_.get_mpq_t(), other.value_.get_mpq_t());
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  mpq_mul(value_.get_mpq_t(), value_.get_mpq_t(), other.value_.get_mpq_t());
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("Rational: division by zero");
  mpq_div(value_.get_mpq_t(), value_.get_mpq_t(), other.value_.get_mpq_t());
  return *this;
}

Rational operator-(const Rational& a) {
  Rational r;
  mpq_neg(r.value_.get_mpq_t(), a.value_.get_mpq_t());
  return r;
}

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result{1};
  Rational factor = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= factor;
    exponent >>= 1U;
    if (exponent != 0) factor *= factor;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

}  // namespace symvol
