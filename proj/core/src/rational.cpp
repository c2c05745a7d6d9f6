#include "cantor/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace cantor {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  Integer value(std::string(s), 10);
  return negative ? Integer(-value) : value;
}

Integer pow10(unsigned long exponent) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
  return out;
}

// Decimal literal such as "-0.125", "3", "1e-6", "2.5E+3".
Rational parse_decimal(std::string_view s) {
  std::string_view mantissa = s;
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = s.substr(0, e);
    Integer exp = parse_integer(s.substr(e + 1));
    if (!exp.fits_slong_p()) throw std::invalid_argument("exponent out of range");
    exponent = exp.get_si();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long frac_len = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = mantissa.substr(0, dot);
    std::string_view frac_part = mantissa.substr(dot + 1);
    if ((!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)) ||
        (int_part.empty() && frac_part.empty())) {
      throw std::invalid_argument("malformed decimal: '" + std::string(s) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    frac_len = static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(mantissa)) {
      throw std::invalid_argument("malformed number: '" + std::string(s) + "'");
    }
    digits = std::string(mantissa);
  }
  mpq_class value{Integer(digits, 10)};
  long scale = exponent - frac_len;
  if (scale > 0) {
    value *= pow10(static_cast<unsigned long>(scale));
  } else if (scale < 0) {
    value /= pow10(static_cast<unsigned long>(-scale));
  }
  value.canonicalize();
  if (negative) value = -value;
  return Rational(value);
}

}  // namespace

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty number");

  if (text.rfind("2^", 0) == 0) {
    Integer exp = parse_integer(text.substr(2));
    if (!exp.fits_slong_p()) throw std::invalid_argument("exponent out of range");
    return pow2(exp.get_si());
  }
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  return parse_decimal(text);
}

Rational Rational::pow2(long exponent) {
  mpq_class value(1);
  if (exponent >= 0) {
    mpq_mul_2exp(value.get_mpq_t(), value.get_mpq_t(), static_cast<mp_bitcnt_t>(exponent));
  } else {
    mpq_div_2exp(value.get_mpq_t(), value.get_mpq_t(), static_cast<mp_bitcnt_t>(-exponent));
  }
  return Rational(value);
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  mpq_class scaled = abs(value_) * pow10(static_cast<unsigned long>(digits));
  scaled += mpq_class(1, 2);
  Integer rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  std::string body = rounded.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  if (sgn(value_) < 0 && rounded != 0) body.insert(0, "-");
  return body;
}

double Rational::log() const {
  if (sgn(value_) <= 0) throw std::domain_error("log of non-positive rational");
  auto log_z = [](const Integer& z) {
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
  };
  return log_z(value_.get_num()) - log_z(value_.get_den());
}

Rational& Rational::operator/=(const Rational& o) {
  if (sgn(o.value_) == 0) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational pow(const Rational& base, std::size_t exponent) {
  mpq_class out;
  mpz_pow_ui(out.get_num_mpz_t(), base.value().get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.value().get_den_mpz_t(), exponent);
  return Rational(out);
}

Integer floor(const Rational& value) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), value.value().get_num_mpz_t(), value.value().get_den_mpz_t());
  return out;
}

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }

const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::size_t hash_value(const Rational& value) {
  auto limbs = [](const mpz_t z) {
    std::size_t h = static_cast<std::size_t>(mpz_sgn(z)) + 0x9e3779b97f4a7c15ULL;
    const std::size_t n = mpz_size(z);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= static_cast<std::size_t>(mpz_getlimbn(z, static_cast<mp_size_t>(i))) +
           0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  };
  std::size_t h = limbs(value.value().get_num_mpz_t());
  return h ^ (limbs(value.value().get_den_mpz_t()) * 0x100000001b3ULL);
}

}  // namespace cantor
