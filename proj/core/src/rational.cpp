#include "sidon/rational.hpp"

#include <cctype>
#include <charconv>
#include <string>

namespace sidon {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw ParameterError("not an integer: '" + std::string(s) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Integer ipow(std::uint64_t base, unsigned exponent) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), base, exponent);
  return result;
}

unsigned floor_log(std::uint64_t n, std::uint64_t base) {
  if (n < 1 || base < 2) throw ParameterError("floor_log requires n >= 1 and base >= 2");
  unsigned k = 0;
  // n / base avoids overflow of power * base.
  for (std::uint64_t rest = n; rest >= base; rest /= base) ++k;
  return k;
}

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw ParameterError("signed denominator: '" + std::string(text) + "'");
  }
  const Integer den = parse_integer(den_text);
  if (den == 0) throw ParameterError("zero denominator: '" + std::string(text) + "'");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Rational parse_decimal(std::string_view text) {
  if (text.find('/') != std::string_view::npos) return parse_fraction(text);

  std::string_view mantissa = text;
  long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    std::string_view exp_text = text.substr(e + 1);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    const auto* last = exp_text.data() + exp_text.size();
    auto [ptr, ec] = std::from_chars(exp_text.data(), last, exponent);
    if (exp_text.empty() || ec != std::errc() || ptr != last) {
      throw ParameterError("bad exponent in '" + std::string(text) + "'");
    }
  }

  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long fraction_digits = 0;
  bool seen_point = false;
  for (char ch : mantissa) {
    if (ch == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      if (seen_point) ++fraction_digits;
    } else {
      throw ParameterError("not a number: '" + std::string(text) + "'");
    }
  }
  if (digits.empty()) throw ParameterError("not a number: '" + std::string(text) + "'");

  Rational out{Integer(digits, 10)};
  const long scale = exponent - fraction_digits;
  if (scale > 100000 || scale < -100000) {
    throw ParameterError("exponent out of range: '" + std::string(text) + "'");
  }
  const Integer ten_pow = ipow(10, static_cast<unsigned>(scale < 0 ? -scale : scale));
  if (scale >= 0) {
    out *= ten_pow;
  } else {
    out /= ten_pow;
  }
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

std::string to_decimal(const Rational& value, unsigned digits, Rounding rounding) {
  const Integer scale = ipow(10, digits);
  Integer scaled_num = value.get_num() * scale;
  Integer q;
  if (rounding == Rounding::down) {
    mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), value.get_den().get_mpz_t());
  } else {
    mpz_cdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), value.get_den().get_mpz_t());
  }

  const bool negative = q < 0;
  std::string body = Integer(abs(q)).get_str();
  if (digits == 0) return (negative ? "-" : "") + body;
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  body.insert(body.size() - digits, 1, '.');
  return (negative ? "-" : "") + body;
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace sidon
