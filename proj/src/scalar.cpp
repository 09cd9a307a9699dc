#include "taylor/scalar.hpp"

#include <cctype>
#include <charconv>
#include <string>

namespace taylor {

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

namespace {

BigInt parse_digits(std::string_view digits) {
  if (digits.empty()) return BigInt(0);
  return BigInt(std::string(digits), 10);
}

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw DomainError("invalid number literal '" + std::string(text) + "'");
  };
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) return fail();

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) return fail();

  Rational result;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (num.empty() || den.empty() || !all_digits(num) || !all_digits(den)) return fail();
    result = Rational(parse_digits(num), parse_digits(den));
  } else {
    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_text = s.substr(e + 1);
      s = s.substr(0, e);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (exp_text.empty() || !all_digits(exp_text)) return fail();
      const auto [ptr, ec] =
          std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
      if (ec != std::errc() || exponent > 10000) return fail();
      if (exp_negative) exponent = -exponent;
    }
    std::string_view int_part = s;
    std::string_view frac_part;
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
      int_part = s.substr(0, dot);
      frac_part = s.substr(dot + 1);
    }
    if ((int_part.empty() && frac_part.empty()) || !all_digits(int_part) || !all_digits(frac_part)) {
      return fail();
    }
    BigInt numerator = parse_digits(std::string(int_part) + std::string(frac_part));
    exponent -= static_cast<long>(frac_part.size());
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    result = exponent < 0 ? Rational(numerator, power) : Rational(BigInt(numerator * power));
  }
  return negative ? -result : result;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::string to_string(const Rational& r) { return r.to_string(); }

std::string to_string(double d) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), d);
  return std::string(buffer, ptr);
}

namespace {
[[noreturn]] void no_transcendental(const char* fn) {
  throw DomainError(std::string(fn) + " is not available over exact rationals; use the f64 realization");
}
}  // namespace

Rational exp(const Rational&) { no_transcendental("exp"); }
Rational sin(const Rational&) { no_transcendental("sin"); }
Rational cos(const Rational&) { no_transcendental("cos"); }
Rational log(const Rational&) { no_transcendental("ln"); }

}  // namespace taylor
