#include "neutro/rational.hpp"

#include <cctype>

#include "neutro/error.hpp"

namespace neutro {

const char* error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Usage: return "usage";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Shape: return "shape";
    case ErrorKind::SizeGuard: return "size-guard";
    case ErrorKind::NotFound: return "not-found";
    case ErrorKind::Domain: return "domain";
  }
  return "unknown";
}

std::string format_rational(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();

  BigInt rest = den;
  unsigned twos = 0, fives = 0;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  if (rest != 1) return num.str() + "/" + den.str();

  const unsigned digits = std::max(twos, fives);
  BigInt scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  BigInt scaled = num * (scale / den);
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;

  std::string text = scaled.str();
  if (text.size() <= digits) text.insert(0, digits + 1 - text.size(), '0');
  text.insert(text.size() - digits, ".");
  return negative ? "-" + text : text;
}

namespace {

BigInt parse_digits(std::string_view digits) {
  BigInt out = 0;
  for (char c : digits) out = out * 10 + (c - '0');
  return out;
}

bool all_digits(std::string_view s) {
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_unsigned_rational(std::string_view text, std::size_t offset) {
  if (text.empty()) throw ParseError("expected a number", offset);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (num.empty() || !all_digits(num)) throw ParseError("malformed numerator", offset);
    if (den.empty() || !all_digits(den)) throw ParseError("malformed denominator", offset + slash + 1);
    BigInt d = parse_digits(den);
    if (d == 0) throw ParseError("zero denominator", offset + slash + 1);
    return Rational(parse_digits(num), d);
  }

  auto dot = text.find('.');
  auto whole = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (!all_digits(whole)) {
    for (std::size_t i = 0; i < whole.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(whole[i])))
        throw ParseError(std::string("unexpected character '") + whole[i] + "'", offset + i);
  }
  if (!all_digits(frac)) {
    for (std::size_t i = 0; i < frac.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(frac[i])))
        throw ParseError(std::string("unexpected character '") + frac[i] + "'", offset + dot + 1 + i);
  }
  if (whole.empty() && frac.empty()) throw ParseError("expected digits", offset);

  BigInt scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  BigInt value = parse_digits(whole) * scale + parse_digits(frac);
  return Rational(value, scale);
}

Rational parse_rational(std::string_view text, std::size_t offset) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    Rational magnitude = parse_unsigned_rational(text.substr(1), offset + 1);
    return text.front() == '-' ? Rational(-magnitude) : magnitude;
  }
  return parse_unsigned_rational(text, offset);
}

}  // namespace neutro
