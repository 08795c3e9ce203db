#include "gapred/rational.hpp"

#include <cctype>
#include <limits>

#include "gapred/error.hpp"

namespace gapred {

namespace {

BigInt parse_integer(std::string_view text) {
  if (text.empty()) throw ParseError("empty integer in rational", 0);
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw ParseError("missing digits in rational '" + std::string(text) + "'", 0);
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("invalid character in rational '" + std::string(text) + "'", 0);
    value = value * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const BigInt num = parse_integer(text.substr(0, slash));
  const BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw DomainError("zero denominator in rational '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

BigInt floor(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;  // truncates toward zero
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

BigInt ceil(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;
  if (num % den != 0 && num > 0) q += 1;
  return q;
}

bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw DomainError("integer " + v.str() + " does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

GapParams::GapParams(Rational alpha, Rational beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_ < 0 || !(alpha_ < beta_) || beta_ > 1)
    throw DomainError("gap parameters must satisfy 0 <= alpha < beta <= 1, got [" + to_string(alpha_) + ", " +
                      to_string(beta_) + "]");
}

GapParams GapParams::affine(const Rational& offset, const Rational& scale) const {
  return GapParams(offset + scale * alpha_, offset + scale * beta_);
}

GapParams GapParams::parse(std::string_view alpha, std::string_view beta) {
  return GapParams(parse_rational(alpha), parse_rational(beta));
}

std::string to_string(const GapParams& gap) {
  return "[" + to_string(gap.alpha()) + ", " + to_string(gap.beta()) + "]";
}

}  // namespace gapred
