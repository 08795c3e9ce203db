#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace gapred {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", "p" or "-p/q". Throws ParseError on malformed text and
/// DomainError on a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form (always with a denominator, e.g. "1/1").
std::string to_string(const Rational& r);

BigInt floor(const Rational& r);
BigInt ceil(const Rational& r);
bool is_integer(const Rational& r);

/// Narrowing with an overflow check.
std::int64_t to_int64(const BigInt& v);

/// Exact pair (alpha, beta) with 0 <= alpha < beta <= 1.
class GapParams {
 public:
  /// [0, 1].
  GapParams() : alpha_(0), beta_(1) {}
  GapParams(Rational alpha, Rational beta);

  const Rational& alpha() const noexcept { return alpha_; }
  const Rational& beta() const noexcept { return beta_; }

  /// Maps both endpoints through x -> (offset + scale * x).
  GapParams affine(const Rational& offset, const Rational& scale) const;

  static GapParams parse(std::string_view alpha, std::string_view beta);

  friend bool operator==(const GapParams&, const GapParams&) = default;

 private:
  Rational alpha_;
  Rational beta_;
};

std::string to_string(const GapParams& gap);

}  // namespace gapred
