// Beta shifts.
//
// The finite-length language is defined by the suffix rule: a word w is in
// L(Omega_beta) iff every suffix of w is lexicographically <= the prefix of
// the expansion of 1 of the same length.  This is exactly the condition
// w 0^inf in Omega_beta, and appending zeros never increases a tail, so the
// rule describes the language of the infinite-sequence definition.
//
// Digits come from the greedy recurrence d_i = floor(beta r_{i-1}),
// r_i = beta r_{i-1} - d_i, r_0 = 1.  Quadratic inputs use exact
// arithmetic in Q(sqrt d); decimal inputs use fixed-point intervals with
// directed rounding, and a floor whose interval straddles an integer is a
// precision error rather than a guess.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hshift/core.hpp"

namespace hshift::beta {

/// (a + b sqrt(d)) / c with c > 0, d >= 0.
struct Quadratic {
  BigInt a, b, d, c;
};

struct Decimal {
  std::string text;
  Rational value;
};

class BetaSpec {
 public:
  /// "1.6180339887" or "quad:(1+1*sqrt5)/2"; optional leading "beta=".
  static BetaSpec parse(std::string_view text);
  static BetaSpec quadratic(BigInt a, BigInt b, BigInt d, BigInt c);
  static BetaSpec golden();

  const std::variant<Decimal, Quadratic>& value() const noexcept { return value_; }
  bool exact() const noexcept { return std::holds_alternative<Quadratic>(value_); }

  /// floor(beta) + 1 symbols.
  Alphabet alphabet() const noexcept { return alphabet_; }
  std::size_t digit_horizon() const noexcept { return digit_horizon_; }
  /// Fixed-point fraction bits for decimal inputs; 0 selects
  /// 128 + ceil(horizon * log2(beta)).
  unsigned precision_bits() const noexcept { return precision_bits_; }
  unsigned effective_precision_bits() const;
  double approx() const noexcept { return approx_; }

  BetaSpec with_horizon(std::size_t horizon) const;
  BetaSpec with_precision(unsigned bits) const;

  std::string to_string() const;

 private:
  BetaSpec(std::variant<Decimal, Quadratic> value);

  std::variant<Decimal, Quadratic> value_;
  Alphabet alphabet_;
  double approx_ = 0;
  std::size_t digit_horizon_ = 256;
  unsigned precision_bits_ = 0;
};

struct Expansion {
  Word digits;
  /// The remainder reached exactly zero: every later digit is 0.
  bool terminates = false;
};

Expansion beta_expansion(const BetaSpec& spec, std::size_t k);
Word beta_digits(const BetaSpec& spec, std::size_t k);

enum class ParryVerdict { satisfied, violated, indeterminate };

struct ParryResult {
  ParryVerdict verdict = ParryVerdict::satisfied;
  /// First shift that violates (or could not be decided), 0 otherwise.
  std::uint64_t shift = 0;
};

/// sigma^k(d) <= d for 1 <= k <= horizon, compared on the overlap available
/// in a finite prefix.
ParryResult parry_check(std::span<const Symbol> prefix, std::uint64_t horizon);
/// Exact version for eventually periodic digit sequences.
ParryResult parry_check(const Point& digits, std::uint64_t horizon);

/// A beta spec together with its digits up to the digit horizon.
class BetaShift {
 public:
  explicit BetaShift(BetaSpec spec);

  const BetaSpec& spec() const noexcept { return spec_; }
  Alphabet alphabet() const noexcept { return spec_.alphabet(); }
  /// d_1 ... d_k; k must not exceed the digit horizon.
  std::span<const Symbol> digits(std::size_t k) const;
  bool terminates() const noexcept { return expansion_.terminates; }

 private:
  BetaSpec spec_;
  Expansion expansion_;
};

bool word_in_beta_language(const BetaShift& shift, const Word& w);
/// Suffix rule for raw symbols (no alphabet check).
bool suffix_rule(const BetaShift& shift, std::span<const Symbol> w);

/// counts[k - 1] = lambda_k for k = 1..k_max, by the follower-state DP.
std::vector<BigInt> count_beta_language_upto(const BetaShift& shift, std::size_t k_max);
BigInt count_beta_language(const BetaShift& shift, std::size_t k);

/// Exhaustive check that lowering any symbol of a length-k language word by
/// one stays in the language (k <= 14).
bool beta_hereditary_probe(const BetaShift& shift, std::size_t k);

}  // namespace hshift::beta
