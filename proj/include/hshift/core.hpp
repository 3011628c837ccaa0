// Alphabets, finite words, eventually periodic points and the shift metric.
//
// Indexing convention: every position exposed by this library is 1-based,
// so a point is (x_1, x_2, ...) and a word is w_1 ... w_k.  Storage is
// 0-based; `symbols()` spans give raw access.

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hshift/error.hpp"

namespace hshift {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Symbol = std::uint8_t;

/// log2 of a positive big integer, accurate to double precision.
double log2_big(const BigInt& x);

/// Decimal string of a big integer.
std::string to_decimal(const BigInt& x);

/// Printed as "p/q" (or "p" when q == 1).
std::string to_string(const Rational& r);
double to_double(const Rational& r);

/// n^(-k) as an exact rational.
Rational inverse_power(unsigned n, unsigned k);

class Alphabet {
 public:
  constexpr Alphabet() = default;
  explicit Alphabet(unsigned size);

  constexpr unsigned size() const noexcept { return size_; }
  constexpr bool contains(unsigned symbol) const noexcept {
    return symbol < size_;
  }

  friend constexpr bool operator==(Alphabet, Alphabet) = default;

 private:
  unsigned size_ = 2;
};

void require_same_alphabet(Alphabet a, Alphabet b, std::string_view where);

class Word {
 public:
  Word() = default;
  explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}
  Word(Alphabet alphabet, std::vector<Symbol> symbols);

  /// Digits '0'..'9'; every digit must lie in the alphabet.
  static Word parse(std::string_view digits, Alphabet alphabet = Alphabet{});
  static Word zeros(Alphabet alphabet, std::size_t length);

  Alphabet alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }

  /// 1-based access.
  Symbol at(std::size_t i) const;
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  std::size_t count(Symbol s) const noexcept;
  std::size_t nonzero_count() const noexcept;

  void push_back(Symbol s);
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  Alphabet alphabet_{};
  std::vector<Symbol> symbols_;
};

/// Lexicographic comparison of two equal-length symbol prefixes.
std::strong_ordering lex_compare(std::span<const Symbol> x,
                                 std::span<const Symbol> y);
std::strong_ordering lex_compare(const Word& x, const Word& y);

Word concat(const Word& u, const Word& v);
/// Subword starting at 1-based position `i` of length `len`.
Word subword(const Word& w, std::size_t i, std::size_t len);
/// 1-based positions at which `u` appears in `w`.
std::vector<std::size_t> occurrences(const Word& u, const Word& w);
/// 1-based positions holding the symbol 1.
std::vector<std::size_t> ones_positions(const Word& w);

/// The sequence u v v v ... kept in canonical form: the period is primitive
/// and the preperiod is as short as possible.
class EventuallyPeriodicPoint {
 public:
  EventuallyPeriodicPoint(Alphabet alphabet, std::vector<Symbol> preperiod,
                          std::vector<Symbol> period);
  EventuallyPeriodicPoint(const Word& preperiod, const Word& period);

  /// Textual form "pre;per", e.g. ";10" or "11;0".
  static EventuallyPeriodicPoint parse(std::string_view text,
                                       Alphabet alphabet = Alphabet{});
  static EventuallyPeriodicPoint constant(Alphabet alphabet, Symbol s);

  Alphabet alphabet() const noexcept { return alphabet_; }
  std::span<const Symbol> preperiod() const noexcept { return preperiod_; }
  std::span<const Symbol> period() const noexcept { return period_; }

  /// x_i for i >= 1.
  Symbol at(std::uint64_t i) const;

  std::string to_string() const;

  friend bool operator==(const EventuallyPeriodicPoint&,
                         const EventuallyPeriodicPoint&) = default;

 private:
  void normalize();

  Alphabet alphabet_;
  std::vector<Symbol> preperiod_;
  std::vector<Symbol> period_;
};

using Point = EventuallyPeriodicPoint;

/// Number of leading symbols that decide every comparison between x and y:
/// |pre x| + |pre y| + lcm(|per x|, |per y|).
std::uint64_t decisive_length(const Point& x, const Point& y);

/// Smallest 1-based index k with x_k != y_k, or 0 when x == y.
std::uint64_t first_disagreement(const Point& x, const Point& y);

/// rho(x, y) = n^(-k) with k the first disagreement index; 0 iff x == y.
Rational metric_rho(const Point& x, const Point& y);

/// sigma^j(x).
Point shift_point(const Point& x, std::uint64_t j);

/// x_1 ... x_k.
Word point_prefix(const Point& x, std::size_t k);

/// Lexicographic order of infinite eventually periodic sequences.
std::strong_ordering lex_compare(const Point& x, const Point& y);

}  // namespace hshift
