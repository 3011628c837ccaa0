// Distribution functions of pairs, DC1/DC2/DC3 classification and the
// scrambled-family construction.
//
// For a threshold t = n^-k, rho(sigma^j x, sigma^j y) < t iff x and y agree
// on positions j+1 .. j+k, so the profile is sampled on k = 0, 1, 2, ...
// and each value holds on the whole step (n^-(k+1), n^-k].
//
// F(t) = liminf (1/N) #{0 <= j < N : rho_j < t}, F*(t) the limsup.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "hshift/core.hpp"
#include "hshift/sets.hpp"

namespace hshift::chaos {

struct DiffEqual {
  /// Upper (and asymptotic) density of {i : x_i != y_i}.
  Rational diff;
  /// Upper (and asymptotic) density of {i : x_i == y_i}.
  Rational equal;
};

DiffEqual diff_equal_densities(const Point& x, const Point& y);

struct DistributionProfile {
  unsigned n = 2;
  /// ks[i] is the exponent of thresholds[i] = n^-ks[i]; ks ascending.
  std::vector<unsigned> ks;
  std::vector<Rational> thresholds;
  std::vector<Rational> F;
  std::vector<Rational> Fstar;
  bool exact = false;
  /// Empirical profiles: last position read and the prefix lengths used.
  std::uint64_t horizon = 0;
  std::vector<std::uint64_t> checkpoints;
};

/// Exact profile; the default grid k = 0 .. lcm(periods) + 1 reaches the
/// limiting value.
DistributionProfile distribution_profile(const Point& x, const Point& y,
                                         std::optional<unsigned> max_k = std::nullopt);

/// Empirical profile from finite prefixes: F and F* are the min and max of
/// prefix averages over `checkpoints` (those that fit) and the last usable
/// prefix length.
DistributionProfile distribution_profile(std::span<const Symbol> x, std::span<const Symbol> y,
                                         unsigned n, std::vector<std::uint64_t> checkpoints,
                                         unsigned max_k);

enum class Verdict { dc1, dc2_not_dc1, dc3_not_dc2, none };

const char* to_string(Verdict v) noexcept;

struct PairClass {
  Verdict verdict = Verdict::none;
  /// Empirical input: the verdict is evidence, not a theorem.
  bool evidence = false;
  /// Each property on its own; dc1 implies dc2 implies dc3.
  bool dc1 = false, dc2 = false, dc3 = false;
  bool fstar_one = false;
  /// Smallest grid threshold s with F(s) = 0 (dc1) or F(s) < 1 (dc2).
  std::optional<Rational> s_zero, s_below_one;
  /// Grid step (n^-(k+1), n^-k] on which F < F*.
  std::optional<unsigned> gap_k;
  double tolerance = 0;
};

struct ClassifyOptions {
  /// Slack for comparisons with 0 and 1 on empirical profiles.
  double tolerance = 0.02;
};

PairClass classify_pair(const DistributionProfile& profile, const ClassifyOptions& opt = {});

struct FamilyOptions {
  /// b_{n+1} >= growth * b_n as well as n * b_n.
  std::uint64_t growth = 128;
};

struct Block {
  std::uint64_t index = 0;  // n in S_n = (b_{2n-1}, b_{2n}] n S
  std::uint64_t lo = 0, hi = 0;
};

struct ScrambledFamily {
  std::uint64_t horizon = 0;
  Rational density;  // certified ud(S)
  std::vector<std::uint64_t> b;
  std::vector<Block> blocks;
  /// Bit i is membership of i (bit 0 unused), for i <= horizon.
  boost::dynamic_bitset<> s0;
  unsigned m = 0;
  /// members[i] is the characteristic sequence of S(A_i), A_i = {n : n = i mod m}.
  std::vector<std::vector<Symbol>> members;
  /// b_n values not beyond the horizon.
  std::vector<std::uint64_t> checkpoints;
  bool growth_ok = true;
};

/// Throws precondition unless ud(S) is certified positive.
ScrambledFamily build_scrambled_family(const sets::IntSet& s, unsigned m, std::uint64_t horizon,
                                       const FamilyOptions& opt = {});

struct FrequencyRow {
  std::uint64_t checkpoint = 0;
  Rational diff;
};

/// Diff frequency of members i and j on [1, c] for every checkpoint c.
std::vector<FrequencyRow> diff_frequencies(const ScrambledFamily& family, unsigned i, unsigned j);

struct Dc1Witness {
  unsigned k = 0;
  Rational s;  // n^-k
  /// F(s) = 0, exact.
  bool f_zero = false;
  /// F* = 1 on every t > 0, exact; false for every eventually periodic x != 0^inf.
  bool fstar_one = false;
  PairClass pair;
};

/// The pair (x, 0^inf).  Throws precondition when x has k zeros in a row.
Dc1Witness dc1_minimal_witness(const Point& x, unsigned k);

}  // namespace hshift::chaos
