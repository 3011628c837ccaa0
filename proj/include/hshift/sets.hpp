// Subsets of the positive integers: descriptions, membership, densities and
// finite-horizon combinatorial classifiers.
//
// Set-expr grammar (parse() and to_string() round-trip exactly on
// canonical input):
//
//   set := finite:{a,b,c} | periodic:<pre>;<per> | complement:(set)
//        | union:(set|set|...) | evens | odds | pow2 | pow2diff
//        | factorial_blocks | window:<bits>
//
// `periodic` bits index positions 1, 2, ...; `window` bits are the
// explicit indicator of 1..len (members beyond len do not exist).

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "hshift/core.hpp"

namespace hshift::sets {

enum class NamedSet { evens, odds, pow2, pow2diff, factorial_blocks };

/// An exact asymptotic description: the set differs from the eventually
/// periodic `base` by a set of density zero.  `perturbed` is false when
/// the set equals `base`; `banach_null` records that the perturbation also
/// has upper Banach density zero.
struct DensityModel {
  Point base;
  bool perturbed = false;
  bool banach_null = true;
};

class IntSet {
 public:
  static IntSet finite(std::vector<std::uint64_t> members);
  static IntSet periodic(std::vector<bool> preperiod, std::vector<bool> period);
  static IntSet periodic(const Point& bits);
  static IntSet complement(IntSet inner);
  static IntSet union_of(std::vector<IntSet> parts);
  static IntSet named(NamedSet which);
  /// bits[i] is membership of i + 1.
  static IntSet window(std::vector<bool> bits);
  /// API-only form; has no density model and no textual syntax.
  static IntSet custom(std::string name, std::function<bool(std::uint64_t)> member);

  static IntSet parse(std::string_view text);
  std::string to_string() const;

  bool contains(std::uint64_t n) const;

  /// Ascending members of [1, horizon].
  std::vector<std::uint64_t> members(std::uint64_t horizon) const;
  /// Bit n set iff n in the set, for 1 <= n <= horizon (bit 0 unused).
  boost::dynamic_bitset<> indicator(std::uint64_t horizon) const;

  std::optional<DensityModel> density_model() const;
  /// Members of the complement when the complement is finite.
  std::optional<std::vector<std::uint64_t>> finite_complement() const;

  struct Node;

 private:
  explicit IntSet(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Density {
  Rational value;
  bool exact = false;
  std::uint64_t horizon = 0;
  /// For asymptotic density: whether the limit is known to exist.
  std::optional<bool> limit_exists;
};

struct DensityOptions {
  /// Estimated upper density scans n in [horizon / tail_divisor, horizon].
  std::uint64_t tail_divisor = 16;
  /// Estimated Banach density uses windows of at least this length.
  std::uint64_t min_window = 8;
};

Density upper_density(const IntSet& a, std::uint64_t horizon, const DensityOptions& opt = {});
Density asymptotic_density(const IntSet& a, std::uint64_t horizon, const DensityOptions& opt = {});
Density upper_banach_density(const IntSet& a, std::uint64_t horizon,
                             const DensityOptions& opt = {});

/// {a - a' : a, a' in A n [1, horizon], a > a'} as a window set.
IntSet difference_set(const IntSet& a, std::uint64_t horizon);

/// Sums of at most `depth` distinct elements of S n [1, bound] that do not
/// exceed `bound`, as a window set of length `bound`.
IntSet sum_set_fs(const IntSet& s, unsigned depth, std::uint64_t bound);

/// True iff the binary expansion of n > 0 is 1^a 0^b.
bool is_ones_then_zeros(std::uint64_t n);

/// Largest D in [1, horizon] with D - D contained in `allowed` (differences
/// checked by membership).  The search is exact unless `complete` is false,
/// in which case the size is a lower bound.
struct CliqueResult {
  std::vector<std::uint64_t> members;
  bool complete = true;
  std::uint64_t nodes = 0;
  /// best[j] = largest size within [1, j], for j <= horizon (only when complete).
  std::vector<std::uint64_t> table;
};
CliqueResult max_difference_clique(const IntSet& allowed, std::uint64_t horizon,
                                   std::uint64_t node_budget = 50'000'000);

struct ClassifyOptions {
  std::uint64_t delta_node_budget = 5'000'000;
  std::uint64_t ip_bound = 0;  // 0 means the horizon
  unsigned ip_max_size = 6;
  std::uint64_t ip_node_budget = 5'000'000;
  unsigned syndetic_gaps = 8;
};

struct ClassifyReport {
  std::uint64_t horizon = 0;
  std::uint64_t thick_run = 0;
  std::optional<std::uint64_t> max_gap;
  /// (g, longest interval of [1, horizon] on which A meets every g-window).
  std::vector<std::pair<unsigned, std::uint64_t>> piecewise_syndetic_evidence;
  std::vector<std::uint64_t> delta_witness;
  bool delta_complete = true;
  std::vector<std::uint64_t> ip_witness;
  bool ip_complete = true;
};

ClassifyReport classify(const IntSet& a, std::uint64_t horizon, const ClassifyOptions& opt = {});

/// Largest S in A n [1, bound], |S| <= max_size, with FS(S) in A (sums
/// checked by exact membership, not truncated).
struct IpSearch {
  std::vector<std::uint64_t> members;
  bool complete = true;
};
IpSearch ip_witness_search(const IntSet& a, std::uint64_t bound, unsigned max_size,
                           std::uint64_t node_budget);

}  // namespace hshift::sets
