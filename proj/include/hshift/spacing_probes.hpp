// Finite-horizon experiments on spacing shifts that need the full engine:
// transition times, weak mixing evidence, recurrence-set entropy, the
// difference-set intersection bound and dense difference-subset witnesses.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hshift/langkit.hpp"
#include "hshift/sets.hpp"
#include "hshift/spacing.hpp"

namespace hshift::spacing {

struct TransitionCheck {
  /// {m <= H : 1 0^(m-1) 1 is admissible} equals P n [1, H].
  bool matches = true;
  std::vector<std::uint64_t> transition_times;
};

TransitionCheck transition_set_check(const PSet& p, std::uint64_t horizon);

/// P n [1, H] contains block_len consecutive integers.
bool weak_mixing_probe(const PSet& p, std::uint64_t block_len, std::uint64_t horizon);

struct RecurrenceProbe {
  /// Upper bounds h_k for the spacing shift with P = N \ R.
  langkit::EntropyReport report;
  /// A max-density admissible word and the lower bound it certifies.
  Word dense_word;
  langkit::HeredityBound lower;
};

/// `dense_length` 0 means min(k_max, 32).
RecurrenceProbe recurrence_entropy_probe(const sets::IntSet& r, std::size_t k_max,
                                         std::size_t dense_length = 0,
                                         const langkit::CountOptions& opt = {});

struct DeltaStarCheck {
  bool holds = true;
  /// First B with (B - B) n (A - A) empty.
  std::optional<std::vector<std::uint64_t>> violation;
  /// Banach density used for the precondition k > 1 / beta.
  sets::Density beta;
  std::uint64_t sets_checked = 0;
};

/// Checks `trials` seeded random k-subsets of [1, H] plus a fixed list of
/// structured ones.  Throws precondition when beta <= 1 / k.
DeltaStarCheck delta_star_bound_check(const sets::IntSet& a, unsigned k, std::uint64_t trials,
                                      std::uint64_t horizon, std::uint64_t seed);

struct DifferenceWitness {
  Word prefix;
  std::vector<std::uint64_t> members;
  Rational density;
  bool proven_optimal = true;
  /// (B - B) is contained in (A - A) n [1, H], checked bit by bit.
  bool verified = false;
};

DifferenceWitness difference_subset_witness(const sets::IntSet& a, std::uint64_t horizon,
                                            std::uint64_t node_budget = 50'000'000);

}  // namespace hshift::spacing
