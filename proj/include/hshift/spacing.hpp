// Spacing shifts: binary words whose pairwise distances between 1s lie in P.

#pragma once

#include <cstdint>
#include <vector>

#include "hshift/core.hpp"
#include "hshift/sets.hpp"

namespace hshift::spacing {

/// The distance set P of a spacing shift.
struct PSet {
  sets::IntSet base;
};

/// (S - S) in P for the set S of 1-positions of w.
bool admissible(const PSet& p, const Word& w);

/// Admissibility of the last symbol of `w` given that the rest is admissible.
bool admissible_last(const PSet& p, std::span<const Symbol> w);

enum class SpacingMethod { windowed_dp, branch_and_bound };

inline constexpr unsigned kMaxDpWindow = 24;

/// windowed_dp when N \ P is finite with maximum at most kMaxDpWindow.
SpacingMethod choose_method(const PSet& p);

struct SpacingCountOptions {
  std::uint64_t node_budget = 200'000'000;
  std::size_t max_states = std::size_t{1} << 24;
};

/// counts[k - 1] = number of P-admissible words of length k, k = 1..k_max.
std::vector<BigInt> count_spacing_upto(const PSet& p, std::size_t k_max, SpacingMethod method,
                                       const SpacingCountOptions& opt = {});
std::vector<BigInt> count_spacing_upto(const PSet& p, std::size_t k_max,
                                       const SpacingCountOptions& opt = {});

BigInt count_spacing(const PSet& p, std::size_t k, const SpacingCountOptions& opt = {});

}  // namespace hshift::spacing
