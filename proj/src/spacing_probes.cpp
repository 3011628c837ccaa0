#include "hshift/spacing_probes.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace hshift::spacing {

TransitionCheck transition_set_check(const PSet& p, std::uint64_t horizon) {
  if (horizon == 0) fail(ErrorKind::invalid_argument, "transition_set_check needs H >= 1");
  TransitionCheck out;
  const Alphabet binary{2};
  for (std::uint64_t m = 1; m <= horizon; ++m) {
    std::vector<Symbol> w(m + 1, 0);
    w[0] = 1;
    w[m] = 1;
    const bool hit = admissible(p, Word(binary, std::move(w)));
    if (hit) out.transition_times.push_back(m);
    if (hit != p.base.contains(m)) out.matches = false;
  }
  return out;
}

bool weak_mixing_probe(const PSet& p, std::uint64_t block_len, std::uint64_t horizon) {
  if (block_len == 0) fail(ErrorKind::invalid_argument, "weak_mixing_probe needs block_len >= 1");
  std::uint64_t run = 0;
  for (std::uint64_t m = 1; m <= horizon; ++m) {
    run = p.base.contains(m) ? run + 1 : 0;
    if (run >= block_len) return true;
  }
  return false;
}

RecurrenceProbe recurrence_entropy_probe(const sets::IntSet& r, std::size_t k_max,
                                         std::size_t dense_length, const langkit::CountOptions& opt) {
  if (k_max == 0) fail(ErrorKind::invalid_argument, "recurrence_entropy_probe needs k_max >= 1");
  const auto spec = langkit::SubshiftSpec::spacing(PSet{sets::IntSet::complement(r)});
  RecurrenceProbe out;
  out.report = langkit::entropy_estimates(spec, k_max, opt);
  const std::size_t len = dense_length ? dense_length : std::min<std::size_t>(k_max, 32);
  out.dense_word = langkit::max_density_word(spec, 1, len).word;
  out.lower = langkit::heredity_entropy_bound(spec, out.dense_word);
  return out;
}

namespace {

bool differences_meet(const std::vector<std::uint64_t>& b, const boost::dynamic_bitset<>& diff) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      const std::uint64_t d = b[j] > b[i] ? b[j] - b[i] : b[i] - b[j];
      if (d < diff.size() && diff.test(d)) return true;
    }
  }
  return false;
}

std::vector<std::vector<std::uint64_t>> structured_sets(unsigned k, std::uint64_t horizon) {
  std::vector<std::vector<std::uint64_t>> out;
  // Arithmetic progressions of every step that fits, then powers of two.
  for (std::uint64_t step = 1; 1 + step * (k - 1) <= horizon; ++step) {
    std::vector<std::uint64_t> b;
    for (unsigned i = 0; i < k; ++i) b.push_back(1 + step * i);
    out.push_back(std::move(b));
    if (out.size() >= 64) break;
  }
  if (k <= 63 && (std::uint64_t{1} << (k - 1)) <= horizon) {
    std::vector<std::uint64_t> b;
    for (unsigned i = 0; i < k; ++i) b.push_back(std::uint64_t{1} << i);
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace

DeltaStarCheck delta_star_bound_check(const sets::IntSet& a, unsigned k, std::uint64_t trials,
                                      std::uint64_t horizon, std::uint64_t seed) {
  if (k < 2) fail(ErrorKind::invalid_argument, "delta_star_bound_check needs k >= 2");
  if (horizon < k) fail(ErrorKind::invalid_argument, "delta_star_bound_check needs H >= k");
  DeltaStarCheck out;
  out.beta = sets::upper_banach_density(a, horizon);
  if (out.beta.value <= Rational(BigInt(1), BigInt(k))) {
    fail(ErrorKind::precondition, "delta_star_bound_check: density " + hshift::to_string(out.beta.value) +
                                      " does not exceed 1/" + std::to_string(k));
  }
  // Differences of B stay below H; 2H leaves room for a + d with a <= H.
  const auto diff = sets::difference_set(a, 2 * horizon).indicator(2 * horizon);

  auto check = [&](const std::vector<std::uint64_t>& b) {
    ++out.sets_checked;
    if (differences_meet(b, diff)) return true;
    out.holds = false;
    out.violation = b;
    return false;
  };

  for (const auto& b : structured_sets(k, horizon)) {
    if (!check(b)) return out;
  }
  std::mt19937_64 rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::set<std::uint64_t> picked;
    while (picked.size() < k) picked.insert(rng() % horizon + 1);
    if (!check({picked.begin(), picked.end()})) return out;
  }
  return out;
}

DifferenceWitness difference_subset_witness(const sets::IntSet& a, std::uint64_t horizon,
                                            std::uint64_t node_budget) {
  if (horizon < 1) fail(ErrorKind::invalid_argument, "difference_subset_witness needs H >= 1");
  const sets::IntSet p = sets::difference_set(a, horizon);
  const auto spec = langkit::SubshiftSpec::spacing(PSet{p});
  langkit::MaxDensityOptions opt;
  opt.node_budget = node_budget;
  const auto best = langkit::max_density_word(spec, 1, horizon, opt);

  DifferenceWitness out;
  out.prefix = best.word;
  out.members = ones_positions(best.word);
  out.density = Rational(BigInt(out.members.size()), BigInt(horizon));
  out.proven_optimal = best.proven_optimal;

  // Independent recheck against A itself rather than the window set.
  const auto bits = a.indicator(horizon);
  out.verified = true;
  for (std::size_t i = 0; i < out.members.size() && out.verified; ++i) {
    for (std::size_t j = i + 1; j < out.members.size(); ++j) {
      const std::uint64_t d = out.members[j] - out.members[i];
      bool found = false;
      for (std::uint64_t x = 1; x + d <= horizon; ++x) {
        if (bits.test(x) && bits.test(x + d)) {
          found = true;
          break;
        }
      }
      if (!found) {
        out.verified = false;
        break;
      }
    }
  }
  return out;
}

}  // namespace hshift::spacing
