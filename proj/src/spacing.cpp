#include "hshift/spacing.hpp"

#include <algorithm>
#include <unordered_map>

namespace hshift::spacing {

namespace {

void require_binary(const Word& w) {
  if (w.alphabet().size() != 2) {
    fail(ErrorKind::invalid_argument, "spacing shifts are binary; got alphabet of size " +
                                          std::to_string(w.alphabet().size()));
  }
}

}  // namespace

bool admissible(const PSet& p, const Word& w) {
  require_binary(w);
  const auto ones = ones_positions(w);
  for (std::size_t i = 0; i < ones.size(); ++i) {
    for (std::size_t j = i + 1; j < ones.size(); ++j) {
      if (!p.base.contains(ones[j] - ones[i])) return false;
    }
  }
  return true;
}

bool admissible_last(const PSet& p, std::span<const Symbol> w) {
  if (w.empty() || w.back() == 0) return true;
  const std::size_t last = w.size();
  for (std::size_t i = 0; i + 1 < last; ++i) {
    if (w[i] == 1 && !p.base.contains(last - (i + 1))) return false;
  }
  return true;
}

SpacingMethod choose_method(const PSet& p) {
  const auto holes = p.base.finite_complement();
  if (holes && (holes->empty() || holes->back() <= kMaxDpWindow)) {
    return SpacingMethod::windowed_dp;
  }
  return SpacingMethod::branch_and_bound;
}

namespace {

std::vector<BigInt> windowed_dp(const std::vector<std::uint64_t>& holes, std::size_t k_max,
                                const SpacingCountOptions& opt) {
  // State: bit i set iff position t - i holds a 1, for the last `width`
  // positions.  A new 1 is legal iff no 1 sits at a forbidden distance.
  const unsigned width = holes.empty() ? 0 : static_cast<unsigned>(holes.back());
  const std::uint32_t full = width == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << width) - 1);
  std::uint32_t forbidden = 0;
  for (auto h : holes) forbidden |= std::uint32_t{1} << (h - 1);

  std::unordered_map<std::uint32_t, BigInt> cur{{0, BigInt(1)}}, next;
  std::vector<BigInt> counts;
  counts.reserve(k_max);
  for (std::size_t step = 0; step < k_max; ++step) {
    next.clear();
    for (const auto& [mask, c] : cur) {
      next[(mask << 1) & full] += c;
      if ((mask & forbidden) == 0) next[((mask << 1) | 1) & full] += c;
    }
    if (next.size() > opt.max_states) {
      fail(ErrorKind::resource_cap, "windowed_dp: state count exceeds cap");
    }
    std::swap(cur, next);
    BigInt total = 0;
    for (const auto& [mask, c] : cur) total += c;
    counts.push_back(std::move(total));
  }
  return counts;
}

// Counts difference cliques through position 1 by their right end;
// translation fills in the rest.
class CliqueCounter {
 public:
  CliqueCounter(const PSet& p, std::size_t k_max, std::uint64_t budget)
      : k_max_(k_max), budget_(budget), dist_(p.base.indicator(k_max)), by_end_(k_max + 1, 0) {}

  std::vector<BigInt> run() {
    if (k_max_ == 0) return {};
    boost::dynamic_bitset<> allowed(k_max_ + 1);
    for (std::size_t q = 2; q <= k_max_; ++q) {
      if (dist_.test(q - 1)) allowed.set(q);
    }
    visit(1, allowed);
    // lambda_k = 1 + sum_d by_end[d] * (k - d + 1).
    std::vector<BigInt> counts(k_max_);
    BigInt weighted = 0, plain = 0;
    for (std::size_t k = 1; k <= k_max_; ++k) {
      plain += by_end_[k];
      weighted += plain;
      counts[k - 1] = 1 + weighted;
    }
    return counts;
  }

 private:
  void visit(std::size_t last, const boost::dynamic_bitset<>& allowed) {
    if (++nodes_ > budget_) {
      fail(ErrorKind::resource_cap, "spacing branch-and-bound: node budget exceeded");
    }
    ++by_end_[last];
    for (auto q = allowed.find_next(last); q != boost::dynamic_bitset<>::npos;
         q = allowed.find_next(q)) {
      boost::dynamic_bitset<> next = allowed & shifted(q);
      visit(q, next);
    }
  }

  // Positions r with r - q in P.
  boost::dynamic_bitset<> shifted(std::size_t q) const {
    boost::dynamic_bitset<> out = dist_ << q;
    return out;
  }

  std::size_t k_max_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  boost::dynamic_bitset<> dist_;
  std::vector<std::uint64_t> by_end_;
};

}  // namespace

std::vector<BigInt> count_spacing_upto(const PSet& p, std::size_t k_max, SpacingMethod method,
                                       const SpacingCountOptions& opt) {
  if (method == SpacingMethod::windowed_dp) {
    const auto holes = p.base.finite_complement();
    if (!holes || (!holes->empty() && holes->back() > kMaxDpWindow)) {
      fail(ErrorKind::invalid_argument,
           "windowed_dp needs N \\ P finite with maximum <= " + std::to_string(kMaxDpWindow));
    }
    return windowed_dp(*holes, k_max, opt);
  }
  return CliqueCounter(p, k_max, opt.node_budget).run();
}

std::vector<BigInt> count_spacing_upto(const PSet& p, std::size_t k_max,
                                       const SpacingCountOptions& opt) {
  return count_spacing_upto(p, k_max, choose_method(p), opt);
}

BigInt count_spacing(const PSet& p, std::size_t k, const SpacingCountOptions& opt) {
  if (k == 0) fail(ErrorKind::invalid_argument, "count_spacing needs k >= 1");
  return count_spacing_upto(p, k, opt).back();
}

}  // namespace hshift::spacing
