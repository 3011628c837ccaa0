#include "hshift/chaos.hpp"

#include <algorithm>
#include <numeric>

namespace hshift::chaos {

namespace {

// Agreement pattern frame: e_i = [x_i == y_i] is periodic for i > pre with
// period per.
struct Frame {
  std::uint64_t pre = 0, per = 1;
};

Frame frame_of(const Point& x, const Point& y) {
  return Frame{std::max<std::uint64_t>(x.preperiod().size(), y.preperiod().size()),
               std::lcm<std::uint64_t>(x.period().size(), y.period().size())};
}

Rational ratio(std::uint64_t a, std::uint64_t b) { return Rational(BigInt(a), BigInt(b)); }

bool near_or_above(const Rational& v, double target, double tol) {
  return tol == 0 ? v >= Rational(BigInt(static_cast<long long>(target))) : to_double(v) >= target - tol;
}

}  // namespace

DiffEqual diff_equal_densities(const Point& x, const Point& y) {
  require_same_alphabet(x.alphabet(), y.alphabet(), "diff_equal_densities");
  const Frame f = frame_of(x, y);
  std::uint64_t diff = 0;
  for (std::uint64_t i = f.pre + 1; i <= f.pre + f.per; ++i) diff += x.at(i) != y.at(i);
  return DiffEqual{ratio(diff, f.per), ratio(f.per - diff, f.per)};
}

DistributionProfile distribution_profile(const Point& x, const Point& y, std::optional<unsigned> max_k) {
  require_same_alphabet(x.alphabet(), y.alphabet(), "distribution_profile");
  const Frame f = frame_of(x, y);
  const unsigned top = max_k ? *max_k : static_cast<unsigned>(f.per + 1);
  DistributionProfile out;
  out.n = x.alphabet().size();
  out.exact = true;
  // run[j]: agreements starting at position j + 1, for one period of j,
  // capped at top.
  std::vector<unsigned> run(f.per, 0);
  for (std::uint64_t j = f.pre; j < f.pre + f.per; ++j) {
    unsigned r = 0;
    while (r < top && x.at(j + 1 + r) == y.at(j + 1 + r)) ++r;
    run[j - f.pre] = r;
  }
  for (unsigned k = 0; k <= top; ++k) {
    std::uint64_t c = 0;
    for (unsigned r : run) c += r >= k;
    out.ks.push_back(k);
    out.thresholds.push_back(inverse_power(out.n, k));
    out.F.push_back(ratio(c, f.per));
    out.Fstar.push_back(out.F.back());
  }
  return out;
}

DistributionProfile distribution_profile(std::span<const Symbol> x, std::span<const Symbol> y,
                                         unsigned n, std::vector<std::uint64_t> checkpoints,
                                         unsigned max_k) {
  const std::uint64_t h = std::min(x.size(), y.size());
  if (h <= max_k) fail(ErrorKind::invalid_argument, "distribution_profile: horizon must exceed max_k");
  DistributionProfile out;
  out.n = n;
  out.exact = false;
  out.horizon = h;
  const std::uint64_t last = h - max_k + 1;
  checkpoints.push_back(last);
  std::sort(checkpoints.begin(), checkpoints.end());
  checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());
  checkpoints.erase(std::remove_if(checkpoints.begin(), checkpoints.end(),
                                   [&](std::uint64_t c) { return c == 0 || c > h; }),
                    checkpoints.end());
  out.checkpoints = checkpoints;

  std::vector<unsigned> run(h + 1, 0);
  for (std::uint64_t j = h; j-- > 0;) run[j] = x[j] == y[j] ? std::min<unsigned>(run[j + 1] + 1, max_k) : 0;

  std::vector<std::uint64_t> count(max_k + 1, 0);
  std::vector<std::optional<Rational>> lo(max_k + 1), hi(max_k + 1);
  std::size_t next = 0;
  for (std::uint64_t j = 0; j < h && next < checkpoints.size(); ++j) {
    for (unsigned k = 0; k <= run[j]; ++k) ++count[k];
    while (next < checkpoints.size() && checkpoints[next] == j + 1) {
      const std::uint64_t c = j + 1;
      for (unsigned k = 0; k <= max_k; ++k) {
        if (c + k - 1 > h && k > 0) continue;
        const Rational v = ratio(count[k], c);
        if (!lo[k] || v < *lo[k]) lo[k] = v;
        if (!hi[k] || v > *hi[k]) hi[k] = v;
      }
      ++next;
    }
  }
  for (unsigned k = 0; k <= max_k; ++k) {
    out.ks.push_back(k);
    out.thresholds.push_back(inverse_power(n, k));
    out.F.push_back(*lo[k]);
    out.Fstar.push_back(*hi[k]);
  }
  return out;
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::dc1: return "DC1";
    case Verdict::dc2_not_dc1: return "DC2-not-DC1";
    case Verdict::dc3_not_dc2: return "DC3-not-DC2";
    case Verdict::none: return "none";
  }
  return "?";
}

PairClass classify_pair(const DistributionProfile& p, const ClassifyOptions& opt) {
  PairClass out;
  out.evidence = !p.exact;
  const double tol = p.exact ? 0 : opt.tolerance;
  out.tolerance = tol;
  out.fstar_one = true;
  for (const auto& v : p.Fstar) {
    if (!near_or_above(v, 1, tol)) out.fstar_one = false;
  }
  // Grid index ascending in k means descending threshold; report the
  // largest threshold that witnesses each property.
  for (std::size_t i = 0; i < p.ks.size(); ++i) {
    const bool zero = p.exact ? p.F[i] == 0 : to_double(p.F[i]) <= tol;
    const bool below_one = p.exact ? p.F[i] < 1 : to_double(p.F[i]) < 1 - tol;
    const bool gap = p.exact ? p.F[i] < p.Fstar[i] : to_double(p.F[i]) < to_double(p.Fstar[i]) - tol;
    if (zero && !out.s_zero) out.s_zero = p.thresholds[i];
    if (below_one && !out.s_below_one) out.s_below_one = p.thresholds[i];
    if (gap && !out.gap_k) out.gap_k = p.ks[i];
  }
  out.dc1 = out.fstar_one && out.s_zero.has_value();
  out.dc2 = out.fstar_one && out.s_below_one.has_value();
  out.dc3 = out.dc2 || out.gap_k.has_value();
  out.verdict = out.dc1 ? Verdict::dc1
                : out.dc2 ? Verdict::dc2_not_dc1
                : out.dc3 ? Verdict::dc3_not_dc2
                          : Verdict::none;
  return out;
}

ScrambledFamily build_scrambled_family(const sets::IntSet& s, unsigned m, std::uint64_t horizon,
                                       const FamilyOptions& opt) {
  if (m == 0) fail(ErrorKind::invalid_argument, "build_scrambled_family needs m >= 1");
  if (horizon == 0) fail(ErrorKind::invalid_argument, "build_scrambled_family needs horizon >= 1");
  if (opt.growth < 2) fail(ErrorKind::invalid_argument, "growth must be at least 2");
  const auto ud = sets::upper_density(s, horizon);
  if (!ud.exact || ud.value <= 0) {
    fail(ErrorKind::precondition, "build_scrambled_family: ud(S) is not certified positive (" +
                                      hshift::to_string(ud.value) + (ud.exact ? ", exact)" : ", estimate)"));
  }
  const auto model = s.density_model();
  const std::uint64_t p = model->base.period().size();
  const std::uint64_t pre = model->base.preperiod().size();

  ScrambledFamily out;
  out.horizon = horizon;
  out.density = ud.value;
  out.m = m;
  auto round_up = [&](std::uint64_t v) { return (v + p - 1) / p * p; };
  out.b.push_back(round_up(std::max<std::uint64_t>(pre, 1)));
  while (out.b.back() <= horizon) {
    const std::uint64_t n = out.b.size();
    const std::uint64_t prev = out.b.back();
    out.b.push_back(round_up(std::max(n * prev, opt.growth * prev)));
  }
  for (std::size_t n = 1; n < out.b.size(); ++n) {
    if (BigInt(n) * out.b[n - 1] > BigInt(out.b[n])) out.growth_ok = false;
  }
  for (auto b : out.b) {
    if (b <= horizon) out.checkpoints.push_back(b);
  }

  const auto bits = s.indicator(horizon);
  out.s0.resize(horizon + 1);
  out.members.assign(m, std::vector<Symbol>(horizon, 0));
  for (std::uint64_t n = 1; 2 * n <= out.b.size(); ++n) {
    const std::uint64_t lo = out.b[2 * n - 2];
    if (lo >= horizon) break;
    const std::uint64_t hi = std::min(out.b[2 * n - 1], horizon);
    out.blocks.push_back(Block{n, lo, hi});
    auto& member = out.members[n % m];
    for (std::uint64_t i = lo + 1; i <= hi; ++i) {
      if (!bits.test(i)) continue;
      out.s0.set(i);
      member[i - 1] = 1;
    }
  }
  return out;
}

std::vector<FrequencyRow> diff_frequencies(const ScrambledFamily& family, unsigned i, unsigned j) {
  if (i >= family.m || j >= family.m) fail(ErrorKind::invalid_argument, "family member index out of range");
  const auto& u = family.members[i];
  const auto& v = family.members[j];
  std::vector<FrequencyRow> rows;
  std::uint64_t diff = 0;
  std::size_t next = 0;
  for (std::uint64_t c = 1; c <= family.horizon && next < family.checkpoints.size(); ++c) {
    diff += u[c - 1] != v[c - 1];
    if (c == family.checkpoints[next]) {
      rows.push_back(FrequencyRow{c, ratio(diff, c)});
      ++next;
    }
  }
  return rows;
}

Dc1Witness dc1_minimal_witness(const Point& x, unsigned k) {
  if (k == 0) fail(ErrorKind::invalid_argument, "dc1_minimal_witness needs k >= 1");
  const std::uint64_t span = x.preperiod().size() + x.period().size();
  for (std::uint64_t start = 1; start <= span; ++start) {
    bool nonzero = false;
    for (std::uint64_t i = start; i < start + k && !nonzero; ++i) nonzero = x.at(i) != 0;
    if (!nonzero) {
      fail(ErrorKind::precondition, "dc1_minimal_witness: " + x.to_string() + " has " + std::to_string(k) +
                                        " zeros in a row at position " + std::to_string(start));
    }
  }
  const Point zero = Point::constant(x.alphabet(), 0);
  const unsigned top = std::max<unsigned>(k, static_cast<unsigned>(x.period().size() + 1));
  const auto profile = distribution_profile(x, zero, top);
  Dc1Witness out;
  out.k = k;
  out.s = inverse_power(x.alphabet().size(), k);
  out.f_zero = profile.F[k] == 0;
  out.pair = classify_pair(profile);
  out.fstar_one = out.pair.fstar_one;
  return out;
}

}  // namespace hshift::chaos
