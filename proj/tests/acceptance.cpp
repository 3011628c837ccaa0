// One PASS/FAIL line per acceptance criterion.  Exit status is the number of
// failures, so ctest fails when any line does.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "hshift/chaos.hpp"
#include "hshift/cli.hpp"
#include "hshift/langkit.hpp"
#include "hshift/spacing_probes.hpp"
#include "oracles.hpp"

using namespace hshift;
using langkit::SubshiftSpec;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Checks append a reason on failure and keep going.
struct Check {
  std::ostringstream why;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (!ok) why << "; ";
    why << what;
    ok = false;
  }
};

const double kLog2Phi = std::log2((1 + std::sqrt(5.0)) / 2);

oracle::Bits digits_of(std::span<const Symbol> s) { return {s.begin(), s.end()}; }

std::vector<Symbol> symbols_of(const oracle::Bits& w) { return {w.begin(), w.end()}; }

struct Family {
  const char* spec;
  std::function<bool(const oracle::Bits&)> accepts;
};

std::vector<Family> oracle_families() {
  const auto golden = oracle::golden_digits(32);
  const auto half = oracle::rational_digits(oracle::Rat(3, 2), 32);
  return {
      {"full:n=2", [](const oracle::Bits&) { return true; }},
      {"spacing:P=complement:(finite:{1})",
       [](const oracle::Bits& w) { return oracle::spacing_ok(w, [](int d) { return d != 1; }); }},
      {"spacing:P=evens",
       [](const oracle::Bits& w) { return oracle::spacing_ok(w, [](int d) { return d % 2 == 0; }); }},
      {"beta:beta=quad:(1+1*sqrt5)/2", [golden](const oracle::Bits& w) { return oracle::beta_ok(w, golden); }},
      {"beta:beta=1.5", [half](const oracle::Bits& w) { return oracle::beta_ok(w, half); }},
      {"counting", [](const oracle::Bits& w) { return oracle::counting_ok(w); }},
  };
}

bool criterion1(Check& c) {
  const auto t0 = Clock::now();
  for (const auto& fam : oracle_families()) {
    const auto counts = langkit::count_language_upto(SubshiftSpec::parse(fam.spec), 14);
    for (int k = 1; k <= 14; ++k) {
      std::uint64_t brute = 0;
      oracle::all_words(2, k, [&](const oracle::Bits& w) { brute += fam.accepts(w); });
      c.expect(counts[k - 1] == brute, std::string(fam.spec) + " k=" + std::to_string(k));
    }
  }
  const double s = seconds_since(t0);
  c.expect(s < 120, "took " + std::to_string(s) + " s");
  return c.ok;
}

bool criterion2(Check& c) {
  const auto r = langkit::entropy_estimates(SubshiftSpec::full(), 30);
  for (const auto& row : r.rows) {
    c.expect(row.lambda == BigInt(1) << row.k, "lambda_" + std::to_string(row.k));
    c.expect(row.h_k == 1.0, "h_" + std::to_string(row.k));
  }
  c.expect(r.rows.size() == 30, "row count");
  return c.ok;
}

bool criterion3(Check& c) {
  const auto r = langkit::entropy_estimates(SubshiftSpec::parse("spacing:P=complement:(finite:{1})"), 30);
  const auto& rows = r.rows;
  c.expect(rows.size() == 30 && rows[0].lambda == 2 && rows[1].lambda == 3, "initial values");
  for (std::size_t k = 3; k <= rows.size(); ++k) {
    c.expect(rows[k - 1].lambda == rows[k - 2].lambda + rows[k - 3].lambda, "recurrence at k=" + std::to_string(k));
  }
  for (const auto& row : rows) c.expect(row.h_k >= kLog2Phi - 1e-9, "h_" + std::to_string(row.k) + " below log2 phi");
  const double h30 = rows.back().h_k;
  c.expect(h30 >= kLog2Phi && h30 <= kLog2Phi + 0.01, "h_30 = " + std::to_string(h30));
  return c.ok;
}

bool criterion4(Check& c) {
  const auto t0 = Clock::now();
  const auto spec = beta::BetaSpec::golden();
  c.expect(digits_of(beta::beta_digits(spec, 64).symbols()) == oracle::golden_digits(64), "64 digits");
  // A prefix of length L decides shifts k < L only.
  const auto long_prefix = beta::beta_digits(spec.with_horizon(10001), 10001);
  c.expect(beta::parry_check(long_prefix.symbols(), 10000).verdict == beta::ParryVerdict::satisfied,
           "parry on the digit prefix at 10^4");
  const auto e = beta::beta_expansion(spec, 64);
  c.expect(e.terminates, "golden expansion should terminate");
  const Point d_point(e.digits, Word::parse("0"));
  c.expect(beta::parry_check(d_point, 10000).verdict == beta::ParryVerdict::satisfied, "parry on the point at 10^4");
  const auto golden = SubshiftSpec::beta(spec);
  const auto lambda = langkit::count_language(golden, 200);
  const double h = log2_big(lambda) / 200;
  c.expect(std::abs(h - kLog2Phi) <= 0.005, "log2(lambda_200)/200 = " + std::to_string(h));
  std::uint64_t brute = 0;
  const auto d = oracle::golden_digits(8);
  oracle::all_words(2, 3, [&](const oracle::Bits& w) { brute += oracle::beta_ok(w, d); });
  c.expect(brute == 7 && langkit::count_language(golden, 3) == 7, "lambda_3");
  const double s = seconds_since(t0);
  c.expect(s < 10, "took " + std::to_string(s) + " s");
  return c.ok;
}

bool criterion5(Check& c) {
  const auto spec = beta::BetaSpec::parse("1.5");
  const auto digits = beta::beta_digits(spec, 9);
  c.expect(digits.to_string() == "101000001", "prefix " + digits.to_string());
  c.expect(digits_of(beta::beta_digits(spec, 64).symbols()) == oracle::rational_digits(oracle::Rat(3, 2), 64),
           "64 digits against the rational oracle");
  const double h = log2_big(langkit::count_language(SubshiftSpec::beta(spec), 200)) / 200;
  c.expect(std::abs(h - std::log2(1.5)) <= 0.01, "log2(lambda_200)/200 = " + std::to_string(h));
  return c.ok;
}

bool criterion6(Check& c) {
  const auto counting = SubshiftSpec::counting();
  c.expect(!langkit::contains_word(counting, Word::parse("11")), "11 accepted");
  c.expect(!langkit::contains_word(counting, Word::parse("1010101")), "1010101 accepted");
  c.expect(langkit::contains_word(counting, Word::parse("101")), "101 rejected");
  const auto d = langkit::max_symbol_counts(counting, 1, 64);
  for (unsigned j = 1; j <= 6; ++j) {
    c.expect(d[(1u << j) - 1] == j, "D_" + std::to_string(1u << j) + " = " + std::to_string(d[(1u << j) - 1]));
  }
  // Ones at positions 2^i - 1 reach the value 6 at k = 64.
  std::vector<Symbol> w(64, 0);
  for (unsigned i = 1; i <= 6; ++i) w[(1u << i) - 2] = 1;
  c.expect(langkit::contains_word(counting, Word(Alphabet{2}, w)), "ones at 2^i - 1 rejected");
  const auto r = langkit::entropy_estimates(counting, 32);
  const double h8 = r.rows[7].h_k, h16 = r.rows[15].h_k, h32 = r.rows[31].h_k;
  c.expect(h8 > h16 && h16 > h32, "h_8, h_16, h_32 not decreasing");
  const auto mix = langkit::mixing_probe(counting, Word::parse("101"), Word::parse("101"), 64);
  c.expect(mix.gap && *mix.gap <= 8, "mixing gap");
  return c.ok;
}

bool criterion7(Check& c) {
  const auto families = oracle_families();
  for (const auto& fam : families) {
    if (std::string(fam.spec) == "full:n=2") continue;
    const auto spec = SubshiftSpec::parse(fam.spec);
    c.expect(langkit::hereditary_check(spec, 12).hereditary, std::string(fam.spec) + " not hereditary");
    for (std::size_t k : {6, 14}) {
      const auto lambda = langkit::count_language(spec, k);
      const auto words = langkit::sample_words(spec, k, 1000, 20240 + k);
      c.expect(words.size() == 1000, "sample size");
      for (const auto& w : words) {
        const oracle::Bits bits = digits_of(w.symbols());
        if (!fam.accepts(bits)) {
          c.expect(false, std::string(fam.spec) + " sampled a non-language word");
          break;
        }
        if (BigInt(1) << w.nonzero_count() > lambda) {
          c.expect(false, std::string(fam.spec) + " bound fails on " + w.to_string());
          break;
        }
      }
    }
  }
  return c.ok;
}

bool criterion8(Check& c) {
  for (int n = 1; n <= 30; ++n) {
    for (int t = 1; t <= 10; ++t) {
      const double eps = 0.05 * t;
      const int j = static_cast<int>(std::floor(n * eps + 1e-9));
      const auto sum = oracle::choose_sum(n, j);
      c.expect(langkit::binomial_prefix_sum(n, j) == sum, "prefix sum n=" + std::to_string(n));
      const double bound = std::exp2(n * langkit::binary_entropy(eps));
      c.expect(sum.convert_to<double>() <= bound * (1 + 1e-12),
               "n=" + std::to_string(n) + " eps=" + std::to_string(eps));
    }
  }
  c.expect(oracle::choose_sum(10, 3) == 176, "spot sum");
  c.expect(176 <= std::exp2(10 * langkit::binary_entropy(0.3)), "spot bound");
  return c.ok;
}

// F(t) from grid values: rho takes values n^-k, so F is constant on
// (n^-(k+1), n^-k] and equals the grid value at n^-k.
Rational F_at(const chaos::DistributionProfile& p, const Rational& t) {
  for (std::size_t i = 0; i < p.ks.size(); ++i) {
    if (p.thresholds[i] < t) return i == 0 ? Rational(1) : p.F[i - 1];
    if (p.thresholds[i] == t) return p.F[i];
  }
  return p.F.back();
}

bool criterion9(Check& c) {
  const auto x = Point::parse(";10"), zero = Point::parse(";0");
  const auto p = chaos::distribution_profile(x, zero);
  c.expect(p.exact && p.F == p.Fstar, "profile not exact");
  const std::vector<std::pair<Rational, Rational>> steps{
      {Rational(1, 8), 0},          {Rational(1, 4), 0}, {Rational(1, 3), Rational(1, 2)},
      {Rational(1, 2), Rational(1, 2)}, {Rational(3, 4), 1}, {Rational(1), 1}};
  for (const auto& [t, want] : steps) c.expect(F_at(p, t) == want, "F(" + to_string(t) + ")");
  c.expect(chaos::classify_pair(p).verdict == chaos::Verdict::none, "verdict");

  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 50; ++trial) {
    auto random_point = [&] {
      std::vector<Symbol> pre(rng() % 5), per(1 + rng() % 12);
      for (auto& s : pre) s = rng() % 2;
      for (auto& s : per) s = rng() % 2;
      return Point(Alphabet{2}, pre, per);
    };
    const Point a = random_point();
    // Half the pairs share a period so that Diff can have density zero.
    const Point b = trial % 2 ? random_point() : Point(Alphabet{2}, {}, {a.period().begin(), a.period().end()});
    // Diff density over one combined period, computed directly.
    const std::uint64_t pre = std::max(a.preperiod().size(), b.preperiod().size());
    const std::uint64_t per = std::lcm(a.period().size(), b.period().size());
    std::uint64_t diff = 0;
    for (std::uint64_t i = pre + 1; i <= pre + per; ++i) diff += a.at(i) != b.at(i);
    const auto q = chaos::distribution_profile(a, b);
    const bool some_below_one = std::any_of(q.F.begin(), q.F.end(), [](const Rational& v) { return v < 1; });
    const bool fstar_one = std::all_of(q.Fstar.begin(), q.Fstar.end(), [](const Rational& v) { return v == 1; });
    c.expect(some_below_one == (diff > 0), "F < 1 somewhere iff ud(Diff) > 0, trial " + std::to_string(trial));
    c.expect(fstar_one == (diff == 0), "F* = 1 iff ud(Equal) = 1, trial " + std::to_string(trial));
  }
  return c.ok;
}

bool criterion10(Check& c) {
  const auto f = chaos::build_scrambled_family(sets::IntSet::parse("evens"), 2, 100000);
  for (std::size_t n = 1; n < f.b.size(); ++n) {
    c.expect(BigInt(n) * f.b[n - 1] <= BigInt(f.b[n]), "growth at n=" + std::to_string(n));
  }
  c.expect(f.growth_ok, "growth flag");
  const auto rows = chaos::diff_frequencies(f, 0, 1);
  bool equal_high = false, diff_high = false;
  for (const auto& row : rows) {
    // b is 1-based in the construction: b_1 = f.b[0].
    const auto at = std::find(f.b.begin(), f.b.end(), row.checkpoint) - f.b.begin() + 1;
    if (at % 2 == 1 && row.checkpoint > f.b[0] && 1 - to_double(row.diff) >= 0.99) equal_high = true;
    if (at % 2 == 0 && to_double(row.diff) >= 0.4) diff_high = true;
  }
  c.expect(equal_high, "Equal frequency never reaches 0.99 at b_{2n+1}");
  c.expect(diff_high, "Diff frequency never reaches 0.4 at b_{2n}");
  const auto profile =
      chaos::distribution_profile(f.members[0], f.members[1], 2, f.checkpoints, 8);
  const auto cls = chaos::classify_pair(profile);
  c.expect(cls.evidence && cls.dc2, std::string("classified ") + chaos::to_string(cls.verdict));
  return c.ok;
}

bool ones_then_zeros(std::uint64_t n) {
  std::string s;
  for (; n; n >>= 1) s.insert(s.begin(), static_cast<char>('0' + (n & 1)));
  const auto z = s.find('0');
  return z == std::string::npos || s.find('1', z) == std::string::npos;
}

bool criterion11(Check& c) {
  const auto pd = sets::IntSet::parse("pow2diff");
  std::uint64_t count = 0;
  for (auto n : pd.members(std::uint64_t{1} << 20)) {
    c.expect(ones_then_zeros(n), "pow2diff member " + std::to_string(n));
    ++count;
  }
  // 2^i - 2^j for 0 <= j < i <= 20, plus 2^21 - 2^20 = 2^20.
  c.expect(count == 211, "pow2diff count " + std::to_string(count));

  const auto ip = sets::ip_witness_search(pd, 1 << 12, 3, 50'000'000);
  c.expect(ip.complete && ip.members.size() < 3, "IP search found a 3-element set");
  const auto small = pd.members((1 << 12) - 1);
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = i + 1; j < small.size(); ++j) {
      for (std::size_t k = j + 1; k < small.size(); ++k) {
        const auto a = small[i], b = small[j], d = small[k];
        if (pd.contains(a + b) && pd.contains(a + d) && pd.contains(b + d) && pd.contains(a + b + d) &&
            a + b + d < (1u << 12)) {
          c.expect(false, "brute force found {" + std::to_string(a) + "," + std::to_string(b) + "," +
                              std::to_string(d) + "}");
        }
      }
    }
  }

  const auto evens = spacing::delta_star_bound_check(sets::IntSet::parse("evens"), 3, 1000, 4096, 1);
  c.expect(evens.holds, "delta* evens k=3");
  const auto thirds = spacing::delta_star_bound_check(sets::IntSet::parse("periodic:;001"), 4, 1000, 4096, 2);
  c.expect(thirds.holds, "delta* multiples of 3 k=4");

  for (const char* text : {"evens", "pow2"}) {
    const auto a = sets::IntSet::parse(text);
    const auto w = spacing::difference_subset_witness(a, 512);
    c.expect(w.verified, std::string(text) + " witness not verified");
    c.expect(w.members.size() >= 2, std::string(text) + " witness too small");
    for (std::size_t i = 0; i < w.members.size(); ++i) {
      for (std::size_t j = i + 1; j < w.members.size(); ++j) {
        const auto d = w.members[j] - w.members[i];
        bool found = false;
        for (std::uint64_t x = 1; x <= 4096 && !found; ++x) found = a.contains(x) && a.contains(x + d);
        if (!found) c.expect(false, std::string(text) + " difference " + std::to_string(d) + " not in A-A");
      }
    }
  }
  return c.ok;
}

bool criterion12(Check& c) {
  const auto odds = spacing::recurrence_entropy_probe(sets::IntSet::parse("odds"), 20);
  for (const auto& row : odds.report.rows) {
    c.expect(row.lambda >= BigInt(1) << ((row.k + 1) / 2), "lambda_" + std::to_string(row.k));
    c.expect(row.h_k >= 0.5, "h_" + std::to_string(row.k));
  }
  c.expect(odds.lower.bound >= Rational(1, 2), "dense word density");
  const auto all = spacing::recurrence_entropy_probe(sets::IntSet::parse("complement:(finite:{})"), 20);
  for (const auto& row : all.report.rows) c.expect(row.lambda == row.k + 1, "N: lambda_" + std::to_string(row.k));
  return c.ok;
}

bool criterion13(Check& c) {
  const std::vector<std::vector<std::string>> configs{
      {"spacing", "delta-star", "--set", "evens", "--k", "3", "--trials", "500", "--horizon", "2000", "--seed", "17"},
      {"entropy", "--shift", "beta:beta=1.5", "--kmax", "40"},
      {"chaos", "family", "--set", "evens", "--members", "2", "--horizon", "20000"},
      {"--format", "csv", "language", "--shift", "counting", "--kmax", "16"}};
  for (const auto& args : configs) {
    const auto a = cli::run(args), b = cli::run(args);
    c.expect(a.exit_code == 0 && a.out == b.out && a.err == b.err, "differs: " + args[0]);
  }
  return c.ok;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, bool (*)(Check&)>> criteria{
      {"oracle equivalence k = 1..14", criterion1},
      {"full shift entropy", criterion2},
      {"golden spacing shift", criterion3},
      {"golden beta shift", criterion4},
      {"beta 3/2", criterion5},
      {"counting shift", criterion6},
      {"heredity", criterion7},
      {"binomial bound", criterion8},
      {"exact chaos profile", criterion9},
      {"scrambled family", criterion10},
      {"sets", criterion11},
      {"recurrence probe", criterion12},
      {"determinism", criterion13},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto t0 = Clock::now();
    bool ok = false;
    try {
      ok = criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    ok = ok && c.ok;
    failures += !ok;
    std::printf("%s criterion %zu: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
                seconds_since(t0), ok ? "" : " -- ", ok ? "" : c.why.str().c_str());
    std::fflush(stdout);
  }
  return failures;
}
