#include "doctest.h"
#include "hshift/chaos.hpp"

#include <random>

using namespace hshift;
using namespace hshift::chaos;

namespace {

Point X(const char* text) { return Point::parse(text); }

Point random_point(std::mt19937_64& rng) {
  std::vector<Symbol> pre(rng() % 6), per(1 + rng() % 12);
  for (auto& s : pre) s = rng() % 2;
  for (auto& s : per) s = rng() % 2;
  return Point(Alphabet{2}, pre, per);
}

}  // namespace

TEST_CASE("diff and equal densities") {
  const auto d = diff_equal_densities(X(";10"), X(";0"));
  CHECK(d.diff == Rational(1, 2));
  CHECK(d.equal == Rational(1, 2));
  const auto e = diff_equal_densities(X("111;0"), X(";0"));
  CHECK(e.diff == 0);
  CHECK(e.equal == 1);
  CHECK(diff_equal_densities(X(";10"), X(";01")).diff == 1);
}

TEST_CASE("exact profile of (10)^inf against 0^inf") {
  const auto p = distribution_profile(X(";10"), X(";0"));
  CHECK(p.exact);
  REQUIRE(p.F.size() >= 3);
  CHECK(p.F[0] == 1);
  CHECK(p.F[1] == Rational(1, 2));
  CHECK(p.thresholds[1] == Rational(1, 2));
  for (std::size_t k = 2; k < p.F.size(); ++k) CHECK(p.F[k] == 0);
  CHECK(p.F == p.Fstar);
  const auto c = classify_pair(p);
  CHECK(c.verdict == Verdict::none);
  CHECK_FALSE(c.evidence);
}

TEST_CASE("equal density one iff F is identically one") {
  // The orbit distance goes to zero in density exactly when Equal has density 1.
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 200; ++t) {
    const Point x = random_point(rng), y = random_point(rng);
    const auto d = diff_equal_densities(x, y);
    const auto p = distribution_profile(x, y);
    const bool all_one = std::all_of(p.F.begin(), p.F.end(), [](const Rational& v) { return v == 1; });
    CHECK((d.equal == 1) == all_one);
    // F is non-increasing in k, hence non-decreasing in t.
    for (std::size_t k = 1; k < p.F.size(); ++k) CHECK(p.F[k] <= p.F[k - 1]);
    // F(1) is the Equal density at the coarsest grid step.
    CHECK(p.F[1] == d.equal);
  }
}

TEST_CASE("empirical profile matches the exact one on periodic pairs") {
  const Point x = X("1;0110"), y = X(";0100");
  std::vector<Symbol> a, b;
  for (std::uint64_t i = 1; i <= 4000; ++i) {
    a.push_back(x.at(i));
    b.push_back(y.at(i));
  }
  const auto exact = distribution_profile(x, y, 6);
  const auto emp = distribution_profile(a, b, 2, {1000, 2000, 3000}, 6);
  CHECK_FALSE(emp.exact);
  for (std::size_t k = 0; k <= 6; ++k) {
    CHECK(to_double(emp.F[k]) == doctest::Approx(to_double(exact.F[k])).epsilon(0.01));
    CHECK(emp.F[k] <= emp.Fstar[k]);
  }
  CHECK_THROWS_AS(distribution_profile(a, b, 2, {}, 5000), Error);
}

TEST_CASE("verdict ordering") {
  DistributionProfile p;
  p.exact = true;
  p.ks = {0, 1, 2};
  p.thresholds = {1, Rational(1, 2), Rational(1, 4)};
  p.Fstar = {1, 1, 1};
  p.F = {1, Rational(1, 2), 0};
  CHECK(classify_pair(p).verdict == Verdict::dc1);
  p.F = {1, Rational(1, 2), Rational(1, 3)};
  const auto two = classify_pair(p);
  CHECK(two.verdict == Verdict::dc2_not_dc1);
  CHECK(two.dc2);
  CHECK(two.dc3);
  p.Fstar = {1, Rational(3, 4), Rational(1, 2)};
  CHECK(classify_pair(p).verdict == Verdict::dc3_not_dc2);
  p.F = p.Fstar;
  CHECK(classify_pair(p).verdict == Verdict::none);
}

TEST_CASE("scrambled family invariants") {
  const auto f = build_scrambled_family(sets::IntSet::parse("evens"), 2, 100000);
  CHECK(f.growth_ok);
  CHECK(f.b == std::vector<std::uint64_t>{2, 256, 32768, 4194304});
  for (std::size_t n = 1; n < f.b.size(); ++n) CHECK(n * f.b[n - 1] <= f.b[n]);
  // Members are pairwise disjoint and their union is S_0, a subset of S.
  for (std::uint64_t i = 1; i <= f.horizon; ++i) {
    int hits = 0;
    for (const auto& m : f.members) hits += m[i - 1];
    CHECK(hits == static_cast<int>(f.s0.test(i)));
    if (f.s0.test(i)) CHECK(i % 2 == 0);
  }
  const auto rows = diff_frequencies(f, 0, 1);
  REQUIRE(rows.size() == 3);
  CHECK(to_double(rows[1].diff) > 0.4);
  CHECK(to_double(rows[2].diff) < 0.01);
  CHECK_THROWS_AS(diff_frequencies(f, 0, 2), Error);
  CHECK_THROWS_AS(build_scrambled_family(sets::IntSet::parse("pow2"), 2, 1000), Error);
}

TEST_CASE("scrambled family with three members") {
  FamilyOptions opt;
  opt.growth = 8;
  const auto f = build_scrambled_family(sets::IntSet::parse("periodic:;110"), 3, 100000, opt);
  CHECK(f.growth_ok);
  for (unsigned i = 0; i < 3; ++i) {
    for (unsigned j = i + 1; j < 3; ++j) {
      Rational best = 0;
      for (const auto& row : diff_frequencies(f, i, j)) best = std::max(best, row.diff);
      CHECK(to_double(best) >= 0.5);
    }
  }
}

TEST_CASE("members of a hereditary shift stay in it") {
  // Lowering a spacing-shift point keeps it admissible: members are subsets of S.
  const auto f = build_scrambled_family(sets::IntSet::parse("evens"), 2, 2000, FamilyOptions{8});
  for (const auto& m : f.members) {
    std::uint64_t last = 0;
    for (std::uint64_t i = 1; i <= f.horizon; ++i) {
      if (!m[i - 1]) continue;
      if (last) CHECK((i - last) % 2 == 0);
      last = i;
    }
  }
}

TEST_CASE("DC1 minimal witness") {
  const auto w = dc1_minimal_witness(X(";10"), 2);
  CHECK(w.f_zero);
  CHECK(w.s == Rational(1, 4));
  CHECK_FALSE(w.fstar_one);
  CHECK_THROWS_AS(dc1_minimal_witness(X(";100"), 2), Error);
}
