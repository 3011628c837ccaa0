#include "doctest.h"
#include "hshift/beta.hpp"
#include "oracles.hpp"

using namespace hshift;
using namespace hshift::beta;

namespace {

oracle::Bits bits(std::span<const Symbol> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("golden digits match the exact oracle") {
  const auto golden = BetaSpec::golden();
  CHECK(golden.exact());
  CHECK(bits(beta_digits(golden, 64).symbols()) == oracle::golden_digits(64));
  CHECK(BetaSpec::parse("quad:(1+1*sqrt5)/2").to_string() == golden.to_string());
  CHECK(beta_digits(golden, 16).to_string() == "1100000000000000");
  CHECK(beta_expansion(golden, 8).terminates);
}

TEST_CASE("rational digits match the exact oracle") {
  for (const char* text : {"1.5", "2.5", "1.25", "3.7"}) {
    const auto spec = BetaSpec::parse(text);
    const auto d = beta_digits(spec, 40);
    const oracle::Rat value = std::get<Decimal>(spec.value()).value;
    INFO(text);
    CHECK(bits(d.symbols()) == oracle::rational_digits(value, 40));
  }
  CHECK(beta_digits(BetaSpec::parse("1.5"), 9).to_string() == "101000001");
}

TEST_CASE("quadratic digits for another unit") {
  // 1 + sqrt2: beta - 2 = 1/beta, so the expansion of 1 is 2, 1.
  const auto spec = BetaSpec::parse("quad:(1+1*sqrt2)/1");
  CHECK(spec.alphabet().size() == 3);
  const auto e = beta_expansion(spec, 6);
  CHECK(e.digits.to_string().substr(0, 2) == "21");
  CHECK(e.terminates);
}

TEST_CASE("beta parse errors") {
  CHECK_THROWS_AS(BetaSpec::parse("golden"), Error);
  CHECK_THROWS_AS(BetaSpec::parse("1"), Error);
  CHECK_THROWS_AS(BetaSpec::parse("0.5"), Error);
  CHECK_THROWS_AS(BetaSpec::parse("3.000"), Error);
  try {
    BetaSpec::parse("2");
    FAIL("integer beta accepted");
  } catch (const Error& e) {
    CHECK(e.kind() != ErrorKind::precision_insufficient);
  }
}

TEST_CASE("low precision reports insufficient precision") {
  const auto spec = BetaSpec::parse("1.6180339887").with_precision(8);
  try {
    (void)beta_digits(spec, 200);
    FAIL("expected precision error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::precision_insufficient);
  }
}

TEST_CASE("parry check") {
  CHECK(parry_check(Point::parse("11;0"), 10000).verdict == ParryVerdict::satisfied);
  CHECK(parry_check(Point::parse(";10"), 100).verdict == ParryVerdict::satisfied);
  const auto bad = parry_check(Point::parse("01;1"), 100);
  CHECK(bad.verdict == ParryVerdict::violated);
  CHECK(bad.shift == 1);
  const auto digits = beta_digits(BetaSpec::parse("1.5"), 64);
  CHECK(parry_check(digits.symbols(), 64).verdict != ParryVerdict::violated);
}

TEST_CASE("membership and counts agree with the brute-force oracle") {
  for (const char* text : {"quad:(1+1*sqrt5)/2", "1.5", "2.5", "1.8"}) {
    const BetaShift shift(BetaSpec::parse(text));
    const auto d = bits(shift.digits(16));
    const auto n = static_cast<int>(shift.alphabet().size());
    const auto counts = count_beta_language_upto(shift, 10);
    for (int k = 1; k <= 10; ++k) {
      std::uint64_t brute = 0;
      oracle::all_words(n, k, [&](const oracle::Bits& w) {
        const bool ok = oracle::beta_ok(w, d);
        std::vector<Symbol> s(w.begin(), w.end());
        CHECK(word_in_beta_language(shift, Word(shift.alphabet(), s)) == ok);
        brute += ok;
      });
      INFO(text << " k=" << k);
      CHECK(counts[k - 1] == brute);
    }
  }
}

TEST_CASE("golden beta counts") {
  const BetaShift golden(BetaSpec::golden());
  CHECK(count_beta_language(golden, 3) == 7);
  CHECK(count_beta_language(golden, 14) == 1596);
  const BetaShift half(BetaSpec::parse("1.5"));
  CHECK(count_beta_language(half, 14) == 452);
}

TEST_CASE("beta shifts are hereditary") {
  for (const char* text : {"quad:(1+1*sqrt5)/2", "1.5", "2.5"}) {
    CHECK(beta_hereditary_probe(BetaShift(BetaSpec::parse(text)), 8));
  }
}
