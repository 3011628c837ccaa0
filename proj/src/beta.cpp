#include "hshift/beta.hpp"

#include <cmath>
#include <regex>

namespace hshift::beta {

namespace {

BigInt big_pow2(unsigned bits) { return BigInt(1) << bits; }

bool is_perfect_square(const BigInt& d, BigInt& root) {
  if (d < 0) return false;
  root = boost::multiprecision::sqrt(d);
  return root * root == d;
}

BigInt floor_rational(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

// p + q sqrt(d), with d fixed and not a perfect square (or q == 0).
struct QuadNum {
  Rational p, q;
};

int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

int sign(const QuadNum& x, const BigInt& d) {
  const int sp = sign(x.p), sq = sign(x.q);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  const Rational lhs = x.p * x.p;
  const Rational rhs = x.q * x.q * Rational(d);
  // p > 0 > q: sign(p^2 - q^2 d); p < 0 < q: sign(q^2 d - p^2).
  const int cmp = lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
  return sp > 0 ? cmp : -cmp;
}

QuadNum mul(const QuadNum& x, const QuadNum& y, const BigInt& d) {
  return QuadNum{x.p * y.p + x.q * y.q * Rational(d), x.p * y.q + x.q * y.p};
}

double approx_value(const QuadNum& x, const BigInt& d) {
  return x.p.convert_to<double>() + x.q.convert_to<double>() * std::sqrt(d.convert_to<double>());
}

BigInt floor_quad(const QuadNum& x, const BigInt& d) {
  BigInt n(static_cast<long long>(std::floor(approx_value(x, d))));
  while (sign(QuadNum{x.p - Rational(n), x.q}, d) < 0) n -= 1;
  while (sign(QuadNum{x.p - Rational(n + 1), x.q}, d) >= 0) n += 1;
  return n;
}

// Canonical (p, q, d): q == 0 when the radicand is a square.
struct QuadValue {
  QuadNum value;
  BigInt d;
};

QuadValue quad_value(const Quadratic& q) {
  BigInt root;
  if (q.b == 0 || is_perfect_square(q.d, root)) {
    const BigInt num = q.b == 0 ? q.a : q.a + q.b * root;
    return QuadValue{QuadNum{Rational(num, q.c), Rational(0)}, BigInt(0)};
  }
  return QuadValue{QuadNum{Rational(q.a, q.c), Rational(q.b, q.c)}, q.d};
}

Alphabet alphabet_for_floor(const BigInt& fl) {
  if (fl + 1 > 256) fail(ErrorKind::invalid_argument, "beta too large for the symbol type");
  return Alphabet(fl.convert_to<unsigned>() + 1);
}

Expansion exact_expansion(const Quadratic& spec, std::size_t k) {
  const auto [beta, d] = quad_value(spec);
  const Alphabet alphabet = alphabet_for_floor(floor_quad(beta, d));
  QuadNum r{Rational(1), Rational(0)};
  std::vector<Symbol> digits;
  digits.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const QuadNum x = mul(beta, r, d);
    const BigInt digit = floor_quad(x, d);
    digits.push_back(digit.convert_to<Symbol>());
    r = QuadNum{x.p - Rational(digit), x.q};
    if (r.p == 0 && r.q == 0) {
      digits.resize(k, 0);
      return Expansion{Word(alphabet, std::move(digits)), true};
    }
  }
  return Expansion{Word(alphabet, std::move(digits)), false};
}

Expansion interval_expansion(const Decimal& spec, std::size_t k, unsigned bits, Alphabet alphabet) {
  const BigInt one = big_pow2(bits);
  const BigInt num = boost::multiprecision::numerator(spec.value) << bits;
  const BigInt den = boost::multiprecision::denominator(spec.value);
  const BigInt beta_lo = num / den;
  const BigInt beta_hi = (num + den - 1) / den;
  BigInt r_lo = one, r_hi = one;
  std::vector<Symbol> digits;
  digits.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const BigInt lo = (beta_lo * r_lo) >> bits;
    const BigInt hi = (beta_hi * r_hi + one - 1) >> bits;
    const BigInt d_lo = lo >> bits;
    const BigInt d_hi = hi >> bits;
    if (d_lo != d_hi) {
      fail(ErrorKind::precision_insufficient,
           "beta digit " + std::to_string(i + 1) + " undecided at " + std::to_string(bits) +
               " fraction bits; raise precision_bits");
    }
    digits.push_back(d_lo.convert_to<Symbol>());
    r_lo = lo - (d_lo << bits);
    r_hi = hi - (d_lo << bits);
    if (r_lo == 0 && r_hi == 0) {
      digits.resize(k, 0);
      return Expansion{Word(alphabet, std::move(digits)), true};
    }
  }
  return Expansion{Word(alphabet, std::move(digits)), false};
}

}  // namespace

BetaSpec::BetaSpec(std::variant<Decimal, Quadratic> value) : value_(std::move(value)) {
  if (const auto* dec = std::get_if<Decimal>(&value_)) {
    if (dec->value <= 1) fail(ErrorKind::invalid_argument, "beta must exceed 1");
    if (boost::multiprecision::denominator(dec->value) == 1) {
      fail(ErrorKind::invalid_argument, "integer beta is not supported");
    }
    alphabet_ = alphabet_for_floor(floor_rational(dec->value));
    approx_ = dec->value.convert_to<double>();
    return;
  }
  const auto& q = std::get<Quadratic>(value_);
  if (q.c <= 0) fail(ErrorKind::invalid_argument, "quadratic beta needs a positive denominator");
  if (q.d < 0) fail(ErrorKind::invalid_argument, "quadratic beta needs a nonnegative radicand");
  const auto [beta, d] = quad_value(q);
  if (sign(QuadNum{beta.p - 1, beta.q}, d) <= 0) fail(ErrorKind::invalid_argument, "beta must exceed 1");
  if (beta.q == 0 && boost::multiprecision::denominator(beta.p) == 1) {
    fail(ErrorKind::invalid_argument, "integer beta is not supported");
  }
  alphabet_ = alphabet_for_floor(floor_quad(beta, d));
  approx_ = approx_value(beta, d);
}

BetaSpec BetaSpec::parse(std::string_view text) {
  std::string s(text);
  if (s.rfind("beta=", 0) == 0) s = s.substr(5);
  static const std::regex decimal(R"(^(\d+)(?:\.(\d+))?$)");
  static const std::regex quad(R"(^quad:\((-?\d+)([+-])(\d+)\*sqrt(\d+)\)/(\d+)$)");
  std::smatch m;
  if (std::regex_match(s, m, decimal)) {
    const std::string frac = m[2].matched ? m[2].str() : "";
    const BigInt num(m[1].str() + frac);
    const BigInt den = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    return BetaSpec(Decimal{s, Rational(num, den)});
  }
  if (std::regex_match(s, m, quad)) {
    BigInt b(m[3].str());
    if (m[2].str() == "-") b = -b;
    return quadratic(BigInt(m[1].str()), b, BigInt(m[4].str()), BigInt(m[5].str()));
  }
  fail(ErrorKind::parse, "beta syntax is a decimal or quad:(a+b*sqrtd)/c, got '" + s + "'");
}

BetaSpec BetaSpec::quadratic(BigInt a, BigInt b, BigInt d, BigInt c) {
  return BetaSpec(Quadratic{std::move(a), std::move(b), std::move(d), std::move(c)});
}

BetaSpec BetaSpec::golden() { return quadratic(1, 1, 5, 2); }

unsigned BetaSpec::effective_precision_bits() const {
  if (precision_bits_ > 0) return precision_bits_;
  return 128 + static_cast<unsigned>(std::ceil(static_cast<double>(digit_horizon_) * std::log2(approx_)));
}

BetaSpec BetaSpec::with_horizon(std::size_t horizon) const {
  BetaSpec out = *this;
  out.digit_horizon_ = horizon;
  return out;
}

BetaSpec BetaSpec::with_precision(unsigned bits) const {
  BetaSpec out = *this;
  out.precision_bits_ = bits;
  return out;
}

std::string BetaSpec::to_string() const {
  if (const auto* dec = std::get_if<Decimal>(&value_)) return dec->text;
  const auto& q = std::get<Quadratic>(value_);
  const bool negative = q.b < 0;
  const BigInt b = negative ? BigInt(-q.b) : q.b;
  return "quad:(" + q.a.str() + (negative ? "-" : "+") + b.str() + "*sqrt" + q.d.str() + ")/" +
         q.c.str();
}

Expansion beta_expansion(const BetaSpec& spec, std::size_t k) {
  if (k > spec.digit_horizon()) {
    fail(ErrorKind::invalid_argument, "requested " + std::to_string(k) +
                                          " digits beyond digit horizon " +
                                          std::to_string(spec.digit_horizon()));
  }
  if (const auto* q = std::get_if<Quadratic>(&spec.value())) return exact_expansion(*q, k);
  return interval_expansion(std::get<Decimal>(spec.value()), k, spec.effective_precision_bits(),
                            spec.alphabet());
}

Word beta_digits(const BetaSpec& spec, std::size_t k) { return beta_expansion(spec, k).digits; }

ParryResult parry_check(std::span<const Symbol> prefix, std::uint64_t horizon) {
  ParryResult undecided{ParryVerdict::satisfied, 0};
  const std::size_t len = prefix.size();
  for (std::uint64_t k = 1; k <= horizon; ++k) {
    if (k >= len) {
      if (undecided.shift == 0) undecided = ParryResult{ParryVerdict::indeterminate, k};
      break;
    }
    const auto cmp = lex_compare(prefix.subspan(k), prefix.first(len - k));
    if (cmp > 0) return ParryResult{ParryVerdict::violated, k};
    if (cmp == 0 && undecided.shift == 0) undecided = ParryResult{ParryVerdict::indeterminate, k};
  }
  return undecided;
}

ParryResult parry_check(const Point& digits, std::uint64_t horizon) {
  // sigma^k for k >= |pre| runs through the rotations of the period, so
  // shifts beyond |pre| + |per| repeat earlier ones.
  const std::uint64_t limit =
      std::min<std::uint64_t>(horizon, digits.preperiod().size() + digits.period().size());
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (lex_compare(shift_point(digits, k), digits) > 0) return ParryResult{ParryVerdict::violated, k};
  }
  return ParryResult{};
}

BetaShift::BetaShift(BetaSpec spec)
    : spec_(std::move(spec)), expansion_(beta_expansion(spec_, spec_.digit_horizon())) {}

std::span<const Symbol> BetaShift::digits(std::size_t k) const {
  if (k > expansion_.digits.size()) {
    fail(ErrorKind::invalid_argument, "word length " + std::to_string(k) +
                                          " exceeds the beta digit horizon " +
                                          std::to_string(expansion_.digits.size()));
  }
  return expansion_.digits.symbols().first(k);
}

bool suffix_rule(const BetaShift& shift, std::span<const Symbol> w) {
  const auto d = shift.digits(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (lex_compare(w.subspan(i), d.first(w.size() - i)) > 0) return false;
  }
  return true;
}

bool word_in_beta_language(const BetaShift& shift, const Word& w) {
  require_same_alphabet(w.alphabet(), shift.alphabet(), "word_in_beta_language");
  return suffix_rule(shift, w.symbols());
}

std::vector<BigInt> count_beta_language_upto(const BetaShift& shift, std::size_t k_max) {
  if (k_max == 0) return {};
  const auto d = shift.digits(k_max);
  const unsigned n = shift.alphabet().size();

  // border[j]: longest proper border of d_1 .. d_j.
  std::vector<std::size_t> border(k_max + 1, 0);
  for (std::size_t j = 1, t = 0; j < k_max; ++j) {
    while (t > 0 && d[j] != d[t]) t = border[t];
    if (d[j] == d[t]) ++t;
    border[j + 1] = t;
  }

  // State j: the longest suffix of the word read so far that equals
  // d_1 .. d_j.  Every suffix matching a prefix of d is on the border
  // chain of j, and symbol a is legal iff a <= d_{t+1} along that chain.
  constexpr std::size_t kReject = static_cast<std::size_t>(-1);
  std::vector<std::size_t> next(k_max * n, kReject);
  for (std::size_t j = 0; j < k_max; ++j) {
    for (unsigned a = 0; a < n; ++a) {
      std::size_t target = kReject;
      bool legal = true;
      for (std::size_t t = j;; t = border[t]) {
        if (a > d[t]) {
          legal = false;
          break;
        }
        if (a == d[t] && target == kReject) target = t + 1;
        if (t == 0) break;
      }
      if (legal) next[j * n + a] = target == kReject ? 0 : target;
    }
  }

  std::vector<BigInt> cur(k_max + 1, 0), nxt(k_max + 1, 0);
  cur[0] = 1;
  std::vector<BigInt> counts;
  counts.reserve(k_max);
  for (std::size_t step = 0; step < k_max; ++step) {
    std::fill(nxt.begin(), nxt.end(), 0);
    for (std::size_t j = 0; j <= step && j < k_max; ++j) {
      if (cur[j] == 0) continue;
      for (unsigned a = 0; a < n; ++a) {
        const std::size_t t = next[j * n + a];
        if (t != kReject) nxt[t] += cur[j];
      }
    }
    std::swap(cur, nxt);
    BigInt total = 0;
    for (const auto& c : cur) total += c;
    counts.push_back(std::move(total));
  }
  return counts;
}

BigInt count_beta_language(const BetaShift& shift, std::size_t k) {
  if (k == 0) fail(ErrorKind::invalid_argument, "count_beta_language needs k >= 1");
  return count_beta_language_upto(shift, k).back();
}

namespace {

bool lowering_closed(const BetaShift& shift, std::vector<Symbol>& w, std::size_t k) {
  if (w.size() == k) {
    for (std::size_t i = 0; i < k; ++i) {
      if (w[i] == 0) continue;
      --w[i];
      const bool ok = suffix_rule(shift, w);
      ++w[i];
      if (!ok) return false;
    }
    return true;
  }
  for (unsigned a = 0; a < shift.alphabet().size(); ++a) {
    w.push_back(static_cast<Symbol>(a));
    const bool keep = suffix_rule(shift, w);
    const bool ok = !keep || lowering_closed(shift, w, k);
    w.pop_back();
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool beta_hereditary_probe(const BetaShift& shift, std::size_t k) {
  if (k == 0 || k > 14) fail(ErrorKind::invalid_argument, "beta_hereditary_probe needs 1 <= k <= 14");
  std::vector<Symbol> w;
  return lowering_closed(shift, w, k);
}

}  // namespace hshift::beta
