#include "hshift/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace hshift {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::alphabet_mismatch: return "alphabet_mismatch";
    case ErrorKind::parse: return "parse_error";
    case ErrorKind::resource_cap: return "resource_cap";
    case ErrorKind::precision_insufficient: return "precision_insufficient";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::search_failure: return "search_failure";
  }
  return "unknown";
}

double log2_big(const BigInt& x) {
  if (x <= 0) fail(ErrorKind::invalid_argument, "log2 of a non-positive integer");
  const auto top = static_cast<long>(boost::multiprecision::msb(x));
  if (top < 60) return std::log2(x.convert_to<double>());
  const long drop = top - 60;
  const BigInt head = x >> drop;
  return static_cast<double>(drop) + std::log2(head.convert_to<double>());
}

std::string to_decimal(const BigInt& x) { return x.str(); }

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational inverse_power(unsigned n, unsigned k) {
  BigInt den = boost::multiprecision::pow(BigInt(n), k);
  return Rational(BigInt(1), den);
}

Alphabet::Alphabet(unsigned size) : size_(size) {
  if (size < 2) fail(ErrorKind::invalid_argument, "alphabet size must be at least 2");
  if (size > 256) fail(ErrorKind::invalid_argument, "alphabet size above 256 is unsupported");
}

void require_same_alphabet(Alphabet a, Alphabet b, std::string_view where) {
  if (a != b) {
    fail(ErrorKind::alphabet_mismatch,
         std::string(where) + ": alphabet sizes " + std::to_string(a.size()) +
             " and " + std::to_string(b.size()) + " differ");
  }
}

namespace {

void check_symbols(Alphabet alphabet, std::span<const Symbol> symbols) {
  for (Symbol s : symbols) {
    if (!alphabet.contains(s)) {
      fail(ErrorKind::invalid_argument,
           "symbol " + std::to_string(s) + " outside alphabet of size " +
               std::to_string(alphabet.size()));
    }
  }
}

std::vector<Symbol> parse_digits(std::string_view digits, Alphabet alphabet) {
  std::vector<Symbol> out;
  out.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') {
      fail(ErrorKind::parse, "expected a digit, found '" + std::string(1, c) + "'");
    }
    out.push_back(static_cast<Symbol>(c - '0'));
  }
  check_symbols(alphabet, out);
  return out;
}

void append_digits(std::string& out, std::span<const Symbol> symbols) {
  for (Symbol s : symbols) {
    if (s > 9) {
      out += '(' + std::to_string(s) + ')';
    } else {
      out += static_cast<char>('0' + s);
    }
  }
}

}  // namespace

Word::Word(Alphabet alphabet, std::vector<Symbol> symbols)
    : alphabet_(alphabet), symbols_(std::move(symbols)) {
  check_symbols(alphabet_, symbols_);
}

Word Word::parse(std::string_view digits, Alphabet alphabet) {
  return Word(alphabet, parse_digits(digits, alphabet));
}

Word Word::zeros(Alphabet alphabet, std::size_t length) {
  return Word(alphabet, std::vector<Symbol>(length, 0));
}

Symbol Word::at(std::size_t i) const {
  if (i < 1 || i > symbols_.size()) {
    fail(ErrorKind::invalid_argument, "word index " + std::to_string(i) + " out of range");
  }
  return symbols_[i - 1];
}

std::size_t Word::count(Symbol s) const noexcept {
  return static_cast<std::size_t>(std::count(symbols_.begin(), symbols_.end(), s));
}

std::size_t Word::nonzero_count() const noexcept {
  return symbols_.size() - count(0);
}

void Word::push_back(Symbol s) {
  if (!alphabet_.contains(s)) fail(ErrorKind::invalid_argument, "symbol outside alphabet");
  symbols_.push_back(s);
}

std::string Word::to_string() const {
  std::string out;
  append_digits(out, symbols_);
  return out;
}

std::strong_ordering lex_compare(std::span<const Symbol> x, std::span<const Symbol> y) {
  if (x.size() != y.size()) {
    fail(ErrorKind::invalid_argument, "lex_compare needs prefixes of equal length");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) return x[i] <=> y[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering lex_compare(const Word& x, const Word& y) {
  require_same_alphabet(x.alphabet(), y.alphabet(), "lex_compare");
  return lex_compare(x.symbols(), y.symbols());
}

Word concat(const Word& u, const Word& v) {
  require_same_alphabet(u.alphabet(), v.alphabet(), "concat");
  std::vector<Symbol> out(u.symbols().begin(), u.symbols().end());
  out.insert(out.end(), v.symbols().begin(), v.symbols().end());
  return Word(u.alphabet(), std::move(out));
}

Word subword(const Word& w, std::size_t i, std::size_t len) {
  if (i < 1 || i - 1 + len > w.size()) {
    fail(ErrorKind::invalid_argument, "subword range out of bounds");
  }
  auto s = w.symbols().subspan(i - 1, len);
  return Word(w.alphabet(), std::vector<Symbol>(s.begin(), s.end()));
}

std::vector<std::size_t> occurrences(const Word& u, const Word& w) {
  require_same_alphabet(u.alphabet(), w.alphabet(), "occurrences");
  std::vector<std::size_t> out;
  if (u.empty() || u.size() > w.size()) return out;
  const auto ws = w.symbols();
  const auto us = u.symbols();
  for (std::size_t t = 0; t + us.size() <= ws.size(); ++t) {
    if (std::equal(us.begin(), us.end(), ws.begin() + static_cast<std::ptrdiff_t>(t))) {
      out.push_back(t + 1);
    }
  }
  return out;
}

std::vector<std::size_t> ones_positions(const Word& w) {
  std::vector<std::size_t> out;
  const auto s = w.symbols();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 1) out.push_back(i + 1);
  }
  return out;
}

EventuallyPeriodicPoint::EventuallyPeriodicPoint(Alphabet alphabet,
                                                 std::vector<Symbol> preperiod,
                                                 std::vector<Symbol> period)
    : alphabet_(alphabet), preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) fail(ErrorKind::invalid_argument, "period must be nonempty");
  check_symbols(alphabet_, preperiod_);
  check_symbols(alphabet_, period_);
  normalize();
}

EventuallyPeriodicPoint::EventuallyPeriodicPoint(const Word& preperiod, const Word& period)
    : EventuallyPeriodicPoint(preperiod.alphabet(),
                              {preperiod.symbols().begin(), preperiod.symbols().end()},
                              {period.symbols().begin(), period.symbols().end()}) {
  require_same_alphabet(preperiod.alphabet(), period.alphabet(), "EventuallyPeriodicPoint");
}

void EventuallyPeriodicPoint::normalize() {
  const std::size_t n = period_.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool primitive_root = true;
    for (std::size_t i = p; i < n && primitive_root; ++i) {
      primitive_root = period_[i] == period_[i - p];
    }
    if (primitive_root) {
      period_.resize(p);
      break;
    }
  }
  while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
    preperiod_.pop_back();
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
  }
}

EventuallyPeriodicPoint EventuallyPeriodicPoint::parse(std::string_view text, Alphabet alphabet) {
  const auto sep = text.find(';');
  if (sep == std::string_view::npos || text.find(';', sep + 1) != std::string_view::npos) {
    fail(ErrorKind::parse, "point syntax is 'pre;per', got '" + std::string(text) + "'");
  }
  auto pre = parse_digits(text.substr(0, sep), alphabet);
  auto per = parse_digits(text.substr(sep + 1), alphabet);
  if (per.empty()) fail(ErrorKind::parse, "point period must be nonempty");
  return EventuallyPeriodicPoint(alphabet, std::move(pre), std::move(per));
}

EventuallyPeriodicPoint EventuallyPeriodicPoint::constant(Alphabet alphabet, Symbol s) {
  return EventuallyPeriodicPoint(alphabet, {}, {s});
}

Symbol EventuallyPeriodicPoint::at(std::uint64_t i) const {
  if (i < 1) fail(ErrorKind::invalid_argument, "point indices start at 1");
  if (i <= preperiod_.size()) return preperiod_[i - 1];
  return period_[(i - 1 - preperiod_.size()) % period_.size()];
}

std::string EventuallyPeriodicPoint::to_string() const {
  std::string out;
  append_digits(out, preperiod_);
  out += ';';
  append_digits(out, period_);
  return out;
}

std::uint64_t decisive_length(const Point& x, const Point& y) {
  return x.preperiod().size() + y.preperiod().size() +
         std::lcm<std::uint64_t>(x.period().size(), y.period().size());
}

std::uint64_t first_disagreement(const Point& x, const Point& y) {
  require_same_alphabet(x.alphabet(), y.alphabet(), "first_disagreement");
  const std::uint64_t n = decisive_length(x, y);
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (x.at(k) != y.at(k)) return k;
  }
  return 0;
}

Rational metric_rho(const Point& x, const Point& y) {
  const std::uint64_t k = first_disagreement(x, y);
  if (k == 0) return Rational(0);
  return inverse_power(x.alphabet().size(), static_cast<unsigned>(k));
}

Point shift_point(const Point& x, std::uint64_t j) {
  const auto pre = x.preperiod();
  const auto per = x.period();
  if (j <= pre.size()) {
    return Point(x.alphabet(), {pre.begin() + static_cast<std::ptrdiff_t>(j), pre.end()},
                 {per.begin(), per.end()});
  }
  const std::size_t r = (j - pre.size()) % per.size();
  std::vector<Symbol> rotated(per.begin(), per.end());
  std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(r), rotated.end());
  return Point(x.alphabet(), {}, std::move(rotated));
}

Word point_prefix(const Point& x, std::size_t k) {
  std::vector<Symbol> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = x.at(i + 1);
  return Word(x.alphabet(), std::move(out));
}

std::strong_ordering lex_compare(const Point& x, const Point& y) {
  const std::uint64_t k = first_disagreement(x, y);
  if (k == 0) return std::strong_ordering::equal;
  return x.at(k) <=> y.at(k);
}

}  // namespace hshift
