#include "hshift/langkit.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <map>
#include <random>

namespace hshift::langkit {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const Alphabet kBinary{2};

// Cap on ones in a window of length len >= 2 for the counting shift.
std::size_t counting_cap(std::size_t len) { return std::bit_width(len - 1); }

bool counting_accepts(std::span<const Symbol> w) {
  std::vector<std::size_t> prefix(w.size() + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) prefix[i + 1] = prefix[i] + (w[i] != 0);
  for (std::size_t len = 2; len <= w.size(); ++len) {
    const std::size_t cap = counting_cap(len);
    for (std::size_t i = 0; i + len <= w.size(); ++i) {
      if (prefix[i + len] - prefix[i] > cap) return false;
    }
  }
  return true;
}

bool counting_extension(std::span<const Symbol> w) {
  if (w.empty() || w.back() == 0) return true;
  std::size_t ones = 1;
  for (std::size_t len = 2; len <= w.size(); ++len) {
    ones += w[w.size() - len] != 0;
    if (ones > counting_cap(len)) return false;
  }
  return true;
}

bool ends_with(std::span<const Symbol> w, std::span<const Symbol> f) {
  return f.size() <= w.size() && std::equal(f.begin(), f.end(), w.end() - f.size());
}

bool forbidden_extension(const ForbiddenWords& fam, std::span<const Symbol> w) {
  for (const auto& f : fam.words) {
    if (ends_with(w, f.symbols())) return false;
  }
  return true;
}

bool forbidden_accepts(const ForbiddenWords& fam, std::span<const Symbol> w) {
  for (std::size_t end = 1; end <= w.size(); ++end) {
    if (!forbidden_extension(fam, w.first(end))) return false;
  }
  return true;
}

bool accepts_whole(const SubshiftSpec& spec, std::span<const Symbol> w) {
  if (w.empty()) return false;
  return std::visit(
      overloaded{
          [](const FullShift&) { return true; },
          [&](const SpacingFamily& f) {
            for (std::size_t end = 2; end <= w.size(); ++end) {
              if (!spacing::admissible_last(f.p, w.first(end))) return false;
            }
            return true;
          },
          [&](const BetaFamily& f) { return beta::suffix_rule(*f.shift, w); },
          [&](const CountingShift&) { return counting_accepts(w); },
          [&](const ForbiddenWords& f) { return forbidden_accepts(f, w); },
          [&](const CustomFamily& f) { return f.accepts(w); },
      },
      spec.family());
}

class Deadline {
 public:
  explicit Deadline(double seconds)
      : enabled_(seconds > 0),
        end_(std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(seconds))) {}

  void check(std::uint64_t nodes, const char* where) const {
    if (enabled_ && (nodes & 0xfff) == 0 && std::chrono::steady_clock::now() > end_) {
      fail(ErrorKind::resource_cap, std::string(where) + ": time budget exceeded");
    }
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point end_;
};

// Depth-first enumeration of accepted words up to k_max, counting every depth.
std::vector<BigInt> dfs_count(const SubshiftSpec& spec, std::size_t k_max, const CountOptions& opt) {
  std::vector<std::uint64_t> counts(k_max, 0);
  std::vector<Symbol> w;
  w.reserve(k_max);
  std::uint64_t nodes = 0;
  const Deadline deadline(opt.seconds);
  const unsigned n = spec.alphabet().size();
  // Iterative DFS: w holds the current word; the next symbol to try at each
  // depth is w.back() + 1 after backtracking.
  Symbol next = 0;
  while (true) {
    if (w.size() < k_max && next < n) {
      w.push_back(next);
      if (++nodes > opt.node_budget) fail(ErrorKind::resource_cap, "dfs count: node budget exceeded");
      deadline.check(nodes, "dfs count");
      if (extension_ok(spec, w)) {
        ++counts[w.size() - 1];
        next = 0;
      } else {
        next = static_cast<Symbol>(w.back() + 1);
        w.pop_back();
      }
      continue;
    }
    if (w.empty()) break;
    next = static_cast<Symbol>(w.back() + 1);
    w.pop_back();
  }
  return std::vector<BigInt>(counts.begin(), counts.end());
}

std::vector<BigInt> brute_force_count(const SubshiftSpec& spec, std::size_t k_max,
                                      const CountOptions& opt) {
  const unsigned n = spec.alphabet().size();
  std::vector<BigInt> counts;
  counts.reserve(k_max);
  const Deadline deadline(opt.seconds);
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (std::log2(static_cast<double>(n)) * static_cast<double>(k) >
        std::log2(static_cast<double>(opt.brute_force_limit))) {
      fail(ErrorKind::resource_cap, "brute_force: n^k exceeds the enumeration limit at k = " +
                                        std::to_string(k));
    }
    std::vector<Symbol> w(k, 0);
    std::uint64_t c = 0, nodes = 0;
    while (true) {
      deadline.check(++nodes, "brute_force");
      if (accepts_whole(spec, w)) ++c;
      std::size_t i = k;
      while (i > 0 && w[i - 1] == n - 1) w[--i] = 0;
      if (i == 0) break;
      ++w[i - 1];
    }
    counts.emplace_back(c);
  }
  return counts;
}

// De Bruijn style DP: the state is the last (max forbidden length - 1)
// symbols, which decides every future occurrence.
std::vector<BigInt> forbidden_dp(const SubshiftSpec& spec, const ForbiddenWords& fam,
                                 std::size_t k_max, const CountOptions& opt) {
  std::size_t longest = 1;
  for (const auto& f : fam.words) longest = std::max(longest, f.size());
  const std::size_t keep = longest - 1;
  const unsigned n = spec.alphabet().size();
  std::map<std::vector<Symbol>, BigInt> cur{{{}, BigInt(1)}}, next;
  std::vector<BigInt> counts;
  counts.reserve(k_max);
  for (std::size_t step = 0; step < k_max; ++step) {
    next.clear();
    for (const auto& [state, c] : cur) {
      std::vector<Symbol> grown = state;
      grown.push_back(0);
      for (unsigned a = 0; a < n; ++a) {
        grown.back() = static_cast<Symbol>(a);
        if (!forbidden_extension(fam, grown)) continue;
        std::vector<Symbol> key(grown.end() - std::min(keep, grown.size()), grown.end());
        next[std::move(key)] += c;
      }
    }
    if (next.size() > opt.max_states) fail(ErrorKind::resource_cap, "windowed_dp: state count exceeds cap");
    std::swap(cur, next);
    BigInt total = 0;
    for (const auto& [state, c] : cur) total += c;
    counts.push_back(std::move(total));
  }
  return counts;
}

bool allowed(const SubshiftSpec& spec, Strategy s) {
  switch (s) {
    case Strategy::automatic:
    case Strategy::brute_force:
    case Strategy::branch_and_bound:
      return true;
    case Strategy::windowed_dp:
      if (const auto* f = std::get_if<SpacingFamily>(&spec.family())) {
        return spacing::choose_method(f->p) == spacing::SpacingMethod::windowed_dp;
      }
      return std::holds_alternative<ForbiddenWords>(spec.family());
    case Strategy::automaton_dp:
      return std::holds_alternative<FullShift>(spec.family()) ||
             std::holds_alternative<BetaFamily>(spec.family());
  }
  return false;
}

void validate_sampled(const SubshiftSpec& spec, unsigned depth, const std::string& what) {
  const unsigned n = spec.alphabet().size();
  std::vector<Symbol> w;
  std::uint64_t nodes = 0;
  bool any = false;
  const std::function<void()> visit = [&] {
    if (++nodes > 1'000'000) return;
    if (w.size() == depth) return;
    bool extended = false;
    for (unsigned a = 0; a < n; ++a) {
      w.push_back(static_cast<Symbol>(a));
      if (accepts_whole(spec, w)) {
        extended = true;
        any = true;
        if (w.size() > 1 && (!accepts_whole(spec, std::span<const Symbol>(w).subspan(1)) ||
                             !accepts_whole(spec, std::span<const Symbol>(w).first(w.size() - 1)))) {
          fail(ErrorKind::invalid_argument,
               what + ": word set is not factorial at " + Word(spec.alphabet(), w).to_string());
        }
        visit();
      }
      w.pop_back();
    }
    if (!extended) {
      fail(ErrorKind::invalid_argument,
           what + ": word " + (w.empty() ? std::string("(empty)") : Word(spec.alphabet(), w).to_string()) +
               " has no right extension");
    }
  };
  visit();
  if (!any) fail(ErrorKind::invalid_argument, what + ": empty language");
}

}  // namespace

const char* to_string(Strategy s) noexcept {
  switch (s) {
    case Strategy::automatic: return "automatic";
    case Strategy::brute_force: return "brute_force";
    case Strategy::windowed_dp: return "windowed_dp";
    case Strategy::automaton_dp: return "automaton_dp";
    case Strategy::branch_and_bound: return "branch_and_bound";
  }
  return "?";
}

Strategy parse_strategy(std::string_view text) {
  for (Strategy s : {Strategy::automatic, Strategy::brute_force, Strategy::windowed_dp,
                     Strategy::automaton_dp, Strategy::branch_and_bound}) {
    if (text == to_string(s)) return s;
  }
  fail(ErrorKind::parse, "unknown counting strategy '" + std::string(text) + "'");
}

SubshiftSpec SubshiftSpec::full(Alphabet alphabet) { return SubshiftSpec(alphabet, FullShift{}); }

SubshiftSpec SubshiftSpec::spacing(spacing::PSet p) {
  return SubshiftSpec(kBinary, SpacingFamily{std::move(p)});
}

SubshiftSpec SubshiftSpec::beta(beta::BetaSpec spec) {
  auto shift = std::make_shared<const beta::BetaShift>(std::move(spec));
  const Alphabet alphabet = shift->alphabet();
  return SubshiftSpec(alphabet, BetaFamily{std::move(shift)});
}

SubshiftSpec SubshiftSpec::counting() { return SubshiftSpec(kBinary, CountingShift{}); }

SubshiftSpec SubshiftSpec::forbidden(Alphabet alphabet, std::vector<Word> words,
                                     unsigned validation_depth) {
  for (const auto& w : words) {
    require_same_alphabet(w.alphabet(), alphabet, "forbidden word");
    if (w.empty()) fail(ErrorKind::invalid_argument, "forbidden words must be nonempty");
  }
  std::sort(words.begin(), words.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : lex_compare(a, b) < 0;
  });
  words.erase(std::unique(words.begin(), words.end()), words.end());
  SubshiftSpec spec(alphabet, ForbiddenWords{std::move(words)});
  validate_sampled(spec, validation_depth, "forbidden spec");
  return spec;
}

SubshiftSpec SubshiftSpec::custom(Alphabet alphabet, std::string name,
                                  std::function<bool(std::span<const Symbol>)> accepts,
                                  unsigned validation_depth) {
  SubshiftSpec spec(alphabet, CustomFamily{std::move(name), std::move(accepts)});
  validate_sampled(spec, validation_depth, "custom spec");
  return spec;
}

SubshiftSpec SubshiftSpec::parse(std::string_view text) {
  const std::string s(text);
  if (s == "counting") return counting();
  if (s.rfind("full:n=", 0) == 0) {
    const std::string n = s.substr(7);
    if (n.empty() || n.find_first_not_of("0123456789") != std::string::npos || n.size() > 3) {
      fail(ErrorKind::parse, "full shift needs full:n=<size>, got '" + s + "'");
    }
    const unsigned size = static_cast<unsigned>(std::stoul(n));
    if (size < 2 || size > 256) fail(ErrorKind::parse, "alphabet size must be in [2, 256]");
    return full(Alphabet(size));
  }
  if (s.rfind("spacing:P=", 0) == 0) return spacing(spacing::PSet{sets::IntSet::parse(s.substr(10))});
  if (s.rfind("beta:", 0) == 0) {
    try {
      return beta(beta::BetaSpec::parse(s.substr(5)));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::invalid_argument) fail(ErrorKind::parse, e.what());
      throw;
    }
  }
  if (s.rfind("forbidden:", 0) == 0) {
    std::string rest = s.substr(10);
    unsigned size = 0;
    if (rest.rfind("n=", 0) == 0) {
      const auto colon = rest.find(':');
      if (colon == std::string::npos) fail(ErrorKind::parse, "forbidden:n=<size>:{...} expected");
      const std::string n = rest.substr(2, colon - 2);
      if (n.empty() || n.size() > 3 || n.find_first_not_of("0123456789") != std::string::npos) {
        fail(ErrorKind::parse, "bad alphabet size in '" + s + "'");
      }
      size = static_cast<unsigned>(std::stoul(n));
      rest = rest.substr(colon + 1);
    }
    if (rest.size() < 2 || rest.front() != '{' || rest.back() != '}') {
      fail(ErrorKind::parse, "forbidden words are written {w,w,...}, got '" + s + "'");
    }
    std::vector<std::string> items;
    std::string body = rest.substr(1, rest.size() - 2), item;
    for (char c : body) {
      if (c == ',') {
        items.push_back(item);
        item.clear();
      } else if (c >= '0' && c <= '9') {
        item.push_back(c);
      } else {
        fail(ErrorKind::parse, std::string("unexpected character '") + c + "' in forbidden words");
      }
    }
    items.push_back(item);
    unsigned max_digit = 1;
    for (const auto& w : items) {
      if (w.empty()) fail(ErrorKind::parse, "empty forbidden word");
      for (char c : w) max_digit = std::max<unsigned>(max_digit, static_cast<unsigned>(c - '0'));
    }
    if (size == 0) size = max_digit + 1;
    if (size < 2 || size > 10 || max_digit >= size) fail(ErrorKind::parse, "forbidden words exceed alphabet");
    std::vector<Word> words;
    for (const auto& w : items) words.push_back(Word::parse(w, Alphabet(size)));
    return forbidden(Alphabet(size), std::move(words));
  }
  fail(ErrorKind::parse,
       "shift spec is full:n=<size> | spacing:P=<set> | beta:beta=<beta> | counting | "
       "forbidden:{w,...}; got '" + s + "'");
}

std::string SubshiftSpec::to_string() const {
  return std::visit(
      overloaded{
          [&](const FullShift&) { return "full:n=" + std::to_string(alphabet_.size()); },
          [](const SpacingFamily& f) { return "spacing:P=" + f.p.base.to_string(); },
          [](const BetaFamily& f) { return "beta:beta=" + f.shift->spec().to_string(); },
          [](const CountingShift&) { return std::string("counting"); },
          [&](const ForbiddenWords& f) {
            std::string out = "forbidden:";
            if (alphabet_.size() != 2) out += "n=" + std::to_string(alphabet_.size()) + ":";
            out += "{";
            for (std::size_t i = 0; i < f.words.size(); ++i) {
              if (i) out += ",";
              out += f.words[i].to_string();
            }
            return out + "}";
          },
          [](const CustomFamily& f) { return "custom:" + f.name; },
      },
      family_);
}

Strategy SubshiftSpec::strategy() const {
  if (strategy_ != Strategy::automatic) return strategy_;
  return std::visit(overloaded{
                        [](const FullShift&) { return Strategy::automaton_dp; },
                        [](const SpacingFamily& f) {
                          return spacing::choose_method(f.p) == spacing::SpacingMethod::windowed_dp
                                     ? Strategy::windowed_dp
                                     : Strategy::branch_and_bound;
                        },
                        [](const BetaFamily&) { return Strategy::automaton_dp; },
                        [](const CountingShift&) { return Strategy::branch_and_bound; },
                        [](const ForbiddenWords&) { return Strategy::windowed_dp; },
                        [](const CustomFamily&) { return Strategy::branch_and_bound; },
                    },
                    family_);
}

SubshiftSpec SubshiftSpec::with_strategy(Strategy s) const {
  if (!allowed(*this, s)) {
    fail(ErrorKind::invalid_argument,
         std::string("strategy ") + langkit::to_string(s) + " cannot count " + to_string());
  }
  SubshiftSpec out = *this;
  out.strategy_ = s;
  return out;
}

bool contains_word(const SubshiftSpec& spec, const Word& w) {
  require_same_alphabet(w.alphabet(), spec.alphabet(), "contains_word");
  return accepts_whole(spec, w.symbols());
}

bool extension_ok(const SubshiftSpec& spec, std::span<const Symbol> w) {
  return std::visit(
      overloaded{
          [](const FullShift&) { return true; },
          [&](const SpacingFamily& f) { return spacing::admissible_last(f.p, w); },
          [&](const BetaFamily& f) { return beta::suffix_rule(*f.shift, w); },
          [&](const CountingShift&) { return counting_extension(w); },
          [&](const ForbiddenWords& f) { return forbidden_extension(f, w); },
          [&](const CustomFamily& f) { return f.accepts(w); },
      },
      spec.family());
}

std::vector<BigInt> count_language_upto(const SubshiftSpec& spec, std::size_t k_max,
                                        const CountOptions& opt) {
  if (k_max == 0) return {};
  const Strategy s = spec.strategy();
  if (s == Strategy::brute_force) return brute_force_count(spec, k_max, opt);
  if (const auto* f = std::get_if<SpacingFamily>(&spec.family())) {
    const spacing::SpacingCountOptions sopt{opt.node_budget, opt.max_states};
    return spacing::count_spacing_upto(f->p, k_max,
                                       s == Strategy::windowed_dp ? spacing::SpacingMethod::windowed_dp
                                                                  : spacing::SpacingMethod::branch_and_bound,
                                       sopt);
  }
  if (s == Strategy::automaton_dp) {
    if (const auto* f = std::get_if<BetaFamily>(&spec.family())) {
      return beta::count_beta_language_upto(*f->shift, k_max);
    }
    std::vector<BigInt> counts(k_max);
    BigInt power = 1;
    for (std::size_t k = 0; k < k_max; ++k) counts[k] = power *= spec.alphabet().size();
    return counts;
  }
  if (s == Strategy::windowed_dp) {
    return forbidden_dp(spec, std::get<ForbiddenWords>(spec.family()), k_max, opt);
  }
  return dfs_count(spec, k_max, opt);
}

BigInt count_language(const SubshiftSpec& spec, std::size_t k, const CountOptions& opt) {
  if (k == 0) fail(ErrorKind::invalid_argument, "count_language needs k >= 1");
  return count_language_upto(spec, k, opt).back();
}

void for_each_word(const SubshiftSpec& spec, std::size_t k,
                   const std::function<bool(std::span<const Symbol>)>& visit,
                   const CountOptions& opt) {
  if (k == 0) return;
  const unsigned n = spec.alphabet().size();
  std::vector<Symbol> w;
  std::uint64_t nodes = 0;
  const Deadline deadline(opt.seconds);
  Symbol next = 0;
  while (true) {
    if (w.size() < k && next < n) {
      w.push_back(next);
      if (++nodes > opt.node_budget) fail(ErrorKind::resource_cap, "enumeration: node budget exceeded");
      deadline.check(nodes, "enumeration");
      if (!extension_ok(spec, w)) {
        next = static_cast<Symbol>(w.back() + 1);
        w.pop_back();
        continue;
      }
      if (w.size() < k) {
        next = 0;
        continue;
      }
      if (!visit(w)) return;
    }
    if (w.empty()) break;
    next = static_cast<Symbol>(w.back() + 1);
    w.pop_back();
  }
}

std::vector<Word> sample_words(const SubshiftSpec& spec, std::size_t k, std::size_t count,
                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const unsigned n = spec.alphabet().size();
  std::vector<Word> out;
  out.reserve(count);
  std::vector<Symbol> w, options;
  for (std::size_t i = 0; i < count; ++i) {
    w.clear();
    while (w.size() < k) {
      options.clear();
      w.push_back(0);
      for (unsigned a = 0; a < n; ++a) {
        w.back() = static_cast<Symbol>(a);
        if (extension_ok(spec, w)) options.push_back(static_cast<Symbol>(a));
      }
      if (options.empty()) fail(ErrorKind::precondition, "sample_words: word with no right extension");
      w.back() = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    }
    out.emplace_back(spec.alphabet(), w);
  }
  return out;
}

EntropyReport entropy_estimates(const SubshiftSpec& spec, std::size_t k_max, const CountOptions& opt) {
  if (k_max == 0) fail(ErrorKind::invalid_argument, "entropy_estimates needs k_max >= 1");
  const auto counts = count_language_upto(spec, k_max, opt);
  EntropyReport report;
  report.strategy = spec.strategy();
  double inf = INFINITY;
  for (std::size_t k = 1; k <= k_max; ++k) {
    EntropyRow row;
    row.k = k;
    row.lambda = counts[k - 1];
    row.h_k = log2_big(row.lambda) / static_cast<double>(k);
    inf = std::min(inf, row.h_k);
    row.inf_so_far = inf;
    if (k > 1) row.increment = log2_big(row.lambda) - log2_big(counts[k - 2]);
    report.rows.push_back(std::move(row));
  }
  report.inf_so_far = inf;
  return report;
}

namespace {

std::optional<std::size_t> family_symbol_cap(const SubshiftSpec& spec, std::size_t k) {
  if (std::holds_alternative<FullShift>(spec.family())) return k;
  if (std::holds_alternative<CountingShift>(spec.family())) return k == 1 ? 1 : counting_cap(k);
  return std::nullopt;
}

void require_symbol(const SubshiftSpec& spec, Symbol alpha) {
  if (alpha == 0 || !spec.alphabet().contains(alpha)) {
    fail(ErrorKind::invalid_argument, "symbol must be nonzero and inside the alphabet");
  }
}

// Search for a word of length k holding at least `target` copies of alpha,
// pruned by count + D[remaining] (subwords of members are members).
class TargetSearch {
 public:
  TargetSearch(const SubshiftSpec& spec, Symbol alpha, const std::vector<std::size_t>& d,
               std::uint64_t& nodes, std::uint64_t budget)
      : spec_(spec), alpha_(alpha), d_(d), nodes_(nodes), budget_(budget) {
    order_.push_back(alpha);
    for (unsigned a = 0; a < spec.alphabet().size(); ++a) {
      if (a != alpha) order_.push_back(static_cast<Symbol>(a));
    }
  }

  bool find(std::size_t k, std::size_t target) {
    k_ = k;
    target_ = target;
    w_.clear();
    return visit(0);
  }

 private:
  bool visit(std::size_t count) {
    if (w_.size() == k_) return true;
    for (Symbol a : order_) {
      const std::size_t c = count + (a == alpha_);
      if (c + d_[k_ - w_.size() - 1] < target_) continue;
      if (++nodes_ > budget_) fail(ErrorKind::resource_cap, "max_symbol_count: node budget exceeded");
      w_.push_back(a);
      if (extension_ok(spec_, w_) && visit(c)) return true;
      w_.pop_back();
    }
    return false;
  }

  const SubshiftSpec& spec_;
  Symbol alpha_;
  const std::vector<std::size_t>& d_;
  std::uint64_t& nodes_;
  std::uint64_t budget_;
  std::vector<Symbol> order_, w_;
  std::size_t k_ = 0, target_ = 0;
};

// d[j] = D_j for j = 0..k_max, with d[0] = 0.
std::vector<std::size_t> symbol_table(const SubshiftSpec& spec, Symbol alpha, std::size_t k_max,
                                      const SymbolCountOptions& opt) {
  require_symbol(spec, alpha);
  if (const auto* f = std::get_if<SpacingFamily>(&spec.family()); f && alpha == 1) {
    // D_j of a spacing shift is the largest difference clique inside [1, j].
    const auto clique = sets::max_difference_clique(f->p.base, k_max, opt.node_budget);
    if (!clique.complete) fail(ErrorKind::resource_cap, "max_symbol_count: node budget exceeded");
    std::vector<std::size_t> d(k_max + 1, 0);
    for (std::size_t j = 1; j <= k_max; ++j) d[j] = static_cast<std::size_t>(clique.table[j]);
    return d;
  }
  std::vector<std::size_t> d(k_max + 1, 0);
  std::uint64_t nodes = 0;
  TargetSearch search(spec, alpha, d, nodes, opt.node_budget);
  for (std::size_t j = 1; j <= k_max; ++j) {
    // Prolongability gives D_j >= D_{j-1}; subadditivity gives D_j <= D_{j-1} + 1.
    d[j] = d[j - 1];
    const std::size_t target = d[j - 1] + 1;
    const auto cap = family_symbol_cap(spec, j);
    if (cap && *cap < target) continue;
    if (search.find(j, target)) d[j] = target;
  }
  return d;
}

// a/b < c/d for nonnegative integers with b, d > 0.
bool frac_less(std::size_t a, std::size_t b, std::size_t c, std::size_t d) { return a * d < c * b; }

struct Frac {
  std::size_t num = 0, den = 1;
};

class DensityWordSearch {
 public:
  DensityWordSearch(const SubshiftSpec& spec, Symbol alpha, std::size_t k,
                    const std::vector<std::size_t>& d, std::uint64_t budget)
      : spec_(spec), alpha_(alpha), k_(k), d_(d), budget_(budget) {
    ones_first_.push_back(alpha);
    for (unsigned a = 0; a < spec.alphabet().size(); ++a) {
      if (a != alpha) ones_first_.push_back(static_cast<Symbol>(a));
    }
    for (unsigned a = 0; a < spec.alphabet().size(); ++a) ascending_.push_back(static_cast<Symbol>(a));
    // No prefix of length j can beat D_j / j.
    ceiling_ = Frac{d[1], 1};
    for (std::size_t j = 2; j <= k; ++j) {
      if (frac_less(d[j], j, ceiling_.num, ceiling_.den)) ceiling_ = Frac{d[j], j};
    }
  }

  // Phase 1: the best attainable minimum prefix frequency.
  std::optional<Frac> optimum() {
    w_.clear();
    best_.reset();
    exhausted_ = false;
    maximize(0, Frac{1, 1});
    return best_;
  }

  // Phase 2: the least word reaching `theta`.
  std::optional<std::vector<Symbol>> least_word(Frac theta) {
    w_.clear();
    if (least(0, Frac{1, 1}, theta)) return w_;
    return std::nullopt;
  }

  bool exhausted() const { return exhausted_; }
  const std::vector<Symbol>& best_word() const { return best_word_; }

 private:
  bool tick() {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    return true;
  }

  // Returns false once the optimum is certified or the budget is gone.
  bool maximize(std::size_t count, Frac cur) {
    if (w_.size() == k_) {
      if (!best_ || frac_less(best_->num, best_->den, cur.num, cur.den)) {
        best_ = cur;
        best_word_ = w_;
      }
      return !(best_->num * ceiling_.den == ceiling_.num * best_->den);
    }
    for (Symbol a : ones_first_) {
      const std::size_t c = count + (a == alpha_);
      const std::size_t j = w_.size() + 1;
      Frac next = frac_less(c, j, cur.num, cur.den) ? Frac{c, j} : cur;
      Frac bound = next;
      const std::size_t reach = c + d_[k_ - j];
      if (frac_less(reach, k_, bound.num, bound.den)) bound = Frac{reach, k_};
      if (best_ && !frac_less(best_->num, best_->den, bound.num, bound.den)) continue;
      if (!tick()) return false;
      w_.push_back(a);
      const bool go_on = !extension_ok(spec_, w_) || maximize(c, next);
      w_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  bool least(std::size_t count, Frac cur, Frac theta) {
    if (w_.size() == k_) return true;
    for (Symbol a : ascending_) {
      const std::size_t c = count + (a == alpha_);
      const std::size_t j = w_.size() + 1;
      if (frac_less(c, j, theta.num, theta.den)) continue;
      if (frac_less(c + d_[k_ - j], k_, theta.num, theta.den)) continue;
      if (!tick()) return false;
      w_.push_back(a);
      if (extension_ok(spec_, w_) && least(c, frac_less(c, j, cur.num, cur.den) ? Frac{c, j} : cur, theta)) {
        return true;
      }
      w_.pop_back();
    }
    return false;
  }

  const SubshiftSpec& spec_;
  Symbol alpha_;
  std::size_t k_;
  const std::vector<std::size_t>& d_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  Frac ceiling_;
  std::vector<Symbol> ones_first_, ascending_, w_, best_word_;
  std::optional<Frac> best_;
};

}  // namespace

std::vector<std::size_t> max_symbol_counts(const SubshiftSpec& spec, Symbol alpha, std::size_t k_max,
                                           const SymbolCountOptions& opt) {
  auto d = symbol_table(spec, alpha, k_max, opt);
  d.erase(d.begin());
  return d;
}

std::size_t max_symbol_count(const SubshiftSpec& spec, Symbol alpha, std::size_t k,
                             const SymbolCountOptions& opt) {
  if (k == 0) fail(ErrorKind::invalid_argument, "max_symbol_count needs k >= 1");
  return symbol_table(spec, alpha, k, opt)[k];
}

std::vector<DensityRow> maximal_density_estimate(const SubshiftSpec& spec, Symbol alpha,
                                                 std::size_t k_max, const SymbolCountOptions& opt) {
  const auto d = symbol_table(spec, alpha, k_max, opt);
  std::vector<DensityRow> rows;
  rows.reserve(k_max);
  for (std::size_t k = 1; k <= k_max; ++k) {
    DensityRow row;
    row.k = k;
    row.d_k = d[k];
    row.ratio = Rational(BigInt(d[k]), BigInt(k));
    row.inf_so_far = rows.empty() ? row.ratio : std::min(rows.back().inf_so_far, row.ratio);
    rows.push_back(std::move(row));
  }
  return rows;
}

MaxDensityWord max_density_word(const SubshiftSpec& spec, Symbol alpha, std::size_t k,
                                const MaxDensityOptions& opt) {
  if (k == 0) fail(ErrorKind::invalid_argument, "max_density_word needs k >= 1");
  const std::size_t k_ref = opt.k_ref == 0 ? k : opt.k_ref;
  const auto d = symbol_table(spec, alpha, std::max(k, k_ref), SymbolCountOptions{opt.node_budget});
  MaxDensityWord result;
  result.threshold = Rational(BigInt(d[k_ref]), BigInt(k_ref)) - Rational(BigInt(1), BigInt(k));

  DensityWordSearch search(spec, alpha, k, d, opt.node_budget);
  const auto theta = search.optimum();
  if (!theta) fail(ErrorKind::search_failure, "max_density_word: no word found within the node budget");
  std::vector<Symbol> word = search.best_word();
  result.proven_optimal = !search.exhausted();
  if (result.proven_optimal) {
    if (auto least = search.least_word(*theta)) {
      word = std::move(*least);
    } else {
      result.proven_optimal = false;
    }
  }
  result.word = Word(spec.alphabet(), std::move(word));
  std::size_t c = 0;
  for (std::size_t j = 1; j <= k; ++j) {
    c += result.word.at(j) == alpha;
    const Rational f{BigInt(c), BigInt(j)};
    if (j == 1 || f < result.min_prefix_frequency) result.min_prefix_frequency = f;
  }
  if (result.min_prefix_frequency < result.threshold) {
    fail(ErrorKind::search_failure, "max_density_word: best word found has prefix frequency " +
                                        hshift::to_string(result.min_prefix_frequency) +
                                        " below threshold " + hshift::to_string(result.threshold));
  }
  return result;
}

HereditaryResult hereditary_check(const SubshiftSpec& spec, std::size_t k, const CountOptions& opt) {
  if (k == 0) fail(ErrorKind::invalid_argument, "hereditary_check needs k >= 1");
  HereditaryResult result;
  std::vector<Symbol> lowered;
  for_each_word(
      spec, k,
      [&](std::span<const Symbol> w) {
        lowered.assign(w.begin(), w.end());
        for (std::size_t i = 0; i < k; ++i) {
          if (lowered[i] == 0) continue;
          --lowered[i];
          if (!accepts_whole(spec, lowered)) {
            result.hereditary = false;
            result.witness.emplace(Word(spec.alphabet(), {w.begin(), w.end()}),
                                   Word(spec.alphabet(), lowered));
            return false;
          }
          ++lowered[i];
        }
        return true;
      },
      opt);
  return result;
}

HeredityBound heredity_entropy_bound(const SubshiftSpec& spec, const Word& w) {
  if (!contains_word(spec, w)) {
    fail(ErrorKind::precondition, "heredity_entropy_bound: " + w.to_string() + " is not in the language");
  }
  const bool by_construction = std::holds_alternative<FullShift>(spec.family()) ||
                               std::holds_alternative<SpacingFamily>(spec.family()) ||
                               std::holds_alternative<BetaFamily>(spec.family()) ||
                               std::holds_alternative<CountingShift>(spec.family());
  if (!by_construction) {
    if (w.size() > 16) fail(ErrorKind::precondition, "heredity_entropy_bound: heredity not certifiable at this length");
    if (!hereditary_check(spec, w.size()).hereditary) {
      fail(ErrorKind::precondition, "heredity_entropy_bound: spec is not hereditary at length " +
                                        std::to_string(w.size()));
    }
  }
  HeredityBound out;
  out.bound = Rational(BigInt(w.nonzero_count()), BigInt(w.size()));
  out.lambda_k = count_language(spec, w.size());
  out.h_k = log2_big(out.lambda_k) / static_cast<double>(w.size());
  return out;
}

MixingResult mixing_probe(const SubshiftSpec& spec, const Word& u, const Word& v, std::size_t m_max) {
  if (!contains_word(spec, u) || !contains_word(spec, v)) {
    fail(ErrorKind::precondition, "mixing_probe: u and v must be language words");
  }
  MixingResult out;
  for (std::size_t m = 0; m <= m_max; ++m) {
    if (!contains_word(spec, concat(concat(u, Word::zeros(spec.alphabet(), m)), v))) {
      out.failures.push_back(m);
    }
  }
  if (out.failures.empty()) {
    out.gap = 0;
  } else if (out.failures.back() < m_max) {
    out.gap = out.failures.back() + 1;
  }
  return out;
}

double binary_entropy(double e) {
  if (e <= 0 || e >= 1) return 0;
  return -e * std::log2(e) - (1 - e) * std::log2(1 - e);
}

BigInt binomial_prefix_sum(unsigned n, unsigned j_max) {
  BigInt sum = 0, c = 1;
  for (unsigned j = 0; j <= std::min(n, j_max); ++j) {
    sum += c;
    c = c * (n - j) / (j + 1);
  }
  return sum;
}

}  // namespace hshift::langkit
