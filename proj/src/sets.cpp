#include "hshift/sets.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <variant>

namespace hshift::sets {

namespace {

struct Finite { std::vector<std::uint64_t> members; };
struct Periodic { Point bits; };
struct Complement { IntSet inner; };
struct Union { std::vector<IntSet> parts; };
struct Named { NamedSet which; };
struct Window { std::vector<bool> bits; };
struct Custom { std::string name; std::function<bool(std::uint64_t)> member; };

const Alphabet kBinary{2};

std::vector<Symbol> to_symbols(const std::vector<bool>& bits) {
  std::vector<Symbol> out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) out[i] = bits[i] ? 1 : 0;
  return out;
}

bool in_factorial_blocks(std::uint64_t n) {
  std::uint64_t f = 2;  // 2!
  for (std::uint64_t m = 2; m <= 20 && f <= n; ++m) {
    if (n < f + m) return true;
    if (m == 20) break;
    f *= (m + 1);
  }
  return false;
}

const char* named_text(NamedSet which) {
  switch (which) {
    case NamedSet::evens: return "evens";
    case NamedSet::odds: return "odds";
    case NamedSet::pow2: return "pow2";
    case NamedSet::pow2diff: return "pow2diff";
    case NamedSet::factorial_blocks: return "factorial_blocks";
  }
  return "?";
}

Rational period_density(const Point& bits) {
  std::size_t ones = 0;
  for (Symbol s : bits.period()) ones += s;
  return Rational(BigInt(ones), BigInt(bits.period().size()));
}

// Rewrites two eventually periodic bit sequences on a common
// preperiod/period frame and combines them pointwise.
template <typename Op>
Point combine(const Point& x, const Point& y, Op op) {
  const std::size_t pre = std::max(x.preperiod().size(), y.preperiod().size());
  const std::size_t per = std::lcm(x.period().size(), y.period().size());
  std::vector<Symbol> a(pre), b(per);
  for (std::size_t i = 0; i < pre; ++i) a[i] = op(x.at(i + 1), y.at(i + 1));
  for (std::size_t i = 0; i < per; ++i) b[i] = op(x.at(pre + i + 1), y.at(pre + i + 1));
  return Point(kBinary, std::move(a), std::move(b));
}

Point flip(const Point& x) {
  std::vector<Symbol> a, b;
  for (Symbol s : x.preperiod()) a.push_back(1 - s);
  for (Symbol s : x.period()) b.push_back(1 - s);
  return Point(kBinary, std::move(a), std::move(b));
}

Point finite_bits(const std::vector<bool>& bits) {
  return Point(kBinary, to_symbols(bits), {0});
}

std::vector<bool> bits_of_members(const std::vector<std::uint64_t>& members) {
  std::vector<bool> bits(members.empty() ? 0 : members.back(), false);
  for (auto m : members) bits[m - 1] = true;
  return bits;
}

}  // namespace

struct IntSet::Node {
  std::variant<Finite, Periodic, Complement, Union, Named, Window, Custom> form;
};

IntSet IntSet::finite(std::vector<std::uint64_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!members.empty() && members.front() == 0) {
    fail(ErrorKind::invalid_argument, "set members are positive integers");
  }
  return IntSet(std::make_shared<Node>(Node{Finite{std::move(members)}}));
}

IntSet IntSet::periodic(std::vector<bool> preperiod, std::vector<bool> period) {
  if (period.empty()) fail(ErrorKind::invalid_argument, "periodic set needs a nonempty period");
  return periodic(Point(kBinary, to_symbols(preperiod), to_symbols(period)));
}

IntSet IntSet::periodic(const Point& bits) {
  require_same_alphabet(bits.alphabet(), kBinary, "IntSet::periodic");
  return IntSet(std::make_shared<Node>(Node{Periodic{bits}}));
}

IntSet IntSet::complement(IntSet inner) {
  return IntSet(std::make_shared<Node>(Node{Complement{std::move(inner)}}));
}

IntSet IntSet::union_of(std::vector<IntSet> parts) {
  if (parts.empty()) fail(ErrorKind::invalid_argument, "union needs at least one part");
  return IntSet(std::make_shared<Node>(Node{Union{std::move(parts)}}));
}

IntSet IntSet::named(NamedSet which) {
  return IntSet(std::make_shared<Node>(Node{Named{which}}));
}

IntSet IntSet::window(std::vector<bool> bits) {
  return IntSet(std::make_shared<Node>(Node{Window{std::move(bits)}}));
}

IntSet IntSet::custom(std::string name, std::function<bool(std::uint64_t)> member) {
  return IntSet(std::make_shared<Node>(Node{Custom{std::move(name), std::move(member)}}));
}

bool IntSet::contains(std::uint64_t n) const {
  if (n == 0) return false;
  return std::visit(
      [n](const auto& f) -> bool {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Finite>) {
          return std::binary_search(f.members.begin(), f.members.end(), n);
        } else if constexpr (std::is_same_v<T, Periodic>) {
          return f.bits.at(n) == 1;
        } else if constexpr (std::is_same_v<T, Complement>) {
          return !f.inner.contains(n);
        } else if constexpr (std::is_same_v<T, Union>) {
          return std::any_of(f.parts.begin(), f.parts.end(),
                             [n](const IntSet& p) { return p.contains(n); });
        } else if constexpr (std::is_same_v<T, Named>) {
          switch (f.which) {
            case NamedSet::evens: return n % 2 == 0;
            case NamedSet::odds: return n % 2 == 1;
            case NamedSet::pow2: return std::has_single_bit(n);
            case NamedSet::pow2diff: {
              const std::uint64_t odd = n >> std::countr_zero(n);
              return ((odd + 1) & odd) == 0;
            }
            case NamedSet::factorial_blocks: return in_factorial_blocks(n);
          }
          return false;
        } else if constexpr (std::is_same_v<T, Window>) {
          return n <= f.bits.size() && f.bits[n - 1];
        } else {
          return f.member(n);
        }
      },
      node_->form);
}

std::vector<std::uint64_t> IntSet::members(std::uint64_t horizon) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1; n <= horizon; ++n) {
    if (contains(n)) out.push_back(n);
  }
  return out;
}

boost::dynamic_bitset<> IntSet::indicator(std::uint64_t horizon) const {
  boost::dynamic_bitset<> bits(horizon + 1);
  for (std::uint64_t n = 1; n <= horizon; ++n) {
    if (contains(n)) bits.set(n);
  }
  return bits;
}

std::optional<DensityModel> IntSet::density_model() const {
  return std::visit(
      [](const auto& f) -> std::optional<DensityModel> {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Finite>) {
          return DensityModel{finite_bits(bits_of_members(f.members)), false, true};
        } else if constexpr (std::is_same_v<T, Periodic>) {
          return DensityModel{f.bits, false, true};
        } else if constexpr (std::is_same_v<T, Complement>) {
          auto inner = f.inner.density_model();
          if (!inner) return std::nullopt;
          inner->base = flip(inner->base);
          return inner;
        } else if constexpr (std::is_same_v<T, Union>) {
          std::optional<DensityModel> acc;
          for (const auto& part : f.parts) {
            auto m = part.density_model();
            if (!m) return std::nullopt;
            if (!acc) {
              acc = std::move(m);
              continue;
            }
            acc->base = combine(acc->base, m->base,
                                [](Symbol a, Symbol b) -> Symbol { return a | b; });
            acc->perturbed = acc->perturbed || m->perturbed;
            acc->banach_null = acc->banach_null && m->banach_null;
          }
          return acc;
        } else if constexpr (std::is_same_v<T, Named>) {
          switch (f.which) {
            case NamedSet::evens: return DensityModel{Point(kBinary, {}, {0, 1}), false, true};
            case NamedSet::odds: return DensityModel{Point(kBinary, {}, {1, 0}), false, true};
            // Members up to x number O(log x) and O(log^2 x) respectively;
            // any window of length L holds O(log L)-ish of them.
            case NamedSet::pow2:
            case NamedSet::pow2diff: return DensityModel{Point(kBinary, {}, {0}), true, true};
            // Blocks [m!, m!+m): count up to x is O(m^2) with m! ~ x.
            case NamedSet::factorial_blocks:
              return DensityModel{Point(kBinary, {}, {0}), true, false};
          }
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, Window>) {
          return DensityModel{finite_bits(f.bits), false, true};
        } else {
          return std::nullopt;
        }
      },
      node_->form);
}

std::optional<std::vector<std::uint64_t>> IntSet::finite_complement() const {
  auto model = density_model();
  if (!model || model->perturbed) return std::nullopt;
  const auto per = model->base.period();
  if (per.size() != 1 || per[0] != 1) return std::nullopt;
  std::vector<std::uint64_t> out;
  const auto pre = model->base.preperiod();
  for (std::size_t i = 0; i < pre.size(); ++i) {
    if (pre[i] == 0) out.push_back(i + 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text form.

namespace {

std::string bits_text(std::span<const Symbol> bits) {
  std::string out;
  for (Symbol s : bits) out += static_cast<char>('0' + s);
  return out;
}

class SetParser {
 public:
  explicit SetParser(std::string_view text) : text_(text) {}

  IntSet parse_all() {
    IntSet out = parse_set();
    if (pos_ != text_.size()) error("trailing input");
    return out;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::parse, "set-expr: " + what + " at offset " + std::to_string(pos_) +
                               " in '" + std::string(text_) + "'");
  }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!consume(token)) error("expected '" + std::string(token) + "'");
  }

  std::vector<bool> bits() {
    std::vector<bool> out;
    while (pos_ < text_.size() && (text_[pos_] == '0' || text_[pos_] == '1')) {
      out.push_back(text_[pos_] == '1');
      ++pos_;
    }
    return out;
  }

  std::uint64_t number() {
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (UINT64_MAX - digit) / 10) error("integer overflow");
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) error("expected an integer");
    return value;
  }

  IntSet parse_set() {
    if (consume("finite:{")) {
      std::vector<std::uint64_t> members;
      if (!consume("}")) {
        do {
          const std::uint64_t m = number();
          if (m == 0) error("members must be positive");
          members.push_back(m);
        } while (consume(","));
        expect("}");
      }
      return IntSet::finite(std::move(members));
    }
    if (consume("periodic:")) {
      auto pre = bits();
      expect(";");
      auto per = bits();
      if (per.empty()) error("periodic set needs a nonempty period");
      return IntSet::periodic(std::move(pre), std::move(per));
    }
    if (consume("complement:(")) {
      IntSet inner = parse_set();
      expect(")");
      return IntSet::complement(std::move(inner));
    }
    if (consume("union:(")) {
      std::vector<IntSet> parts;
      do {
        parts.push_back(parse_set());
      } while (consume("|"));
      expect(")");
      return IntSet::union_of(std::move(parts));
    }
    if (consume("window:")) return IntSet::window(bits());
    // Longer names first: "pow2diff" shares a prefix with "pow2".
    if (consume("pow2diff")) return IntSet::named(NamedSet::pow2diff);
    if (consume("pow2")) return IntSet::named(NamedSet::pow2);
    if (consume("evens")) return IntSet::named(NamedSet::evens);
    if (consume("odds")) return IntSet::named(NamedSet::odds);
    if (consume("factorial_blocks")) return IntSet::named(NamedSet::factorial_blocks);
    error("unknown set form");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntSet IntSet::parse(std::string_view text) { return SetParser(text).parse_all(); }

std::string IntSet::to_string() const {
  return std::visit(
      [](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Finite>) {
          std::string out = "finite:{";
          for (std::size_t i = 0; i < f.members.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(f.members[i]);
          }
          return out + "}";
        } else if constexpr (std::is_same_v<T, Periodic>) {
          return "periodic:" + bits_text(f.bits.preperiod()) + ";" + bits_text(f.bits.period());
        } else if constexpr (std::is_same_v<T, Complement>) {
          return "complement:(" + f.inner.to_string() + ")";
        } else if constexpr (std::is_same_v<T, Union>) {
          std::string out = "union:(";
          for (std::size_t i = 0; i < f.parts.size(); ++i) {
            if (i) out += '|';
            out += f.parts[i].to_string();
          }
          return out + ")";
        } else if constexpr (std::is_same_v<T, Named>) {
          return named_text(f.which);
        } else if constexpr (std::is_same_v<T, Window>) {
          std::string out = "window:";
          for (bool b : f.bits) out += b ? '1' : '0';
          return out;
        } else {
          return "custom:" + f.name;
        }
      },
      node_->form);
}

// ---------------------------------------------------------------------------
// Densities.

Density upper_density(const IntSet& a, std::uint64_t horizon, const DensityOptions& opt) {
  if (auto model = a.density_model()) {
    return Density{period_density(model->base), true, horizon, true};
  }
  if (horizon == 0) fail(ErrorKind::invalid_argument, "density estimate needs horizon >= 1");
  const std::uint64_t start = std::max<std::uint64_t>(1, horizon / std::max<std::uint64_t>(1, opt.tail_divisor));
  std::uint64_t count = 0;
  Rational best(0);
  for (std::uint64_t n = 1; n <= horizon; ++n) {
    if (a.contains(n)) ++count;
    if (n >= start) {
      const Rational r{BigInt(count), BigInt(n)};
      if (r > best) best = r;
    }
  }
  return Density{best, false, horizon, std::nullopt};
}

Density asymptotic_density(const IntSet& a, std::uint64_t horizon, const DensityOptions&) {
  if (auto model = a.density_model()) {
    return Density{period_density(model->base), true, horizon, true};
  }
  if (horizon == 0) fail(ErrorKind::invalid_argument, "density estimate needs horizon >= 1");
  std::uint64_t count = 0;
  for (std::uint64_t n = 1; n <= horizon; ++n) count += a.contains(n) ? 1 : 0;
  return Density{Rational(BigInt(count), BigInt(horizon)), false, horizon, std::nullopt};
}

Density upper_banach_density(const IntSet& a, std::uint64_t horizon, const DensityOptions& opt) {
  if (auto model = a.density_model()) {
    const Rational d = period_density(model->base);
    if (!model->perturbed || model->banach_null || d == 1) {
      return Density{d, true, horizon, std::nullopt};
    }
  }
  if (horizon == 0) fail(ErrorKind::invalid_argument, "density estimate needs horizon >= 1");
  // A window of length >= L splits into pieces with lengths in [L, 2L), and
  // one piece is at least as dense as the whole, so those lengths suffice.
  const std::uint64_t lmin = std::clamp<std::uint64_t>(opt.min_window, 1, horizon);
  std::vector<std::uint64_t> prefix(horizon + 1, 0);
  for (std::uint64_t n = 1; n <= horizon; ++n) prefix[n] = prefix[n - 1] + (a.contains(n) ? 1 : 0);
  std::uint64_t best_count = 0, best_len = 1;
  for (std::uint64_t len = lmin; len < 2 * lmin && len <= horizon; ++len) {
    for (std::uint64_t m = 1; m + len - 1 <= horizon; ++m) {
      const std::uint64_t c = prefix[m + len - 1] - prefix[m - 1];
      if (c * best_len > best_count * len) {
        best_count = c;
        best_len = len;
      }
    }
  }
  return Density{Rational(BigInt(best_count), BigInt(best_len)), false, horizon, std::nullopt};
}

// ---------------------------------------------------------------------------
// Difference and sum sets.

IntSet difference_set(const IntSet& a, std::uint64_t horizon) {
  if (horizon < 2) return IntSet::window({});
  const auto bits = a.indicator(horizon);
  boost::dynamic_bitset<> diffs(horizon + 1);
  for (std::uint64_t x = 1; x <= horizon; ++x) {
    // d = y - x for members y > x: shift the indicator down by x.
    if (bits.test(x)) diffs |= (bits >> x);
  }
  std::vector<bool> out(horizon - 1);
  for (std::uint64_t d = 1; d < horizon; ++d) out[d - 1] = diffs.test(d);
  return IntSet::window(std::move(out));
}

IntSet sum_set_fs(const IntSet& s, unsigned depth, std::uint64_t bound) {
  if (depth == 0) fail(ErrorKind::invalid_argument, "sum_set_fs needs depth >= 1");
  const auto elems = s.members(bound);
  if (elems.size() < depth) {
    fail(ErrorKind::precondition, "sum_set_fs: only " + std::to_string(elems.size()) +
                                      " elements below the bound, depth " + std::to_string(depth));
  }
  // reach[c] holds the sums of exactly c distinct elements.
  std::vector<boost::dynamic_bitset<>> reach(depth + 1, boost::dynamic_bitset<>(bound + 1));
  reach[0].set(0);
  for (auto e : elems) {
    for (unsigned c = depth; c >= 1; --c) reach[c] |= (reach[c - 1] << e);
  }
  std::vector<bool> out(bound, false);
  for (unsigned c = 1; c <= depth; ++c) {
    for (std::uint64_t v = 1; v <= bound; ++v) {
      if (reach[c].test(v)) out[v - 1] = true;
    }
  }
  return IntSet::window(std::move(out));
}

bool is_ones_then_zeros(std::uint64_t n) {
  if (n == 0) return false;
  const std::uint64_t odd = n >> std::countr_zero(n);
  return ((odd + 1) & odd) == 0;
}

// ---------------------------------------------------------------------------
// Difference cliques (Russian-doll search over right endpoints).

namespace {

class CliqueSearch {
 public:
  CliqueSearch(const IntSet& allowed, std::uint64_t horizon, std::uint64_t budget)
      : horizon_(horizon), budget_(budget), allowed_(allowed.indicator(horizon)) {}

  CliqueResult run() {
    CliqueResult out;
    out.table.assign(horizon_ + 1, 0);
    if (horizon_ == 0) return out;
    best_ = {1};
    out.table[1] = 1;
    for (std::uint64_t j = 2; j <= horizon_ && !exhausted_; ++j) {
      out.table[j] = out.table[j - 1];
      // A clique of size table[j-1] + 1 in [1, j] must use both 1 and j
      // after translation; search for exactly that.
      if (!allowed_.test(j - 1)) continue;
      target_ = out.table[j - 1] + 1;
      table_ = &out.table;
      current_ = {1};
      found_ = false;
      std::vector<std::uint64_t> cand;
      for (std::uint64_t p = 2; p < j; ++p) {
        if (allowed_.test(p - 1) && allowed_.test(j - p)) cand.push_back(p);
      }
      extend(cand, j);
      if (found_) {
        out.table[j] = target_;
        best_ = found_members_;
      }
    }
    out.members = best_;
    out.complete = !exhausted_;
    out.nodes = nodes_;
    if (exhausted_) out.table.clear();
    return out;
  }

 private:
  // current_ holds a clique through 1; every candidate is compatible with
  // all of current_ and with the right endpoint j.
  void extend(const std::vector<std::uint64_t>& cand, std::uint64_t j) {
    if (found_ || exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    if (current_.size() + 1 >= target_) {
      found_members_ = current_;
      found_members_.push_back(j);
      found_ = true;
      return;
    }
    for (std::size_t i = 0; i < cand.size(); ++i) {
      const std::uint64_t p = cand[i];
      // Members after p inside (p, j) plus p and j: span j - p + 1 holds at
      // most table[j - p + 1] of them, counting p and j.
      const std::uint64_t need = target_ - current_.size();
      if ((*table_)[j - p + 1] < need) continue;
      if (cand.size() - i + 1 < need) return;
      std::vector<std::uint64_t> next;
      for (std::size_t t = i + 1; t < cand.size(); ++t) {
        if (allowed_.test(cand[t] - p)) next.push_back(cand[t]);
      }
      current_.push_back(p);
      extend(next, j);
      current_.pop_back();
      if (found_ || exhausted_) return;
    }
  }

  std::uint64_t horizon_;
  std::uint64_t budget_;
  boost::dynamic_bitset<> allowed_;
  std::vector<std::uint64_t>* table_ = nullptr;
  std::vector<std::uint64_t> best_, current_, found_members_;
  std::uint64_t target_ = 0;
  std::uint64_t nodes_ = 0;
  bool found_ = false;
  bool exhausted_ = false;
};

}  // namespace

CliqueResult max_difference_clique(const IntSet& allowed, std::uint64_t horizon,
                                   std::uint64_t node_budget) {
  return CliqueSearch(allowed, horizon, node_budget).run();
}

// ---------------------------------------------------------------------------
// IP witnesses.

namespace {

struct IpState {
  const IntSet* a;
  std::vector<std::uint64_t> cand;
  unsigned max_size;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<std::uint64_t> current, best;
  std::vector<std::uint64_t> sums;  // all nonempty subset sums of current

  void search(std::size_t from) {
    if (++nodes > budget) {
      exhausted = true;
      return;
    }
    if (current.size() > best.size()) best = current;
    if (current.size() == max_size) return;
    for (std::size_t i = from; i < cand.size(); ++i) {
      if (current.size() + (cand.size() - i) <= best.size()) return;
      const std::uint64_t s = cand[i];
      bool ok = true;
      for (auto t : sums) {
        if (!a->contains(t + s)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      const std::size_t old = sums.size();
      for (std::size_t t = 0; t < old; ++t) sums.push_back(sums[t] + s);
      sums.push_back(s);
      current.push_back(s);
      search(i + 1);
      current.pop_back();
      sums.resize(old);
      if (exhausted || best.size() == max_size) return;
    }
  }
};

}  // namespace

IpSearch ip_witness_search(const IntSet& a, std::uint64_t bound, unsigned max_size,
                           std::uint64_t node_budget) {
  IpState st{&a, a.members(bound), max_size, node_budget, 0, false, {}, {}, {}};
  st.search(0);
  return IpSearch{st.best, !st.exhausted};
}

// ---------------------------------------------------------------------------

ClassifyReport classify(const IntSet& a, std::uint64_t horizon, const ClassifyOptions& opt) {
  ClassifyReport out;
  out.horizon = horizon;
  const auto bits = a.indicator(horizon);

  std::uint64_t run = 0, gap = 0, longest_gap = 0;
  bool any = false;
  for (std::uint64_t n = 1; n <= horizon; ++n) {
    if (bits.test(n)) {
      any = true;
      ++run;
      gap = 0;
      out.thick_run = std::max(out.thick_run, run);
    } else {
      run = 0;
      ++gap;
      longest_gap = std::max(longest_gap, gap);
    }
  }
  if (any) out.max_gap = longest_gap + 1;

  for (unsigned g = 1; g <= opt.syndetic_gaps; ++g) {
    std::uint64_t seg = 0, zeros = 0, best = 0;
    for (std::uint64_t n = 1; n <= horizon; ++n) {
      if (bits.test(n)) {
        zeros = 0;
        ++seg;
      } else if (++zeros >= g) {
        seg = g - 1;
      } else {
        ++seg;
      }
      best = std::max(best, seg);
    }
    out.piecewise_syndetic_evidence.emplace_back(g, best);
  }

  const auto clique = max_difference_clique(a, horizon, opt.delta_node_budget);
  out.delta_witness = clique.members;
  out.delta_complete = clique.complete;

  const auto ip = ip_witness_search(a, opt.ip_bound ? opt.ip_bound : horizon, opt.ip_max_size,
                                    opt.ip_node_budget);
  out.ip_witness = ip.members;
  out.ip_complete = ip.complete;
  return out;
}

}  // namespace hshift::sets
