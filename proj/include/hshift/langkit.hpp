// The subshift engine: membership, counting, entropy, maximal symbol density
// and finite-horizon probes for any family that SubshiftSpec can describe.
//
// A spec describes a factorial, right-prolongable word set; its length-k
// members are L_k(X).  Every enumeration here is depth-first over symbol
// extensions and descends only into accepted words, which is sound because
// the predicate is monotone under subwords.
//
// Shift-spec syntax:
//
//   full:n=<size> | spacing:P=<set-expr> | beta:beta=<beta> | counting
//   | forbidden:{<word>,<word>,...}

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hshift/beta.hpp"
#include "hshift/core.hpp"
#include "hshift/spacing.hpp"

namespace hshift::langkit {

enum class Strategy { automatic, brute_force, windowed_dp, automaton_dp, branch_and_bound };

const char* to_string(Strategy s) noexcept;
Strategy parse_strategy(std::string_view text);

struct FullShift {};
struct SpacingFamily {
  spacing::PSet p;
};
struct BetaFamily {
  std::shared_ptr<const beta::BetaShift> shift;
};
/// Every subword u with |u| >= 2 holds at most ceil(log2 |u|) ones.
struct CountingShift {};
struct ForbiddenWords {
  std::vector<Word> words;
};
/// `accepts` sees a whole word and must be monotone under subwords.
struct CustomFamily {
  std::string name;
  std::function<bool(std::span<const Symbol>)> accepts;
};

using Family =
    std::variant<FullShift, SpacingFamily, BetaFamily, CountingShift, ForbiddenWords, CustomFamily>;

class SubshiftSpec {
 public:
  static SubshiftSpec full(Alphabet alphabet = Alphabet{});
  static SubshiftSpec spacing(spacing::PSet p);
  static SubshiftSpec beta(beta::BetaSpec spec);
  static SubshiftSpec counting();
  /// Rejected when sampling to `validation_depth` finds a dead end.
  static SubshiftSpec forbidden(Alphabet alphabet, std::vector<Word> words,
                                unsigned validation_depth = 8);
  /// Factoriality and right-prolongability are sampled to `validation_depth`.
  static SubshiftSpec custom(Alphabet alphabet, std::string name,
                             std::function<bool(std::span<const Symbol>)> accepts,
                             unsigned validation_depth = 8);

  static SubshiftSpec parse(std::string_view text);
  std::string to_string() const;

  Alphabet alphabet() const noexcept { return alphabet_; }
  const Family& family() const noexcept { return family_; }

  /// Resolved strategy; `automatic` never escapes here.
  Strategy strategy() const;
  /// Throws when the strategy cannot count this family.
  SubshiftSpec with_strategy(Strategy s) const;

 private:
  SubshiftSpec(Alphabet alphabet, Family family) : alphabet_(alphabet), family_(std::move(family)) {}

  Alphabet alphabet_;
  Family family_;
  Strategy strategy_ = Strategy::automatic;
};

struct CountOptions {
  std::uint64_t node_budget = 200'000'000;
  std::size_t max_states = std::size_t{1} << 24;
  /// Wall-clock budget in seconds; 0 disables it.
  double seconds = 0;
  /// brute_force refuses n^k above this.
  std::uint64_t brute_force_limit = std::uint64_t{1} << 26;
};

/// False for the empty word.
bool contains_word(const SubshiftSpec& spec, const Word& w);

/// Membership of `w` given that w without its last symbol is a member.
bool extension_ok(const SubshiftSpec& spec, std::span<const Symbol> w);

/// counts[k - 1] = lambda_k for k = 1..k_max.
std::vector<BigInt> count_language_upto(const SubshiftSpec& spec, std::size_t k_max,
                                        const CountOptions& opt = {});
BigInt count_language(const SubshiftSpec& spec, std::size_t k, const CountOptions& opt = {});

/// Visits L_k(X) in increasing lexicographic order; stop by returning false.
void for_each_word(const SubshiftSpec& spec, std::size_t k,
                   const std::function<bool(std::span<const Symbol>)>& visit,
                   const CountOptions& opt = {});

/// `count` words of L_k(X) by seeded random extension.
std::vector<Word> sample_words(const SubshiftSpec& spec, std::size_t k, std::size_t count,
                               std::uint64_t seed);

struct EntropyRow {
  std::size_t k = 0;
  BigInt lambda;
  /// log2(lambda_k) / k, an upper bound for h(X).
  double h_k = 0;
  double inf_so_far = 0;
  /// log2(lambda_k / lambda_{k-1}); advisory only.
  std::optional<double> increment;
};

struct EntropyReport {
  std::vector<EntropyRow> rows;
  double inf_so_far = 0;
  Strategy strategy = Strategy::automatic;
};

EntropyReport entropy_estimates(const SubshiftSpec& spec, std::size_t k_max,
                                const CountOptions& opt = {});

struct SymbolCountOptions {
  std::uint64_t node_budget = 50'000'000;
};

/// D_j(X, alpha) for j = 1..k_max (index j - 1).
std::vector<std::size_t> max_symbol_counts(const SubshiftSpec& spec, Symbol alpha,
                                           std::size_t k_max, const SymbolCountOptions& opt = {});
std::size_t max_symbol_count(const SubshiftSpec& spec, Symbol alpha, std::size_t k,
                             const SymbolCountOptions& opt = {});

struct DensityRow {
  std::size_t k = 0;
  std::size_t d_k = 0;
  Rational ratio;
  Rational inf_so_far;
};

/// D_k / k for k = 1..k_max; every value bounds ad_alpha(X) from above.
std::vector<DensityRow> maximal_density_estimate(const SubshiftSpec& spec, Symbol alpha,
                                                 std::size_t k_max,
                                                 const SymbolCountOptions& opt = {});

struct MaxDensityOptions {
  /// Depth whose D_k / k sets the target; 0 means k itself.
  std::size_t k_ref = 0;
  std::uint64_t node_budget = 50'000'000;
};

struct MaxDensityWord {
  Word word;
  /// min over j of (alpha count in w_1..w_j) / j.
  Rational min_prefix_frequency;
  /// D_{k_ref} / k_ref - 1 / k.
  Rational threshold;
  /// The search finished, so the word maximizes the minimum prefix
  /// frequency and is the least such word.
  bool proven_optimal = true;
};

/// A word of L_k(X) whose every prefix has alpha-frequency at least the
/// threshold.  Throws search_failure when none is found.
MaxDensityWord max_density_word(const SubshiftSpec& spec, Symbol alpha, std::size_t k,
                                const MaxDensityOptions& opt = {});

struct HereditaryResult {
  bool hereditary = true;
  /// On failure: w in L_k(X) and w' <= w coordinate-wise with w' outside.
  std::optional<std::pair<Word, Word>> witness;
};

/// Checks single-coordinate decrements, which generate every lowering.
HereditaryResult hereditary_check(const SubshiftSpec& spec, std::size_t k,
                                  const CountOptions& opt = {});

struct HeredityBound {
  /// (# nonzero positions of w) / |w|.
  Rational bound;
  BigInt lambda_k;
  double h_k = 0;
};

/// 2^(#nonzero(w)) <= lambda_{|w|} for hereditary X, as an entropy bound.
HeredityBound heredity_entropy_bound(const SubshiftSpec& spec, const Word& w);

struct MixingResult {
  /// Smallest g with u 0^m v in L(X) for all g <= m <= m_max.
  std::optional<std::size_t> gap;
  std::vector<std::size_t> failures;
};

MixingResult mixing_probe(const SubshiftSpec& spec, const Word& u, const Word& v,
                          std::size_t m_max);

/// -e log2 e - (1 - e) log2 (1 - e).
double binary_entropy(double e);
/// sum_{j=0}^{j_max} C(n, j).
BigInt binomial_prefix_sum(unsigned n, unsigned j_max);

}  // namespace hshift::langkit
