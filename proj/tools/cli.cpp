#include "hshift/cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hshift/beta.hpp"
#include "hshift/chaos.hpp"
#include "hshift/core.hpp"
#include "hshift/langkit.hpp"
#include "hshift/sets.hpp"
#include "hshift/spacing.hpp"
#include "hshift/spacing_probes.hpp"

namespace hshift::cli {

namespace {

using json = nlohmann::ordered_json;

json rational_json(const Rational& r) {
  return json{{"value", hshift::to_string(r)}, {"approx", to_double(r)}};
}

json density_json(const sets::Density& d) {
  json j = rational_json(d.value);
  j["exact"] = d.exact;
  j["horizon"] = d.horizon;
  if (d.limit_exists) j["limit_exists"] = *d.limit_exists;
  return j;
}

json profile_json(const chaos::DistributionProfile& p) {
  json rows = json::array();
  for (std::size_t i = 0; i < p.ks.size(); ++i) {
    rows.push_back(json{{"t", std::to_string(p.n) + "^-" + std::to_string(p.ks[i])},
                        {"k", p.ks[i]},
                        {"F", hshift::to_string(p.F[i])},
                        {"F_approx", to_double(p.F[i])},
                        {"Fstar", hshift::to_string(p.Fstar[i])},
                        {"Fstar_approx", to_double(p.Fstar[i])},
                        {"exact", p.exact}});
  }
  json j{{"n", p.n}, {"exact", p.exact}};
  if (!p.exact) {
    j["horizon"] = p.horizon;
    j["checkpoints"] = p.checkpoints;
  }
  j["rows"] = std::move(rows);
  return j;
}

json class_json(const chaos::PairClass& c) {
  json j{{"verdict", chaos::to_string(c.verdict)},
         {"evidence", c.evidence},
         {"exact", !c.evidence},
         {"dc1", c.dc1},
         {"dc2", c.dc2},
         {"dc3", c.dc3},
         {"fstar_one", c.fstar_one},
         {"tolerance", c.tolerance}};
  j["s_zero"] = c.s_zero ? json(hshift::to_string(*c.s_zero)) : json(nullptr);
  j["s_below_one"] = c.s_below_one ? json(hshift::to_string(*c.s_below_one)) : json(nullptr);
  j["gap_k"] = c.gap_k ? json(*c.gap_k) : json(nullptr);
  return j;
}

std::string bits_string(const std::vector<std::uint64_t>& members, std::uint64_t horizon) {
  std::string s(horizon, '0');
  for (auto m : members) {
    if (m >= 1 && m <= horizon) s[m - 1] = '1';
  }
  return s;
}

std::string symbols_string(std::span<const Symbol> w) {
  std::string s;
  s.reserve(w.size());
  for (Symbol c : w) s.push_back(static_cast<char>('0' + c));
  return s;
}

langkit::SubshiftSpec make_shift(const std::string& text, std::size_t min_digits) {
  if (text.rfind("beta:", 0) == 0 && min_digits > 256) {
    try {
      return langkit::SubshiftSpec::beta(beta::BetaSpec::parse(text.substr(5)).with_horizon(min_digits));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::invalid_argument) fail(ErrorKind::parse, e.what());
      throw;
    }
  }
  return langkit::SubshiftSpec::parse(text);
}

Point parse_point(const std::string& text, unsigned n) {
  try {
    return Point::parse(text, Alphabet(n));
  } catch (const Error& e) {
    fail(ErrorKind::parse, e.what());
  }
}

std::string csv_cell(const json& v) {
  std::string s;
  if (v.is_null()) return "";
  if (v.is_string()) {
    s = v.get<std::string>();
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  }
  return s;
}

void flatten(const json& v, const std::string& prefix, std::vector<std::pair<std::string, json>>& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
  } else {
    out.emplace_back(prefix, v);
  }
}

// A "rows" table at the top of the result prints as one CSV table; any other
// result prints as key,value pairs.
std::string to_csv(const json& envelope) {
  std::ostringstream os;
  const json& result = envelope.contains("result") ? envelope["result"] : envelope;
  if (result.is_object() && result.contains("rows") && result["rows"].is_array() &&
      !result["rows"].empty() && result["rows"][0].is_object()) {
    std::vector<std::string> keys;
    for (auto it = result["rows"][0].begin(); it != result["rows"][0].end(); ++it) keys.push_back(it.key());
    for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << keys[i];
    os << "\n";
    for (const auto& row : result["rows"]) {
      for (std::size_t i = 0; i < keys.size(); ++i) {
        os << (i ? "," : "") << (row.contains(keys[i]) ? csv_cell(row[keys[i]]) : "");
      }
      os << "\n";
    }
    return os.str();
  }
  std::vector<std::pair<std::string, json>> flat;
  flatten(envelope, "", flat);
  os << "key,value\n";
  for (const auto& [k, v] : flat) os << csv_cell(json(k)) << "," << csv_cell(v) << "\n";
  return os.str();
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return 2;
    case ErrorKind::resource_cap: return 3;
    case ErrorKind::precision_insufficient: return 4;
    default: return 1;
  }
}

struct Caps {
  std::size_t states = std::size_t{1} << 24;
  double seconds = 0;
  std::uint64_t nodes = 200'000'000;

  langkit::CountOptions count() const {
    langkit::CountOptions o;
    o.max_states = states;
    o.seconds = seconds;
    o.node_budget = nodes;
    return o;
  }
};

// Oracle-equivalence suite used by `selftest`.
json selftest(std::size_t k_max, const std::string& inject, const Caps& caps, bool& failed) {
  const std::vector<std::pair<std::string, std::string>> families = {
      {"full-2", "full:n=2"},
      {"full-3", "full:n=3"},
      {"spacing-golden", "spacing:P=complement:(finite:{1})"},
      {"spacing-evens", "spacing:P=evens"},
      {"spacing-pow2diff", "spacing:P=pow2diff"},
      {"beta-golden", "beta:beta=quad:(1+1*sqrt5)/2"},
      {"beta-3/2", "beta:beta=1.5"},
      {"counting", "counting"},
      {"forbidden-00", "forbidden:{00}"},
  };
  json rows = json::array();
  failed = false;
  for (const auto& [name, text] : families) {
    json row{{"family", name}, {"spec", text}, {"k_max", k_max}};
    try {
      const auto spec = langkit::SubshiftSpec::parse(text);
      auto fast = langkit::count_language_upto(spec, k_max, caps.count());
      if (name == inject && !fast.empty()) fast.back() += 1;
      const auto slow =
          langkit::count_language_upto(spec.with_strategy(langkit::Strategy::brute_force), k_max, caps.count());
      row["strategy"] = langkit::to_string(spec.strategy());
      std::size_t bad = 0;
      for (std::size_t k = 0; k < k_max; ++k) {
        if (fast[k] != slow[k]) {
          bad = k + 1;
          break;
        }
      }
      row["status"] = bad ? "fail" : "pass";
      row["first_mismatch_k"] = bad ? json(bad) : json(nullptr);
      row["cap_hit"] = false;
      if (bad) failed = true;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::resource_cap) throw;
      row["strategy"] = nullptr;
      row["status"] = "cap_hit";
      row["first_mismatch_k"] = nullptr;
      row["cap_hit"] = true;
    }
    rows.push_back(std::move(row));
  }
  return json{{"rows", std::move(rows)}, {"all_pass", !failed}};
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  CLI::App app{"hshift: subshift languages, entropy, densities, beta expansions and chaos profiles"};
  app.require_subcommand(1);

  std::string format = "json";
  bool timing = false;
  Caps caps;
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--timing", timing, "add wall time to the envelope (breaks byte-identical output)");
  app.add_option("--cap-states", caps.states, "state cap for dynamic programs")->check(CLI::PositiveNumber);
  app.add_option("--cap-seconds", caps.seconds, "time budget per enumeration, 0 for none")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--cap-nodes", caps.nodes, "node budget for searches")->check(CLI::PositiveNumber);
  app.fallthrough();

  std::string shift, set_text, word, strategy = "automatic", beta_text, x_text, y_text, digits_text;
  std::size_t kmax = 16, k = 16, members = 2, mmax = 64, symbol = 1;
  std::uint64_t horizon = 1000, trials = 1000, growth = 128, ip_bound = 0;
  std::optional<std::uint64_t> seed;
  unsigned alphabet_n = 2, precision_bits = 0, profile_k = 0;
  bool raw = false, include_bits = true;
  std::string inject, mixing_u, mixing_v;

  auto* entropy = app.add_subcommand("entropy", "lambda_k and h_k upper bounds");
  entropy->add_option("--shift", shift, "shift spec")->required();
  entropy->add_option("--kmax", kmax, "largest word length")->check(CLI::PositiveNumber);
  entropy->add_option("--strategy", strategy, "counting strategy");

  auto* language = app.add_subcommand("language", "membership, D_k, heredity, dense words, mixing");
  language->add_option("--shift", shift, "shift spec")->required();
  language->add_option("--word", word, "test one word for membership");
  language->add_option("--kmax", kmax, "word length for the table")->check(CLI::PositiveNumber);
  language->add_option("--symbol", symbol, "symbol alpha for D_k")->check(CLI::PositiveNumber);
  language->add_option("--mix-u", mixing_u, "mixing probe: left word");
  language->add_option("--mix-v", mixing_v, "mixing probe: right word");
  language->add_option("--mmax", mmax, "mixing probe: largest gap");

  auto* density = app.add_subcommand("density", "upper, asymptotic and upper Banach density");
  density->add_option("--set", set_text, "set expression")->required();
  density->add_option("--horizon", horizon, "scan horizon")->check(CLI::PositiveNumber);

  auto* sets_cmd = app.add_subcommand("sets", "integer set tools");
  sets_cmd->require_subcommand(1);
  auto* classify = sets_cmd->add_subcommand("classify", "thick, syndetic, Delta and IP evidence");
  classify->add_option("--set", set_text, "set expression")->required();
  classify->add_option("--horizon", horizon, "scan horizon")->check(CLI::PositiveNumber);
  classify->add_option("--ip-bound", ip_bound, "IP search bound, 0 for the horizon");
  auto* diff = sets_cmd->add_subcommand("diff", "difference set A - A on [1, H]");
  diff->add_option("--set", set_text, "set expression")->required();
  diff->add_option("--horizon", horizon, "horizon")->check(CLI::PositiveNumber);

  auto* beta_cmd = app.add_subcommand("beta", "beta expansions");
  beta_cmd->require_subcommand(1);
  auto* digits = beta_cmd->add_subcommand("digits", "greedy digits of 1 in base beta");
  digits->add_option("--beta", beta_text, "decimal or quad:(a+b*sqrtd)/c")->required();
  digits->add_option("--k", k, "number of digits")->check(CLI::PositiveNumber);
  digits->add_option("--precision-bits", precision_bits, "fixed-point bits for decimal beta, 0 for auto");
  digits->add_flag("--raw", raw, "print the bare digit string");
  auto* parry = beta_cmd->add_subcommand("parry", "sigma^k(d) <= d check");
  parry->add_option("--beta", beta_text, "beta whose digits to check");
  parry->add_option("--digits", digits_text, "eventually periodic digits pre;per");
  parry->add_option("--n", alphabet_n, "alphabet size for --digits")->check(CLI::Range(2, 10));
  parry->add_option("--k", k, "digits of beta to use")->check(CLI::PositiveNumber);
  parry->add_option("--horizon", horizon, "largest shift checked")->check(CLI::PositiveNumber);

  auto* chaos_cmd = app.add_subcommand("chaos", "distribution functions and scrambled pairs");
  chaos_cmd->require_subcommand(1);
  auto* profile = chaos_cmd->add_subcommand("profile", "exact F and F* of an eventually periodic pair");
  auto* pclass = chaos_cmd->add_subcommand("classify", "DC1/DC2/DC3 verdict of an eventually periodic pair");
  for (auto* c : {profile, pclass}) {
    c->add_option("--x", x_text, "point pre;per")->required();
    c->add_option("--y", y_text, "point pre;per")->required();
    c->add_option("--n", alphabet_n, "alphabet size")->check(CLI::Range(2, 10));
    c->add_option("--kmax", profile_k, "largest threshold exponent, 0 for the default grid");
  }
  auto* family = chaos_cmd->add_subcommand("family", "scrambled family from a set of positive density");
  family->add_option("--set", set_text, "set expression")->required();
  family->add_option("--members", members, "family size m")->check(CLI::PositiveNumber);
  family->add_option("--horizon", horizon, "sequence length")->check(CLI::PositiveNumber);
  family->add_option("--growth", growth, "b_(n+1) >= growth * b_n")->check(CLI::Range(2, 1 << 20));
  family->add_option("--kmax", profile_k, "largest threshold exponent (default 8)");
  family->add_flag("!--no-bits", include_bits, "omit member bitstrings");

  auto* spacing_cmd = app.add_subcommand("spacing", "spacing shift experiments");
  spacing_cmd->require_subcommand(1);
  auto* recur = spacing_cmd->add_subcommand("recurrence-probe", "entropy of the spacing shift with P = N \\ R");
  recur->add_option("--set", set_text, "the set R")->required();
  recur->add_option("--kmax", kmax, "largest word length")->check(CLI::PositiveNumber);
  auto* delta = spacing_cmd->add_subcommand("delta-star", "(B - B) meets (A - A) for k-element B");
  delta->add_option("--set", set_text, "the set A")->required();
  delta->add_option("--k", k, "size of B")->check(CLI::PositiveNumber);
  delta->add_option("--trials", trials, "random sets checked");
  delta->add_option("--horizon", horizon, "B lies in [1, H]")->check(CLI::PositiveNumber);
  delta->add_option("--seed", seed, "random seed (required)")->required();
  auto* witness = spacing_cmd->add_subcommand("diff-witness", "dense B with B - B inside A - A");
  witness->add_option("--set", set_text, "the set A")->required();
  witness->add_option("--horizon", horizon, "length of the word")->check(CLI::PositiveNumber);

  auto* self = app.add_subcommand("selftest", "specialized counts against brute force");
  self->add_option("--kmax", kmax, "largest word length")->check(CLI::Range(1, 14));
  self->add_option("--inject-fault", inject, "corrupt one family's specialized count");

  RunResult result;
  std::ostringstream out, err;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    result.exit_code = app.exit(e, out, err) == 0 ? 0 : 2;
    result.out = out.str();
    result.err = err.str();
    return result;
  }

  json env;
  env["schema"] = 1;
  std::string command;
  for (const auto* sub : app.get_subcommands()) {
    command = sub->get_name();
    for (const auto* inner : sub->get_subcommands()) command += " " + inner->get_name();
  }
  env["command"] = command;
  const auto started = std::chrono::steady_clock::now();

  try {
    json payload;
    if (entropy->parsed()) {
      auto spec = make_shift(shift, kmax);
      if (strategy != "automatic") spec = spec.with_strategy(langkit::parse_strategy(strategy));
      env["spec"] = spec.to_string();
      const auto report = langkit::entropy_estimates(spec, kmax, caps.count());
      json rows = json::array();
      for (const auto& r : report.rows) {
        rows.push_back(json{{"k", r.k},
                            {"lambda", to_decimal(r.lambda)},
                            {"h_k", r.h_k},
                            {"inf_so_far", r.inf_so_far},
                            {"increment", r.increment ? json(*r.increment) : json(nullptr)},
                            {"horizon", r.k}});
      }
      payload = json{{"strategy", langkit::to_string(report.strategy)},
                     {"bound", "upper"},
                     {"exact", false},
                     {"inf_so_far", report.inf_so_far},
                     {"rows", std::move(rows)}};
    } else if (language->parsed()) {
      const auto spec = make_shift(shift, kmax);
      env["spec"] = spec.to_string();
      if (!word.empty()) {
        const Word w = Word::parse(word, spec.alphabet());
        payload["word"] = word;
        payload["contains"] = langkit::contains_word(spec, w);
      }
      if (!mixing_u.empty() || !mixing_v.empty()) {
        const auto m = langkit::mixing_probe(spec, Word::parse(mixing_u, spec.alphabet()),
                                             Word::parse(mixing_v, spec.alphabet()), mmax);
        payload["mixing"] = json{{"u", mixing_u},
                                 {"v", mixing_v},
                                 {"m_max", mmax},
                                 {"gap", m.gap ? json(*m.gap) : json(nullptr)},
                                 {"failures", m.failures},
                                 {"horizon", mmax}};
      }
      if (word.empty() && mixing_u.empty() && mixing_v.empty()) {
        const Symbol alpha = static_cast<Symbol>(symbol);
        const auto counts = langkit::count_language_upto(spec, kmax, caps.count());
        const auto dens = langkit::maximal_density_estimate(spec, alpha, kmax, {caps.nodes});
        json rows = json::array();
        for (std::size_t j = 0; j < kmax; ++j) {
          rows.push_back(json{{"k", j + 1},
                              {"lambda", to_decimal(counts[j])},
                              {"D_k", dens[j].d_k},
                              {"D_k_over_k", hshift::to_string(dens[j].ratio)},
                              {"inf_so_far", hshift::to_string(dens[j].inf_so_far)},
                              {"horizon", j + 1}});
        }
        const std::size_t hk = std::min<std::size_t>(kmax, 12);
        const auto h = langkit::hereditary_check(spec, hk, caps.count());
        json hered{{"k", hk}, {"hereditary", h.hereditary}};
        if (h.witness) hered["witness"] = {h.witness->first.to_string(), h.witness->second.to_string()};
        const auto dw = langkit::max_density_word(spec, alpha, kmax, {0, caps.nodes});
        payload["symbol"] = symbol;
        payload["hereditary_check"] = std::move(hered);
        payload["max_density_word"] = json{{"word", dw.word.to_string()},
                                           {"min_prefix_frequency", hshift::to_string(dw.min_prefix_frequency)},
                                           {"threshold", hshift::to_string(dw.threshold)},
                                           {"proven_optimal", dw.proven_optimal}};
        payload["rows"] = std::move(rows);
      }
    } else if (density->parsed()) {
      const auto a = sets::IntSet::parse(set_text);
      env["spec"] = a.to_string();
      payload = json{{"upper_density", density_json(sets::upper_density(a, horizon))},
                     {"asymptotic_density", density_json(sets::asymptotic_density(a, horizon))},
                     {"upper_banach_density", density_json(sets::upper_banach_density(a, horizon))}};
    } else if (classify->parsed()) {
      const auto a = sets::IntSet::parse(set_text);
      env["spec"] = a.to_string();
      sets::ClassifyOptions opt;
      opt.ip_bound = ip_bound;
      opt.delta_node_budget = std::min<std::uint64_t>(caps.nodes, opt.delta_node_budget);
      opt.ip_node_budget = std::min<std::uint64_t>(caps.nodes, opt.ip_node_budget);
      const auto r = sets::classify(a, horizon, opt);
      json ps = json::array();
      for (const auto& [g, len] : r.piecewise_syndetic_evidence) ps.push_back(json{{"gap", g}, {"longest", len}});
      payload = json{{"horizon", r.horizon},
                     {"exact", false},
                     {"thick_run", r.thick_run},
                     {"max_gap", r.max_gap ? json(*r.max_gap) : json(nullptr)},
                     {"piecewise_syndetic_evidence", std::move(ps)},
                     {"delta_witness", r.delta_witness},
                     {"delta_complete", r.delta_complete},
                     {"ip_witness", r.ip_witness},
                     {"ip_complete", r.ip_complete}};
    } else if (diff->parsed()) {
      const auto a = sets::IntSet::parse(set_text);
      env["spec"] = a.to_string();
      const auto d = sets::difference_set(a, horizon);
      payload = json{{"horizon", horizon}, {"members", d.members(horizon)}, {"window", d.to_string()}};
    } else if (digits->parsed()) {
      auto spec = beta::BetaSpec::parse(beta_text).with_horizon(std::max<std::size_t>(k, 256));
      if (precision_bits) spec = spec.with_precision(precision_bits);
      env["spec"] = spec.to_string();
      const auto e = beta::beta_expansion(spec, k);
      if (raw) {
        result.out = e.digits.to_string() + "\n";
        return result;
      }
      payload = json{{"digits", e.digits.to_string()},
                     {"k", k},
                     {"terminates", e.terminates},
                     {"exact_arithmetic", spec.exact()},
                     {"precision_bits", spec.exact() ? json(nullptr) : json(spec.effective_precision_bits())}};
    } else if (parry->parsed()) {
      beta::ParryResult r;
      if (!digits_text.empty()) {
        const Point d = parse_point(digits_text, alphabet_n);
        env["spec"] = d.to_string();
        r = beta::parry_check(d, horizon);
        payload["exact"] = true;
      } else if (!beta_text.empty()) {
        const auto spec = beta::BetaSpec::parse(beta_text).with_horizon(std::max<std::size_t>(k, 256));
        env["spec"] = spec.to_string();
        const auto e = beta::beta_expansion(spec, k);
        if (e.terminates) {
          std::vector<Symbol> d(e.digits.symbols().begin(), e.digits.symbols().end());
          while (!d.empty() && d.back() == 0) d.pop_back();
          r = beta::parry_check(Point(spec.alphabet(), d, {0}), horizon);
          payload["exact"] = true;
        } else {
          r = beta::parry_check(e.digits.symbols(), horizon);
          payload["exact"] = false;
          payload["digits_used"] = k;
        }
      } else {
        fail(ErrorKind::parse, "beta parry needs --beta or --digits");
      }
      static const char* names[] = {"satisfied", "violated", "indeterminate"};
      payload["verdict"] = names[static_cast<int>(r.verdict)];
      payload["shift"] = r.shift ? json(r.shift) : json(nullptr);
      payload["horizon"] = horizon;
    } else if (profile->parsed() || pclass->parsed()) {
      const Point x = parse_point(x_text, alphabet_n), y = parse_point(y_text, alphabet_n);
      env["spec"] = json{{"x", x.to_string()}, {"y", y.to_string()}};
      const auto p = chaos::distribution_profile(x, y, profile_k ? std::optional<unsigned>(profile_k) : std::nullopt);
      const auto de = chaos::diff_equal_densities(x, y);
      payload["diff_density"] = rational_json(de.diff);
      payload["equal_density"] = rational_json(de.equal);
      payload["density_exact"] = true;
      if (profile->parsed()) {
        payload["profile"] = profile_json(p);
        payload["rows"] = payload["profile"]["rows"];
      }
      payload["class"] = class_json(chaos::classify_pair(p));
    } else if (family->parsed()) {
      const auto s = sets::IntSet::parse(set_text);
      env["spec"] = s.to_string();
      const auto f = chaos::build_scrambled_family(s, static_cast<unsigned>(members), horizon,
                                                   chaos::FamilyOptions{growth});
      json blocks = json::array();
      for (const auto& b : f.blocks) blocks.push_back(json{{"n", b.index}, {"lo", b.lo}, {"hi", b.hi}});
      json log{{"b", f.b},
               {"growth", growth},
               {"growth_ok", f.growth_ok},
               {"density", rational_json(f.density)},
               {"density_exact", true},
               {"blocks", std::move(blocks)},
               {"checkpoints", f.checkpoints}};
      std::vector<std::uint64_t> s0;
      for (auto i = f.s0.find_first(); i != boost::dynamic_bitset<>::npos; i = f.s0.find_next(i)) s0.push_back(i);
      if (include_bits) log["S0"] = bits_string(s0, horizon);
      payload["log"] = std::move(log);
      json mem = json::array();
      for (unsigned i = 0; i < f.m; ++i) {
        json m{{"index", i}, {"A", "n = " + std::to_string(i) + " mod " + std::to_string(f.m)}};
        if (include_bits) m["bits"] = symbols_string(f.members[i]);
        mem.push_back(std::move(m));
      }
      payload["members"] = std::move(mem);
      json pairs = json::array();
      const unsigned top = profile_k ? profile_k : 8;
      for (unsigned i = 0; i < f.m; ++i) {
        for (unsigned j = i + 1; j < f.m; ++j) {
          json freq = json::array();
          for (const auto& row : chaos::diff_frequencies(f, i, j)) {
            freq.push_back(json{{"checkpoint", row.checkpoint},
                                {"diff", hshift::to_string(row.diff)},
                                {"diff_approx", to_double(row.diff)},
                                {"equal_approx", 1 - to_double(row.diff)}});
          }
          const auto p = chaos::distribution_profile(f.members[i], f.members[j], 2, f.checkpoints, top);
          pairs.push_back(json{{"i", i},
                               {"j", j},
                               {"frequencies", std::move(freq)},
                               {"profile", profile_json(p)},
                               {"class", class_json(chaos::classify_pair(p))}});
        }
      }
      payload["pairs"] = std::move(pairs);
    } else if (recur->parsed()) {
      const auto r = sets::IntSet::parse(set_text);
      env["spec"] = r.to_string();
      const auto probe = spacing::recurrence_entropy_probe(r, kmax, 0, caps.count());
      json rows = json::array();
      for (const auto& row : probe.report.rows) {
        rows.push_back(json{{"k", row.k},
                            {"lambda", to_decimal(row.lambda)},
                            {"h_k", row.h_k},
                            {"inf_so_far", row.inf_so_far},
                            {"horizon", row.k}});
      }
      payload = json{{"P", sets::IntSet::complement(r).to_string()},
                     {"bound", "upper"},
                     {"exact", false},
                     {"dense_word", probe.dense_word.to_string()},
                     {"lower_bound", rational_json(probe.lower.bound)},
                     {"lower_bound_length", probe.dense_word.size()},
                     {"rows", std::move(rows)}};
    } else if (delta->parsed()) {
      const auto a = sets::IntSet::parse(set_text);
      env["spec"] = a.to_string();
      env["seed"] = *seed;
      const auto r = spacing::delta_star_bound_check(a, static_cast<unsigned>(k), trials, horizon, *seed);
      payload = json{{"holds", r.holds},
                     {"violation", r.violation ? json(*r.violation) : json(nullptr)},
                     {"beta", density_json(r.beta)},
                     {"sets_checked", r.sets_checked},
                     {"horizon", horizon}};
    } else if (witness->parsed()) {
      const auto a = sets::IntSet::parse(set_text);
      env["spec"] = a.to_string();
      const auto w = spacing::difference_subset_witness(a, horizon, caps.nodes);
      payload = json{{"word", w.prefix.to_string()},
                     {"members", w.members},
                     {"density", rational_json(w.density)},
                     {"horizon", horizon},
                     {"proven_optimal", w.proven_optimal},
                     {"verified", w.verified}};
    } else if (self->parsed()) {
      bool failed = false;
      payload = selftest(std::min<std::size_t>(kmax, 14), inject, caps, failed);
      if (failed) result.exit_code = 1;
    }
    env["result"] = std::move(payload);
    env["caps"] = json{{"states", caps.states}, {"seconds", caps.seconds}, {"nodes", caps.nodes}, {"hit", false}};
  } catch (const Error& e) {
    env["error"] = json{{"kind", hshift::to_string(e.kind())}, {"message", e.what()}};
    env["caps"] = json{{"states", caps.states},
                       {"seconds", caps.seconds},
                       {"nodes", caps.nodes},
                       {"hit", e.kind() == ErrorKind::resource_cap}};
    result.exit_code = exit_code_for(e.kind());
    err << "error (" << hshift::to_string(e.kind()) << "): " << e.what() << "\n";
  }
  if (timing) {
    env["wall_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  }
  out << (format == "csv" ? to_csv(env) : env.dump(2) + "\n");
  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace hshift::cli
