#include "holord/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>

#include "holord/braid.hpp"
#include "holord/chen.hpp"
#include "holord/freegroup.hpp"
#include "holord/ordtools.hpp"
#include "holord/series.hpp"
#include "holord/series_json.hpp"

namespace holord::cli {

namespace {

using nlohmann::json;

// Bad input caught after CLI11 has finished; printed verbatim.
struct InputError : Error {
  using Error::Error;
};

std::string caret_message(const std::string& text, const ParseError& e) {
  const size_t pos = std::min(e.position(), text.size());
  return std::string(e.what()) + "\n  " + text + "\n  " + std::string(pos, ' ') + "^";
}

FreeWord read_word(const std::string& text, int rank) {
  try {
    return parse_word(text, rank);
  } catch (const ParseError& e) {
    throw InputError(caret_message(text, e));
  }
}

PureBraidWord read_braid(const std::string& text, int strands) {
  try {
    return parse_braid(text, strands);
  } catch (const ParseError& e) {
    throw InputError(caret_message(text, e));
  }
}

SingularBraid read_singular(const std::string& text, int strands) {
  try {
    return parse_singular_braid(text, strands);
  } catch (const ParseError& e) {
    throw InputError(caret_message(text, e));
  }
}

std::string rational_string(const Rational& q) { return q.get_str(); }

struct Common {
  bool json = false;
  int degree = kDefaultDegree;
};

void add_degree(CLI::App* cmd, Common& c, const std::string& help) {
  cmd->add_option("--deg", c.degree, help)
      ->envname(kDegreeEnv)
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
}

// --- expand -----------------------------------------------------------------

struct ExpandArgs {
  Common common;
  int rank = 2;
  std::string word;
};

int do_expand(const ExpandArgs& a, std::ostream& out) {
  const TruncSeries s = magnus_expand(read_word(a.word, a.rank), a.common.degree);
  if (a.common.json) {
    out << series_to_json(s).dump() << '\n';
  } else {
    out << s.to_string() << '\n';
  }
  return kExitOk;
}

// --- compare ----------------------------------------------------------------

struct CompareArgs {
  Common common;
  std::optional<int> rank;
  std::optional<int> strands;
  std::string method = "magnus";
  double tolerance = QuadratureSettings{}.tolerance;
  double margin = HolonomyOptions{}.margin;
  std::vector<std::string> items;
};

struct PairResult {
  std::optional<Verdict> verdict;
  json detail = json::object();
  std::string note;
};

PairResult compare_words(const CompareArgs& a, const FreeWord& x, const FreeWord& y) {
  PairResult r;
  if (a.method == "magnus") {
    const MagnusComparison c = magnus_compare_detail(x, y);
    r.verdict = c.verdict;
    if (c.deciding) {
      r.detail = {{"deciding", c.deciding->to_string()},
                  {"lhs", rational_string(c.lhs)},
                  {"rhs", rational_string(c.rhs)},
                  {"degree", c.degree}};
      r.note = "deciding monomial " + c.deciding->to_string() + " at degree " +
               std::to_string(c.degree) + ": " + rational_string(c.lhs) + " in " + x.to_string() +
               ", " + rational_string(c.rhs) + " in " + y.to_string();
    }
  } else if (a.method == "iterated") {
    const int cls = std::max(10, escalation_ceiling(x, y));
    const IteratedExtensionComparison c = iterated_extension_compare_detail(x, y, cls);
    r.verdict = c.verdict;
    if (c.deciding) {
      r.detail = {{"deciding", c.deciding->to_string()},
                  {"value", rational_string(c.value)},
                  {"class", c.decided_at}};
      r.note = "deciding monomial " + c.deciding->to_string() + " at class " +
               std::to_string(c.decided_at) + ": coefficient " + rational_string(c.value) +
               " in mu(a^-1 b)";
    } else if (!c.verdict) {
      r.note = "undetermined through class " + std::to_string(cls);
    }
  } else {
    HolonomyOptions opts;
    opts.quadrature.tolerance = a.tolerance;
    opts.margin = a.margin;
    const HolonomyComparison c = holonomy_compare(x, y, a.common.degree, opts);
    r.verdict = c.verdict;
    if (c.deciding) {
      r.detail = {{"deciding", c.deciding->to_string()},
                  {"lhs", c.lhs},
                  {"rhs", c.rhs},
                  {"threshold", c.threshold}};
      r.note = "deciding monomial " + c.deciding->to_string() + ": " + json(c.lhs).dump() +
               " in " + x.to_string() + ", " + json(c.rhs).dump() + " in " + y.to_string();
    } else if (!c.verdict) {
      r.note = "indeterminate through degree " + std::to_string(a.common.degree);
    }
  }
  return r;
}

PairResult compare_braids(const PureBraidWord& x, const PureBraidWord& y) {
  PairResult r;
  const BraidComparison c = braid_compare_detail(x, y);
  r.verdict = c.verdict;
  if (c.factor > 0 && c.detail.deciding) {
    r.detail = {{"factor", c.factor},
                {"deciding", c.detail.deciding->to_string()},
                {"lhs", rational_string(c.detail.lhs)},
                {"rhs", rational_string(c.detail.rhs)},
                {"degree", c.detail.degree}};
    r.note = "combing factor " + std::to_string(c.factor) + ", deciding monomial " +
             c.detail.deciding->to_string() + ": " + rational_string(c.detail.lhs) + " in " +
             x.to_string() + ", " + rational_string(c.detail.rhs) + " in " + y.to_string();
  }
  return r;
}

template <class T>
int report_compare(const CompareArgs& a, const std::vector<T>& items,
                   const std::function<PairResult(const T&, const T&)>& cmp,
                   const std::function<std::string(const T&)>& fmt, std::ostream& out) {
  if (items.size() == 2) {
    const PairResult r = cmp(items[0], items[1]);
    if (a.common.json) {
      json j = {{"a", fmt(items[0])}, {"b", fmt(items[1])}, {"method", a.method}};
      j["verdict"] = r.verdict ? json(std::string(to_string(*r.verdict))) : json("indeterminate");
      j.update(r.detail);
      out << j.dump() << '\n';
      return kExitOk;
    }
    if (!r.verdict) {
      out << fmt(items[0]) << " ? " << fmt(items[1]) << '\n';
    } else if (*r.verdict == Verdict::Greater) {
      out << fmt(items[1]) << " < " << fmt(items[0]) << '\n';
    } else {
      out << fmt(items[0]) << ' ' << symbol(*r.verdict) << ' ' << fmt(items[1]) << '\n';
    }
    if (!r.note.empty()) out << r.note << '\n';
    return kExitOk;
  }

  // Batch mode: sort ascending. Indeterminate pairs abort the sort.
  std::vector<size_t> order(items.size());
  for (size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::vector<std::optional<Verdict>> cache(items.size() * items.size());
  auto verdict = [&](size_t i, size_t j) {
    auto& slot = cache[i * items.size() + j];
    if (!slot) {
      const PairResult r = cmp(items[i], items[j]);
      if (!r.verdict) {
        throw InputError("cannot sort: " + fmt(items[i]) + " and " + fmt(items[j]) +
                         " are not separated");
      }
      slot = r.verdict;
    }
    return *slot;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t i, size_t j) { return verdict(i, j) == Verdict::Less; });
  if (a.common.json) {
    json sorted = json::array();
    for (size_t k : order) sorted.push_back(fmt(items[k]));
    out << json{{"method", a.method}, {"sorted", sorted}}.dump() << '\n';
    return kExitOk;
  }
  for (size_t k = 0; k < order.size(); ++k) {
    if (k > 0) out << ' ' << symbol(verdict(order[k - 1], order[k])) << ' ';
    out << fmt(items[order[k]]);
  }
  out << '\n';
  return kExitOk;
}

int do_compare(const CompareArgs& a, std::ostream& out) {
  if (a.rank.has_value() == a.strands.has_value()) {
    throw InputError("compare: give exactly one of --rank (free words) or --strands (braids)");
  }
  if (a.items.size() < 2) throw InputError("compare: need at least two elements");
  if (a.rank) {
    std::vector<FreeWord> words;
    for (const auto& s : a.items) words.push_back(read_word(s, *a.rank));
    return report_compare<FreeWord>(
        a, words, [&](const FreeWord& x, const FreeWord& y) { return compare_words(a, x, y); },
        [](const FreeWord& w) { return w.to_string(); }, out);
  }
  if (a.method != "magnus") {
    throw InputError("compare: braids are compared by combing; --method does not apply");
  }
  std::vector<PureBraidWord> braids;
  for (const auto& s : a.items) braids.push_back(read_braid(s, *a.strands));
  return report_compare<PureBraidWord>(
      a, braids, [](const PureBraidWord& x, const PureBraidWord& y) { return compare_braids(x, y); },
      [](const PureBraidWord& w) { return w.to_string(); }, out);
}

// --- comb -------------------------------------------------------------------

struct CombArgs {
  Common common;
  int strands = 3;
  std::string word;
};

int do_comb(const CombArgs& a, std::ostream& out) {
  const CombedBraid c = comb(read_braid(a.word, a.strands));
  if (a.common.json) {
    json factors = json::array();
    for (const auto& f : c.factors) factors.push_back(f.to_string());
    out << json{{"strands", c.strands}, {"factors", factors}}.dump() << '\n';
    return kExitOk;
  }
  for (int k = 1; k < c.strands; ++k) {
    out << 'f' << k << " = " << c.factor(k).to_string() << '\n';
  }
  return kExitOk;
}

// --- invariants -------------------------------------------------------------

struct InvariantsArgs {
  Common common;
  int strands = 3;
  bool nonzero = false;
  std::string word;
};

int do_invariants(const InvariantsArgs& a, std::ostream& out) {
  const PureBraidWord beta = read_braid(a.word, a.strands);
  json rows = json::array();
  for (const auto& v : ft_invariant_table(beta, a.common.degree)) {
    if (a.nonzero && v.value == 0) continue;
    rows.push_back(
        {{"factor", v.factor}, {"monomial", v.monomial.to_string()}, {"value", rational_string(v.value)}});
  }
  out << json{{"strands", a.strands},
              {"degree", a.common.degree},
              {"braid", beta.to_string()},
              {"invariants", rows}}
             .dump()
      << '\n';
  return kExitOk;
}

// --- singular-sum -----------------------------------------------------------

struct SingularArgs {
  Common common;
  int strands = 3;
  int factor = 1;
  std::string monomial;
  std::string word;
};

int do_singular(const SingularArgs& a, std::ostream& out) {
  const SingularBraid s = read_singular(a.word, a.strands);
  if (a.factor < 1 || a.factor >= a.strands) {
    throw InputError("singular-sum: --factor must lie in 1.." + std::to_string(a.strands - 1));
  }
  const Monomial m = Monomial::parse(a.monomial);
  if (m.max_index() > a.factor) {
    throw InputError("singular-sum: monomial " + m.to_string() + " is outside rank " +
                     std::to_string(a.factor));
  }
  const int trunc = std::max(a.common.degree, m.degree());
  const Rational value = singular_alternating_sum(
      s, [&](const PureBraidWord& b) { return ft_invariant(a.factor, m, b, trunc); });
  if (a.common.json) {
    out << json{{"factor", a.factor},
                {"monomial", m.to_string()},
                {"singular_points", s.singular_count()},
                {"value", rational_string(value)}}
               .dump()
        << '\n';
  } else {
    out << rational_string(value) << '\n';
  }
  return kExitOk;
}

// --- holonomy ---------------------------------------------------------------

struct HolonomyArgs {
  Common common;
  int rank = 2;
  double tolerance = QuadratureSettings{}.tolerance;
  double margin = HolonomyOptions{}.margin;
  std::vector<std::string> words;
};

json holonomy_table(const HolonomySeries& h) {
  json rows = json::array();
  for (const auto& [m, e] : h.coefficients()) {
    rows.push_back({{"monomial", m.to_string()}, {"value", e.value}, {"error", e.error}});
  }
  return rows;
}

int do_holonomy(const HolonomyArgs& a, std::ostream& out) {
  if (a.words.empty() || a.words.size() > 2) throw InputError("holonomy: give one or two words");
  HolonomyOptions opts;
  opts.quadrature.tolerance = a.tolerance;
  opts.margin = a.margin;
  std::vector<FreeWord> words;
  for (const auto& s : a.words) words.push_back(read_word(s, a.rank));
  json j = {{"rank", a.rank}, {"degree", a.common.degree}, {"tolerance", a.tolerance},
            {"margin", a.margin}};
  json tables = json::array();
  for (const auto& w : words) {
    const HolonomySeries h = holonomy_series(LoopModel::from_word(w), a.common.degree, opts);
    tables.push_back({{"word", w.to_string()}, {"coefficients", holonomy_table(h)}});
  }
  j["series"] = tables;
  if (words.size() == 2) {
    const HolonomyComparison c = holonomy_compare(words[0], words[1], a.common.degree, opts);
    json cmp = {{"verdict", c.verdict ? json(std::string(to_string(*c.verdict))) : json("indeterminate")}};
    if (c.deciding) {
      cmp["deciding"] = c.deciding->to_string();
      cmp["lhs"] = c.lhs;
      cmp["rhs"] = c.rhs;
      cmp["threshold"] = c.threshold;
    }
    j["comparison"] = cmp;
  }
  out << j.dump() << '\n';
  return kExitOk;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string oracle;
  std::optional<int> rank;
  std::optional<int> strands;
  std::size_t samples = HarnessConfig{}.samples;
  std::uint64_t seed = kDefaultSeed;
  int max_length = 8;
};

template <class T>
HarnessReport run_harness(const OrderedGroupOracle<T>& oracle, std::function<T(std::mt19937_64&)> sampler,
                          const VerifyArgs& a) {
  HarnessConfig cfg;
  cfg.samples = a.samples;
  cfg.seed = a.seed;
  return axiom_harness<T>(oracle, sampler, cfg);
}

int do_verify(const VerifyArgs& a, std::ostream& out) {
  const bool braid = a.oracle == "braid";
  if (braid && a.rank) throw InputError("verify braid takes --strands, not --rank");
  if (!braid && a.strands) throw InputError("verify " + a.oracle + " takes --rank, not --strands");
  const int rank = a.rank.value_or(2);
  const int strands = a.strands.value_or(3);
  const int len = a.max_length;
  auto words = [rank, len](std::mt19937_64& rng) { return random_word(rank, len, rng); };

  HarnessReport report;
  std::vector<Violation> extra;
  if (a.oracle == "magnus") {
    report = run_harness<FreeWord>(magnus_oracle(rank), words, a);
  } else if (a.oracle == "iterated") {
    report = run_harness<FreeWord>(iterated_extension_oracle(rank), words, a);
  } else if (a.oracle == "extension") {
    report = run_harness<FreeWord>(exponent_sum_extension_oracle(rank), words, a);
    // The fiber ordering must also be conjugation invariant; sampled only.
    const auto ext = exponent_sum_extension(rank);
    auto kernel = [rank, len](std::mt19937_64& rng) {
      const FreeWord w = random_word(rank, len, rng);
      long e = 0;
      for (const Letter& l : w.letters()) e += l.gen == 1 ? l.sign : 0;
      return w * power(FreeWord::generator(rank, 1), static_cast<int>(-e));
    };
    extra = conjugation_check<FreeWord>(
        [](const FreeWord& x, const FreeWord& y) { return magnus_compare(x, y); }, ext.multiply,
        ext.invert, kernel, words, [](const FreeWord& w) { return w.to_string(); }, a.samples,
        a.seed + 1);
  } else if (a.oracle == "length") {
    report = run_harness<FreeWord>(length_oracle(rank), words, a);
  } else if (a.oracle == "trivial") {
    report = run_harness<TrivialElement>(trivial_oracle(), [](std::mt19937_64&) { return TrivialElement{}; },
                                         a);
  } else if (braid) {
    report = run_harness<PureBraidWord>(
        braid_oracle(strands),
        [strands, len](std::mt19937_64& rng) { return random_braid(strands, len, rng); }, a);
  } else {
    throw InputError("verify: unknown oracle '" + a.oracle + "'");
  }
  for (auto& v : extra) {
    auto& count = report.violation_counts[v.axiom];
    if (count++ < HarnessConfig{}.max_reported_per_axiom) report.violations.push_back(std::move(v));
  }

  for (const auto& v : report.violations) {
    out << json{{"axiom", v.axiom}, {"witnesses", v.witnesses}, {"detail", v.detail}}.dump() << '\n';
  }
  std::size_t total = 0;
  for (const auto& [axiom, n] : report.violation_counts) total += n;
  json summary = {{"oracle", report.oracle},
                  {"samples", report.samples},
                  {"seed", report.seed},
                  {"max_length", len},
                  {"violations", total},
                  {"counts", report.violation_counts},
                  {"passed", report.passed()}};
  if (braid) {
    summary["strands"] = strands;
  } else {
    summary["rank"] = rank;
  }
  out << summary.dump() << '\n';
  return report.passed() ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bi-invariant orderings of free groups and pure braid groups", "holord"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "holord 0.1.0");

  ExpandArgs ex;
  auto* expand = app.add_subcommand("expand", "Magnus expansion of a free-group word");
  expand->add_option("--rank", ex.rank, "Free-group rank")->check(CLI::Range(1, 64))->capture_default_str();
  add_degree(expand, ex.common, "Truncation degree");
  expand->add_flag("--json", ex.common.json, "Emit the series as JSON");
  expand->add_option("word", ex.word, "Word such as \"x1 x2^-1\" or \"aB\"")->required();

  CompareArgs cm;
  auto* compare = app.add_subcommand("compare", "Compare two (or sort several) elements");
  compare->add_option("--rank", cm.rank, "Free-group rank")->check(CLI::Range(1, 64));
  compare->add_option("--strands", cm.strands, "Number of strands (pure braids)")
      ->check(CLI::Range(2, 64));
  compare->add_option("--method", cm.method, "Ordering for free words")
      ->check(CLI::IsMember({"magnus", "iterated", "holonomy"}))
      ->capture_default_str();
  add_degree(compare, cm.common, "Holonomy degree (method holonomy)");
  compare->add_option("--tol", cm.tolerance, "Quadrature tolerance (method holonomy)")
      ->check(CLI::PositiveNumber);
  compare->add_option("--margin", cm.margin, "Decision margin (method holonomy)")
      ->check(CLI::NonNegativeNumber);
  compare->add_flag("--json", cm.common.json, "Emit JSON");
  compare->add_option("items", cm.items, "Words or braid words")->required();

  CombArgs cb;
  auto* combcmd = app.add_subcommand("comb", "Combed normal form of a pure braid");
  combcmd->add_option("--strands", cb.strands, "Number of strands")->check(CLI::Range(2, 64))->required();
  combcmd->add_flag("--json", cb.common.json, "Emit JSON");
  combcmd->add_option("braid", cb.word, "Braid word such as \"A12 A13^-1\"")->required();

  InvariantsArgs iv;
  auto* invariants = app.add_subcommand("invariants", "Table of combing-coefficient invariants (JSON)");
  invariants->add_option("--strands", iv.strands, "Number of strands")->check(CLI::Range(2, 64))->required();
  add_degree(invariants, iv.common, "Maximal monomial degree");
  invariants->add_flag("--nonzero", iv.nonzero, "Omit zero entries");
  invariants->add_flag("--json", iv.common.json, "Accepted for symmetry; output is always JSON");
  invariants->add_option("braid", iv.word, "Braid word")->required();

  SingularArgs sg;
  auto* singular = app.add_subcommand("singular-sum", "Alternating resolution sum of an invariant");
  singular->add_option("--strands", sg.strands, "Number of strands")->check(CLI::Range(2, 64))->required();
  singular->add_option("--factor", sg.factor, "Combing factor k")->required();
  singular->add_option("--monomial", sg.monomial, "Monomial such as X1X2")->required();
  add_degree(singular, sg.common, "Truncation degree");
  singular->add_flag("--json", sg.common.json, "Emit JSON");
  singular->add_option("braid", sg.word, "Braid word, double points marked as *A12")->required();

  HolonomyArgs ho;
  auto* holonomy = app.add_subcommand("holonomy", "Numerical holonomy of word loops (JSON)");
  holonomy->add_option("--rank", ho.rank, "Number of punctures")->check(CLI::Range(1, 64))->capture_default_str();
  add_degree(holonomy, ho.common, "Holonomy degree (at most 4)");
  holonomy->add_option("--tol", ho.tolerance, "Quadrature tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  holonomy->add_option("--margin", ho.margin, "Decision margin")->check(CLI::NonNegativeNumber)->capture_default_str();
  holonomy->add_flag("--json", ho.common.json, "Accepted for symmetry; output is always JSON");
  holonomy->add_option("words", ho.words, "One word, or two to compare")->required();

  VerifyArgs vf;
  auto* verify = app.add_subcommand("verify", "Run the order-axiom harness on an oracle");
  verify->add_option("oracle", vf.oracle, "magnus | iterated | extension | braid | length | trivial")
      ->required()
      ->check(CLI::IsMember({"magnus", "iterated", "extension", "braid", "length", "trivial"}));
  verify->add_option("--rank", vf.rank, "Free-group rank")->check(CLI::Range(1, 64));
  verify->add_option("--strands", vf.strands, "Number of strands")->check(CLI::Range(2, 64));
  verify->add_option("--samples", vf.samples, "Number of sampled triples")
      ->check(CLI::Range(std::size_t{1}, std::size_t{100000000}))
      ->capture_default_str();
  verify->add_option("--seed", vf.seed, "Random seed")->capture_default_str();
  verify->add_option("--max-len", vf.max_length, "Maximal sampled word length")
      ->check(CLI::Range(0, 1000))
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*expand) return do_expand(ex, out);
    if (*compare) return do_compare(cm, out);
    if (*combcmd) return do_comb(cb, out);
    if (*invariants) return do_invariants(iv, out);
    if (*singular) return do_singular(sg, out);
    if (*holonomy) return do_holonomy(ho, out);
    if (*verify) return do_verify(vf, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace holord::cli
