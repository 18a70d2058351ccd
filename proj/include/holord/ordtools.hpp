#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "holord/freegroup.hpp"
#include "holord/series.hpp"

namespace holord {

inline constexpr std::uint64_t kDefaultSeed = 20110301;

/// A group with a candidate total ordering. Oracles must be pure: the harness
/// may call them in any order.
template <class T>
struct OrderedGroupOracle {
  std::string name;
  std::function<Verdict(const T&, const T&)> compare;
  std::function<T(const T&, const T&)> multiply;
  std::function<T(const T&)> invert;
  T identity;
  /// Ground-truth equality of group elements (independent of `compare`).
  std::function<bool(const T&, const T&)> equal;
  std::function<std::string(const T&)> format;
};

struct Violation {
  /// One of: reflexivity, antisymmetry, totality, transitivity,
  /// left-invariance, right-invariance, conjugation-invariance, exception.
  std::string axiom;
  std::vector<std::string> witnesses;
  std::string detail;
};

struct HarnessConfig {
  std::size_t samples = 1000;
  std::uint64_t seed = kDefaultSeed;
  /// Violations kept per axiom; the rest are only counted.
  std::size_t max_reported_per_axiom = 5;
};

struct HarnessReport {
  std::string oracle;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<Violation> violations;
  std::map<std::string, std::size_t> violation_counts;

  bool passed() const { return violation_counts.empty(); }
  bool has(const std::string& axiom) const { return violation_counts.contains(axiom); }
};

namespace detail {

inline void record(HarnessReport& report, const HarnessConfig& cfg, Violation v) {
  auto& count = report.violation_counts[v.axiom];
  if (count++ < cfg.max_reported_per_axiom) report.violations.push_back(std::move(v));
}

inline std::string verdict_line(const std::string& x, Verdict v, const std::string& y) {
  return x + " " + std::string(symbol(v)) + " " + y;
}

}  // namespace detail

/// Samples `cfg.samples` triples (a, b, c) and checks that `oracle.compare`
/// is a total order invariant under left and right multiplication. Sampling
/// only: an empty report is evidence, not proof.
template <class T>
HarnessReport axiom_harness(const OrderedGroupOracle<T>& oracle,
                            const std::function<T(std::mt19937_64&)>& sampler,
                            const HarnessConfig& cfg = {}) {
  HarnessReport report;
  report.oracle = oracle.name;
  report.samples = cfg.samples;
  report.seed = cfg.seed;
  std::mt19937_64 rng(cfg.seed);
  const auto& fmt = oracle.format;

  for (std::size_t s = 0; s < cfg.samples; ++s) {
    const T a = sampler(rng);
    const T b = sampler(rng);
    const T c = sampler(rng);
    try {
      if (oracle.compare(a, a) != Verdict::Equal) {
        detail::record(report, cfg, {"reflexivity", {fmt(a)}, "a is not equal to itself"});
      }
      const Verdict ab = oracle.compare(a, b);
      const Verdict ba = oracle.compare(b, a);
      const Verdict bc = oracle.compare(b, c);
      const Verdict ac = oracle.compare(a, c);
      if (ba != flip(ab)) {
        detail::record(report, cfg,
                       {"antisymmetry",
                        {fmt(a), fmt(b)},
                        "compare(a,b) is " + std::string(to_string(ab)) + " but compare(b,a) is " +
                            std::string(to_string(ba))});
      }
      if ((ab == Verdict::Equal) != oracle.equal(a, b)) {
        detail::record(report, cfg,
                       {"totality",
                        {fmt(a), fmt(b)},
                        ab == Verdict::Equal ? "distinct elements compare equal"
                                             : "equal elements compare unequal"});
      }
      // A strict cycle a < b < c < a (or reversed) breaks transitivity.
      if (ab != Verdict::Equal && ab == bc && flip(ac) == ab) {
        detail::record(report, cfg,
                       {"transitivity",
                        {fmt(a), fmt(b), fmt(c)},
                        "a " + std::string(symbol(ab)) + " b " + std::string(symbol(bc)) +
                            " c but a " + std::string(symbol(ac)) + " c"});
      }
      const Verdict left = oracle.compare(oracle.multiply(c, a), oracle.multiply(c, b));
      if (left != ab) {
        detail::record(report, cfg,
                       {"left-invariance",
                        {fmt(a), fmt(b), fmt(c)},
                        detail::verdict_line("a", ab, "b") + " but " +
                            detail::verdict_line("ca", left, "cb")});
      }
      const Verdict right = oracle.compare(oracle.multiply(a, c), oracle.multiply(b, c));
      if (right != ab) {
        detail::record(report, cfg,
                       {"right-invariance",
                        {fmt(a), fmt(b), fmt(c)},
                        detail::verdict_line("a", ab, "b") + " but " +
                            detail::verdict_line("ac", right, "bc")});
      }
    } catch (const std::exception& e) {
      detail::record(report, cfg, {"exception", {fmt(a), fmt(b), fmt(c)}, e.what()});
    }
  }
  return report;
}

/// Spot-checks that `compare_fiber` is invariant under conjugation by
/// elements drawn from `group_sampler`. Sampled only.
template <class G>
std::vector<Violation> conjugation_check(
    const std::function<Verdict(const G&, const G&)>& compare_fiber,
    const std::function<G(const G&, const G&)>& multiply, const std::function<G(const G&)>& invert,
    const std::function<G(std::mt19937_64&)>& fiber_sampler,
    const std::function<G(std::mt19937_64&)>& group_sampler,
    const std::function<std::string(const G&)>& format, std::size_t samples, std::uint64_t seed) {
  std::vector<Violation> out;
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const G h = fiber_sampler(rng);
    const G h2 = fiber_sampler(rng);
    const G g = group_sampler(rng);
    const G gi = invert(g);
    const Verdict before = compare_fiber(h, h2);
    const Verdict after = compare_fiber(multiply(multiply(g, h), gi), multiply(multiply(g, h2), gi));
    if (before != after) {
      out.push_back({"conjugation-invariance",
                     {format(h), format(h2), format(g)},
                     detail::verdict_line("h", before, "h'") + " but " +
                         detail::verdict_line("ghg^-1", after, "gh'g^-1")});
    }
  }
  return out;
}

/// 1 -> H -> G -> K -> 1 with H represented inside G.
template <class G, class K>
struct GroupExtension {
  std::function<K(const G&)> project;
  std::function<Verdict(const K&, const K&)> compare_base;
  /// Ordering of H; only called on elements with trivial projection.
  std::function<Verdict(const G&, const G&)> compare_fiber;
  std::function<G(const G&, const G&)> multiply;
  std::function<G(const G&)> invert;
  G identity;
  std::function<bool(const G&)> in_fiber;
};

/// g < g' iff p(g) < p(g'), or p(g) = p(g') and 1 < g^-1 g' in H.
template <class G, class K>
Verdict extension_compare(const GroupExtension<G, K>& ext, const G& g, const G& g2) {
  const Verdict base = ext.compare_base(ext.project(g), ext.project(g2));
  if (base != Verdict::Equal) return base;
  const G h = ext.multiply(ext.invert(g), g2);
  if (!ext.in_fiber(h)) {
    throw Error("extension_compare: g^-1 g' has equal projections but is not in the fiber");
  }
  return ext.compare_fiber(ext.identity, h);
}

template <class G, class K>
OrderedGroupOracle<G> extension_oracle(std::string name, GroupExtension<G, K> ext,
                                       std::function<bool(const G&, const G&)> equal,
                                       std::function<std::string(const G&)> format) {
  return OrderedGroupOracle<G>{
      .name = std::move(name),
      .compare = [ext](const G& a, const G& b) { return extension_compare(ext, a, b); },
      .multiply = ext.multiply,
      .invert = ext.invert,
      .identity = ext.identity,
      .equal = std::move(equal),
      .format = std::move(format),
  };
}

// --- Free-group instances ---------------------------------------------------

struct IteratedExtensionComparison {
  /// Empty when the elements are distinct but not separated by class `max_class`.
  std::optional<Verdict> verdict;
  /// Lower-central-series class at which the verdict was reached (0 for Equal).
  int decided_at = 0;
  std::optional<Monomial> deciding;
  /// The deciding degree-k coefficient of mu(a^-1 b).
  Rational value;
};

/// Iterated central-extension ordering of F_n through G/G_{k+1}, k <= max_class.
/// The quotient G_k/G_{k+1} is ordered by the sign of the first nonzero
/// (DegLex) degree-k Magnus coefficient of a representative.
IteratedExtensionComparison iterated_extension_compare_detail(const FreeWord& a,
                                                              const FreeWord& b,
                                                              int max_class);
/// Throws Error if undetermined at `max_class`.
Verdict iterated_extension_compare(const FreeWord& a, const FreeWord& b, int max_class);

OrderedGroupOracle<FreeWord> magnus_oracle(int rank);
/// Uses max_class = max(min_class, |a| + |b|).
OrderedGroupOracle<FreeWord> iterated_extension_oracle(int rank, int min_class = 10);
/// F_n -> Z by the exponent sum of x1, fiber ordered by the Magnus ordering.
GroupExtension<FreeWord, long> exponent_sum_extension(int rank);
OrderedGroupOracle<FreeWord> exponent_sum_extension_oracle(int rank);
/// Orders words by reduced length only. Deliberately broken (neither total
/// nor invariant); used to check that the harness finds witnesses.
OrderedGroupOracle<FreeWord> length_oracle(int rank);

struct TrivialElement {
  bool operator==(const TrivialElement&) const = default;
};
OrderedGroupOracle<TrivialElement> trivial_oracle();

}  // namespace holord
