#include "holord/ordtools.hpp"

#include <algorithm>

namespace holord {

IteratedExtensionComparison iterated_extension_compare_detail(const FreeWord& a,
                                                              const FreeWord& b,
                                                              int max_class) {
  if (a.rank() != b.rank()) throw Error("rank mismatch in iterated_extension_compare");
  if (max_class < 1) throw Error("iterated_extension_compare: class bound must be >= 1");
  const FreeWord quotient = invert(a) * b;
  if (quotient.is_identity()) return {Verdict::Equal, 0, std::nullopt, 0};

  for (int k = 1; k <= max_class; ++k) {
    const TruncSeries expansion = magnus_expand(quotient, k);
    // a and b agree in G/G_k exactly when mu(a^-1 b) - 1 vanishes below degree k.
    const auto low = (expansion - TruncSeries::one(a.rank(), k)).lowest_degree();
    if (low && *low < k) {
      throw Error("iterated_extension_compare: quotient has nonzero degree " +
                  std::to_string(*low) + " part at class " + std::to_string(k));
    }
    const TruncSeries graded = expansion.degree_part(k);
    if (graded.is_zero()) continue;
    // Image of a^-1 b in G_k/G_{k+1}, ordered against 0 by its first
    // nonzero DegLex coordinate.
    const auto& [monomial, coeff] = *graded.terms().begin();
    return {coeff > 0 ? Verdict::Less : Verdict::Greater, k, monomial, coeff};
  }
  return {std::nullopt, max_class, std::nullopt, 0};
}

Verdict iterated_extension_compare(const FreeWord& a, const FreeWord& b, int max_class) {
  const auto r = iterated_extension_compare_detail(a, b, max_class);
  if (!r.verdict) {
    throw Error("iterated_extension_compare: undetermined at class " + std::to_string(max_class) +
                " for " + a.to_string() + " and " + b.to_string());
  }
  return *r.verdict;
}

namespace {

OrderedGroupOracle<FreeWord> free_group_oracle(
    std::string name, int rank, std::function<Verdict(const FreeWord&, const FreeWord&)> compare) {
  return OrderedGroupOracle<FreeWord>{
      .name = std::move(name),
      .compare = std::move(compare),
      .multiply = [](const FreeWord& x, const FreeWord& y) { return x * y; },
      .invert = [](const FreeWord& x) { return invert(x); },
      .identity = FreeWord(rank),
      .equal = [](const FreeWord& x, const FreeWord& y) { return x == y; },
      .format = [](const FreeWord& x) { return x.to_string(); },
  };
}

long exponent_sum(const FreeWord& w, int gen) {
  long sum = 0;
  for (const Letter& l : w.letters()) {
    if (l.gen == gen) sum += l.sign;
  }
  return sum;
}

}  // namespace

OrderedGroupOracle<FreeWord> magnus_oracle(int rank) {
  return free_group_oracle("magnus", rank, [](const FreeWord& x, const FreeWord& y) {
    return magnus_compare(x, y);
  });
}

OrderedGroupOracle<FreeWord> iterated_extension_oracle(int rank, int min_class) {
  return free_group_oracle("iterated", rank, [min_class](const FreeWord& x, const FreeWord& y) {
    return iterated_extension_compare(x, y, std::max(min_class, escalation_ceiling(x, y)));
  });
}

GroupExtension<FreeWord, long> exponent_sum_extension(int rank) {
  return GroupExtension<FreeWord, long>{
      .project = [](const FreeWord& w) { return exponent_sum(w, 1); },
      .compare_base =
          [](const long& x, const long& y) {
            return x < y ? Verdict::Less : (x > y ? Verdict::Greater : Verdict::Equal);
          },
      .compare_fiber = [](const FreeWord& x, const FreeWord& y) { return magnus_compare(x, y); },
      .multiply = [](const FreeWord& x, const FreeWord& y) { return x * y; },
      .invert = [](const FreeWord& x) { return invert(x); },
      .identity = FreeWord(rank),
      .in_fiber = [](const FreeWord& w) { return exponent_sum(w, 1) == 0; },
  };
}

OrderedGroupOracle<FreeWord> exponent_sum_extension_oracle(int rank) {
  return extension_oracle<FreeWord, long>(
      "extension", exponent_sum_extension(rank),
      [](const FreeWord& x, const FreeWord& y) { return x == y; },
      [](const FreeWord& x) { return x.to_string(); });
}

OrderedGroupOracle<FreeWord> length_oracle(int rank) {
  return free_group_oracle("length", rank, [](const FreeWord& x, const FreeWord& y) {
    if (x.length() < y.length()) return Verdict::Less;
    if (x.length() > y.length()) return Verdict::Greater;
    return Verdict::Equal;
  });
}

OrderedGroupOracle<TrivialElement> trivial_oracle() {
  return OrderedGroupOracle<TrivialElement>{
      .name = "trivial",
      .compare = [](const TrivialElement&, const TrivialElement&) { return Verdict::Equal; },
      .multiply = [](const TrivialElement&, const TrivialElement&) { return TrivialElement{}; },
      .invert = [](const TrivialElement&) { return TrivialElement{}; },
      .identity = TrivialElement{},
      .equal = [](const TrivialElement&, const TrivialElement&) { return true; },
      .format = [](const TrivialElement&) { return std::string("1"); },
  };
}

}  // namespace holord
