// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "holord/braid.hpp"
#include "holord/chen.hpp"
#include "holord/ordtools.hpp"

using namespace holord;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("%s %d %s: %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  failures += !ok;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

void magnus_homomorphism() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(101);
  int bad = 0;
  for (int s = 0; s < 300; ++s) {
    const int rank = 1 + s % 3, N = 1 + (s / 3) % 4;
    const FreeWord a = random_word(rank, 8, rng), b = random_word(rank, 8, rng);
    const TruncSeries ma = magnus_expand(a, N);
    bad += magnus_expand(a * b, N) != mul(ma, magnus_expand(b, N));
    bad += !(mul(magnus_expand(invert(a), N), ma) == TruncSeries::one(rank, N));
  }
  const double t = seconds_since(t0);
  report(1, "magnus homomorphism", bad == 0 && t < 10.0,
         fmt("300 pairs, %d failures, %.2f s (limit 10 s)", bad, t));
}

std::size_t violations(const HarnessReport& r) {
  std::size_t n = 0;
  for (const auto& [axiom, count] : r.violation_counts) n += count;
  return n;
}

void bi_invariance() {
  const auto t0 = Clock::now();
  const auto free_report = axiom_harness(
      magnus_oracle(2),
      std::function<FreeWord(std::mt19937_64&)>([](std::mt19937_64& rng) { return random_word(2, 8, rng); }),
      {.samples = 1000});
  std::size_t braid_bad = 0;
  for (int n : {3, 4}) {
    const auto r = axiom_harness(braid_oracle(n),
                                 std::function<PureBraidWord(std::mt19937_64&)>(
                                     [n](std::mt19937_64& rng) { return random_braid(n, 8, rng); }),
                                 {.samples = 1000});
    braid_bad += violations(r);
  }
  const std::size_t free_bad = violations(free_report);
  const double t = seconds_since(t0);
  report(2, "bi-invariant total order", free_bad == 0 && braid_bad == 0 && t < 60.0,
         fmt("1000 triples in F_2, %zu violations; 1000 each in P_3 and P_4, %zu violations; %.2f s "
             "(limit 60 s)",
             free_bad, braid_bad, t));
}

void iterated_equals_magnus() {
  const auto words = all_reduced_words(2, 5);
  long pairs = 0, bad = 0;
  for (const FreeWord& a : words) {
    for (const FreeWord& b : words) {
      if (a == b) continue;
      ++pairs;
      bad += iterated_extension_compare(a, b, 10) != magnus_compare(a, b);
    }
  }
  report(3, "iterated extension equals magnus", bad == 0 && pairs > 0,
         fmt("%ld ordered pairs of distinct reduced words of length <= 5, %ld disagreements", pairs, bad));
}

void holonomy_equals_magnus() {
  std::mt19937_64 rng(104);
  int pairs = 0, indeterminate = 0, bad = 0;
  while (pairs < 200) {
    const FreeWord a = random_word(2, 5, rng), b = random_word(2, 5, rng);
    if (a == b) continue;
    ++pairs;
    const auto h = holonomy_compare(a, b, 4);
    if (!h.verdict) {
      ++indeterminate;
      continue;
    }
    bad += *h.verdict != magnus_compare(a, b);
  }
  double worst = 0;
  for (int i = 1; i <= 2; ++i) {
    const HolonomySeries h = holonomy_series(LoopModel::from_word(FreeWord::generator(2, i)), 4);
    const TruncSeries e = exp(TruncSeries::variable(2, 4, i));
    for (const auto& [m, est] : h.coefficients()) {
      worst = std::max(worst, std::abs(est.value - e.coefficient(m).get_d()));
    }
  }
  const double rate = static_cast<double>(indeterminate) / pairs;
  report(4, "holonomy equals magnus", bad == 0 && rate < 0.05 && worst <= 1e-8,
         fmt("200 pairs, %d disagreements, indeterminate rate %.3f (limit 0.05); generator vs exp "
             "max deviation %.2e (limit 1e-8)",
             bad, rate, worst));
}

// All interleavings of u and v.
void shuffles(const std::vector<int>& u, const std::vector<int>& v, std::vector<int>& cur,
              std::size_t i, std::size_t j, std::vector<std::vector<int>>& out) {
  if (i == u.size() && j == v.size()) {
    out.push_back(cur);
    return;
  }
  if (i < u.size()) {
    cur.push_back(u[i]);
    shuffles(u, v, cur, i + 1, j, out);
    cur.pop_back();
  }
  if (j < v.size()) {
    cur.push_back(v[j]);
    shuffles(u, v, cur, i, j + 1, out);
    cur.pop_back();
  }
}

void chen_identities() {
  std::mt19937_64 rng(105);
  int mult_bad = 0, shuffle_bad = 0, shuffle_checks = 0;
  std::vector<std::vector<int>> index_words;
  for (int len = 1; len <= 2; ++len) {
    for (const auto& m : monomials_of_degree(2, len)) index_words.emplace_back(m.indices().begin(), m.indices().end());
  }
  for (int s = 0; s < 50; ++s) {
    const int k = 1 + s % 3;
    const LoopModel a = LoopModel::from_word(random_word(2, 4, rng));
    const LoopModel b = LoopModel::from_word(random_word(2, 4, rng));
    const LoopModel ab = concat(a, b);
    const HolonomySeries whole = holonomy_series(ab, k);
    const HolonomySeries prod = product(holonomy_series(a, k), holonomy_series(b, k));
    for (const auto& [m, e] : whole.coefficients()) {
      const Estimate& p = prod.coefficient(m);
      mult_bad += std::abs(e.value - p.value) > 10 * (e.error + p.error);
    }
    for (const auto& u : index_words) {
      for (const auto& v : index_words) {
        if (u.size() + v.size() > 3) continue;
        const Estimate iu = iterated_integral(ab, u), iv = iterated_integral(ab, v);
        std::vector<std::vector<int>> terms;
        std::vector<int> cur;
        shuffles(u, v, cur, 0, 0, terms);
        double sum = 0;
        double bound = std::abs(iu.value) * iv.error + std::abs(iv.value) * iu.error + iu.error * iv.error;
        for (const auto& w : terms) {
          const Estimate iw = iterated_integral(ab, w);
          sum += iw.value;
          bound += iw.error;
        }
        ++shuffle_checks;
        shuffle_bad += std::abs(iu.value * iv.value - sum) > 10 * bound;
      }
    }
  }
  report(5, "chen identities", mult_bad == 0 && shuffle_bad == 0,
         fmt("50 loop pairs, k <= 3: %d multiplicativity failures, %d/%d shuffle failures (10x error bound)",
             mult_bad, shuffle_bad, shuffle_checks));
}

void depth() {
  const FreeWord x1 = FreeWord::generator(2, 1), x2 = FreeWord::generator(2, 2);
  const auto d1 = lcs_depth(x1, 4), d2 = lcs_depth(commutator(x1, x2), 4),
             d3 = lcs_depth(commutator(commutator(x1, x2), x2), 4);
  const bool examples = d1 == 1 && d2 == 2 && d3 == 3;
  int words = 0, bad = 0;
  for (const FreeWord& w : all_reduced_words(2, 6)) {
    if (w.is_identity()) continue;
    ++words;
    const auto d = lcs_depth(w, w.length());
    bad += !d || *d > w.length();
  }
  report(6, "lower central depth", examples && bad == 0,
         fmt("depths %d %d %d (expected 1 2 3); %d reduced words of length <= 6, %d with depth > length",
             d1.value_or(0), d2.value_or(0), d3.value_or(0), words, bad));
}

void braid_well_defined() {
  std::mt19937_64 rng(107);
  int placements = 0, bad = 0;
  for (int n : {3, 4}) {
    const auto relators = standard_relators(n);
    for (int s = 0; s < 200; ++s) {
      const PureBraidWord w = random_braid(n, 6, rng), other = random_braid(n, 6, rng);
      const PureBraidWord& r = relators[static_cast<std::size_t>(s) % relators.size()];
      std::vector<BraidLetter> letters = w.letters();
      const auto pos = std::uniform_int_distribution<std::size_t>(0, letters.size())(rng);
      letters.insert(letters.begin() + static_cast<long>(pos), r.letters().begin(), r.letters().end());
      const PureBraidWord w2(n, std::move(letters));
      ++placements;
      bool ok = braid_compare(w2, other) == braid_compare(w, other);
      const auto t1 = ft_invariant_table(w, 3), t2 = ft_invariant_table(w2, 3);
      ok = ok && t1.size() == t2.size();
      for (std::size_t k = 0; ok && k < t1.size(); ++k) ok = t1[k].value == t2[k].value;
      bad += !ok;
    }
  }
  int comb_bad = 0;
  for (int s = 0; s < 500; ++s) {
    const int n = 2 + s % 3;
    const PureBraidWord w = random_braid(n, 8, rng);
    comb_bad += artin_automorphism(recombine(comb(w))) != artin_automorphism(w);
  }
  report(7, "braid well-definedness", bad == 0 && comb_bad == 0,
         fmt("%d relator placements in P_3/P_4, %d changed a verdict or invariant; 500 recombinations, "
             "%d mismatches",
             placements, bad, comb_bad));
}

void finite_type() {
  std::mt19937_64 rng(108);
  long sums = 0, nonzero = 0;
  int witnesses = 0;
  for (int d = 1; d <= 3; ++d) {
    std::vector<BraidFunctional> invariants;
    for (int k = 1; k <= 2; ++k) {
      for (const auto& m : monomials_of_degree(k, d)) {
        invariants.push_back([k, m, d](const PureBraidWord& b) { return ft_invariant(k, m, b, d); });
      }
    }
    for (int s = 0; s < 100; ++s) {
      const SingularBraid sb = random_singular_braid(3, d + 1, d + 6, rng);
      for (const auto& v : invariants) {
        ++sums;
        nonzero += singular_alternating_sum(sb, v) != 0;
      }
    }
    PureBraidWord w(3);
    for (int k = 0; k < d; ++k) w = w * PureBraidWord::generator(3, 1, 3);
    const Monomial m(std::vector<int>(static_cast<std::size_t>(d), 1));
    const SingularBraid witness{w, std::vector<bool>(static_cast<std::size_t>(d), true)};
    witnesses += singular_alternating_sum(
                     witness, [&](const PureBraidWord& b) { return ft_invariant(2, m, b, d); }) != 0;
  }
  report(8, "finite-type vanishing", nonzero == 0 && witnesses == 3,
         fmt("%ld alternating sums on (d+1)-singular braids, %ld nonzero; %d/3 d-singular witnesses nonzero",
             sums, nonzero, witnesses));
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria{magnus_homomorphism, bi_invariance,  iterated_equals_magnus,
                                                    holonomy_equals_magnus, chen_identities, depth,
                                                    braid_well_defined,   finite_type};
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    try {
      criteria[k]();
    } catch (const std::exception& e) {
      std::printf("FAIL %zu exception: %s\n", k + 1, e.what());
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
