#include <gtest/gtest.h>

#include <random>

#include "holord/braid.hpp"

using namespace holord;

namespace {

PureBraidWord B(const char* text, int strands = 3) { return parse_braid(text, strands); }
FreeWord F(const char* text, int rank) { return parse_word(text, rank); }

PureBraidWord insert_at(const PureBraidWord& w, const PureBraidWord& r, size_t pos) {
  std::vector<BraidLetter> letters = w.letters();
  letters.insert(letters.begin() + static_cast<long>(pos), r.letters().begin(), r.letters().end());
  return PureBraidWord(w.strands(), letters);
}

}  // namespace

TEST(BraidWord, Grammar) {
  const PureBraidWord w = B("A12 A13^-1 A23^2");
  ASSERT_EQ(w.length(), 4);
  EXPECT_EQ(w.letters()[1], (BraidLetter{1, 3, -1}));
  EXPECT_EQ(w.to_string(), "A12 A13^-1 A23 A23");
  EXPECT_EQ(B("1"), PureBraidWord(3));
  EXPECT_EQ(parse_braid("A(3,12)", 12).letters()[0], (BraidLetter{3, 12, 1}));
  EXPECT_EQ(parse_braid("A(3,12)^-1", 12).to_string(), "A(3,12)^-1");
}

TEST(BraidWord, ParseErrors) {
  EXPECT_THROW(B("A14"), ParseError);
  EXPECT_THROW(B("A21"), ParseError);
  EXPECT_THROW(B("A12 x1"), ParseError);
  try {
    B("A12 A33");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_singular_braid("*A12^-1", 3), ParseError);
  EXPECT_THROW(B("*A12"), ParseError);
}

TEST(BraidWord, SingularGrammar) {
  const SingularBraid s = parse_singular_braid("*A12 A13 *A23", 3);
  EXPECT_EQ(s.singular_count(), 2);
  EXPECT_EQ(s.singular, (std::vector<bool>{true, false, true}));
  EXPECT_EQ(s.word, B("A12 A13 A23"));
}

TEST(Artin, IdentityAndGenerator) {
  EXPECT_TRUE(artin_automorphism(PureBraidWord(4)).is_identity());
  // sigma_1 applied twice, by hand.
  const Automorphism a = artin_automorphism(parse_braid("A12", 2));
  const FreeWord x1x2 = F("x1 x2", 2);
  EXPECT_EQ(a.image(1), x1x2 * F("x1", 2) * invert(x1x2));
  EXPECT_EQ(a.image(2), x1x2 * F("x2", 2) * invert(x1x2));
  EXPECT_EQ(a, half_twist(2, 1, 1).compose(half_twist(2, 1, 1)));
}

TEST(Artin, HalfTwistInverse) {
  for (int k = 1; k < 4; ++k) {
    EXPECT_TRUE(half_twist(4, k, 1).compose(half_twist(4, k, -1)).is_identity());
    EXPECT_TRUE(half_twist(4, k, -1).compose(half_twist(4, k, 1)).is_identity());
  }
}

TEST(Artin, Homomorphism) {
  std::mt19937_64 rng(41);
  for (int s = 0; s < 200; ++s) {
    const PureBraidWord a = random_braid(4, 6, rng), b = random_braid(4, 6, rng);
    EXPECT_EQ(artin_automorphism(a * b), artin_automorphism(a).compose(artin_automorphism(b)));
  }
}

TEST(Artin, RelatorsAreTrivial) {
  EXPECT_EQ(standard_relators(3).size(), 2u);
  EXPECT_EQ(standard_relators(4).size(), 11u);
  for (int n = 3; n <= 5; ++n) {
    for (const auto& r : standard_relators(n)) {
      EXPECT_TRUE(artin_automorphism(r).is_identity()) << r.to_string();
    }
  }
}

TEST(Tower, ForgetStrand) {
  EXPECT_EQ(forget_strand(B("A13")), PureBraidWord(2));
  EXPECT_EQ(forget_strand(B("A12")), parse_braid("A12", 2));
  EXPECT_EQ(forget_strand(B("A12 A23^-1")), parse_braid("A12", 2));
  EXPECT_EQ(section(parse_braid("A12", 2)), B("A12"));
}

TEST(Tower, FiberCoordinates) {
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i < n; ++i) {
      EXPECT_EQ(fiber_coordinates(PureBraidWord::generator(n, i, n)), FreeWord::generator(n - 1, i));
    }
  }
  EXPECT_EQ(fiber_coordinates(B("A13 A23")), F("x1 x2", 2));
  EXPECT_EQ(fiber_coordinates(parse_braid("A14 A24 A34^-1", 4)), F("x1 x2 x3^-1", 3));
  EXPECT_TRUE(fiber_coordinates(PureBraidWord(3)).is_identity());
  EXPECT_THROW(fiber_coordinates(B("A12")), Error);
  EXPECT_NO_THROW(fiber_self_test(5));
}

TEST(Tower, FiberInclusionRoundTrip) {
  std::mt19937_64 rng(42);
  for (int s = 0; s < 200; ++s) {
    const int n = 2 + s % 4;
    const FreeWord f = random_word(n - 1, 8, rng);
    EXPECT_EQ(fiber_coordinates(fiber_inclusion(f, n)), f);
  }
}

TEST(Comb, Examples) {
  const CombedBraid c13 = comb(B("A13"));
  EXPECT_TRUE(c13.factor(1).is_identity());
  EXPECT_EQ(c13.factor(2), F("x1", 2));
  const CombedBraid c12 = comb(B("A12"));
  EXPECT_EQ(c12.factor(1), F("x1", 1));
  EXPECT_TRUE(c12.factor(2).is_identity());
  for (const auto& f : comb(PureBraidWord(4)).factors) EXPECT_TRUE(f.is_identity());
}

TEST(Comb, RecombinationAndSection) {
  std::mt19937_64 rng(43);
  for (int s = 0; s < 500; ++s) {
    const int n = 2 + s % 3;
    const PureBraidWord w = random_braid(n, 8, rng);
    EXPECT_TRUE(braid_equal(recombine(comb(w)), w)) << w.to_string();
    const PureBraidWord u = random_braid(n, 8, rng);
    EXPECT_TRUE(comb(section(u)).factors.back().is_identity());
  }
}

// The top factor read off through the Artin action on the kernel.
TEST(Comb, TopFactorMatchesArtinCoordinates) {
  std::mt19937_64 rng(44);
  for (int s = 0; s < 300; ++s) {
    const int n = 2 + s % 4;
    const PureBraidWord w = random_braid(n, 6, rng);
    const PureBraidWord kernel = invert(section(forget_strand(w))) * w;
    EXPECT_EQ(comb(w).factors.back(), fiber_coordinates(kernel)) << w.to_string();
  }
}

TEST(BraidCompare, Examples) {
  EXPECT_EQ(braid_compare(PureBraidWord(3), B("A13")), Verdict::Less);
  const auto d = braid_compare_detail(B("A13"), B("A12"));
  EXPECT_EQ(d.verdict, Verdict::Less);
  EXPECT_EQ(d.factor, 1);
  for (const auto& r : standard_relators(3)) {
    EXPECT_EQ(braid_compare(B("A12 A23"), B("A12 A23") * r), Verdict::Equal);
    for (const auto& f : comb(r).factors) EXPECT_TRUE(f.is_identity());
  }
  EXPECT_THROW(braid_compare(B("A12"), parse_braid("A12", 4)), Error);
}

TEST(BraidProperty, RelatorInsertionInvariance) {
  std::mt19937_64 rng(44);
  for (int n = 3; n <= 4; ++n) {
    const auto relators = standard_relators(n);
    for (int s = 0; s < 100; ++s) {
      const PureBraidWord w = random_braid(n, 6, rng);
      const PureBraidWord other = random_braid(n, 6, rng);
      const auto& r = relators[std::uniform_int_distribution<size_t>(0, relators.size() - 1)(rng)];
      const size_t pos = std::uniform_int_distribution<size_t>(0, w.letters().size())(rng);
      const PureBraidWord w2 = insert_at(w, r, pos);
      EXPECT_EQ(comb(w2), comb(w));
      EXPECT_EQ(braid_compare(w2, other), braid_compare(w, other));
      const auto t1 = ft_invariant_table(w, 3), t2 = ft_invariant_table(w2, 3);
      ASSERT_EQ(t1.size(), t2.size());
      for (size_t k = 0; k < t1.size(); ++k) EXPECT_EQ(t1[k].value, t2[k].value);
      EXPECT_EQ(ft_scan_compare(w2, w, 3), std::nullopt);
    }
  }
}

TEST(BraidProperty, FaithfulnessConsistency) {
  std::mt19937_64 rng(45);
  int equal_pairs = 0;
  for (int s = 0; s < 500; ++s) {
    const int n = 3 + s % 2;
    const PureBraidWord a = random_braid(n, 8, rng);
    // Every fourth pair is equal by construction.
    const PureBraidWord b =
        s % 4 == 0 ? insert_at(a, standard_relators(n)[static_cast<size_t>(s) % 2], 0) : random_braid(n, 8, rng);
    const bool same = artin_automorphism(a) == artin_automorphism(b);
    equal_pairs += same;
    EXPECT_EQ(same, braid_compare(a, b) == Verdict::Equal);
  }
  EXPECT_GE(equal_pairs, 125);
}

TEST(BraidProperty, BiInvariance) {
  std::mt19937_64 rng(46);
  for (int s = 0; s < 1000; ++s) {
    const int n = 3 + s % 2;
    const PureBraidWord a = random_braid(n, 6, rng), b = random_braid(n, 6, rng),
                        c = random_braid(n, 6, rng);
    const Verdict ab = braid_compare(a, b);
    EXPECT_EQ(braid_compare(b, a), flip(ab));
    EXPECT_EQ(braid_compare(c * a, c * b), ab);
    EXPECT_EQ(braid_compare(a * c, b * c), ab);
  }
}

TEST(Invariants, Examples) {
  EXPECT_EQ(ft_invariant(2, {1}, B("A13")), 1);
  for (int m = -3; m <= 3; ++m) {
    PureBraidWord p(3);
    for (int k = 0; k < std::abs(m); ++k) p = p * PureBraidWord::generator(3, 1, 2, m < 0 ? -1 : 1);
    EXPECT_EQ(ft_invariant(1, {1}, p), m);
  }
  for (const auto& v : ft_invariant_table(PureBraidWord(4), 3)) EXPECT_EQ(v.value, 0);
  EXPECT_THROW(ft_invariant(3, {1}, B("A13")), Error);
  EXPECT_THROW(ft_invariant(1, {2}, B("A13")), Error);
  EXPECT_THROW(ft_invariant(1, {1, 1, 1}, B("A13"), 2), Error);
}

TEST(Invariants, TableOrder) {
  const auto t = ft_invariant_table(B("A12 A13"), 2);
  // factor 1: X1, X1X1; factor 2: X1, X2, X1X1, X1X2, X2X1, X2X2.
  ASSERT_EQ(t.size(), 8u);
  EXPECT_EQ(t[0].factor, 1);
  EXPECT_EQ(t[1].monomial, Monomial({1, 1}));
  EXPECT_EQ(t[2].factor, 2);
  EXPECT_EQ(t[3].monomial, Monomial({2}));
  EXPECT_EQ(t[5].monomial, Monomial({1, 2}));
}

TEST(Invariants, SingularSumExamples) {
  const BraidFunctional v = [](const PureBraidWord& b) { return ft_invariant(2, {1}, b); };
  const SingularBraid plain{B("A13 A23"), {false, false}};
  EXPECT_EQ(singular_alternating_sum(plain, v), v(B("A13 A23")));
  const BraidFunctional constant = [](const PureBraidWord&) { return Rational(7); };
  EXPECT_EQ(singular_alternating_sum(parse_singular_braid("*A12 *A13", 3), constant), 0);
  // v(A13) - v(A13^-1) = 1 - (-1).
  EXPECT_EQ(singular_alternating_sum(parse_singular_braid("*A13", 3), v), 2);
  EXPECT_THROW(singular_alternating_sum({B("A12"), {}}, v), Error);
}

TEST(Invariants, FiniteTypeVanishing) {
  std::mt19937_64 rng(47);
  for (int d = 1; d <= 3; ++d) {
    for (int k = 1; k <= 2; ++k) {
      for (const auto& m : monomials_of_degree(k, d)) {
        const BraidFunctional v = [&](const PureBraidWord& b) { return ft_invariant(k, m, b, d); };
        for (int s = 0; s < 20; ++s) {
          const SingularBraid sb = random_singular_braid(3, d + 1, d + 4, rng);
          EXPECT_EQ(singular_alternating_sum(sb, v), 0) << m.to_string() << " on factor " << k;
        }
      }
    }
  }
}

TEST(Invariants, OrderDWitnessExists) {
  for (int d = 1; d <= 3; ++d) {
    PureBraidWord w(3);
    for (int k = 0; k < d; ++k) w = w * B("A13");
    const SingularBraid s{w, std::vector<bool>(static_cast<size_t>(d), true)};
    const Monomial m(std::vector<int>(static_cast<size_t>(d), 1));
    const Rational sum =
        singular_alternating_sum(s, [&](const PureBraidWord& b) { return ft_invariant(2, m, b, d); });
    EXPECT_NE(sum, 0);
  }
}

TEST(Invariants, ScanAgreesWithBraidCompare) {
  std::mt19937_64 rng(48);
  int decided = 0;
  for (int s = 0; s < 300; ++s) {
    const PureBraidWord a = random_braid(3, 5, rng), b = random_braid(3, 5, rng);
    const auto scan = ft_scan_compare(a, b, 6);
    if (!scan) {
      EXPECT_EQ(braid_compare(a, b), Verdict::Equal);
      continue;
    }
    ++decided;
    EXPECT_EQ(*scan, braid_compare(a, b));
  }
  EXPECT_GT(decided, 200);
}

TEST(BraidOracle, HarnessPasses) {
  std::function<PureBraidWord(std::mt19937_64&)> sampler = [](std::mt19937_64& rng) {
    return random_braid(4, 6, rng);
  };
  const auto report = axiom_harness(braid_oracle(4), sampler, {.samples = 300});
  EXPECT_TRUE(report.passed());
}
