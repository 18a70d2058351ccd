#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "holord/freegroup.hpp"
#include "holord/ordtools.hpp"
#include "holord/series.hpp"

namespace holord {

/// A_{ij}^sign with 1 <= i < j <= n.
struct BraidLetter {
  int i;
  int j;
  int sign;
  bool operator==(const BraidLetter&) const = default;
};

/// A word in the Artin generators of the pure braid group P_n. No normal form
/// is imposed; group-element equality goes through the Artin representation.
class PureBraidWord {
 public:
  explicit PureBraidWord(int strands);
  PureBraidWord(int strands, std::vector<BraidLetter> letters);

  static PureBraidWord generator(int strands, int i, int j, int sign = +1);

  int strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }

  /// Word equality (not group equality).
  bool operator==(const PureBraidWord&) const = default;

  /// "A12 A13^-1", or "1" for the empty word.
  std::string to_string() const;

 private:
  int strands_;
  std::vector<BraidLetter> letters_;
};

PureBraidWord concat(const PureBraidWord& a, const PureBraidWord& b);
PureBraidWord invert(const PureBraidWord& a);
inline PureBraidWord operator*(const PureBraidWord& a, const PureBraidWord& b) {
  return concat(a, b);
}

/// Tokens `A12`, `A13^-1`, `A24^2`; for ten or more strands use `A(3,12)`.
PureBraidWord parse_braid(std::string_view text, int strands);

/// A pure braid word with some letter positions marked as double points.
struct SingularBraid {
  PureBraidWord word;
  std::vector<bool> singular;

  int singular_count() const;
};

/// Like parse_braid, with `*A12` marking a double point. Marked letters must
/// be positive.
SingularBraid parse_singular_braid(std::string_view text, int strands);

/// Automorphism of F_n given by the images of x_1..x_n.
class Automorphism {
 public:
  explicit Automorphism(int rank);
  Automorphism(int rank, std::vector<FreeWord> images);

  int rank() const { return rank_; }
  const std::vector<FreeWord>& images() const { return images_; }
  const FreeWord& image(int gen) const { return images_.at(static_cast<size_t>(gen - 1)); }

  FreeWord apply(const FreeWord& w) const;
  /// (this o other)(x) = this(other(x)).
  Automorphism compose(const Automorphism& other) const;
  bool is_identity() const;

  bool operator==(const Automorphism&) const = default;

 private:
  int rank_;
  std::vector<FreeWord> images_;
};

/// sigma_k^sign acting on F_n: x_k -> x_k x_{k+1} x_k^-1, x_{k+1} -> x_k.
Automorphism half_twist(int rank, int k, int sign);

/// Artin representation P_n -> Aut(F_n), a homomorphism:
/// artin(ab) = artin(a) o artin(b).
Automorphism artin_automorphism(const PureBraidWord& w);

/// Group-element equality through the (faithful) Artin representation.
bool braid_equal(const PureBraidWord& a, const PureBraidWord& b);

/// P_n -> P_{n-1}: deletes the last strand (A_{in} -> 1, other letters kept).
PureBraidWord forget_strand(const PureBraidWord& w);
/// P_{n-1} -> P_n: A_{ij} -> A_{ij}.
PureBraidWord section(const PureBraidWord& w);

/// Free coordinates of an element of ker(P_n -> P_{n-1}), in the basis
/// y_i <-> A_{in}. Throws if the word is not in the kernel.
FreeWord fiber_coordinates(const PureBraidWord& w);
/// y_i -> A_{i,strands}.
PureBraidWord fiber_inclusion(const FreeWord& f, int strands);

/// Checks fiber_coordinates(A_{in}) = y_i and that the inclusion round-trips on
/// products of two generators, for all n <= max_strands. Throws on failure.
void fiber_self_test(int max_strands = 5);

/// Normal form (f_1, ..., f_{n-1}) of the tower P_n -> P_{n-1} -> ... -> P_1,
/// with f_k in the free group of rank k.
struct CombedBraid {
  int strands;
  std::vector<FreeWord> factors;

  const FreeWord& factor(int k) const { return factors.at(static_cast<size_t>(k - 1)); }
  bool operator==(const CombedBraid&) const = default;
};

CombedBraid comb(const PureBraidWord& w);
/// Product of the lifted factors, f_1 first.
PureBraidWord recombine(const CombedBraid& c);

struct BraidComparison {
  Verdict verdict;
  /// Tower level k whose factor decided; 0 for Equal.
  int factor = 0;
  MagnusComparison detail;
};

/// Base-dominant ordering: f_1, then f_2, ..., each compared in the Magnus
/// ordering.
BraidComparison braid_compare_detail(const PureBraidWord& a, const PureBraidWord& b);
Verdict braid_compare(const PureBraidWord& a, const PureBraidWord& b);

inline constexpr int kDefaultInvariantDegree = 4;

/// Coefficient of `monomial` (over rank `factor`) in the Magnus expansion of
/// the combing factor f_factor of `beta`.
Rational ft_invariant(int factor, const Monomial& monomial, const PureBraidWord& beta,
                      int trunc = kDefaultInvariantDegree);

struct FtInvariantValue {
  int factor;
  Monomial monomial;
  Rational value;
};

/// All combing-coefficient invariants of degree 1..max_degree, base-dominant
/// (factor 1 first) and DegLex within a factor.
std::vector<FtInvariantValue> ft_invariant_table(const PureBraidWord& beta, int max_degree);

/// Compares two braids by scanning their invariant tables in order. Empty if
/// every value through max_degree agrees.
std::optional<Verdict> ft_scan_compare(const PureBraidWord& a, const PureBraidWord& b,
                                       int max_degree);

using BraidFunctional = std::function<Rational(const PureBraidWord&)>;

/// Sum over the 2^m resolutions of the marked letters of
/// (-1)^{#negative} v(resolution).
Rational singular_alternating_sum(const SingularBraid& s, const BraidFunctional& v);

/// Defining relators of P_n (words equal to the identity) for n >= 2.
std::vector<PureBraidWord> standard_relators(int strands);

/// Uniform random letters A_{ij}^{+-1}; length uniform in [0, max_length].
PureBraidWord random_braid(int strands, int max_length, std::mt19937_64& rng);
/// A random word of length in [marks, max_length] with `marks` positive
/// letters marked singular.
SingularBraid random_singular_braid(int strands, int marks, int max_length,
                                    std::mt19937_64& rng);

OrderedGroupOracle<PureBraidWord> braid_oracle(int strands);

inline std::ostream& operator<<(std::ostream& os, const PureBraidWord& w) { return os << w.to_string(); }

}  // namespace holord
