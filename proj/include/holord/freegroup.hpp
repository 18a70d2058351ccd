#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "holord/series.hpp"

namespace holord {

/// Word-grammar error with the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

/// x_gen^sign, gen is 1-based and sign is +1 or -1.
struct Letter {
  int gen;
  int sign;
  bool operator==(const Letter&) const = default;
};

/// A freely reduced word in the free group F_n on x_1..x_n.
class FreeWord {
 public:
  /// The identity of F_rank.
  explicit FreeWord(int rank);
  /// Freely reduces `letters`.
  FreeWord(int rank, std::span<const Letter> letters);
  FreeWord(int rank, std::initializer_list<Letter> letters)
      : FreeWord(rank, std::span<const Letter>(letters.begin(), letters.size())) {}

  static FreeWord generator(int rank, int gen, int sign = +1);

  int rank() const { return rank_; }
  std::span<const Letter> letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool is_identity() const { return letters_.empty(); }

  bool operator==(const FreeWord&) const = default;

  /// "x1 x2^-1 x1", or "1" for the identity.
  std::string to_string() const;

 private:
  int rank_;
  std::vector<Letter> letters_;
};

FreeWord reduce(int rank, std::span<const Letter> letters);
FreeWord concat(const FreeWord& a, const FreeWord& b);
FreeWord invert(const FreeWord& a);
/// a^-1 b^-1 a b
FreeWord commutator(const FreeWord& a, const FreeWord& b);
FreeWord power(const FreeWord& a, int exponent);

inline FreeWord operator*(const FreeWord& a, const FreeWord& b) { return concat(a, b); }

/// Parses whitespace-separated tokens `x3`, `x2^-1`, `x1^4`, or runs of the
/// compact aliases `a b c ...` (x1, x2, x3, ...) and `A B C ...` (inverses),
/// e.g. "ab A" or "x1 x2^-1". "1" (or an empty string) is the identity.
FreeWord parse_word(std::string_view text, int rank);

/// Magnus expansion x_i -> 1 + X_i truncated at degree n.
TruncSeries magnus_expand(const FreeWord& w, int trunc);

struct MagnusComparison {
  Verdict verdict;
  /// Present unless the verdict is Equal.
  std::optional<Monomial> deciding;
  Rational lhs;
  Rational rhs;
  /// Truncation degree at which the verdict was reached (0 for Equal).
  int degree = 0;
};

/// Degree bound used to turn a runaway escalation into an error.
int escalation_ceiling(const FreeWord& a, const FreeWord& b);

/// Magnus ordering. Equality is decided by free reduction; distinct elements
/// are compared by escalating the truncation degree until the expansions
/// differ. Throws Error if the escalation ceiling is hit.
MagnusComparison magnus_compare_detail(const FreeWord& a, const FreeWord& b);
Verdict magnus_compare(const FreeWord& a, const FreeWord& b);

/// Lowest degree with a nonzero coefficient in mu(w) - 1, i.e. the largest k
/// with w in the k-th lower central series term. nullopt if nothing is
/// nonzero through `ceiling`. Throws for the identity.
std::optional<int> lcs_depth(const FreeWord& w, int ceiling);

/// Uniformly random letters, reduced as they are appended. The number of
/// drawn letters is uniform in [0, max_length], so the reduced result is no
/// longer than max_length. Deterministic given the engine state.
FreeWord random_word(int rank, int max_length, std::mt19937_64& rng);

/// Every reduced word of length <= max_length, shortest first.
std::vector<FreeWord> all_reduced_words(int rank, int max_length);

inline std::ostream& operator<<(std::ostream& os, const FreeWord& w) { return os << w.to_string(); }

}  // namespace holord
