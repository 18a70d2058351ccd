#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace holord {

using Rational = mpq_class;

/// Raised for precondition violations across the library (rank mismatch,
/// out-of-range generators, non-invertible series, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Verdict { Less, Equal, Greater };

constexpr Verdict flip(Verdict v) {
  switch (v) {
    case Verdict::Less: return Verdict::Greater;
    case Verdict::Greater: return Verdict::Less;
    default: return Verdict::Equal;
  }
}

std::string_view to_string(Verdict v);
/// "<", "=" or ">".
std::string_view symbol(Verdict v);

/// A word X_{i1}...X_{ik} in the non-commuting variables X_1..X_n. The empty
/// word is the unit monomial 1. Indices are 1-based.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> indices);
  Monomial(std::initializer_list<int> indices) : Monomial(std::vector<int>(indices)) {}

  static Monomial unit() { return {}; }
  static Monomial generator(int i) { return Monomial(std::vector<int>{i}); }

  int degree() const { return static_cast<int>(idx_.size()); }
  std::span<const int> indices() const { return idx_; }
  int max_index() const;

  Monomial operator*(const Monomial& rhs) const;

  bool operator==(const Monomial&) const = default;

  /// "1" for the unit, otherwise "X1X2X1".
  std::string to_string() const;
  /// Inverse of to_string(). Accepts "1", "" or a run of "X<digits>" tokens.
  static Monomial parse(std::string_view text);

 private:
  std::vector<int> idx_;
};

/// Degree first; within a degree the lexicographically bigger index sequence
/// is the bigger monomial (so X1 < X2 and X1X2 < X2X1).
struct DegLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// DegLex comparison of monomials over rank `rank`. Throws if either monomial
/// uses an index outside 1..rank.
Verdict deglex_compare(const Monomial& a, const Monomial& b, int rank);

/// All monomials of exactly degree d over rank n, in DegLex order.
std::vector<Monomial> monomials_of_degree(int rank, int degree);
/// All monomials of degree 0..max_degree over rank n, in DegLex order.
std::vector<Monomial> monomials_up_to(int rank, int max_degree);

/// Element of Q<<X_1..X_n>> / (degree > N). Stored sparsely with zero
/// coefficients removed, so structural equality is algebraic equality.
/// Values are immutable once constructed.
class TruncSeries {
 public:
  using Terms = std::map<Monomial, Rational, DegLexLess>;

  /// The zero series.
  TruncSeries(int rank, int trunc);
  /// Drops zero coefficients and monomials of degree > trunc.
  TruncSeries(int rank, int trunc, Terms terms);

  static TruncSeries one(int rank, int trunc);
  static TruncSeries constant(int rank, int trunc, const Rational& c);
  /// The series X_i.
  static TruncSeries variable(int rank, int trunc, int i);

  int rank() const { return rank_; }
  int trunc() const { return trunc_; }
  const Terms& terms() const { return terms_; }

  /// Coefficient extraction; zero for absent monomials.
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial::unit()); }
  bool is_zero() const { return terms_.empty(); }

  /// Smallest degree carrying a nonzero coefficient, if any.
  std::optional<int> lowest_degree() const;
  /// The homogeneous component of degree d, at the same truncation.
  TruncSeries degree_part(int d) const;
  /// Re-truncate at a smaller (or equal) degree.
  TruncSeries truncated(int trunc) const;

  TruncSeries operator-() const;
  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const Rational& c, const TruncSeries& a);

  bool operator==(const TruncSeries& other) const {
    return rank_ == other.rank_ && trunc_ == other.trunc_ && terms_ == other.terms_;
  }

  /// Human-readable form, e.g. "1 + X1X2 - X2X1" or "1 - 1/2 X1X1".
  std::string to_string() const;

 private:
  int rank_;
  int trunc_;
  Terms terms_;
};

TruncSeries mul(const TruncSeries& a, const TruncSeries& b);
/// Requires constant term 1; sums (1 - a)^k for k <= trunc.
TruncSeries inverse(const TruncSeries& a);
/// Requires zero constant term.
TruncSeries exp(const TruncSeries& a);
/// Requires constant term 1.
TruncSeries log(const TruncSeries& a);

/// Whether two series are known to be the complete values being compared, or
/// only truncations of longer expansions.
enum class Exactness { Exact, Truncated };

/// Result of a lexicographic scan. An empty verdict means "undetermined":
/// the truncations agree but the full expansions may not.
struct SeriesComparison {
  std::optional<Verdict> verdict;
  std::optional<Monomial> deciding;
  Rational lhs;
  Rational rhs;
};

/// Scans monomials in DegLex order and decides at the first monomial whose
/// coefficients differ.
SeriesComparison series_compare(const TruncSeries& a, const TruncSeries& b,
                                Exactness exactness = Exactness::Exact);

inline std::ostream& operator<<(std::ostream& os, Verdict v) { return os << to_string(v); }
inline std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const TruncSeries& s) { return os << s.to_string(); }

}  // namespace holord
