#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "holord/freegroup.hpp"
#include "holord/series.hpp"

namespace holord {

/// One letter of a loop in the punctured disc: on [start, end] the pullback
/// of omega_form is sign * (unit-mass bump) dt and every other form pulls
/// back to zero.
struct LoopSegment {
  int form;
  int sign;
  double start;
  double end;
};

/// Piecewise pullback-density model of a loop. Segments are disjoint,
/// ordered, and lie in [0, 1].
class LoopModel {
 public:
  /// The constant loop.
  explicit LoopModel(int rank);
  LoopModel(int rank, std::vector<LoopSegment> segments);

  /// Letter k of an L-letter word occupies [k/L, (k+1)/L].
  static LoopModel from_word(const FreeWord& w);

  int rank() const { return rank_; }
  const std::vector<LoopSegment>& segments() const { return segments_; }

  /// alpha_form(t).
  double density(int form, double t) const;

 private:
  int rank_;
  std::vector<LoopSegment> segments_;
};

/// Path composition, first loop on [0, 1/2] and second on [1/2, 1].
LoopModel concat(const LoopModel& a, const LoopModel& b);
/// Time reversal; densities change sign.
LoopModel reverse(const LoopModel& a);

/// Unit-mass bump 30 s^2 (1 - s)^2 on [0, 1].
double bump_profile(double s);

struct QuadratureSettings {
  /// Absolute error target for each 1-D adaptive pass.
  double tolerance = 1e-10;
  int max_depth = 20;
};

struct Estimate {
  double value = 0;
  double error = 0;
};

/// Simplex integral of alpha_{i1}(t1) ... alpha_{iq}(tq) over
/// 0 <= t1 <= ... <= tq <= 1, evaluated as the cascade
/// F_1 = int alpha_{i1}, F_m = int alpha_{im} F_{m-1}. Throws if a 1-D pass
/// fails to reach the tolerance.
Estimate iterated_integral(const LoopModel& loop, std::span<const int> indices,
                           const QuadratureSettings& settings = {});

struct HolonomyOptions {
  QuadratureSettings quadrature;
  /// Extra margin a coefficient difference must clear to decide a comparison.
  double margin = 1e-6;
  int max_degree = 4;
};

/// Truncated holonomy 1 + sum int omega...omega with floating-point
/// coefficients and per-coefficient error bounds. Every monomial through
/// `degree` is present; the constant term is exactly 1.
class HolonomySeries {
 public:
  using Coefficients = std::map<Monomial, Estimate, DegLexLess>;

  HolonomySeries(int rank, int degree, Coefficients coeffs);

  int rank() const { return rank_; }
  int degree() const { return degree_; }
  const Coefficients& coefficients() const { return coeffs_; }
  const Estimate& coefficient(const Monomial& m) const;

 private:
  int rank_;
  int degree_;
  Coefficients coeffs_;
};

HolonomySeries holonomy_series(const LoopModel& loop, int degree,
                               const HolonomyOptions& options = {});

/// Truncated product with first-order error propagation.
HolonomySeries product(const HolonomySeries& a, const HolonomySeries& b);

struct HolonomyComparison {
  /// Empty means indeterminate through the requested degree.
  std::optional<Verdict> verdict;
  std::optional<Monomial> deciding;
  double lhs = 0;
  double rhs = 0;
  /// error_a + error_b + margin at the deciding monomial.
  double threshold = 0;
};

/// Holonomy ordering of F_n on the punctured-disc model with the DegLex
/// monomial basis. Equal words are detected by free reduction first.
HolonomyComparison holonomy_compare(const FreeWord& a, const FreeWord& b, int degree,
                                    const HolonomyOptions& options = {});

}  // namespace holord
