#include "holord/chen.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace holord {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
  double value = 0;
  double error = 0;
  double l1 = 0;
};

// Bisects until the Kronrod/Gauss difference on every panel is within the
// panel's share of `abs_tol` or at rounding level.
template <class F>
Panel adaptive_kronrod(const F& f, double a, double b, double abs_tol, int depth) {
  Panel p;
  p.value = Kronrod::integrate(f, a, b, 0, 0.0, &p.error, &p.l1);
  if (p.error <= std::max(abs_tol, 64 * kEps * p.l1) || depth <= 0) return p;
  const double mid = 0.5 * (a + b);
  const Panel left = adaptive_kronrod(f, a, mid, 0.5 * abs_tol, depth - 1);
  const Panel right = adaptive_kronrod(f, mid, b, 0.5 * abs_tol, depth - 1);
  return {left.value + right.value, left.error + right.error, left.l1 + right.l1};
}

void check_segment(int rank, const LoopSegment& s) {
  if (s.form < 1 || s.form > rank) throw Error("loop segment form index out of range");
  if (s.sign != 1 && s.sign != -1) throw Error("loop segment sign must be +1 or -1");
  if (!(s.start >= 0.0 && s.start < s.end && s.end <= 1.0)) {
    throw Error("loop segment support must be a nonempty subinterval of [0, 1]");
  }
}

double segment_density(const LoopSegment& s, double t) {
  if (t < s.start || t > s.end) return 0.0;
  const double len = s.end - s.start;
  return s.sign * bump_profile((t - s.start) / len) / len;
}

// Cascade state for one monomial on one segment. F_m on the segment equals
// start_value[m] + partial(m, t).
class SegmentCascade {
 public:
  SegmentCascade(const LoopSegment& seg, std::span<const int> indices,
                 const std::vector<double>& start_value, const std::vector<double>& start_error,
                 const QuadratureSettings& settings)
      : seg_(seg), idx_(indices), start_(start_value), start_err_(start_error), cfg_(settings) {}

  // int_{seg.start}^{t} alpha_{i_m}(u) F_{m-1}(u) du, m >= 1.
  Estimate partial(int m, double t) const {
    if (idx_[static_cast<size_t>(m - 1)] != seg_.form || t <= seg_.start) return {};
    const double upper = std::min(t, seg_.end);
    double inner_err = start_err_[static_cast<size_t>(m - 1)];
    auto integrand = [&](double u) {
      double f_prev = start_[static_cast<size_t>(m - 1)];
      if (m >= 2) {
        const Estimate inner = partial(m - 1, u);
        f_prev += inner.value;
        inner_err = std::max(inner_err, start_err_[static_cast<size_t>(m - 1)] + inner.error);
      }
      return segment_density(seg_, u) * f_prev;
    };
    // The densities have unit mass per segment, so the tolerance is absolute.
    const Panel p = adaptive_kronrod(integrand, seg_.start, upper, cfg_.tolerance, cfg_.max_depth);
    const double value = p.value;
    const double quad_err = p.error;
    const double l1 = p.l1;
    if (!std::isfinite(value) || quad_err > std::max(cfg_.tolerance, 1e3 * kEps * l1)) {
      throw Error("iterated_integral: quadrature did not converge (error estimate " +
                  std::to_string(quad_err) + ")");
    }
    // |alpha| has unit mass on the segment, so inner errors pass through with
    // weight <= 1; the last term covers rounding in the rule itself.
    return {value, quad_err + inner_err + 32 * kEps * std::max(l1, std::abs(value))};
  }

 private:
  const LoopSegment& seg_;
  std::span<const int> idx_;
  const std::vector<double>& start_;
  const std::vector<double>& start_err_;
  const QuadratureSettings& cfg_;
};

}  // namespace

double bump_profile(double s) {
  if (s < 0.0 || s > 1.0) return 0.0;
  const double v = s * (1.0 - s);
  return 30.0 * v * v;
}

LoopModel::LoopModel(int rank) : rank_(rank) {
  if (rank < 1) throw Error("loop model rank must be positive");
}

LoopModel::LoopModel(int rank, std::vector<LoopSegment> segments) : LoopModel(rank) {
  for (size_t k = 0; k < segments.size(); ++k) {
    check_segment(rank, segments[k]);
    if (k > 0 && segments[k].start < segments[k - 1].end) {
      throw Error("loop segments must be disjoint and in order");
    }
  }
  segments_ = std::move(segments);
}

LoopModel LoopModel::from_word(const FreeWord& w) {
  std::vector<LoopSegment> segs;
  const double len = w.length();
  for (int k = 0; k < w.length(); ++k) {
    const Letter& l = w.letters()[static_cast<size_t>(k)];
    segs.push_back({l.gen, l.sign, k / len, (k + 1) / len});
  }
  if (!segs.empty()) segs.back().end = 1.0;
  return LoopModel(w.rank(), std::move(segs));
}

double LoopModel::density(int form, double t) const {
  double total = 0;
  for (const auto& s : segments_) {
    if (s.form == form) total += segment_density(s, t);
  }
  return total;
}

LoopModel concat(const LoopModel& a, const LoopModel& b) {
  if (a.rank() != b.rank()) throw Error("loop concat: rank mismatch");
  std::vector<LoopSegment> segs;
  for (auto s : a.segments()) {
    s.start *= 0.5;
    s.end *= 0.5;
    segs.push_back(s);
  }
  for (auto s : b.segments()) {
    s.start = 0.5 + 0.5 * s.start;
    s.end = 0.5 + 0.5 * s.end;
    segs.push_back(s);
  }
  return LoopModel(a.rank(), std::move(segs));
}

LoopModel reverse(const LoopModel& a) {
  std::vector<LoopSegment> segs;
  for (auto it = a.segments().rbegin(); it != a.segments().rend(); ++it) {
    // The bump is symmetric, so reflecting the support is enough.
    segs.push_back({it->form, -it->sign, 1.0 - it->end, 1.0 - it->start});
  }
  return LoopModel(a.rank(), std::move(segs));
}

Estimate iterated_integral(const LoopModel& loop, std::span<const int> indices,
                           const QuadratureSettings& settings) {
  if (indices.empty()) throw Error("iterated_integral needs at least one index");
  for (int i : indices) {
    if (i < 1 || i > loop.rank()) throw Error("iterated_integral: index out of range");
  }
  const int q = static_cast<int>(indices.size());
  // Values of F_0..F_q at the current time; F_0 = 1.
  std::vector<double> value(static_cast<size_t>(q + 1), 0.0);
  std::vector<double> error(static_cast<size_t>(q + 1), 0.0);
  value[0] = 1.0;
  for (const auto& seg : loop.segments()) {
    const SegmentCascade cascade(seg, indices, value, error, settings);
    std::vector<double> next_value = value;
    std::vector<double> next_error = error;
    for (int m = 1; m <= q; ++m) {
      const Estimate inc = cascade.partial(m, seg.end);
      next_value[static_cast<size_t>(m)] += inc.value;
      next_error[static_cast<size_t>(m)] += inc.error;
    }
    value = std::move(next_value);
    error = std::move(next_error);
  }
  return {value[static_cast<size_t>(q)], error[static_cast<size_t>(q)]};
}

HolonomySeries::HolonomySeries(int rank, int degree, Coefficients coeffs)
    : rank_(rank), degree_(degree), coeffs_(std::move(coeffs)) {
  auto it = coeffs_.find(Monomial::unit());
  if (it == coeffs_.end() || it->second.value != 1.0 || it->second.error != 0.0) {
    throw Error("holonomy series must have constant term exactly 1");
  }
}

const Estimate& HolonomySeries::coefficient(const Monomial& m) const {
  auto it = coeffs_.find(m);
  if (it == coeffs_.end()) throw Error("monomial " + m.to_string() + " outside holonomy series");
  return it->second;
}

HolonomySeries holonomy_series(const LoopModel& loop, int degree, const HolonomyOptions& options) {
  if (degree < 1) throw Error("holonomy_series: degree must be >= 1");
  if (degree > options.max_degree) {
    throw Error("holonomy_series: degree " + std::to_string(degree) + " exceeds the limit " +
                std::to_string(options.max_degree));
  }
  HolonomySeries::Coefficients coeffs;
  coeffs.emplace(Monomial::unit(), Estimate{1.0, 0.0});
  for (int d = 1; d <= degree; ++d) {
    for (auto& m : monomials_of_degree(loop.rank(), d)) {
      Estimate e = iterated_integral(loop, m.indices(), options.quadrature);
      coeffs.emplace(std::move(m), e);
    }
  }
  return HolonomySeries(loop.rank(), degree, std::move(coeffs));
}

HolonomySeries product(const HolonomySeries& a, const HolonomySeries& b) {
  if (a.rank() != b.rank() || a.degree() != b.degree()) {
    throw Error("holonomy product: rank or degree mismatch");
  }
  HolonomySeries::Coefficients out;
  for (const auto& [m, unused] : a.coefficients()) {
    const auto idx = m.indices();
    Estimate acc;
    for (size_t split = 0; split <= idx.size(); ++split) {
      const Monomial left(std::vector<int>(idx.begin(), idx.begin() + static_cast<long>(split)));
      const Monomial right(std::vector<int>(idx.begin() + static_cast<long>(split), idx.end()));
      const Estimate& x = a.coefficient(left);
      const Estimate& y = b.coefficient(right);
      acc.value += x.value * y.value;
      acc.error += std::abs(x.value) * y.error + x.error * std::abs(y.value) + x.error * y.error;
    }
    if (m.degree() == 0) acc = {1.0, 0.0};
    out.emplace(m, acc);
  }
  return HolonomySeries(a.rank(), a.degree(), std::move(out));
}

HolonomyComparison holonomy_compare(const FreeWord& a, const FreeWord& b, int degree,
                                    const HolonomyOptions& options) {
  if (a.rank() != b.rank()) throw Error("holonomy_compare: rank mismatch");
  if ((a * invert(b)).is_identity()) return {Verdict::Equal, std::nullopt, 0, 0, 0};
  const HolonomySeries ha = holonomy_series(LoopModel::from_word(a), degree, options);
  const HolonomySeries hb = holonomy_series(LoopModel::from_word(b), degree, options);
  for (const auto& [m, ea] : ha.coefficients()) {
    const Estimate& eb = hb.coefficient(m);
    const double threshold = ea.error + eb.error + options.margin;
    if (std::abs(ea.value - eb.value) > threshold) {
      return {ea.value < eb.value ? Verdict::Less : Verdict::Greater, m, ea.value, eb.value,
              threshold};
    }
  }
  return {};
}

}  // namespace holord
