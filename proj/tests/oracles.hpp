#pragma once

// Reference computations used only by the tests. They share no code with the
// library beyond the basic word/series containers.

#include <gmpxx.h>

#include <cmath>
#include <functional>
#include <map>
#include <vector>

#include "holord/freegroup.hpp"
#include "holord/series.hpp"

namespace oracle {

using Naive = std::map<std::vector<int>, mpq_class>;

inline Naive naive_from(const holord::TruncSeries& s) {
  Naive out;
  for (const auto& [m, c] : s.terms()) out[std::vector<int>(m.indices().begin(), m.indices().end())] = c;
  return out;
}

inline holord::TruncSeries naive_to(const Naive& n, int rank, int trunc) {
  holord::TruncSeries::Terms t;
  for (const auto& [k, c] : n) {
    if (static_cast<int>(k.size()) <= trunc && c != 0) t[holord::Monomial(k)] = c;
  }
  return holord::TruncSeries(rank, trunc, t);
}

/// Schoolbook product of two coefficient maps, truncated at `trunc`.
inline Naive naive_mul(const Naive& a, const Naive& b, int trunc) {
  Naive out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      if (static_cast<int>(ka.size() + kb.size()) > trunc) continue;
      std::vector<int> k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      out[k] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// Coefficient of X_I in the Magnus expansion of a word, counted directly:
/// each letter x_g contributes nothing or one X_g, each x_g^-1 contributes
/// nothing or a run (-X_g)^k.
inline mpq_class magnus_coefficient(const std::vector<holord::Letter>& word, const std::vector<int>& I) {
  const size_t L = word.size();
  const size_t n = I.size();
  std::vector<std::vector<mpq_class>> f(L + 1, std::vector<mpq_class>(n + 1, 0));
  f[L][n] = 1;
  for (size_t p = L; p-- > 0;) {
    const auto& l = word[p];
    for (size_t q = 0; q <= n; ++q) {
      mpq_class v = f[p + 1][q];
      if (l.sign > 0) {
        if (q < n && I[q] == l.gen) v += f[p + 1][q + 1];
      } else {
        int s = -1;
        for (size_t k = q; k < n && I[k] == l.gen; ++k, s = -s) v += s * f[p + 1][k + 1];
      }
      f[p][q] = v;
    }
  }
  return f[0][0];
}

inline std::vector<holord::Letter> letters_of(const holord::FreeWord& w) {
  return {w.letters().begin(), w.letters().end()};
}

/// Full expansion via magnus_coefficient over all monomials up to `trunc`.
inline holord::TruncSeries magnus_series(const holord::FreeWord& w, int trunc) {
  holord::TruncSeries::Terms t;
  const auto letters = letters_of(w);
  std::vector<int> I;
  std::function<void()> rec = [&] {
    const mpq_class c = magnus_coefficient(letters, I);
    if (c != 0) t[holord::Monomial(I)] = c;
    if (static_cast<int>(I.size()) == trunc) return;
    for (int g = 1; g <= w.rank(); ++g) {
      I.push_back(g);
      rec();
      I.pop_back();
    }
  };
  rec();
  return holord::TruncSeries(w.rank(), trunc, t);
}

/// Degree first, then plain lexicographic order of index sequences.
inline int deglex_sign(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  if (a == b) return 0;
  return a < b ? -1 : 1;
}

/// Magnus ordering by brute force: expand both words far enough with the
/// counting oracle and scan all monomials in (degree, lex) order.
inline int magnus_sign(const holord::FreeWord& a, const holord::FreeWord& b) {
  if (a == b) return 0;
  const auto la = letters_of(a);
  const auto lb = letters_of(b);
  const int ceiling = a.length() + b.length();
  for (int d = 1; d <= ceiling; ++d) {
    std::vector<int> I(static_cast<size_t>(d), 1);
    while (true) {
      const mpq_class ca = magnus_coefficient(la, I);
      const mpq_class cb = magnus_coefficient(lb, I);
      if (ca != cb) return ca < cb ? -1 : 1;
      int k = d - 1;
      while (k >= 0 && I[static_cast<size_t>(k)] == a.rank()) I[static_cast<size_t>(k--)] = 1;
      if (k < 0) break;
      ++I[static_cast<size_t>(k)];
    }
  }
  return 2;  // not separated
}

/// Unit-mass bump density of one segment.
inline double bump_density(double t, double a, double b) {
  if (t < a || t > b) return 0.0;
  const double s = (t - a) / (b - a);
  return 30.0 * s * s * (1 - s) * (1 - s) / (b - a);
}

/// Simplex integral of a product of densities by the nested midpoint rule
/// on an m-point grid. Exact diagonal handling is skipped, so accuracy is
/// O(1/m) per level; fine as a sanity oracle.
inline double nested_midpoint(const std::vector<std::function<double(double)>>& alpha, int m) {
  const double h = 1.0 / m;
  std::vector<double> F(static_cast<size_t>(m) + 1, 1.0);
  for (const auto& a : alpha) {
    std::vector<double> G(static_cast<size_t>(m) + 1, 0.0);
    for (int k = 0; k < m; ++k) {
      const double t = (k + 0.5) * h;
      const double prev = 0.5 * (F[static_cast<size_t>(k)] + F[static_cast<size_t>(k) + 1]);
      G[static_cast<size_t>(k) + 1] = G[static_cast<size_t>(k)] + a(t) * prev * h;
    }
    F = std::move(G);
  }
  return F.back();
}

}  // namespace oracle
