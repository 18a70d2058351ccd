#include "holord/series.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace holord {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Less: return "less";
    case Verdict::Equal: return "equal";
    case Verdict::Greater: return "greater";
  }
  return "?";
}

std::string_view symbol(Verdict v) {
  switch (v) {
    case Verdict::Less: return "<";
    case Verdict::Equal: return "=";
    case Verdict::Greater: return ">";
  }
  return "?";
}

// --- Monomial -------------------------------------------------------------

Monomial::Monomial(std::vector<int> indices) : idx_(std::move(indices)) {
  for (int i : idx_) {
    if (i < 1) throw Error("monomial index must be >= 1, got " + std::to_string(i));
  }
}

int Monomial::max_index() const {
  return idx_.empty() ? 0 : *std::max_element(idx_.begin(), idx_.end());
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial out;
  out.idx_.reserve(idx_.size() + rhs.idx_.size());
  out.idx_ = idx_;
  out.idx_.insert(out.idx_.end(), rhs.idx_.begin(), rhs.idx_.end());
  return out;
}

std::string Monomial::to_string() const {
  if (idx_.empty()) return "1";
  std::string s;
  for (int i : idx_) {
    s += 'X';
    s += std::to_string(i);
  }
  return s;
}

Monomial Monomial::parse(std::string_view text) {
  std::vector<int> idx;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos < text.size() && text[pos] == '1') {
    ++pos;
    skip_ws();
    if (pos != text.size()) throw Error("malformed monomial '" + std::string(text) + "'");
    return {};
  }
  while (pos < text.size()) {
    if (text[pos] != 'X' && text[pos] != 'x') {
      throw Error("malformed monomial '" + std::string(text) + "' at position " +
                  std::to_string(pos));
    }
    ++pos;
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) {
      throw Error("missing index in monomial '" + std::string(text) + "' at position " +
                  std::to_string(pos));
    }
    idx.push_back(std::stoi(std::string(text.substr(start, pos - start))));
    skip_ws();
  }
  return Monomial(std::move(idx));
}

bool DegLexLess::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  auto ai = a.indices();
  auto bi = b.indices();
  return std::lexicographical_compare(ai.begin(), ai.end(), bi.begin(), bi.end());
}

Verdict deglex_compare(const Monomial& a, const Monomial& b, int rank) {
  if (a.max_index() > rank || b.max_index() > rank) {
    throw Error("rank mismatch: monomial index exceeds rank " + std::to_string(rank));
  }
  DegLexLess less;
  if (less(a, b)) return Verdict::Less;
  if (less(b, a)) return Verdict::Greater;
  return Verdict::Equal;
}

std::vector<Monomial> monomials_of_degree(int rank, int degree) {
  if (rank < 1 || degree < 0) throw Error("monomials_of_degree: invalid rank or degree");
  std::vector<Monomial> out;
  std::vector<int> idx(static_cast<size_t>(degree), 1);
  // Odometer with the last position fastest gives lexicographic order.
  while (true) {
    out.emplace_back(idx);
    int pos = degree - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == rank) {
      idx[static_cast<size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++idx[static_cast<size_t>(pos)];
  }
  return out;
}

std::vector<Monomial> monomials_up_to(int rank, int max_degree) {
  std::vector<Monomial> out;
  for (int d = 0; d <= max_degree; ++d) {
    auto part = monomials_of_degree(rank, d);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

// --- TruncSeries ----------------------------------------------------------

namespace {

void check_compatible(const TruncSeries& a, const TruncSeries& b, const char* op) {
  if (a.rank() != b.rank()) {
    throw Error(std::string(op) + ": rank mismatch (" + std::to_string(a.rank()) + " vs " +
                std::to_string(b.rank()) + ")");
  }
  if (a.trunc() != b.trunc()) {
    throw Error(std::string(op) + ": truncation mismatch (" + std::to_string(a.trunc()) +
                " vs " + std::to_string(b.trunc()) + ")");
  }
}

}  // namespace

TruncSeries::TruncSeries(int rank, int trunc) : rank_(rank), trunc_(trunc) {
  if (rank < 1) throw Error("series rank must be positive");
  if (trunc < 0) throw Error("truncation degree must be nonnegative");
}

TruncSeries::TruncSeries(int rank, int trunc, Terms terms) : TruncSeries(rank, trunc) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.max_index() > rank) {
      throw Error("monomial " + it->first.to_string() + " exceeds rank " +
                  std::to_string(rank));
    }
    it->second.canonicalize();
    if (it->second == 0 || it->first.degree() > trunc) {
      it = terms.erase(it);
    } else {
      ++it;
    }
  }
  terms_ = std::move(terms);
}

TruncSeries TruncSeries::one(int rank, int trunc) { return constant(rank, trunc, 1); }

TruncSeries TruncSeries::constant(int rank, int trunc, const Rational& c) {
  Terms t;
  t.emplace(Monomial::unit(), c);
  return TruncSeries(rank, trunc, std::move(t));
}

TruncSeries TruncSeries::variable(int rank, int trunc, int i) {
  if (i < 1 || i > rank) throw Error("variable index out of range");
  Terms t;
  t.emplace(Monomial::generator(i), 1);
  return TruncSeries(rank, trunc, std::move(t));
}

Rational TruncSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> TruncSeries::lowest_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.degree();
}

TruncSeries TruncSeries::degree_part(int d) const {
  Terms t;
  for (const auto& [m, c] : terms_) {
    if (m.degree() == d) t.emplace(m, c);
  }
  return TruncSeries(rank_, trunc_, std::move(t));
}

TruncSeries TruncSeries::truncated(int trunc) const {
  if (trunc > trunc_) throw Error("cannot raise truncation degree of a truncated series");
  return TruncSeries(rank_, trunc, terms_);
}

TruncSeries TruncSeries::operator-() const {
  Terms t = terms_;
  for (auto& [m, c] : t) c = -c;
  return TruncSeries(rank_, trunc_, std::move(t));
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  check_compatible(a, b, "add");
  TruncSeries::Terms t = a.terms_;
  for (const auto& [m, c] : b.terms_) t[m] += c;
  return TruncSeries(a.rank_, a.trunc_, std::move(t));
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  check_compatible(a, b, "mul");
  TruncSeries::Terms t;
  const int n = a.trunc_;
  for (const auto& [ma, ca] : a.terms_) {
    const int room = n - ma.degree();
    // Terms are sorted by degree, so stop once the product would overflow.
    for (const auto& [mb, cb] : b.terms_) {
      if (mb.degree() > room) break;
      t[ma * mb] += ca * cb;
    }
  }
  return TruncSeries(a.rank_, n, std::move(t));
}

TruncSeries operator*(const Rational& c, const TruncSeries& a) {
  if (c == 0) return TruncSeries(a.rank_, a.trunc_);
  TruncSeries::Terms t = a.terms_;
  for (auto& [m, v] : t) v *= c;
  return TruncSeries(a.rank_, a.trunc_, std::move(t));
}

std::string TruncSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.degree() == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << " ";
      os << m.to_string();
    }
  }
  return os.str();
}

TruncSeries mul(const TruncSeries& a, const TruncSeries& b) { return a * b; }

TruncSeries inverse(const TruncSeries& a) {
  if (a.constant_term() != 1) {
    throw Error("inverse: constant term must be 1, got " + a.constant_term().get_str());
  }
  const TruncSeries one = TruncSeries::one(a.rank(), a.trunc());
  const TruncSeries u = one - a;
  TruncSeries sum = one;
  TruncSeries power = one;
  for (int k = 1; k <= a.trunc(); ++k) {
    power = power * u;
    if (power.is_zero()) break;
    sum = sum + power;
  }
  return sum;
}

TruncSeries exp(const TruncSeries& a) {
  if (a.constant_term() != 0) {
    throw Error("exp: constant term must be 0, got " + a.constant_term().get_str());
  }
  TruncSeries sum = TruncSeries::one(a.rank(), a.trunc());
  TruncSeries term = sum;
  for (int k = 1; k <= a.trunc(); ++k) {
    term = Rational(1, k) * (term * a);
    if (term.is_zero()) break;
    sum = sum + term;
  }
  return sum;
}

TruncSeries log(const TruncSeries& a) {
  if (a.constant_term() != 1) {
    throw Error("log: constant term must be 1, got " + a.constant_term().get_str());
  }
  const TruncSeries u = a - TruncSeries::one(a.rank(), a.trunc());
  TruncSeries sum(a.rank(), a.trunc());
  TruncSeries power = TruncSeries::one(a.rank(), a.trunc());
  for (int k = 1; k <= a.trunc(); ++k) {
    power = power * u;
    if (power.is_zero()) break;
    sum = sum + Rational(k % 2 == 1 ? 1 : -1, k) * power;
  }
  return sum;
}

SeriesComparison series_compare(const TruncSeries& a, const TruncSeries& b,
                                Exactness exactness) {
  check_compatible(a, b, "series_compare");
  DegLexLess less;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  const auto ea = a.terms().end();
  const auto eb = b.terms().end();
  // Merge walk over the union of supports; absent monomials carry 0.
  while (ia != ea || ib != eb) {
    SeriesComparison out;
    if (ib == eb || (ia != ea && less(ia->first, ib->first))) {
      out.deciding = ia->first;
      out.lhs = ia->second;
      out.rhs = 0;
      ++ia;
    } else if (ia == ea || less(ib->first, ia->first)) {
      out.deciding = ib->first;
      out.lhs = 0;
      out.rhs = ib->second;
      ++ib;
    } else {
      if (ia->second == ib->second) {
        ++ia;
        ++ib;
        continue;
      }
      out.deciding = ia->first;
      out.lhs = ia->second;
      out.rhs = ib->second;
      ++ia;
      ++ib;
    }
    out.verdict = out.lhs < out.rhs ? Verdict::Less : Verdict::Greater;
    return out;
  }
  SeriesComparison out;
  if (exactness == Exactness::Exact) out.verdict = Verdict::Equal;
  return out;
}

}  // namespace holord
