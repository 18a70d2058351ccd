#include "holord/braid.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <mutex>

namespace holord {

namespace {

void check_letter(int strands, const BraidLetter& l) {
  if (l.i < 1 || l.j > strands || l.i >= l.j) {
    throw Error("invalid generator A" + std::to_string(l.i) + "," + std::to_string(l.j) +
                " for " + std::to_string(strands) + " strands");
  }
  if (l.sign != 1 && l.sign != -1) throw Error("braid letter sign must be +1 or -1");
}

void check_same_strands(const PureBraidWord& a, const PureBraidWord& b) {
  if (a.strands() != b.strands()) {
    throw Error("strand mismatch: " + std::to_string(a.strands()) + " vs " +
                std::to_string(b.strands()));
  }
}

// A_ij = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1, as (k, sign) pairs.
std::vector<std::pair<int, int>> half_twists_of(const BraidLetter& l) {
  std::vector<std::pair<int, int>> out;
  for (int k = l.j - 1; k > l.i; --k) out.emplace_back(k, 1);
  out.emplace_back(l.i, l.sign);
  out.emplace_back(l.i, l.sign);
  for (int k = l.i + 1; k < l.j; ++k) out.emplace_back(k, -1);
  return out;
}

std::string letter_string(const BraidLetter& l, int strands) {
  std::string s = "A";
  if (strands >= 10) {
    s += "(" + std::to_string(l.i) + "," + std::to_string(l.j) + ")";
  } else {
    s += std::to_string(l.i) + std::to_string(l.j);
  }
  if (l.sign < 0) s += "^-1";
  return s;
}

// How the conjugator W of artin(w)(x_n) = W x_n W^-1, taken modulo x_n, maps
// to fiber coordinates. Fixed by calibration against A_{in} -> y_i.
enum class FiberConvention { Plain, Reversed, Inverted, ReversedInverted };

FreeWord reversed(const FreeWord& w) {
  std::vector<Letter> letters(w.letters().rbegin(), w.letters().rend());
  return FreeWord(w.rank(), letters);
}

FreeWord apply_convention(FiberConvention c, const FreeWord& w) {
  switch (c) {
    case FiberConvention::Plain: return w;
    case FiberConvention::Reversed: return reversed(w);
    case FiberConvention::Inverted: return invert(w);
    case FiberConvention::ReversedInverted: return invert(reversed(w));
  }
  return w;
}

// Conjugator of x_n in artin(w)(x_n), with x_n letters deleted.
FreeWord raw_fiber_conjugator(const PureBraidWord& w) {
  const int n = w.strands();
  const FreeWord img = artin_automorphism(w).image(n);
  const auto letters = img.letters();
  const size_t len = letters.size();
  const size_t mid = len / 2;
  bool ok = len % 2 == 1 && letters[mid] == Letter{n, 1};
  for (size_t k = 0; ok && k < mid; ++k) {
    const Letter& left = letters[k];
    const Letter& right = letters[len - 1 - k];
    ok = left.gen == right.gen && left.sign == -right.sign;
  }
  if (!ok) {
    throw Error("fiber_coordinates: image of x" + std::to_string(n) + " is not of the form W x" +
                std::to_string(n) + " W^-1 for " + w.to_string());
  }
  std::vector<Letter> kept;
  for (size_t k = 0; k < mid; ++k) {
    if (letters[k].gen != n) kept.push_back(letters[k]);
  }
  return FreeWord(n - 1, kept);
}

// Fiber coordinates for one strand count: the orientation convention and the
// inverse of the basis change y_i -> t_i = convention(conjugator(A_{in})).
struct FiberCalibration {
  FiberConvention convention;
  /// Image of x_k (k = 1..n-1) as a word in the y's.
  Automorphism x_to_y;
  /// y -> A^-1 y A on the fiber for each base letter A = A_rs^sign, s < n.
  std::map<std::pair<int, int>, std::array<Automorphism, 2>> conjugation;

  const Automorphism& conjugate_by(const BraidLetter& l) const {
    return conjugation.at({l.i, l.j})[l.sign > 0 ? 0 : 1];
  }
};

// Expresses a free basis `basis` of F_r in terms of symbols y_i <-> basis[i]
// by greedy length-reducing Nielsen moves; returns the substitution
// x_k -> word in y. Throws if the greedy reduction stalls.
Automorphism invert_basis(std::vector<FreeWord> basis) {
  const int r = static_cast<int>(basis.size());
  std::vector<FreeWord> track;
  for (int i = 1; i <= r; ++i) track.push_back(FreeWord::generator(r, i));
  auto done = [&] {
    return std::all_of(basis.begin(), basis.end(), [](const FreeWord& w) { return w.length() == 1; });
  };
  while (!done()) {
    bool moved = false;
    for (int i = 0; i < r && !moved; ++i) {
      for (int j = 0; j < r && !moved; ++j) {
        if (i == j) continue;
        for (int e : {1, -1}) {
          const FreeWord tj = e > 0 ? basis[j] : invert(basis[j]);
          const FreeWord yj = e > 0 ? track[j] : invert(track[j]);
          if (FreeWord cand = tj * basis[i]; cand.length() < basis[i].length()) {
            basis[i] = std::move(cand);
            track[i] = yj * track[i];
            moved = true;
            break;
          }
          if (FreeWord cand = basis[i] * tj; cand.length() < basis[i].length()) {
            basis[i] = std::move(cand);
            track[i] = track[i] * yj;
            moved = true;
            break;
          }
        }
      }
    }
    if (!moved) throw Error("fiber calibration: Nielsen reduction stalled");
  }
  std::vector<std::optional<FreeWord>> images(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) {
    const Letter l = basis[i].letters()[0];
    auto& slot = images[static_cast<size_t>(l.gen - 1)];
    if (slot) throw Error("fiber calibration: conjugators do not form a free basis");
    slot = l.sign > 0 ? track[i] : invert(track[i]);
  }
  std::vector<FreeWord> out;
  for (auto& img : images) {
    if (!img) throw Error("fiber calibration: conjugators do not form a free basis");
    out.push_back(std::move(*img));
  }
  return Automorphism(r, std::move(out));
}

FiberCalibration calibrate(int n) {
  std::vector<FreeWord> raw;
  for (int i = 1; i < n; ++i) raw.push_back(raw_fiber_conjugator(PureBraidWord::generator(n, i, n)));
  for (auto c : {FiberConvention::Plain, FiberConvention::Reversed, FiberConvention::Inverted,
                 FiberConvention::ReversedInverted}) {
    std::vector<FreeWord> basis;
    for (const auto& w : raw) basis.push_back(apply_convention(c, w));
    FiberCalibration cal{c, invert_basis(basis), {}};
    auto coords = [&](const PureBraidWord& w) {
      return cal.x_to_y.apply(apply_convention(c, raw_fiber_conjugator(w)));
    };
    // The correspondence must be a homomorphism on the kernel, not an anti-one.
    bool ok = true;
    for (int i = 1; i < n && ok; ++i) {
      for (int j = 1; j < n && ok; ++j) {
        if (i == j) continue;
        const FreeWord expected = FreeWord::generator(n - 1, i) * FreeWord::generator(n - 1, j);
        ok = coords(PureBraidWord::generator(n, i, n) * PureBraidWord::generator(n, j, n)) == expected;
      }
    }
    if (!ok) continue;
    for (int s = 1; s < n; ++s) {
      for (int r = 1; r < s; ++r) {
        std::array<std::vector<FreeWord>, 2> images;
        for (int e : {1, -1}) {
          const PureBraidWord a = PureBraidWord::generator(n, r, s, e);
          for (int i = 1; i < n; ++i) {
            images[e > 0 ? 0 : 1].push_back(coords(invert(a) * PureBraidWord::generator(n, i, n) * a));
          }
        }
        cal.conjugation.emplace(std::pair{r, s},
                                std::array{Automorphism(n - 1, std::move(images[0])),
                                           Automorphism(n - 1, std::move(images[1]))});
      }
    }
    return cal;
  }
  throw Error("fiber calibration failed for " + std::to_string(n) + " strands");
}

const FiberCalibration& fiber_calibration(int n) {
  static std::mutex mutex;
  static std::map<int, FiberCalibration> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, calibrate(n)).first;
  return it->second;
}

FreeWord fiber_coordinates_unchecked(const PureBraidWord& w) {
  const FiberCalibration& cal = fiber_calibration(w.strands());
  return cal.x_to_y.apply(apply_convention(cal.convention, raw_fiber_conjugator(w)));
}

}  // namespace

// --- words ------------------------------------------------------------------

PureBraidWord::PureBraidWord(int strands) : strands_(strands) {
  if (strands < 1) throw Error("pure braid group needs at least one strand");
}

PureBraidWord::PureBraidWord(int strands, std::vector<BraidLetter> letters)
    : PureBraidWord(strands) {
  for (const auto& l : letters) check_letter(strands, l);
  letters_ = std::move(letters);
}

PureBraidWord PureBraidWord::generator(int strands, int i, int j, int sign) {
  return PureBraidWord(strands, {BraidLetter{i, j, sign}});
}

std::string PureBraidWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (const auto& l : letters_) {
    if (!s.empty()) s += ' ';
    s += letter_string(l, strands_);
  }
  return s;
}

PureBraidWord concat(const PureBraidWord& a, const PureBraidWord& b) {
  check_same_strands(a, b);
  std::vector<BraidLetter> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return PureBraidWord(a.strands(), std::move(letters));
}

PureBraidWord invert(const PureBraidWord& a) {
  std::vector<BraidLetter> letters;
  letters.reserve(a.letters().size());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) {
    letters.push_back({it->i, it->j, -it->sign});
  }
  return PureBraidWord(a.strands(), std::move(letters));
}

int SingularBraid::singular_count() const {
  return static_cast<int>(std::count(singular.begin(), singular.end(), true));
}

namespace {

SingularBraid parse_braid_impl(std::string_view text, int strands, bool allow_marks) {
  if (strands < 1) throw Error("pure braid group needs at least one strand");
  std::vector<BraidLetter> letters;
  std::vector<bool> marks;
  size_t pos = 0;
  auto is_space = [&](size_t p) {
    return std::isspace(static_cast<unsigned char>(text[p])) != 0;
  };
  auto read_int = [&](size_t& p) -> int {
    const size_t start = p;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    if (start == p) throw ParseError("expected digits", start);
    return std::stoi(std::string(text.substr(start, p - start)));
  };
  while (pos < text.size()) {
    if (is_space(pos)) {
      ++pos;
      continue;
    }
    const size_t start = pos;
    if (text[pos] == '1' && (pos + 1 == text.size() || is_space(pos + 1))) {
      ++pos;
      continue;
    }
    bool singular = false;
    if (text[pos] == '*') {
      if (!allow_marks) throw ParseError("singular marker not allowed here", pos);
      singular = true;
      ++pos;
    }
    if (pos >= text.size() || (text[pos] != 'A' && text[pos] != 'a')) {
      throw ParseError("expected generator 'Aij'", pos);
    }
    ++pos;
    int i = 0;
    int j = 0;
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      i = read_int(pos);
      if (pos >= text.size() || text[pos] != ',') throw ParseError("expected ','", pos);
      ++pos;
      j = read_int(pos);
      if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
      ++pos;
    } else {
      if (pos + 2 > text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])) ||
          !std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
        throw ParseError("expected two strand digits", pos);
      }
      i = text[pos] - '0';
      j = text[pos + 1] - '0';
      pos += 2;
    }
    int exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      int sign = 1;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
      }
      exponent = sign * read_int(pos);
    }
    if (pos < text.size() && !is_space(pos)) {
      throw ParseError("unexpected character '" + std::string(1, text[pos]) + "'", pos);
    }
    if (i < 1 || j > strands || i >= j) {
      throw ParseError("generator A" + std::to_string(i) + "," + std::to_string(j) +
                           " invalid for " + std::to_string(strands) + " strands",
                       start);
    }
    if (singular && exponent != 1) {
      throw ParseError("singular letters must have exponent 1", start);
    }
    const int sign = exponent < 0 ? -1 : 1;
    for (int k = 0; k < std::abs(exponent); ++k) {
      letters.push_back({i, j, sign});
      marks.push_back(singular);
    }
  }
  return {PureBraidWord(strands, std::move(letters)), std::move(marks)};
}

}  // namespace

PureBraidWord parse_braid(std::string_view text, int strands) {
  return parse_braid_impl(text, strands, false).word;
}

SingularBraid parse_singular_braid(std::string_view text, int strands) {
  return parse_braid_impl(text, strands, true);
}

// --- Artin representation --------------------------------------------------

Automorphism::Automorphism(int rank) : rank_(rank) {
  images_.reserve(static_cast<size_t>(rank));
  for (int i = 1; i <= rank; ++i) images_.push_back(FreeWord::generator(rank, i));
}

Automorphism::Automorphism(int rank, std::vector<FreeWord> images)
    : rank_(rank), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != rank) throw Error("automorphism needs rank images");
  for (const auto& w : images_) {
    if (w.rank() != rank) throw Error("automorphism image has wrong rank");
  }
}

FreeWord Automorphism::apply(const FreeWord& w) const {
  if (w.rank() != rank_) throw Error("automorphism rank mismatch");
  std::vector<Letter> out;
  for (const Letter& l : w.letters()) {
    const FreeWord& img = image(l.gen);
    if (l.sign > 0) {
      out.insert(out.end(), img.letters().begin(), img.letters().end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) {
        out.push_back({it->gen, -it->sign});
      }
    }
  }
  return FreeWord(rank_, out);
}

Automorphism Automorphism::compose(const Automorphism& other) const {
  std::vector<FreeWord> images;
  images.reserve(other.images_.size());
  for (const auto& w : other.images_) images.push_back(apply(w));
  return Automorphism(rank_, std::move(images));
}

bool Automorphism::is_identity() const { return *this == Automorphism(rank_); }

Automorphism half_twist(int rank, int k, int sign) {
  if (k < 1 || k >= rank) throw Error("half twist index out of range");
  std::vector<FreeWord> images = Automorphism(rank).images();
  const FreeWord xk = FreeWord::generator(rank, k);
  const FreeWord xk1 = FreeWord::generator(rank, k + 1);
  if (sign > 0) {
    images[static_cast<size_t>(k - 1)] = xk * xk1 * invert(xk);
    images[static_cast<size_t>(k)] = xk;
  } else {
    images[static_cast<size_t>(k - 1)] = xk1;
    images[static_cast<size_t>(k)] = invert(xk1) * xk * xk1;
  }
  return Automorphism(rank, std::move(images));
}

Automorphism artin_automorphism(const PureBraidWord& w) {
  const int n = w.strands();
  std::vector<FreeWord> g = Automorphism(n).images();
  // g <- g o sigma_k^{+-1}, evaluated on the two affected generators.
  for (const auto& letter : w.letters()) {
    for (const auto& [k, sign] : half_twists_of(letter)) {
      FreeWord& gk = g[static_cast<size_t>(k - 1)];
      FreeWord& gk1 = g[static_cast<size_t>(k)];
      if (sign > 0) {
        FreeWord next_k = gk * gk1 * invert(gk);
        gk1 = std::move(gk);
        gk = std::move(next_k);
      } else {
        FreeWord next_k1 = invert(gk1) * gk * gk1;
        gk = gk1;
        gk1 = std::move(next_k1);
      }
    }
  }
  return Automorphism(n, std::move(g));
}

bool braid_equal(const PureBraidWord& a, const PureBraidWord& b) {
  check_same_strands(a, b);
  return artin_automorphism(a) == artin_automorphism(b);
}

// --- tower ---------------------------------------------------------------

PureBraidWord forget_strand(const PureBraidWord& w) {
  const int n = w.strands();
  if (n < 2) throw Error("forget_strand needs at least two strands");
  std::vector<BraidLetter> kept;
  for (const auto& l : w.letters()) {
    if (l.j < n) kept.push_back(l);
  }
  return PureBraidWord(n - 1, std::move(kept));
}

PureBraidWord section(const PureBraidWord& w) {
  return PureBraidWord(w.strands() + 1, w.letters());
}

FreeWord fiber_coordinates(const PureBraidWord& w) {
  const int n = w.strands();
  if (n < 2) throw Error("fiber_coordinates needs at least two strands");
  static std::once_flag tested;
  std::call_once(tested, [] { fiber_self_test(); });
  if (!artin_automorphism(forget_strand(w)).is_identity()) {
    throw Error("fiber_coordinates: " + w.to_string() + " is not in the kernel of forget_strand");
  }
  return fiber_coordinates_unchecked(w);
}

PureBraidWord fiber_inclusion(const FreeWord& f, int strands) {
  if (f.rank() != strands - 1) throw Error("fiber word rank must be strands - 1");
  std::vector<BraidLetter> letters;
  for (const Letter& l : f.letters()) letters.push_back({l.gen, strands, l.sign});
  return PureBraidWord(strands, std::move(letters));
}

void fiber_self_test(int max_strands) {
  for (int n = 2; n <= max_strands; ++n) {
    for (int i = 1; i < n; ++i) {
      const FreeWord yi = FreeWord::generator(n - 1, i);
      const FreeWord got = fiber_coordinates_unchecked(PureBraidWord::generator(n, i, n));
      if (got != yi) {
        throw Error("fiber self-test failed: A" + std::to_string(i) + std::to_string(n) +
                    " maps to " + got.to_string());
      }
      for (int j = 1; j < n; ++j) {
        const FreeWord expected = yi * FreeWord::generator(n - 1, j, -1);
        const FreeWord pair = fiber_coordinates_unchecked(fiber_inclusion(expected, n));
        if (pair != expected) {
          throw Error("fiber self-test failed on " + expected.to_string() + " for " +
                      std::to_string(n) + " strands");
        }
      }
    }
  }
}

CombedBraid comb(const PureBraidWord& w) {
  static std::once_flag tested;
  std::call_once(tested, [] { fiber_self_test(); });
  CombedBraid out{w.strands(), {}};
  out.factors.reserve(static_cast<size_t>(std::max(0, w.strands() - 1)));
  // Keep prefix = section(base) * fiber, pushing base letters to the left
  // through the conjugation action on the fiber.
  std::vector<BraidLetter> letters = w.letters();
  for (int n = w.strands(); n >= 2; --n) {
    const FiberCalibration& cal = fiber_calibration(n);
    std::vector<BraidLetter> base;
    FreeWord fiber(n - 1);
    for (const BraidLetter& l : letters) {
      if (l.j == n) {
        fiber = fiber * FreeWord::generator(n - 1, l.i, l.sign);
        continue;
      }
      base.push_back(l);
      fiber = cal.conjugate_by(l).apply(fiber);
    }
    out.factors.push_back(std::move(fiber));
    letters = std::move(base);
  }
  std::reverse(out.factors.begin(), out.factors.end());
  return out;
}

PureBraidWord recombine(const CombedBraid& c) {
  PureBraidWord out(c.strands);
  for (int k = 1; k < c.strands; ++k) {
    PureBraidWord lifted = fiber_inclusion(c.factor(k), k + 1);
    while (lifted.strands() < c.strands) lifted = section(lifted);
    out = out * lifted;
  }
  return out;
}

// --- ordering ------------------------------------------------------------

BraidComparison braid_compare_detail(const PureBraidWord& a, const PureBraidWord& b) {
  check_same_strands(a, b);
  const CombedBraid ca = comb(a);
  const CombedBraid cb = comb(b);
  for (int k = 1; k < a.strands(); ++k) {
    const MagnusComparison m = magnus_compare_detail(ca.factor(k), cb.factor(k));
    if (m.verdict != Verdict::Equal) return {m.verdict, k, m};
  }
  return {Verdict::Equal, 0, {Verdict::Equal, std::nullopt, 0, 0, 0}};
}

Verdict braid_compare(const PureBraidWord& a, const PureBraidWord& b) {
  return braid_compare_detail(a, b).verdict;
}

Rational ft_invariant(int factor, const Monomial& monomial, const PureBraidWord& beta, int trunc) {
  if (factor < 1 || factor >= beta.strands()) {
    throw Error("ft_invariant: factor index " + std::to_string(factor) + " out of range");
  }
  if (monomial.max_index() > factor) {
    throw Error("ft_invariant: monomial " + monomial.to_string() + " exceeds rank " +
                std::to_string(factor));
  }
  if (monomial.degree() > trunc) {
    throw Error("ft_invariant: monomial degree exceeds truncation " + std::to_string(trunc));
  }
  return magnus_expand(comb(beta).factor(factor), monomial.degree()).coefficient(monomial);
}

std::vector<FtInvariantValue> ft_invariant_table(const PureBraidWord& beta, int max_degree) {
  const CombedBraid c = comb(beta);
  std::vector<FtInvariantValue> out;
  for (int k = 1; k < beta.strands(); ++k) {
    const TruncSeries mu = magnus_expand(c.factor(k), max_degree);
    for (int d = 1; d <= max_degree; ++d) {
      for (auto& m : monomials_of_degree(k, d)) {
        Rational v = mu.coefficient(m);
        out.push_back({k, std::move(m), std::move(v)});
      }
    }
  }
  return out;
}

std::optional<Verdict> ft_scan_compare(const PureBraidWord& a, const PureBraidWord& b,
                                       int max_degree) {
  check_same_strands(a, b);
  const auto ta = ft_invariant_table(a, max_degree);
  const auto tb = ft_invariant_table(b, max_degree);
  for (size_t i = 0; i < ta.size(); ++i) {
    if (ta[i].value != tb[i].value) {
      return ta[i].value < tb[i].value ? Verdict::Less : Verdict::Greater;
    }
  }
  return std::nullopt;
}

Rational singular_alternating_sum(const SingularBraid& s, const BraidFunctional& v) {
  if (s.singular.size() != s.word.letters().size()) {
    throw Error("singular marks must cover every letter");
  }
  std::vector<size_t> marked;
  for (size_t k = 0; k < s.singular.size(); ++k) {
    if (!s.singular[k]) continue;
    if (s.word.letters()[k].sign < 0) throw Error("singular letters must be positive");
    marked.push_back(k);
  }
  if (marked.size() > 20) throw Error("too many double points");
  Rational total = 0;
  const std::uint32_t count = 1u << marked.size();
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    std::vector<BraidLetter> letters = s.word.letters();
    int negatives = 0;
    for (size_t b = 0; b < marked.size(); ++b) {
      if (mask & (1u << b)) {
        letters[marked[b]].sign = -1;
        ++negatives;
      }
    }
    const Rational value = v(PureBraidWord(s.word.strands(), std::move(letters)));
    if (negatives % 2 == 0) {
      total += value;
    } else {
      total -= value;
    }
  }
  return total;
}

std::vector<PureBraidWord> standard_relators(int strands) {
  const int n = strands;
  auto A = [n](int i, int j, int sign = 1) { return PureBraidWord::generator(n, i, j, sign); };
  auto conj = [](const PureBraidWord& c, const PureBraidWord& x) { return c * x * invert(c); };
  std::vector<PureBraidWord> out;
  // A_rs^-1 A_ij A_rs = rhs(r, s, i, j) for the disjoint, nested and
  // overlapping configurations of r < s and i < j.
  for (int r = 1; r <= n; ++r) {
    for (int s = r + 1; s <= n; ++s) {
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          std::optional<PureBraidWord> rhs;
          if (s < i || (i < r && s < j)) {
            rhs = A(i, j);
          } else if (s == i) {
            rhs = conj(A(r, j), A(i, j));
          } else if (r == i && s < j) {
            rhs = conj(A(r, j) * A(s, j), A(i, j));
          } else if (r < i && i < s && s < j) {
            const PureBraidWord c = A(r, j) * A(s, j) * A(r, j, -1) * A(s, j, -1);
            rhs = conj(c, A(i, j));
          }
          if (rhs) out.push_back(A(r, s, -1) * A(i, j) * A(r, s) * invert(*rhs));
        }
      }
    }
  }
  return out;
}

PureBraidWord random_braid(int strands, int max_length, std::mt19937_64& rng) {
  if (strands < 2) return PureBraidWord(strands);
  std::vector<BraidLetter> generators;
  for (int j = 2; j <= strands; ++j) {
    for (int i = 1; i < j; ++i) generators.push_back({i, j, 1});
  }
  std::uniform_int_distribution<int> len_dist(0, max_length);
  std::uniform_int_distribution<size_t> gen_dist(0, generators.size() - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  const int len = len_dist(rng);
  std::vector<BraidLetter> letters;
  for (int k = 0; k < len; ++k) {
    BraidLetter l = generators[gen_dist(rng)];
    l.sign = sign_dist(rng) == 0 ? 1 : -1;
    letters.push_back(l);
  }
  return PureBraidWord(strands, std::move(letters));
}

SingularBraid random_singular_braid(int strands, int marks, int max_length,
                                    std::mt19937_64& rng) {
  if (strands < 2) throw Error("random_singular_braid needs at least two strands");
  if (marks > max_length) throw Error("random_singular_braid: marks exceed max_length");
  std::uniform_int_distribution<int> len_dist(marks, max_length);
  const int len = len_dist(rng);
  std::vector<BraidLetter> letters;
  while (static_cast<int>(letters.size()) < len) {
    // Draw one letter at a time from the same distribution as random_braid.
    const auto w = random_braid(strands, 1, rng);
    letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  }
  std::vector<size_t> positions(static_cast<size_t>(len));
  for (size_t k = 0; k < positions.size(); ++k) positions[k] = k;
  std::shuffle(positions.begin(), positions.end(), rng);
  std::vector<bool> singular(static_cast<size_t>(len), false);
  for (int k = 0; k < marks; ++k) {
    const size_t p = positions[static_cast<size_t>(k)];
    singular[p] = true;
    letters[p].sign = 1;
  }
  return {PureBraidWord(strands, std::move(letters)), std::move(singular)};
}

OrderedGroupOracle<PureBraidWord> braid_oracle(int strands) {
  return OrderedGroupOracle<PureBraidWord>{
      .name = "braid",
      .compare = [](const PureBraidWord& a, const PureBraidWord& b) { return braid_compare(a, b); },
      .multiply = [](const PureBraidWord& a, const PureBraidWord& b) { return a * b; },
      .invert = [](const PureBraidWord& a) { return invert(a); },
      .identity = PureBraidWord(strands),
      .equal = [](const PureBraidWord& a, const PureBraidWord& b) { return braid_equal(a, b); },
      .format = [](const PureBraidWord& a) { return a.to_string(); },
  };
}

}  // namespace holord
