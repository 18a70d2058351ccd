#include "holord/freegroup.hpp"

#include <cctype>
#include <cstdlib>

namespace holord {

namespace {

void check_letter(int rank, const Letter& l) {
  if (l.gen < 1 || l.gen > rank) {
    throw Error("generator index " + std::to_string(l.gen) + " out of range for rank " +
                std::to_string(rank));
  }
  if (l.sign != 1 && l.sign != -1) throw Error("letter sign must be +1 or -1");
}

void check_same_rank(const FreeWord& a, const FreeWord& b) {
  if (a.rank() != b.rank()) {
    throw Error("rank mismatch: " + std::to_string(a.rank()) + " vs " +
                std::to_string(b.rank()));
  }
}

// Right-multiplies the truncated expansion `terms` by mu(x_gen^sign).
// mu(x) = 1 + X and mu(x^-1) = sum_k (-X)^k.
TruncSeries::Terms times_letter(const TruncSeries::Terms& terms, const Letter& l, int trunc) {
  TruncSeries::Terms out;
  for (const auto& [m, c] : terms) {
    const int room = trunc - m.degree();
    out[m] += c;
    Monomial cur = m;
    const int max_power = l.sign > 0 ? std::min(room, 1) : room;
    for (int k = 1; k <= max_power; ++k) {
      cur = cur * Monomial::generator(l.gen);
      if (l.sign < 0 && k % 2 == 1) {
        out[cur] -= c;
      } else {
        out[cur] += c;
      }
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

FreeWord::FreeWord(int rank) : rank_(rank) {
  if (rank < 1) throw Error("free group rank must be positive");
}

FreeWord::FreeWord(int rank, std::span<const Letter> letters) : FreeWord(rank) {
  letters_.reserve(letters.size());
  for (const Letter& l : letters) {
    check_letter(rank, l);
    if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().sign == -l.sign) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

FreeWord FreeWord::generator(int rank, int gen, int sign) {
  const Letter l{gen, sign};
  return FreeWord(rank, std::span<const Letter>(&l, 1));
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (const Letter& l : letters_) {
    if (!s.empty()) s += ' ';
    s += 'x';
    s += std::to_string(l.gen);
    if (l.sign < 0) s += "^-1";
  }
  return s;
}

FreeWord reduce(int rank, std::span<const Letter> letters) { return FreeWord(rank, letters); }

FreeWord concat(const FreeWord& a, const FreeWord& b) {
  check_same_rank(a, b);
  std::vector<Letter> all(a.letters().begin(), a.letters().end());
  all.insert(all.end(), b.letters().begin(), b.letters().end());
  return FreeWord(a.rank(), all);
}

FreeWord invert(const FreeWord& a) {
  std::vector<Letter> out;
  out.reserve(static_cast<size_t>(a.length()));
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) {
    out.push_back({it->gen, -it->sign});
  }
  return FreeWord(a.rank(), out);
}

FreeWord commutator(const FreeWord& a, const FreeWord& b) {
  check_same_rank(a, b);
  return invert(a) * invert(b) * a * b;
}

FreeWord power(const FreeWord& a, int exponent) {
  const FreeWord base = exponent < 0 ? invert(a) : a;
  FreeWord out(a.rank());
  for (int i = 0; i < std::abs(exponent); ++i) out = out * base;
  return out;
}

FreeWord parse_word(std::string_view text, int rank) {
  if (rank < 1) throw Error("free group rank must be positive");
  std::vector<Letter> letters;
  size_t pos = 0;
  auto push = [&](int gen, int exponent, size_t at) {
    if (gen < 1 || gen > rank) {
      throw ParseError("generator x" + std::to_string(gen) + " out of range for rank " +
                           std::to_string(rank),
                       at);
    }
    const int sign = exponent < 0 ? -1 : 1;
    for (int i = 0; i < std::abs(exponent); ++i) letters.push_back({gen, sign});
  };
  while (pos < text.size()) {
    const unsigned char ch = static_cast<unsigned char>(text[pos]);
    if (std::isspace(ch)) {
      ++pos;
      continue;
    }
    const size_t start = pos;
    if (ch == '1' && (pos + 1 == text.size() ||
                      std::isspace(static_cast<unsigned char>(text[pos + 1])))) {
      ++pos;
      continue;
    }
    if (ch == 'x' && pos + 1 < text.size() &&
        std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
      ++pos;
      size_t digits = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      const int gen = std::stoi(std::string(text.substr(digits, pos - digits)));
      int exponent = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        const size_t exp_start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        const size_t exp_digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (exp_digits == pos) throw ParseError("missing exponent after '^'", exp_start);
        exponent = std::stoi(std::string(text.substr(exp_start, pos - exp_start)));
      }
      if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
        throw ParseError("unexpected character '" + std::string(1, text[pos]) + "'", pos);
      }
      push(gen, exponent, start);
      continue;
    }
    if (std::isalpha(ch)) {
      while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
        const unsigned char c = static_cast<unsigned char>(text[pos]);
        if (std::islower(c)) {
          push(c - 'a' + 1, 1, pos);
        } else if (std::isupper(c)) {
          push(c - 'A' + 1, -1, pos);
        } else {
          throw ParseError("unexpected character '" + std::string(1, text[pos]) + "'", pos);
        }
        ++pos;
      }
      continue;
    }
    throw ParseError("unexpected character '" + std::string(1, text[pos]) + "'", pos);
  }
  return FreeWord(rank, letters);
}

TruncSeries magnus_expand(const FreeWord& w, int trunc) {
  if (trunc < 0) throw Error("truncation degree must be nonnegative");
  TruncSeries::Terms terms;
  terms.emplace(Monomial::unit(), 1);
  for (const Letter& l : w.letters()) terms = times_letter(terms, l, trunc);
  return TruncSeries(w.rank(), trunc, std::move(terms));
}

int escalation_ceiling(const FreeWord& a, const FreeWord& b) {
  return std::max(1, a.length() + b.length());
}

MagnusComparison magnus_compare_detail(const FreeWord& a, const FreeWord& b) {
  check_same_rank(a, b);
  if ((a * invert(b)).is_identity()) return {Verdict::Equal, std::nullopt, 0, 0, 0};
  const int ceiling = escalation_ceiling(a, b);
  for (int n = 1; n <= ceiling; ++n) {
    const SeriesComparison c =
        series_compare(magnus_expand(a, n), magnus_expand(b, n), Exactness::Truncated);
    if (c.verdict) return {*c.verdict, c.deciding, c.lhs, c.rhs, n};
  }
  throw Error("escalation ceiling reached comparing " + a.to_string() + " and " +
              b.to_string() + " at degree " + std::to_string(ceiling));
}

Verdict magnus_compare(const FreeWord& a, const FreeWord& b) {
  return magnus_compare_detail(a, b).verdict;
}

std::optional<int> lcs_depth(const FreeWord& w, int ceiling) {
  if (w.is_identity()) throw Error("lcs_depth: the identity has no finite depth");
  if (ceiling < 1) throw Error("lcs_depth: ceiling must be >= 1");
  const TruncSeries deviation =
      magnus_expand(w, ceiling) - TruncSeries::one(w.rank(), ceiling);
  return deviation.lowest_degree();
}

FreeWord random_word(int rank, int max_length, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len_dist(0, max_length);
  std::uniform_int_distribution<int> letter_dist(0, 2 * rank - 1);
  const int n = len_dist(rng);
  std::vector<Letter> letters;
  for (int i = 0; i < n; ++i) {
    const int r = letter_dist(rng);
    const Letter l{r / 2 + 1, r % 2 == 0 ? 1 : -1};
    if (!letters.empty() && letters.back().gen == l.gen && letters.back().sign == -l.sign) {
      letters.pop_back();
    } else {
      letters.push_back(l);
    }
  }
  return FreeWord(rank, letters);
}

std::vector<FreeWord> all_reduced_words(int rank, int max_length) {
  std::vector<FreeWord> out{FreeWord(rank)};
  size_t layer_begin = 0;
  for (int len = 1; len <= max_length; ++len) {
    const size_t layer_end = out.size();
    for (size_t i = layer_begin; i < layer_end; ++i) {
      const std::vector<Letter> letters(out[i].letters().begin(), out[i].letters().end());
      for (int gen = 1; gen <= rank; ++gen) {
        for (int sign : {1, -1}) {
          if (!letters.empty() && letters.back().gen == gen && letters.back().sign == -sign) {
            continue;
          }
          std::vector<Letter> next = letters;
          next.push_back({gen, sign});
          out.emplace_back(rank, next);
        }
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

}  // namespace holord
