#include "primcount/words.hpp"

#include <algorithm>

namespace primcount {

Alphabet::Alphabet(int rank) : rank_(rank) {
  if (rank < 2 || rank > kMaxRank) {
    throw InputError("rank must be in [2, 26], got " + std::to_string(rank));
  }
}

char Alphabet::to_char(Letter x) const {
  const char base = is_inverse_letter(x) ? 'A' : 'a';
  return static_cast<char>(base + x / 2);
}

Letter Alphabet::from_char(char c) const {
  int gen = -1;
  bool inv = false;
  if (c >= 'a' && c <= 'z') {
    gen = c - 'a';
  } else if (c >= 'A' && c <= 'Z') {
    gen = c - 'A';
    inv = true;
  }
  if (gen < 0 || gen >= rank_) {
    throw InputError(std::string("invalid letter '") + c + "' for rank " +
                     std::to_string(rank_));
  }
  return static_cast<Letter>(2 * gen + (inv ? 1 : 0));
}

Word Word::reduce(int rank, std::span<const Letter> raw) {
  Alphabet alphabet(rank);
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter x : raw) {
    if (!alphabet.contains(x)) {
      throw InputError("letter code " + std::to_string(x) +
                       " outside alphabet of rank " + std::to_string(rank));
    }
    if (!out.empty() && out.back() == primcount::inverse(x)) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return Word(alphabet, std::move(out));
}

Word Word::from_reduced(int rank, std::vector<Letter> letters) {
  Alphabet alphabet(rank);
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (!alphabet.contains(letters[i])) {
      throw InputError("letter code outside alphabet");
    }
    if (i > 0 && letters[i] == primcount::inverse(letters[i - 1])) {
      throw InputError("word is not freely reduced");
    }
  }
  return Word(alphabet, std::move(letters));
}

Word Word::parse(std::string_view text, int rank) {
  Alphabet alphabet(rank);
  std::vector<Letter> raw;
  raw.reserve(text.size());
  for (char c : text) raw.push_back(alphabet.from_char(c));
  return reduce(rank, raw);
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter x : letters_) s.push_back(alphabet_.to_char(x));
  return s;
}

Word Word::operator*(const Word& rhs) const {
  if (alphabet_ != rhs.alphabet_) throw InputError("alphabet mismatch");
  std::vector<Letter> raw(letters_);
  raw.insert(raw.end(), rhs.letters_.begin(), rhs.letters_.end());
  return reduce(rank(), raw);
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& x : out) x = primcount::inverse(x);
  return Word(alphabet_, std::move(out));
}

bool Word::is_cyclically_reduced() const {
  return letters_.size() <= 1 ||
         letters_.front() != primcount::inverse(letters_.back());
}

std::size_t least_rotation(std::span<const Letter> s) {
  // Two-candidate scan (minimum expression); O(n).
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const Letter x = s[(i + k) % n];
    const Letter y = s[(j + k) % n];
    if (x == y) {
      ++k;
      continue;
    }
    if (x > y) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

CyclicWord::CyclicWord(const Word& w) : word_(w.rank()) {
  if (!w.is_cyclically_reduced()) {
    throw InputError("word '" + w.str() + "' is not cyclically reduced");
  }
  const auto letters = w.letters();
  const std::size_t off = least_rotation(letters);
  std::vector<Letter> rotated(letters.begin() + off, letters.end());
  rotated.insert(rotated.end(), letters.begin(), letters.begin() + off);
  word_ = Word::from_reduced(w.rank(), std::move(rotated));
}

CyclicWord CyclicWord::parse(std::string_view text, int rank) {
  return CyclicWord(cyclic_reduce(Word::parse(text, rank)).core);
}

std::vector<Word> CyclicWord::rotations() const {
  const auto s = word_.letters();
  std::vector<Word> out;
  out.reserve(s.size());
  for (std::size_t off = 0; off < s.size(); ++off) {
    std::vector<Letter> r(s.begin() + off, s.end());
    r.insert(r.end(), s.begin(), s.begin() + off);
    out.push_back(Word::from_reduced(rank(), std::move(r)));
  }
  return out;
}

CyclicReduction cyclic_reduce(const Word& w) {
  const auto s = w.letters();
  std::size_t k = 0;
  while (2 * k + 1 < s.size() && s[k] == primcount::inverse(s[s.size() - 1 - k])) ++k;
  std::vector<Letter> core(s.begin() + k, s.end() - k);
  std::vector<Letter> conj(s.begin(), s.begin() + k);
  return {Word::from_reduced(w.rank(), std::move(core)),
          Word::from_reduced(w.rank(), std::move(conj))};
}

std::size_t cyclic_length(std::span<const Letter> s) {
  std::size_t k = 0;
  while (2 * k + 1 < s.size() && s[k] == primcount::inverse(s[s.size() - 1 - k])) ++k;
  return s.size() - 2 * k;
}

namespace {

void extend(int letters, int n, std::vector<Letter>& buf,
            const std::function<void(std::span<const Letter>)>& visit) {
  if (static_cast<int>(buf.size()) == n) {
    visit(buf);
    return;
  }
  const bool has_last = !buf.empty();
  const Letter forbidden = has_last ? primcount::inverse(buf.back()) : Letter{0};
  for (int x = 0; x < letters; ++x) {
    if (has_last && x == forbidden) continue;
    buf.push_back(static_cast<Letter>(x));
    extend(letters, n, buf, visit);
    buf.pop_back();
  }
}

}  // namespace

void for_each_reduced_with_prefix(
    int rank, int n, std::span<const Letter> prefix,
    const std::function<void(std::span<const Letter>)>& visit) {
  if (n < 0) throw InputError("negative word length");
  const Word checked = Word::from_reduced(
      rank, std::vector<Letter>(prefix.begin(), prefix.end()));
  if (static_cast<int>(prefix.size()) > n) return;
  std::vector<Letter> buf(prefix.begin(), prefix.end());
  buf.reserve(static_cast<std::size_t>(n));
  extend(checked.alphabet().size(), n, buf, visit);
}

void for_each_reduced(int rank, int n,
                      const std::function<void(std::span<const Letter>)>& visit) {
  for_each_reduced_with_prefix(rank, n, {}, visit);
}

std::vector<Word> enumerate_reduced(int rank, int n) {
  std::vector<Word> out;
  for_each_reduced(rank, n, [&](std::span<const Letter> s) {
    out.push_back(Word::from_reduced(rank, {s.begin(), s.end()}));
  });
  return out;
}

std::vector<std::vector<Letter>> reduced_prefixes(int rank, int k) {
  std::vector<std::vector<Letter>> out;
  for_each_reduced(rank, k, [&](std::span<const Letter> s) {
    out.emplace_back(s.begin(), s.end());
  });
  return out;
}

BigInt count_reduced(int rank, int n) {
  Alphabet check(rank);
  if (n < 0) throw InputError("negative word length");
  if (n == 0) return 1;
  return BigInt(2 * rank) * pow_big(2 * rank - 1, static_cast<unsigned>(n - 1));
}

BigInt count_ball(int rank, int n) {
  BigInt total = 0;
  for (int k = 0; k <= n; ++k) total += count_reduced(rank, k);
  return total;
}

}  // namespace primcount
