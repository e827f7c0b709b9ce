#include "primcount/whitehead.hpp"

#include <algorithm>
#include <thread>

namespace primcount {

namespace {

void check_rank(int rank) {
  if (rank < 2 || rank > kMaxWhiteheadRank) {
    throw InputError("Whitehead moves support rank 2.." +
                     std::to_string(kMaxWhiteheadRank) + ", got " +
                     std::to_string(rank));
  }
}

void check_move(const WhiteheadMove& m, int rank) {
  const int letters = 2 * rank;
  if (m.multiplier >= letters || (m.set >> letters) != 0) {
    throw InputError("Whitehead move uses letters outside the alphabet");
  }
  if (!m.contains(m.multiplier) || m.contains(inverse(m.multiplier))) {
    throw InputError("Whitehead move needs a in A and a^-1 not in A");
  }
}

// Appends x to a reduced buffer, cancelling against the tail.
inline void push_reduced(std::vector<Letter>& out, Letter x) {
  if (!out.empty() && out.back() == inverse(x)) {
    out.pop_back();
  } else {
    out.push_back(x);
  }
}

inline void push_image(const WhiteheadMove& m, Letter x,
                       std::vector<Letter>& out) {
  const Letter a = m.multiplier;
  if (x == a || x == inverse(a)) {
    push_reduced(out, x);
    return;
  }
  if (m.contains(inverse(x))) push_reduced(out, a);
  push_reduced(out, x);
  if (m.contains(x)) push_reduced(out, inverse(a));
}

}  // namespace

std::string WhiteheadMove::str(const Alphabet& alphabet) const {
  std::string s = "(";
  s.push_back(alphabet.to_char(multiplier));
  s += "|{";
  bool first = true;
  for (int x = 0; x < alphabet.size(); ++x) {
    if (!contains(static_cast<Letter>(x))) continue;
    if (!first) s.push_back(',');
    s.push_back(alphabet.to_char(static_cast<Letter>(x)));
    first = false;
  }
  s += "})";
  return s;
}

std::vector<WhiteheadMove> all_moves(int rank) {
  check_rank(rank);
  const int letters = 2 * rank;
  std::vector<WhiteheadMove> moves;
  for (int a = 0; a < letters; ++a) {
    const Letter mult = static_cast<Letter>(a);
    std::vector<Letter> others;
    for (int x = 0; x < letters; ++x) {
      if (x != a && x != inverse(mult)) others.push_back(static_cast<Letter>(x));
    }
    const std::uint32_t subsets = 1u << others.size();
    for (std::uint32_t bits = 1; bits < subsets; ++bits) {
      std::uint32_t set = 1u << a;
      for (std::size_t i = 0; i < others.size(); ++i) {
        if ((bits >> i) & 1u) set |= 1u << others[i];
      }
      moves.push_back({mult, set});
    }
  }
  return moves;
}

Word apply(const WhiteheadMove& m, const Word& w) {
  check_move(m, w.rank());
  std::vector<Letter> out;
  out.reserve(w.length() * 3);
  for (Letter x : w.letters()) push_image(m, x, out);
  return Word::from_reduced(w.rank(), std::move(out));
}

std::size_t cyclic_image_length(const WhiteheadMove& m, const CyclicWord& c) {
  return cyclic_reduce(apply(m, c.word())).core.length();
}

PrimitivityOracle::PrimitivityOracle(int rank)
    : rank_(rank), moves_(all_moves(rank)) {}

std::size_t PrimitivityOracle::cyclic_image(const WhiteheadMove& m,
                                            std::span<const Letter> cyclic,
                                            std::vector<Letter>& out) const {
  out.clear();
  for (Letter x : cyclic) push_image(m, x, out);
  std::size_t k = 0;
  const std::size_t n = out.size();
  while (2 * k + 1 < n && out[k] == inverse(out[n - 1 - k])) ++k;
  if (k > 0) {
    out.erase(out.end() - static_cast<std::ptrdiff_t>(k), out.end());
    out.erase(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return out.size();
}

void PrimitivityOracle::descend(std::vector<Letter>& cyclic,
                                std::vector<WhiteheadMove>* trace) {
  while (cyclic.size() > 1) {
    std::size_t best_len = cyclic.size();
    const WhiteheadMove* best_move = nullptr;
    for (const auto& m : moves_) {
      const std::size_t len = cyclic_image(m, cyclic, image_);
      if (len < best_len) {
        best_len = len;
        best_move = &m;
        std::swap(best_, image_);
      }
    }
    if (best_move == nullptr) break;
    std::swap(cyclic, best_);
    if (trace != nullptr) trace->push_back(*best_move);
  }
}

bool PrimitivityOracle::is_primitive(std::span<const Letter> letters) {
  const std::size_t n = letters.size();
  std::size_t k = 0;
  while (2 * k + 1 < n && letters[k] == inverse(letters[n - 1 - k])) ++k;
  current_.assign(letters.begin() + static_cast<std::ptrdiff_t>(k),
                  letters.end() - static_cast<std::ptrdiff_t>(k));
  if (current_.empty()) return false;
  descend(current_, nullptr);
  return current_.size() == 1;
}

Minimization minimize(const CyclicWord& c) {
  PrimitivityOracle oracle(c.rank());
  std::vector<Letter> letters(c.letters().begin(), c.letters().end());
  Minimization result{CyclicWord(c.rank()), {}};
  oracle.descend(letters, &result.trace);
  result.minimal = CyclicWord(Word::from_reduced(c.rank(), std::move(letters)));
  return result;
}

bool is_primitive(const Word& w) {
  if (w.empty()) return false;
  const CyclicWord core(cyclic_reduce(w).core);
  return minimize(core).minimal.length() == 1;
}

ScanCounts& ScanCounts::operator+=(const ScanCounts& o) {
  words += o.words;
  primitive += o.primitive;
  cyclically_reduced += o.cyclically_reduced;
  cyclically_reduced_primitive += o.cyclically_reduced_primitive;
  return *this;
}

namespace {

ScanCounts scan_prefix(int rank, int n, std::span<const Letter> prefix,
                       PrimitivityOracle& oracle) {
  ScanCounts counts;
  for_each_reduced_with_prefix(rank, n, prefix, [&](std::span<const Letter> s) {
    ++counts.words;
    const bool cyc = s.size() <= 1 || s.front() != inverse(s.back());
    const bool prim = oracle.is_primitive(s);
    if (prim) ++counts.primitive;
    if (cyc) {
      ++counts.cyclically_reduced;
      if (prim) ++counts.cyclically_reduced_primitive;
    }
  });
  return counts;
}

}  // namespace

ScanCounts scan_primitive_words(int rank, int n, int threads) {
  check_rank(rank);
  if (n < 0) throw InputError("negative word length");
  const auto prefixes = reduced_prefixes(rank, std::min(n, 2));
  std::vector<ScanCounts> partial(prefixes.size());
  const int workers = std::clamp(threads, 1, static_cast<int>(prefixes.size()));

  auto run = [&](int worker) {
    PrimitivityOracle oracle(rank);
    for (std::size_t i = static_cast<std::size_t>(worker); i < prefixes.size();
         i += static_cast<std::size_t>(workers)) {
      partial[i] = scan_prefix(rank, n, prefixes[i], oracle);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(run, t);
  }

  ScanCounts total;
  for (const auto& c : partial) total += c;
  return total;
}

}  // namespace primcount
