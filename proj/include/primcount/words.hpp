#pragma once

// Free-group words over the alphabet {a, A, b, B, ...}.
//
// Letters are encoded as small integers: generator i is 2i, its inverse is
// 2i+1, so inversion is `code ^ 1`. Text syntax uses lowercase ASCII for
// generators and the matching uppercase letter for inverses; the empty
// string is the identity.

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "primcount/bigint.hpp"

namespace primcount {

using Letter = std::uint8_t;

/// Raised for malformed input: bad letters, rank mismatches, bad arguments.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr Letter inverse(Letter x) { return static_cast<Letter>(x ^ 1u); }
constexpr Letter generator(int i) { return static_cast<Letter>(2 * i); }
constexpr bool is_inverse_letter(Letter x) { return (x & 1u) != 0; }

class Alphabet {
 public:
  static constexpr int kMaxRank = 26;

  explicit Alphabet(int rank);

  int rank() const { return rank_; }
  int size() const { return 2 * rank_; }
  bool contains(Letter x) const { return x < size(); }

  char to_char(Letter x) const;
  Letter from_char(char c) const;  // throws InputError

  bool operator==(const Alphabet&) const = default;

 private:
  int rank_;
};

/// A freely reduced word. Construction always reduces or validates.
class Word {
 public:
  explicit Word(int rank = 2) : alphabet_(rank) {}

  /// Freely reduces an arbitrary letter sequence.
  static Word reduce(int rank, std::span<const Letter> raw);
  /// Wraps letters that are already reduced; throws InputError otherwise.
  static Word from_reduced(int rank, std::vector<Letter> letters);
  /// Parses the text syntax and reduces.
  static Word parse(std::string_view text, int rank = 2);

  const Alphabet& alphabet() const { return alphabet_; }
  int rank() const { return alphabet_.rank(); }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  std::string str() const;

  /// Reduced product.
  Word operator*(const Word& rhs) const;
  Word inverse() const;

  bool is_cyclically_reduced() const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word& rhs) const { return letters_ <=> rhs.letters_; }

 private:
  Word(Alphabet alphabet, std::vector<Letter> letters)
      : alphabet_(alphabet), letters_(std::move(letters)) {}

  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

inline Word invert(const Word& w) { return w.inverse(); }

/// A cyclically reduced word stored as its lexicographically least rotation
/// (letter-code order, earliest offset on ties). Represents a conjugacy class.
class CyclicWord {
 public:
  explicit CyclicWord(int rank = 2) : word_(rank) {}
  /// Throws InputError if `w` is not cyclically reduced.
  explicit CyclicWord(const Word& w);

  static CyclicWord parse(std::string_view text, int rank = 2);

  const Word& word() const { return word_; }
  std::size_t length() const { return word_.length(); }
  int rank() const { return word_.rank(); }
  std::span<const Letter> letters() const { return word_.letters(); }
  std::string str() const { return word_.str(); }

  /// Every rotation, in offset order (duplicates kept for periodic words).
  std::vector<Word> rotations() const;

  bool operator==(const CyclicWord&) const = default;
  auto operator<=>(const CyclicWord& rhs) const { return word_ <=> rhs.word_; }

 private:
  Word word_;
};

/// Offset of the lexicographically least rotation; earliest one on ties.
std::size_t least_rotation(std::span<const Letter> letters);

struct CyclicReduction {
  Word core;        // cyclically reduced
  Word conjugator;  // w == conjugator * core * conjugator^-1
};

CyclicReduction cyclic_reduce(const Word& w);

/// Length of the cyclic reduction of a reduced letter sequence.
std::size_t cyclic_length(std::span<const Letter> reduced);

/// Depth-first lexicographic enumeration of all reduced words of length `n`.
/// The visitor sees a span that is only valid during the call.
void for_each_reduced(int rank, int n,
                      const std::function<void(std::span<const Letter>)>& visit);

/// Same order, restricted to words starting with `prefix` (must be reduced).
/// Concatenating the prefix partitions of length k in lexicographic prefix
/// order reproduces for_each_reduced.
void for_each_reduced_with_prefix(
    int rank, int n, std::span<const Letter> prefix,
    const std::function<void(std::span<const Letter>)>& visit);

std::vector<Word> enumerate_reduced(int rank, int n);

/// All reduced prefixes of length k, in enumeration order.
std::vector<std::vector<Letter>> reduced_prefixes(int rank, int k);

/// 1 if n == 0, else 2p(2p-1)^(n-1).
BigInt count_reduced(int rank, int n);
/// Number of reduced words of length at most n.
BigInt count_ball(int rank, int n);

}  // namespace primcount
