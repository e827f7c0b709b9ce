#pragma once

// Type-II Whitehead automorphisms and the greedy length-descent primitivity
// test.
//
// A move (a, A) with a in A and a^-1 not in A fixes a^{+-1} and sends every
// other letter x to a^{e1} x a^{e2}, where e1 = 1 if x^-1 is in A and
// e2 = -1 if x is in A.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "primcount/words.hpp"

namespace primcount {

struct WhiteheadMove {
  Letter multiplier = 0;
  std::uint32_t set = 0;  // bit x set <=> letter x in A

  bool contains(Letter x) const { return (set >> x) & 1u; }
  /// "(a|{a,b,B})"
  std::string str(const Alphabet& alphabet) const;

  bool operator==(const WhiteheadMove&) const = default;
};

constexpr int kMaxWhiteheadRank = 8;

/// Every non-trivial type-II move, ordered by multiplier code and then by
/// the bitmask of the remaining letters. Size 2p(2^(2p-2) - 1).
std::vector<WhiteheadMove> all_moves(int rank);

/// Throws InputError if the move is not a valid move over the word's
/// alphabet.
Word apply(const WhiteheadMove& m, const Word& w);

std::size_t cyclic_image_length(const WhiteheadMove& m, const CyclicWord& c);

struct Minimization {
  CyclicWord minimal;
  std::vector<WhiteheadMove> trace;
};

/// Greedy descent: take the move giving the shortest cyclic image (first
/// in move order on ties) while it strictly shortens.
Minimization minimize(const CyclicWord& c);

bool is_primitive(const Word& w);

/// Reusable descent engine for bulk scans. Holds scratch buffers, so one
/// instance per thread.
class PrimitivityOracle {
 public:
  explicit PrimitivityOracle(int rank);

  int rank() const { return rank_; }
  const std::vector<WhiteheadMove>& moves() const { return moves_; }

  /// `letters` must be reduced. Decided on the cyclic reduction.
  bool is_primitive(std::span<const Letter> letters);

  /// Cyclic length of the image of a cyclically reduced word; the image's
  /// cyclic core is left in `out`.
  std::size_t cyclic_image(const WhiteheadMove& m,
                           std::span<const Letter> cyclic,
                           std::vector<Letter>& out) const;

  /// Runs the descent in place on a cyclically reduced word; records moves
  /// into `trace` when non-null.
  void descend(std::vector<Letter>& cyclic,
               std::vector<WhiteheadMove>* trace);

 private:
  int rank_;
  std::vector<WhiteheadMove> moves_;
  std::vector<Letter> current_, image_, best_;
};

struct ScanCounts {
  std::uint64_t words = 0;
  std::uint64_t primitive = 0;
  std::uint64_t cyclically_reduced = 0;
  std::uint64_t cyclically_reduced_primitive = 0;

  ScanCounts& operator+=(const ScanCounts& o);
  bool operator==(const ScanCounts&) const = default;
};

/// Exhaustive oracle scan of all reduced words of length n. Work is split
/// by length-2 prefixes across `threads` workers and merged in prefix order.
ScanCounts scan_primitive_words(int rank, int n, int threads = 1);

}  // namespace primcount
