#pragma once

// Primitive elements of F2 = <a, b>: one conjugacy class per primitive
// exponent-sum vector, represented by a sign-substituted Christoffel word.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "primcount/bigint.hpp"
#include "primcount/words.hpp"

namespace primcount {

struct Vec2 {
  long a = 0;
  long b = 0;

  Vec2 operator-() const { return {-a, -b}; }
  bool operator==(const Vec2&) const = default;
  auto operator<=>(const Vec2&) const = default;
  std::string str() const;  // "(3,-2)"
};

/// Exponent sums of a and b. Throws InputError unless rank is 2.
Vec2 abelianization(const Word& w);

struct PrimitiveClass {
  Vec2 vector;
  CyclicWord representative;

  std::size_t length() const { return representative.length(); }
};

/// Lower Christoffel word of slope q/p: letter i (1-based) is 'a' when
/// i*q mod n increases, 'b' when it wraps. Requires p, q >= 1 coprime.
Word christoffel_word(long p, long q);
CyclicWord christoffel(long p, long q);

/// Image of `w` under a -> a^{sa}, b -> b^{sb} with sa, sb in {+1, -1}.
Word sign_substitute(const Word& w, int sa, int sb);

/// Primitive vectors with |s_a| + |s_b| == n, in generation order:
/// n == 1 gives (1,0), (-1,0), (0,1), (0,-1); otherwise p = 1..n-1 with
/// gcd(p, n-p) == 1, each with signs (+,+), (+,-), (-,+), (-,-).
std::vector<Vec2> class_vectors(long n);
std::size_t count_classes(long n);

/// Class whose abelianization is `v`; `v` must be primitive.
PrimitiveClass primitive_class(Vec2 v);

/// All classes of cyclic length 1..max_length, ordered by length and then
/// as in class_vectors.
std::vector<PrimitiveClass> enumerate_classes(long max_length);

/// Euler's totient by trial division; n in [1, 10^6].
long totient(long n);

/// n * (number of classes of length n).
BigInt count_cyc_reduced_primitive_words(long n);

/// Reduced conjugators u of length k with u c u^-1 reduced, for any
/// cyclically reduced c of length >= 1 in rank p.
BigInt conjugator_count(int rank, long k);

/// Primitive words of exact length n, by summing over cyclic cores.
BigInt count_primitives(long n);

/// Exact per-length counts. cumulative(N) sums lengths 0..N.
class CountTable {
 public:
  explicit CountTable(int rank = 2) : rank_(rank) {}

  int rank() const { return rank_; }
  const std::map<long, BigInt>& per_length() const { return per_length_; }

  void set(long n, BigInt count);
  /// Zero for lengths absent from the table.
  BigInt at(long n) const;
  BigInt cumulative(long n) const;
  bool covers(long n) const;
  long max_length() const;

  std::string to_csv() const;  // header "n,count"
  static CountTable from_csv(const std::string& text, int rank);
  std::string to_json() const;
  static CountTable from_json(const std::string& text);

  bool operator==(const CountTable&) const = default;

 private:
  int rank_;
  std::map<long, BigInt> per_length_;
};

/// All reduced words, lengths 0..N.
CountTable table_all(int rank, long max_length);
/// Primitive words of F2, lengths 1..N (length 0 is 0).
CountTable table_primitive(long max_length);
/// Cyclically reduced primitive words of F2, lengths 1..N (length 0 is 0).
CountTable table_cyc_primitive(long max_length);

struct BruteForceTables {
  CountTable primitive;
  CountTable cyc_primitive;
};

/// Oracle scan over every reduced word, lengths 0..N.
BruteForceTables table_bruteforce(int rank, long max_length, int threads = 1);

}  // namespace primcount
