#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "primcount/words.hpp"

using namespace primcount;

namespace {

Word W(const char* text, int rank = 2) { return Word::parse(text, rank); }

}  // namespace

TEST_CASE("letter encoding") {
  CHECK(inverse(generator(0)) == 1);
  CHECK(inverse(Letter{3}) == 2);
  Alphabet ab(2);
  CHECK(ab.size() == 4);
  CHECK(ab.from_char('a') == 0);
  CHECK(ab.from_char('A') == 1);
  CHECK(ab.from_char('B') == 3);
  CHECK(ab.to_char(3) == 'B');
  CHECK_THROWS_AS(ab.from_char('c'), InputError);
  CHECK_THROWS_AS(ab.from_char(' '), InputError);
  CHECK_THROWS_AS(Alphabet(1), InputError);
}

TEST_CASE("reduce") {
  CHECK(W("aA").empty());
  CHECK(W("abBa").str() == "aa");
  CHECK(W("").str().empty());
  CHECK(W("abcCBA", 3).empty());
  CHECK(W("aBbAb").str() == "b");
  CHECK_THROWS_AS(W("abc"), InputError);
  CHECK_THROWS_AS(Word::reduce(2, std::vector<Letter>{0, 7}), InputError);
  CHECK_THROWS_AS(Word::from_reduced(2, {0, 1}), InputError);
}

TEST_CASE("invert") {
  CHECK(W("ab").inverse().str() == "BA");
  CHECK(W("").inverse().empty());
  CHECK(W("a").inverse().str() == "A");
  CHECK(W("aabAB").inverse().inverse() == W("aabAB"));
}

TEST_CASE("cyclic_reduce") {
  auto r = cyclic_reduce(W("baB"));
  CHECK(r.core.str() == "a");
  CHECK(r.conjugator.str() == "b");

  r = cyclic_reduce(W("ab"));
  CHECK(r.core.str() == "ab");
  CHECK(r.conjugator.empty());

  r = cyclic_reduce(W("Baab"));
  CHECK(r.core.str() == "aa");
  CHECK(r.conjugator.str() == "B");

  r = cyclic_reduce(W(""));
  CHECK(r.core.empty());
  CHECK(r.conjugator.empty());
  CHECK(cyclic_length(W("abaBA").letters()) == 1);
}

TEST_CASE("CyclicWord canonical rotation") {
  CHECK(CyclicWord(W("ba")).str() == "ab");
  CHECK(CyclicWord(W("bab")).str() == "abb");
  // periodic: least rotation is unique as a word
  CHECK(CyclicWord(W("baba")).str() == "abab");
  // code order a < A < b < B
  CHECK(CyclicWord(W("BA")).str() == "AB");
  CHECK(CyclicWord(W("bA")).str() == "Ab");
  CHECK_THROWS_AS(CyclicWord(W("abA")), InputError);
  CHECK(CyclicWord::parse("BaabaBb").str() == "aabaB");

  const std::vector<Letter> periodic{2, 0, 2, 0};
  CHECK(least_rotation(periodic) == 1);
  const std::vector<Letter> constant{2, 2, 2};
  CHECK(least_rotation(constant) == 0);
}

TEST_CASE("least_rotation matches naive minimum over all reduced words") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& s : oracle::all_reduced_by_filter(2, n)) {
      REQUIRE(least_rotation(s) == oracle::min_rotation_offset_naive(s));
    }
  }
}

TEST_CASE("enumerate_reduced small cases") {
  auto zero = enumerate_reduced(2, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].empty());

  auto one = enumerate_reduced(2, 1);
  REQUIRE(one.size() == 4);
  CHECK(one[0].str() == "a");
  CHECK(one[1].str() == "A");
  CHECK(one[2].str() == "b");
  CHECK(one[3].str() == "B");

  CHECK(enumerate_reduced(2, 3).size() == 36);
}

TEST_CASE("enumeration agrees with filtered brute force and counts") {
  for (int rank : {2, 3}) {
    const int top = rank == 2 ? 8 : 6;
    for (int n = 0; n <= top; ++n) {
      const auto words = enumerate_reduced(rank, n);
      const auto expected = oracle::all_reduced_by_filter(rank, n);
      REQUIRE(words.size() == expected.size());
      for (std::size_t i = 0; i < words.size(); ++i) {
        const auto s = words[i].letters();
        // both are in lexicographic code order
        REQUIRE(oracle::Seq(s.begin(), s.end()) == expected[i]);
      }
      CHECK(BigInt(words.size()) == count_reduced(rank, n));
    }
  }
}

TEST_CASE("enumeration at n = 7, 8 for rank 3 is complete and distinct") {
  for (int n : {7, 8}) {
    std::set<std::vector<Letter>> seen;
    std::size_t total = 0;
    for_each_reduced(3, n, [&](std::span<const Letter> s) {
      seen.emplace(s.begin(), s.end());
      ++total;
      REQUIRE(oracle::is_reduced({s.begin(), s.end()}));
    });
    CHECK(total == seen.size());
    CHECK(BigInt(total) == count_reduced(3, n));
  }
}

TEST_CASE("prefix partitioning reproduces the full enumeration") {
  std::vector<std::vector<Letter>> whole, parts;
  for_each_reduced(2, 6, [&](std::span<const Letter> s) { whole.emplace_back(s.begin(), s.end()); });
  for (const auto& prefix : reduced_prefixes(2, 2)) {
    for_each_reduced_with_prefix(2, 6, prefix, [&](std::span<const Letter> s) {
      parts.emplace_back(s.begin(), s.end());
    });
  }
  CHECK(whole == parts);
}

TEST_CASE("count_reduced and count_ball") {
  CHECK(count_reduced(2, 0) == 1);
  CHECK(count_reduced(2, 1) == 4);
  CHECK(count_reduced(2, 2) == 12);
  CHECK(count_reduced(3, 2) == 30);
  CHECK(count_ball(2, 0) == 1);
  CHECK(count_ball(2, 2) == 17);
  CHECK(count_ball(2, 5) == 485);
  for (int n = 0; n <= 60; ++n) {
    CHECK(count_ball(2, n) == 2 * pow_big(3, static_cast<unsigned>(n)) - 1);
  }
  // past 64-bit range
  CHECK(count_reduced(2, 45).str() == (4 * pow_big(3, 44)).str());
  CHECK(count_reduced(2, 45) > BigInt(std::numeric_limits<std::uint64_t>::max()));
}
