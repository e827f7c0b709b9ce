#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "primcount/f2prim.hpp"
#include "primcount/whitehead.hpp"

using namespace primcount;

namespace {

Word W(const char* text) { return Word::parse(text, 2); }

// Christoffel words via the standard-pair tree: (a, b) -> (u, uv), (uv, v).
// Collects uv for every node with |uv| <= max_len, keyed by (#a, #b).
void christoffel_tree(const std::string& u, const std::string& v, std::size_t max_len,
                      std::map<std::pair<long, long>, std::string>& out) {
  const std::string uv = u + v;
  if (uv.size() > max_len) return;
  const long pa = static_cast<long>(std::count(uv.begin(), uv.end(), 'a'));
  out[{pa, static_cast<long>(uv.size()) - pa}] = uv;
  christoffel_tree(u, uv, max_len, out);
  christoffel_tree(uv, v, max_len, out);
}

}  // namespace

TEST_CASE("abelianization") {
  CHECK(abelianization(W("aB")) == Vec2{1, -1});
  CHECK(abelianization(W("aabab")) == Vec2{3, 2});
  CHECK(abelianization(W("abAB")) == Vec2{0, 0});
  CHECK_THROWS_AS(abelianization(Word::parse("abc", 3)), InputError);
}

TEST_CASE("christoffel words") {
  CHECK(christoffel_word(1, 1).str() == "ab");
  CHECK(christoffel_word(2, 1).str() == "aab");
  CHECK(christoffel_word(3, 2).str() == "aabab");
  CHECK(christoffel_word(1, 3).str() == "abbb");
  CHECK_THROWS_AS(christoffel_word(2, 2), InputError);
  CHECK_THROWS_AS(christoffel_word(0, 1), InputError);

  for (auto [p, q] : {std::pair{1L, 1L}, {2L, 1L}, {3L, 2L}, {5L, 3L}, {7L, 4L}}) {
    const CyclicWord c = christoffel(p, q);
    CHECK(abelianization(c.word()) == Vec2{p, q});
    CHECK(c.word().is_cyclically_reduced());
    CHECK(is_primitive(c.word()));
  }
}

TEST_CASE("christoffel formula matches the standard-pair tree") {
  std::map<std::pair<long, long>, std::string> tree;
  christoffel_tree("a", "b", 30, tree);
  std::size_t checked = 0;
  for (long n = 2; n <= 30; ++n) {
    for (long p = 1; p < n; ++p) {
      if (std::gcd(p, n - p) != 1) continue;
      REQUIRE(tree.contains({p, n - p}));
      CHECK(christoffel_word(p, n - p).str() == tree[{p, n - p}]);
      ++checked;
    }
  }
  CHECK(checked == tree.size());
}

TEST_CASE("enumerate_classes counts") {
  CHECK(enumerate_classes(1).size() == 4);
  CHECK(enumerate_classes(2).size() == 8);
  CHECK(enumerate_classes(5).size() == 40);
  for (long n = 2; n <= 40; ++n) {
    std::size_t expected = 4;
    for (long k = 2; k <= n; ++k) expected += 4 * static_cast<std::size_t>(oracle::totient_by_gcd(k));
    CHECK(enumerate_classes(n).size() == expected);
  }
}

TEST_CASE("class invariants hold and every representative is primitive (N <= 14)") {
  PrimitivityOracle oracle(2);
  for (const auto& cls : enumerate_classes(14)) {
    CHECK(abelianization(cls.representative.word()) == cls.vector);
    CHECK(cls.length() == static_cast<std::size_t>(std::labs(cls.vector.a) + std::labs(cls.vector.b)));
    REQUIRE(oracle.is_primitive(cls.representative.letters()));
  }
}

TEST_CASE("class representatives are pairwise rotation-inequivalent") {
  std::set<std::string> reps;
  const auto classes = enumerate_classes(16);
  for (const auto& cls : classes) reps.insert(cls.representative.str());
  CHECK(reps.size() == classes.size());
}

TEST_CASE("sign substitutions commute with the vector") {
  const Word c = christoffel_word(5, 3);
  for (int sa : {1, -1}) {
    for (int sb : {1, -1}) {
      CHECK(abelianization(sign_substitute(c, sa, sb)) == Vec2{5L * sa, 3L * sb});
    }
  }
  CHECK(primitive_class({-1, 0}).representative.str() == "A");
  CHECK(primitive_class({0, -1}).representative.str() == "B");
  CHECK_THROWS_AS(primitive_class({2, 4}), InputError);
  CHECK_THROWS_AS(primitive_class({0, 0}), InputError);
}

TEST_CASE("completeness: class rotations equal the oracle's cyclic primitives (n <= 12)") {
  PrimitivityOracle oracle(2);
  std::map<long, std::set<std::string>> from_classes;
  for (const auto& cls : enumerate_classes(12)) {
    for (const auto& r : cls.representative.rotations()) {
      from_classes[static_cast<long>(r.length())].insert(r.str());
    }
  }
  for (int n = 1; n <= 12; ++n) {
    std::set<std::string> from_oracle;
    for_each_reduced(2, n, [&](std::span<const Letter> s) {
      if (s.size() > 1 && s.front() == inverse(s.back())) return;
      if (oracle.is_primitive(s)) from_oracle.insert(oracle::to_text({s.begin(), s.end()}));
    });
    REQUIRE(from_oracle == from_classes[n]);
  }
}

TEST_CASE("totient") {
  CHECK(totient(1) == 1);
  CHECK(totient(12) == 4);
  CHECK(totient(97) == 96);
  CHECK(totient(1'000'000) == 400'000);
  for (long n = 1; n <= 300; ++n) REQUIRE(totient(n) == oracle::totient_by_gcd(n));
  CHECK_THROWS_AS(totient(0), InputError);
  CHECK_THROWS_AS(totient(1'000'001), InputError);
}

TEST_CASE("count_cyc_reduced_primitive_words") {
  CHECK(count_cyc_reduced_primitive_words(1) == 4);
  CHECK(count_cyc_reduced_primitive_words(3) == 24);
  CHECK(count_cyc_reduced_primitive_words(5) == 80);
  for (long n = 2; n <= 1000; ++n) {
    REQUIRE(count_cyc_reduced_primitive_words(n) == 4 * n * totient(n));
  }
}

TEST_CASE("conjugator_count") {
  CHECK(conjugator_count(2, 0) == 1);
  CHECK(conjugator_count(2, 1) == 2);
  CHECK(conjugator_count(2, 3) == 18);
  // brute force: u with u.c.u^-1 reduced as a plain concatenation
  for (const char* core : {"a", "B", "ab", "aabab", "abAB"}) {
    const Word c = W(core);
    for (int k = 0; k <= 6; ++k) {
      std::size_t ok = 0;
      for (const auto& u : enumerate_reduced(2, k)) {
        oracle::Seq s(u.letters().begin(), u.letters().end());
        s.insert(s.end(), c.letters().begin(), c.letters().end());
        const Word ui = u.inverse();
        s.insert(s.end(), ui.letters().begin(), ui.letters().end());
        if (oracle::is_reduced(s)) ++ok;
      }
      CHECK(BigInt(ok) == conjugator_count(2, k));
    }
  }
  CHECK(conjugator_count(3, 2) == 4 * 5);
}

TEST_CASE("count_primitives") {
  CHECK(count_primitives(1) == 4);
  CHECK(count_primitives(3) == 32);
  CHECK(count_primitives(5) == 152);
  CHECK_THROWS_AS(count_primitives(0), InputError);
}

TEST_CASE("convolution equals brute force through n = 10") {
  const auto brute = table_bruteforce(2, 10, 2);
  for (long n = 1; n <= 10; ++n) {
    CHECK(brute.primitive.at(n) == count_primitives(n));
    CHECK(brute.cyc_primitive.at(n) == count_cyc_reduced_primitive_words(n));
  }
  CHECK(brute.primitive.at(0) == 0);
}

TEST_CASE("CountTable") {
  const CountTable t = table_primitive(60);
  CHECK(t.covers(60));
  CHECK_FALSE(t.covers(61));
  CHECK(t.cumulative(3) == 4 + 8 + 32);
  BigInt sum = 0;
  for (long n = 0; n <= 60; ++n) {
    sum += t.at(n);
    REQUIRE(t.cumulative(n) == sum);
  }
  CHECK(table_primitive(100).at(100) > BigInt(std::numeric_limits<std::uint64_t>::max()));

  const std::string csv = t.to_csv();
  CHECK(csv.rfind("n,count\n0,0\n1,4\n2,8\n3,32\n", 0) == 0);
  CHECK(CountTable::from_csv(csv, 2) == t);
  CHECK(CountTable::from_json(t.to_json()) == t);
  CHECK(t.to_json().find("\"3\": \"32\"") != std::string::npos);

  CHECK_THROWS_AS(CountTable::from_csv("x,y\n", 2), InputError);
  CHECK_THROWS_AS(CountTable::from_csv("n,count\n1;2\n", 2), InputError);
  CHECK_THROWS_AS(CountTable::from_json("{\"rank\":2}"), InputError);
  CountTable bad(2);
  CHECK_THROWS_AS(bad.set(1, -1), InputError);
}
