#include "primcount/f2prim.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "primcount/whitehead.hpp"

namespace primcount {

namespace {

constexpr Letter kA = 0, kB = 2;

void require_rank2(const Word& w) {
  if (w.rank() != 2) throw InputError("operation requires rank 2");
}

}  // namespace

std::string Vec2::str() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

Vec2 abelianization(const Word& w) {
  require_rank2(w);
  Vec2 v;
  for (Letter x : w.letters()) {
    const long sign = is_inverse_letter(x) ? -1 : 1;
    (x / 2 == 0 ? v.a : v.b) += sign;
  }
  return v;
}

Word christoffel_word(long p, long q) {
  if (p < 1 || q < 1 || std::gcd(p, q) != 1) {
    throw InputError("christoffel needs coprime p, q >= 1, got (" +
                     std::to_string(p) + "," + std::to_string(q) + ")");
  }
  const long n = p + q;
  std::vector<Letter> s;
  s.reserve(static_cast<std::size_t>(n));
  for (long i = 1; i <= n; ++i) {
    s.push_back((i * q) % n > ((i - 1) * q) % n ? kA : kB);
  }
  return Word::from_reduced(2, std::move(s));
}

CyclicWord christoffel(long p, long q) {
  return CyclicWord(christoffel_word(p, q));
}

Word sign_substitute(const Word& w, int sa, int sb) {
  require_rank2(w);
  std::vector<Letter> out(w.letters().begin(), w.letters().end());
  for (Letter& x : out) {
    const int sign = x / 2 == 0 ? sa : sb;
    if (sign < 0) x = inverse(x);
  }
  return Word::from_reduced(2, std::move(out));
}

std::vector<Vec2> class_vectors(long n) {
  if (n < 1) throw InputError("class length must be >= 1");
  if (n == 1) return {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  std::vector<Vec2> out;
  for (long p = 1; p < n; ++p) {
    const long q = n - p;
    if (std::gcd(p, q) != 1) continue;
    out.push_back({p, q});
    out.push_back({p, -q});
    out.push_back({-p, q});
    out.push_back({-p, -q});
  }
  return out;
}

std::size_t count_classes(long n) {
  if (n < 1) throw InputError("class length must be >= 1");
  if (n == 1) return 4;
  std::size_t count = 0;
  for (long p = 1; p < n; ++p) {
    if (std::gcd(p, n - p) == 1) count += 4;
  }
  return count;
}

PrimitiveClass primitive_class(Vec2 v) {
  const long p = std::labs(v.a), q = std::labs(v.b);
  if (std::gcd(p, q) != 1) {
    throw InputError("vector " + v.str() + " is not primitive");
  }
  Word w(2);
  if (q == 0) {
    w = Word::from_reduced(2, {v.a > 0 ? kA : inverse(kA)});
  } else if (p == 0) {
    w = Word::from_reduced(2, {v.b > 0 ? kB : inverse(kB)});
  } else {
    w = sign_substitute(christoffel_word(p, q), v.a > 0 ? 1 : -1,
                        v.b > 0 ? 1 : -1);
  }
  return {v, CyclicWord(w)};
}

std::vector<PrimitiveClass> enumerate_classes(long max_length) {
  if (max_length < 1) throw InputError("max length must be >= 1");
  std::vector<PrimitiveClass> out;
  for (long n = 1; n <= max_length; ++n) {
    for (const Vec2& v : class_vectors(n)) out.push_back(primitive_class(v));
  }
  return out;
}

long totient(long n) {
  if (n < 1 || n > 1'000'000) throw InputError("totient argument out of range");
  long result = n;
  long m = n;
  for (long d = 2; d * d <= m; ++d) {
    if (m % d != 0) continue;
    while (m % d == 0) m /= d;
    result -= result / d;
  }
  if (m > 1) result -= result / m;
  return result;
}

BigInt count_cyc_reduced_primitive_words(long n) {
  return BigInt(n) * BigInt(count_classes(n));
}

BigInt conjugator_count(int rank, long k) {
  Alphabet check(rank);
  if (k < 0) throw InputError("negative conjugator length");
  if (k == 0) return 1;
  return BigInt(2 * rank - 2) * pow_big(2 * rank - 1, static_cast<unsigned>(k - 1));
}

BigInt count_primitives(long n) {
  if (n < 1) throw InputError("length must be >= 1");
  BigInt total = 0;
  for (long m = n; m >= 1; m -= 2) {
    total += count_cyc_reduced_primitive_words(m) * conjugator_count(2, (n - m) / 2);
  }
  return total;
}

void CountTable::set(long n, BigInt count) {
  if (n < 0 || count < 0) throw InputError("count table entries must be >= 0");
  per_length_[n] = std::move(count);
}

BigInt CountTable::at(long n) const {
  auto it = per_length_.find(n);
  return it == per_length_.end() ? BigInt(0) : it->second;
}

BigInt CountTable::cumulative(long n) const {
  BigInt total = 0;
  for (const auto& [len, c] : per_length_) {
    if (len > n) break;
    total += c;
  }
  return total;
}

bool CountTable::covers(long n) const {
  for (long k = 0; k <= n; ++k) {
    if (!per_length_.contains(k)) return false;
  }
  return true;
}

long CountTable::max_length() const {
  return per_length_.empty() ? -1 : per_length_.rbegin()->first;
}

std::string CountTable::to_csv() const {
  std::ostringstream os;
  os << "n,count\n";
  for (const auto& [n, c] : per_length_) os << n << ',' << c << '\n';
  return os.str();
}

CountTable CountTable::from_csv(const std::string& text, int rank) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "n,count") {
    throw InputError("count CSV must start with header 'n,count'");
  }
  CountTable table(rank);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw InputError("bad count CSV row: " + line);
    try {
      table.set(std::stol(line.substr(0, comma)), BigInt(line.substr(comma + 1)));
    } catch (const std::exception&) {
      throw InputError("bad count CSV row: " + line);
    }
  }
  return table;
}

std::string CountTable::to_json() const {
  nlohmann::ordered_json j;
  j["rank"] = rank_;
  j["per_length"] = nlohmann::ordered_json::object();
  for (const auto& [n, c] : per_length_) j["per_length"][std::to_string(n)] = c.str();
  return j.dump(2);
}

CountTable CountTable::from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    CountTable table(j.at("rank").get<int>());
    for (const auto& [key, value] : j.at("per_length").items()) {
      table.set(std::stol(key), BigInt(value.get<std::string>()));
    }
    return table;
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(std::string("bad count JSON: ") + e.what());
  }
}

CountTable table_all(int rank, long max_length) {
  CountTable t(rank);
  for (long n = 0; n <= max_length; ++n) t.set(n, count_reduced(rank, static_cast<int>(n)));
  return t;
}

CountTable table_primitive(long max_length) {
  CountTable t(2);
  t.set(0, 0);
  for (long n = 1; n <= max_length; ++n) t.set(n, count_primitives(n));
  return t;
}

CountTable table_cyc_primitive(long max_length) {
  CountTable t(2);
  t.set(0, 0);
  for (long n = 1; n <= max_length; ++n) t.set(n, count_cyc_reduced_primitive_words(n));
  return t;
}

BruteForceTables table_bruteforce(int rank, long max_length, int threads) {
  BruteForceTables out{CountTable(rank), CountTable(rank)};
  for (long n = 0; n <= max_length; ++n) {
    const ScanCounts c = scan_primitive_words(rank, static_cast<int>(n), threads);
    out.primitive.set(n, c.primitive);
    out.cyc_primitive.set(n, c.cyclically_reduced_primitive);
  }
  return out;
}

}  // namespace primcount
