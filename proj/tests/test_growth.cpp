#include <cmath>

#include "doctest.h"
#include "primcount/growth.hpp"

using namespace primcount;

TEST_CASE("estimate: the whole group has rate 1") {
  const CountTable all = table_all(2, 30);
  for (long n : {1L, 10L, 30L}) {
    const auto e = estimate(all, n);
    CHECK(e.numerator == e.denominator);
    CHECK(e.d_n == 1.0);
  }
  const CountTable all3 = table_all(3, 12);
  CHECK(estimate(all3, 12).d_n == 1.0);
}

TEST_CASE("estimate: identity only") {
  CountTable eps(2);
  eps.set(0, 1);
  for (long n = 1; n <= 10; ++n) eps.set(n, 0);
  const auto e = estimate(eps, 10);
  CHECK(e.numerator == 1);
  CHECK(e.denominator == 2 * pow_big(3, 10) - 1);
  CHECK(e.d_n == doctest::Approx(std::pow(1.0 / (2 * std::pow(3.0, 10) - 1), 0.1)).epsilon(1e-12));
}

TEST_CASE("estimate: cyclically reduced primitives at N = 40") {
  const auto e = estimate(table_cyc_primitive(40), 40);
  // closed form: 4 + sum_{n=2}^{40} 4 n phi(n)
  BigInt num = 4;
  for (long n = 2; n <= 40; ++n) num += 4 * n * totient(n);
  CHECK(e.numerator == num);
  CHECK(e.denominator == 2 * pow_big(3, 40) - 1);
  CHECK(e.d_n > 1.0 / 3);
  CHECK(e.d_n < 0.5);
  const double direct = std::pow(num.convert_to<double>() / e.denominator.convert_to<double>(), 1.0 / 40);
  CHECK(e.d_n == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("estimate errors") {
  const CountTable t = table_primitive(10);
  CHECK_THROWS_AS(estimate(t, 11), InputError);
  CHECK_THROWS_AS(estimate(t, 0), InputError);
  CountTable too_big(2);
  for (long n = 0; n <= 3; ++n) too_big.set(n, 1000);
  CHECK_THROWS_AS(estimate(too_big, 3), InputError);
}

TEST_CASE("slope_fit exact geometric and constant series") {
  CountTable geo(2), flat(2);
  for (long n = 0; n <= 40; ++n) {
    geo.set(n, pow_big(3, static_cast<unsigned>(n)));
    flat.set(n, 7);
  }
  const auto g = slope_fit(geo, 5, 40, 3.0);
  CHECK(g.slope == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(g.residual < 1e-10);
  CHECK(g.points == 36);
  const auto f = slope_fit(flat, 5, 40, 3.0);
  CHECK(std::abs(f.slope) < 1e-12);
}

TEST_CASE("slope_fit recovers log_base(r) for a * r^n") {
  for (auto [a, r] : {std::pair{5, 2}, {1, 7}, {12, 3}, {3, 10}}) {
    CountTable t(2);
    for (long n = 0; n <= 80; ++n) t.set(n, a * pow_big(r, static_cast<unsigned>(n)));
    const auto fit = slope_fit(t, 10, 80, 3.0);
    CHECK(std::abs(fit.slope - std::log(r) / std::log(3.0)) < 1e-10);
  }
}

TEST_CASE("slope_fit skips zero bins and rejects thin data") {
  CountTable t(2);
  for (long n = 0; n <= 20; ++n) t.set(n, n % 2 == 0 ? pow_big(3, static_cast<unsigned>(n)) : BigInt(0));
  const auto fit = slope_fit(t, 2, 20, 3.0);
  CHECK(fit.points == 10);
  CHECK(fit.slope == doctest::Approx(1.0));
  CHECK_THROWS_AS(slope_fit(t, 2, 5, 3.0), InputError);
  CHECK_THROWS_AS(slope_fit(t, 5, 5, 3.0), InputError);
  CHECK_THROWS_AS(slope_fit(t, 2, 20, 1.0), InputError);
}

TEST_CASE("slope_fit: primitive counts grow like 3^(n/2)") {
  const auto fit = slope_fit(table_primitive(40), 20, 40, 3.0);
  CHECK(fit.slope == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("cumulative fit of cyclically reduced primitives is subexponential") {
  const auto fit = slope_fit(table_cyc_primitive(300), 100, 300, 3.0, SeriesKind::Cumulative);
  CHECK(fit.slope >= 0.0);
  CHECK(fit.slope <= 0.02);
}

TEST_CASE("d_N checkpoints: monotone and above the fitted rate") {
  const CountTable prim = table_primitive(50);
  const CountTable cyc = table_cyc_primitive(50);
  const auto fit = slope_fit(prim, 20, 40, 3.0);
  const double fitted_rate = std::pow(3.0, fit.slope - 1);
  const auto pp = checkpoints(prim, {20, 30, 40, 50});
  const auto cp = checkpoints(cyc, {20, 30, 40, 50});
  for (std::size_t i = 0; i < pp.size(); ++i) {
    CHECK(pp[i].estimate.d_n > fitted_rate);
    CHECK(pp[i].tail_sup >= pp[i].estimate.d_n);
    if (i > 0) {
      CHECK(pp[i].estimate.d_n <= pp[i - 1].estimate.d_n);
      CHECK(cp[i].estimate.d_n <= cp[i - 1].estimate.d_n);
      // gap to the fitted rate shrinks
      CHECK(pp[i].estimate.d_n - fitted_rate < pp[i - 1].estimate.d_n - fitted_rate);
    }
  }
}

TEST_CASE("growth report JSON") {
  const CountTable prim = table_primitive(20);
  const auto json = growth_report_json("primitive", 2, checkpoints(prim, {10, 20}),
                                       slope_fit(prim, 10, 20, 3.0));
  CHECK(json.find("\"set\": \"primitive\"") != std::string::npos);
  CHECK(json.find("\"numerator\": \"") != std::string::npos);
  CHECK(json.find("\"slope_fit\"") != std::string::npos);
  CHECK(json.find("\"range\"") != std::string::npos);
}

TEST_CASE("fit_line") {
  const auto f = fit_line({1, 2, 3}, {2, 4, 6});
  CHECK(f.slope == doctest::Approx(2));
  CHECK(f.intercept == doctest::Approx(0).epsilon(1e-12));
  CHECK_THROWS_AS(fit_line({1}, {1}), InputError);
  CHECK_THROWS_AS(fit_line({1, 1}, {1, 2}), InputError);
}
