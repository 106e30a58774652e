#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "distributions.hpp"

using namespace ssnet;

TEST_CASE("benford pmf") {
  CHECK(std::abs(benford_pmf(1, 10) - 0.301) < 0.0005);
  CHECK(std::abs(benford_pmf(9, 10) - 0.046) < 0.0005);
  CHECK(benford_pmf(1, 2) == 1.0);
  CHECK_THROWS_AS(benford_pmf(0, 10), error);
  CHECK_THROWS_AS(benford_pmf(10, 10), error);
  CHECK_THROWS_AS(benford_pmf(1, 1), error);
  try {
    benford_pmf(10, 10);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::digit_out_of_range);
  }
  try {
    benford_pmf(1, 1);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::base_too_small);
  }
}

TEST_CASE("zipf pmf in both modes") {
  CHECK(std::abs(zipf_pmf(ZipfModel::top_match(9, 0.301), 4) - 0.075) < 0.005);
  CHECK(zipf_pmf(ZipfModel::harmonic(1), 1) == 1.0);
  // hand oracle: (1/2) / H_3 with H_3 = 11/6
  CHECK(std::abs(zipf_pmf(ZipfModel::harmonic(3), 2) - 3.0 / 11.0) < 1e-12);
  CHECK(std::abs(zipf_pmf(ZipfModel::harmonic(3), 2) - 0.2727) < 1e-4);
  CHECK_THROWS_AS(zipf_pmf(ZipfModel::harmonic(3), 4), error);
  CHECK_THROWS_AS(zipf_pmf(ZipfModel::harmonic(3), 0), error);
}

TEST_CASE("power law pmf") {
  PowerLawModel quadratic(2.0, 1, 10);
  CHECK(power_law_pmf(quadratic, 3, false) == doctest::Approx(1.0 / 9.0).epsilon(1e-14));
  CHECK(power_law_pmf(quadratic, 1, false) == 1.0);
  // hand oracle: (1/4) / (1 + 1/4 + 1/9)
  PowerLawModel small(2.0, 1, 3);
  CHECK(std::abs(power_law_pmf(small, 2, true) - 0.25 / (1.0 + 0.25 + 1.0 / 9.0)) < 1e-14);
  CHECK(std::abs(power_law_pmf(small, 2, true) - 0.18367) < 1e-4);
  CHECK_THROWS_AS(power_law_pmf(quadratic, 11, false), error);
  CHECK_THROWS_AS(PowerLawModel(-1.0, 1, 5), error);
  try {
    PowerLawModel(0.0, 1, 5);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::bad_exponent);
  }
}

TEST_CASE("pareto density") {
  CHECK(pareto_density(ParetoModel(1.0, 1.0), 1.0) == 1.0);
  CHECK(pareto_density(ParetoModel(1.0, 1.0), 2.0) == 0.25);
  CHECK(std::abs(pareto_density(ParetoModel(2.0, 3.0), 3.0) - 2.0 / 3.0) < 1e-12);
  CHECK_THROWS_AS(pareto_density(ParetoModel(1.0, 1.0), 0.5), error);
}

TEST_CASE("pareto density integrates to one") {
  // Simpson quadrature over [x_m, 1000] plus the analytic tail (x_m/x)^alpha
  ParetoModel model(1.5, 2.0);
  double upper = 1000.0;
  int steps = 200000;  // even
  double h = (upper - model.x_min) / steps;
  double integral = pareto_density(model, model.x_min) + pareto_density(model, upper);
  for (int i = 1; i < steps; ++i)
    integral += (i % 2 == 1 ? 4.0 : 2.0) * pareto_density(model, model.x_min + i * h);
  integral *= h / 3.0;
  double tail = std::pow(model.x_min / upper, model.alpha);
  CHECK(std::abs(integral + tail - 1.0) < 1e-9);
}

TEST_CASE("geometric rank pmf and nominal degrees") {
  GeometricRankModel paper(10.0, 1.4, NodeCount::finite(11));
  CHECK(nominal_degree(paper, 1) == 10.0);
  CHECK(std::abs(nominal_degree(paper, 2) - 10.0 / 1.4) < 1e-12);
  CHECK(std::floor(nominal_degree(paper, 2) + 0.5) == 7.0);

  GeometricRankModel halving(1.0, 2.0, NodeCount::finite(8));
  auto table = table_frequencies(halving, 4, false);
  CHECK(table[2].second == 0.25);  // un-normalized sequence 1, 1/2, 1/4, 1/8

  CHECK_THROWS_AS(nominal_degree(paper, 12), error);
  try {
    GeometricRankModel(10.0, 0.9, NodeCount::finite(5));
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::ratio_not_above_one);
  }
}

TEST_CASE("aggregate connectivity, finite and infinite") {
  CHECK(std::abs(aggregate_connectivity(10.0, 1.4, NodeCount::infinite()) - 35.0) < 1e-9);
  CHECK(aggregate_connectivity(1.0, 2.0, NodeCount::finite(3)) == 1.75);
  CHECK(aggregate_connectivity(7.0, 3.7, NodeCount::finite(1)) == doctest::Approx(7.0));
  CHECK_THROWS_AS(aggregate_connectivity(1.0, 1.0, NodeCount::finite(3)), error);

  SUBCASE("finite totals sit strictly below the infinite limit") {
    for (double a : {1.2, 1.5, 2.0, 3.0}) {
      double limit = aggregate_connectivity(5.0, a, NodeCount::infinite());
      for (std::uint64_t n : {std::uint64_t{1}, std::uint64_t{2}, std::uint64_t{5},
                              std::uint64_t{20}}) {
        CHECK(aggregate_connectivity(5.0, a, NodeCount::finite(n)) < limit);
      }
      // by n = 100 the geometric tail drops below one ulp of the limit
      CHECK(aggregate_connectivity(5.0, a, NodeCount::finite(100)) <= limit);
    }
  }
}

TEST_CASE("aggregate sensitivity matches a finite difference") {
  CHECK(aggregate_sensitivity(2.0) == -1.0);
  CHECK(aggregate_sensitivity(1.5) == -4.0);
  double h = 1e-6;
  auto s = [](double a) { return aggregate_connectivity(1.0, a, NodeCount::infinite()); };
  double numeric = (s(3.0 + h) - s(3.0 - h)) / (2.0 * h);
  CHECK(std::abs(aggregate_sensitivity(3.0) - numeric) < 1e-6);
  CHECK(std::abs(aggregate_sensitivity(3.0) - (-0.25)) < 1e-12);
  CHECK_THROWS_AS(aggregate_sensitivity(1.0), error);
}

TEST_CASE("frequency tables match the pmf operations") {
  auto benford = table_frequencies(BenfordModel(10), 9);
  REQUIRE(benford.size() == 9);
  const double printed[] = {0.301, 0.176, 0.125, 0.097, 0.079, 0.067, 0.058, 0.051, 0.046};
  for (int d = 0; d < 9; ++d) {
    CHECK(benford[d].first == static_cast<std::uint64_t>(d + 1));
    CHECK(std::abs(benford[d].second - printed[d]) < 0.0005);
    CHECK(benford[d].second == benford_pmf(d + 1, 10));
  }

  auto zipf = table_frequencies(ZipfModel::top_match(9, 0.301), 1);
  REQUIRE(zipf.size() == 1);
  CHECK(zipf[0].second == 0.301);

  // hand oracle: powers of 2/3
  auto geometric = table_frequencies(GeometricRankModel(1.0, 1.5, NodeCount::finite(9)), 5, false);
  const double powers[] = {1.0, 0.6667, 0.4444, 0.2963, 0.1975};
  for (int i = 0; i < 5; ++i) CHECK(std::abs(geometric[i].second - powers[i]) < 1e-4);

  CHECK_THROWS_AS(table_frequencies(BenfordModel(10), 10), error);
  try {
    table_frequencies(BenfordModel(10), 0);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::count_out_of_range);
  }
}

TEST_CASE("normalized pmfs sum to one") {
  auto sum_of = [](const FrequencyTable& t) {
    double s = 0.0;
    for (auto it = t.rbegin(); it != t.rend(); ++it) s += it->second;
    return s;
  };
  CHECK(std::abs(sum_of(table_frequencies(BenfordModel(10), 9)) - 1.0) < 1e-12);
  CHECK(std::abs(sum_of(table_frequencies(BenfordModel(7), 6)) - 1.0) < 1e-12);
  CHECK(std::abs(sum_of(table_frequencies(ZipfModel::harmonic(50), 50)) - 1.0) < 1e-12);
  CHECK(std::abs(sum_of(table_frequencies(PowerLawModel(2.5, 2, 60), 59, true)) - 1.0) < 1e-12);
  for (std::uint64_t n : {std::uint64_t{1}, std::uint64_t{2}, std::uint64_t{17},
                          std::uint64_t{400}}) {
    GeometricRankModel model(3.0, 1.3, NodeCount::finite(n));
    CHECK(std::abs(sum_of(table_frequencies(model, n, true)) - 1.0) < 1e-12);
  }
  // infinite support: the first 800 terms of a=1.1 carry all but ~1e-33
  GeometricRankModel infinite(1.0, 1.1, NodeCount::infinite());
  CHECK(std::abs(sum_of(table_frequencies(infinite, 800, true)) - 1.0) < 1e-12);
}

TEST_CASE("mid-term identities of the rank laws") {
  SUBCASE("geometric mid-terms are geometric means") {
    GeometricRankModel model(2.0, 1.7, NodeCount::finite(40));
    for (std::uint64_t k = 2; k < 40; ++k) {
      double mid = geometric_rank_pmf(model, k);
      double gm = std::sqrt(geometric_rank_pmf(model, k - 1) * geometric_rank_pmf(model, k + 1));
      CHECK(std::abs(mid - gm) < 1e-12);
    }
  }
  SUBCASE("zipf mid-terms are harmonic means") {
    ZipfModel model = ZipfModel::harmonic(40);
    for (std::uint64_t k = 2; k < 40; ++k) {
      double lo = zipf_pmf(model, k - 1), mid = zipf_pmf(model, k), hi = zipf_pmf(model, k + 1);
      CHECK(std::abs(mid - 2.0 * lo * hi / (lo + hi)) < 1e-12);
    }
  }
  SUBCASE("power-law mid-terms approach geometric means") {
    PowerLawModel model(2.0, 1, 200);
    auto p = [&](std::uint64_t k) { return power_law_pmf(model, k, false); };
    double ratio = p(100) * p(100) / (p(99) * p(101));
    CHECK(std::abs(ratio - std::pow(1.0 - 1e-4, model.lambda)) < 1e-15);
    CHECK(std::abs(ratio - 1.0) < 1e-3);
  }
}

TEST_CASE("rank pmfs decrease monotonically") {
  auto strictly_decreasing = [](const FrequencyTable& t) {
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (!(t[i].second < t[i - 1].second)) return false;
    }
    return true;
  };
  CHECK(strictly_decreasing(table_frequencies(BenfordModel(10), 9)));
  CHECK(strictly_decreasing(table_frequencies(ZipfModel::harmonic(30), 30)));
  CHECK(strictly_decreasing(table_frequencies(PowerLawModel(2.0, 1, 30), 30, true)));
  CHECK(strictly_decreasing(
      table_frequencies(GeometricRankModel(5.0, 1.4, NodeCount::finite(30)), 30, true)));
}

TEST_CASE("clamped nominal degrees never sum below the nominal total") {
  for (double a : {1.2, 1.4, 2.0}) {
    GeometricRankModel model(9.0, a, NodeCount::finite(25));
    double nominal_sum = 0.0, clamped_sum = 0.0;
    for (std::uint64_t k = 1; k <= 25; ++k) {
      double d = nominal_degree(model, k);
      nominal_sum += d;
      clamped_sum += std::max(1.0, d);
    }
    CHECK(clamped_sum >= nominal_sum);
  }
}

TEST_CASE("node count variants") {
  CHECK(NodeCount::infinite().is_infinite());
  CHECK_FALSE(NodeCount::finite(4).is_infinite());
  CHECK(NodeCount::finite(4).value() == 4);
  CHECK_THROWS_AS(NodeCount::finite(0), error);
  CHECK_THROWS_AS(NodeCount::infinite().value(), error);
}
