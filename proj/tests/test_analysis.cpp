#include <doctest.h>

#include <cmath>
#include <vector>

#include "analysis.hpp"
#include "distributions.hpp"
#include "evolution.hpp"
#include "rng.hpp"
#include "solvers.hpp"

using namespace ssnet;

TEST_CASE("geometric fit") {
  std::vector<double> exact{8, 4, 2, 1};
  GeometricFit fit = fit_geometric(exact);
  CHECK(std::abs(fit.top - 8.0) < 1e-9);
  CHECK(std::abs(fit.ratio - 2.0) < 1e-9);
  CHECK(fit.goodness == doctest::Approx(1.0));
  CHECK(fit.n == 4);

  std::vector<double> flat{5, 5, 5};
  CHECK_THROWS_AS(fit_geometric(flat), error);
  std::vector<double> zero{4, 2, 0};
  CHECK_THROWS_AS(fit_geometric(zero), error);
  try {
    fit_geometric(flat);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::degenerate_input);
  }

  SUBCASE("quantized reference sequence, clamp tail stripped") {
    std::vector<double> quantized{10, 7, 5, 4, 3, 2, 1, 1, 1, 1, 1};
    GeometricFit trimmed = fit_geometric(strip_unit_tail(quantized));
    CHECK(trimmed.ratio > 1.25);
    CHECK(trimmed.ratio < 1.45);
  }
}

TEST_CASE("power-law fit") {
  std::vector<double> squares{1.0, 0.25, 1.0 / 9.0, 1.0 / 16.0};
  PowerLawFit fit = fit_power_law(squares);
  CHECK(std::abs(fit.exponent - 2.0) < 1e-9);
  CHECK(fit.goodness == doctest::Approx(1.0));

  std::vector<double> zipf{1.0, 0.5, 1.0 / 3.0, 0.25};
  CHECK(std::abs(fit_power_law(zipf).exponent - 1.0) < 1e-9);

  // geometric decay is log-linear in rank, not log-rank: visible mismatch
  std::vector<double> halving{1.0, 0.5, 0.25, 0.125, 0.0625, 0.03125};
  CHECK(fit_power_law(halving).goodness < 0.999);
  CHECK(fit_geometric(halving).goodness == doctest::Approx(1.0));
}

TEST_CASE("fit recovery on generated models") {
  SUBCASE("noiseless nominal degrees round-trip") {
    for (double a : {1.3, 1.6, 2.0}) {
      GeometricRankModel model(10.0, a, NodeCount::finite(30));
      std::vector<double> degrees;
      for (std::uint64_t k = 1; k <= 30; ++k) degrees.push_back(nominal_degree(model, k));
      GeometricFit fit = fit_geometric(degrees);
      CHECK(std::abs(fit.ratio - a) < 1e-9);
      CHECK(std::abs(fit.top - 10.0) < 1e-8);
    }
  }
  SUBCASE("quantized degrees recover the ratio within 0.1") {
    for (double a = 1.3; a <= 2.0 + 1e-9; a += 0.05) {
      GeometricRankModel model(49.0, a, NodeCount::finite(50));
      std::vector<std::uint32_t> q = quantize_degrees(model).degrees();
      std::vector<double> degrees(q.begin(), q.end());
      GeometricFit fit = fit_geometric(strip_unit_tail(degrees));
      CHECK(std::abs(fit.ratio - a) <= 0.1);
    }
  }
}

TEST_CASE("mid-term deviations separate the model families") {
  std::vector<double> geometric, zipf, power;
  for (int k = 1; k <= 20; ++k) {
    geometric.push_back(3.0 * std::pow(1.7, -k));
    zipf.push_back(1.0 / k);
    power.push_back(std::pow(double(k + 98), -2.0));  // ranks 99..118
  }
  MidtermDeviation g = midterm_deviation(geometric);
  CHECK(g.geometric <= 1e-12);
  CHECK(g.harmonic > 1e-4);

  MidtermDeviation z = midterm_deviation(zipf);
  CHECK(z.harmonic <= 1e-12);
  CHECK(z.geometric > 1e-4);

  MidtermDeviation p = midterm_deviation(power);
  CHECK(p.geometric <= 3e-4);

  CHECK_THROWS_AS(midterm_deviation(std::vector<double>{1.0, 0.5}), error);
  CHECK_THROWS_AS(midterm_deviation(std::vector<double>{1.0, -0.5, 2.0}), error);
  try {
    midterm_deviation(std::vector<double>{1.0, 0.5});
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::too_short);
  }
}

TEST_CASE("pareto share") {
  std::vector<double> uniform(10, 3.0);
  CHECK(pareto_share(uniform, 0.2) == doctest::Approx(0.2).epsilon(1e-12));
  std::vector<double> single{7.0};
  CHECK(pareto_share(single, 0.5) == 1.0);

  std::vector<double> halving;
  for (int i = 0; i < 10; ++i) halving.push_back(std::pow(2.0, -i));
  CHECK(std::abs(pareto_share(halving, 0.2) - 0.7508) < 1e-4);

  SUBCASE("monotone in the fraction") {
    double prev = 0.0;
    for (double f : {0.1, 0.2, 0.5, 0.8, 1.0}) {
      double share = pareto_share(halving, f);
      CHECK(share >= prev);
      prev = share;
    }
    CHECK(prev == doctest::Approx(1.0));
  }

  SUBCASE("closes the loop with the solved 80-20 models") {
    for (std::uint64_t n = 10; n <= 55; n += 5) {
      double a = solve_pareto_ratio(n).value;
      std::vector<double> degrees;
      for (std::uint64_t k = 0; k < n; ++k) degrees.push_back(std::pow(a, -double(k)));
      CHECK(std::abs(pareto_share(degrees, 0.2) - 0.8) < 0.02);
    }
  }

  CHECK_THROWS_AS(pareto_share(std::vector<double>{}, 0.2), error);
  try {
    pareto_share(std::vector<double>{}, 0.2);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::empty_input);
  }
}

TEST_CASE("total variation distance") {
  std::vector<double> p{0.5, 0.3, 0.2};
  CHECK(tv_distance(p, p) == 0.0);
  std::vector<double> point_a{1.0, 0.0}, point_b{0.0, 1.0};
  CHECK(tv_distance(point_a, point_b) == 1.0);

  SUBCASE("printed reference rows stay within (0, 0.2)") {
    std::vector<double> benford{0.301, 0.176, 0.125, 0.097, 0.079, 0.067, 0.058, 0.051, 0.046};
    std::vector<double> zipf{0.301, 0.155, 0.103, 0.075, 0.060, 0.051, 0.043, 0.038, 0.034};
    // direct oracle with explicit renormalization
    double sb = 0.0, sz = 0.0;
    for (double v : benford) sb += v;
    for (double v : zipf) sz += v;
    double direct = 0.0;
    for (int i = 0; i < 9; ++i) direct += std::abs(benford[i] / sb - zipf[i] / sz);
    direct *= 0.5;
    double got = tv_distance(benford, zipf);
    CHECK(std::abs(got - direct) < 1e-14);
    CHECK(got > 0.0);
    CHECK(got < 0.2);
  }

  SUBCASE("metric properties on pseudo-random triples") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<double> a(6), b(6), c(6);
      for (int i = 0; i < 6; ++i) {
        a[i] = 1 + double(rng.bounded(1000));
        b[i] = 1 + double(rng.bounded(1000));
        c[i] = 1 + double(rng.bounded(1000));
      }
      double ab = tv_distance(a, b), ba = tv_distance(b, a);
      double ac = tv_distance(a, c), cb = tv_distance(c, b);
      CHECK(ab == ba);
      CHECK(ab <= ac + cb + 1e-12);
      CHECK(ab >= 0.0);
      CHECK(ab <= 1.0);
    }
  }

  CHECK_THROWS_AS(tv_distance(p, std::vector<double>{0.5, 0.5}), error);
  try {
    tv_distance(p, std::vector<double>{0.5, 0.5});
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::support_mismatch);
  }
}

TEST_CASE("characteristic path length") {
  SimpleGraph triangle(3, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(characteristic_path_length(triangle) == 1.0);

  SimpleGraph path3(3, {{1, 2}, {2, 3}});
  CHECK(characteristic_path_length(path3) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));

  SimpleGraph star5(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
  CHECK(characteristic_path_length(star5) == doctest::Approx(1.6).epsilon(1e-14));

  SimpleGraph split(4, {{1, 2}, {3, 4}});
  CHECK(component_count(split) == 2);
  CHECK_THROWS_AS(characteristic_path_length(split), error);
  try {
    characteristic_path_length(split);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::disconnected);
    CHECK(std::string(e.what()).find("2 components") != std::string::npos);
  }

  SUBCASE("realized oscillation stages stay within twice the depth") {
    auto stages = evolve(ModeSpec{2, "a"}, ModeSpec{3, "b"}, 5, 2);
    for (const EvolutionStage& stage : stages) {
      RealizedStage realized = realize_stage(stage);
      double delta = characteristic_path_length(realized.graph);
      CHECK(delta > 0.0);
      CHECK(delta <= 2.0 * stage.depth);
    }
  }
}

TEST_CASE("largest component extraction") {
  SimpleGraph split(6, {{1, 2}, {2, 3}, {4, 5}});
  SimpleGraph main = largest_component(split);
  CHECK(main.node_count() == 3);
  CHECK(main.edge_count() == 2);
  CHECK(component_count(main) == 1);
  // node 6 is isolated, nodes 4,5 form the smaller piece
  CHECK(component_count(split) == 3);
}

TEST_CASE("splitmix64 reference vectors") {
  SplitMix64 zero(0);
  CHECK(zero.next() == 16294208416658607535ULL);
  CHECK(zero.next() == 7960286522194355700ULL);
  CHECK(zero.next() == 487617019471545679ULL);

  SplitMix64 seeded(1234567);
  CHECK(seeded.next() == 6457827717110365317ULL);
  CHECK(seeded.next() == 3203168211198807973ULL);
  CHECK(seeded.next() == 9817491932198370423ULL);
}

TEST_CASE("uniform mixture simulation") {
  SUBCASE("frozen small run") {
    // 16 processes, range 100, seed 7: digit tallies fixed by the documented
    // generator, cross-checked against an independent implementation
    std::vector<double> freq = benford_mixture_sim(16, 100, 7);
    const int counts[] = {0, 1, 2, 5, 1, 5, 1, 0, 1};
    for (int d = 0; d < 9; ++d) CHECK(freq[d] == doctest::Approx(counts[d] / 16.0));
  }

  SUBCASE("deterministic for a fixed seed") {
    CHECK(benford_mixture_sim(5000, 100000, 42) == benford_mixture_sim(5000, 100000, 42));
    CHECK(benford_mixture_sim(5000, 100000, 42) != benford_mixture_sim(5000, 100000, 43));
  }

  SUBCASE("base-2 leading digits are always 1") {
    std::vector<double> freq = benford_mixture_sim(1000, 50, 9, 2);
    REQUIRE(freq.size() == 1);
    CHECK(freq[0] == 1.0);
    std::vector<double> law{benford_pmf(1, 2)};
    CHECK(tv_distance(freq, law) == 0.0);
  }

  SUBCASE("single process gives a unit mass far from the first-digit law") {
    std::vector<double> freq = benford_mixture_sim(1, 10, 123);
    double total = 0.0;
    for (double f : freq) total += f;
    CHECK(total == 1.0);
    std::vector<double> law(9);
    for (int d = 1; d <= 9; ++d) law[d - 1] = benford_pmf(d, 10);
    CHECK(tv_distance(freq, law) > 0.5);
  }

  SUBCASE("converges to the exact mixture law, not to the first-digit law") {
    // exact law by direct summation: P(d) = (1/R) * sum_S count_d(S)/S
    const std::uint64_t range = 1000000;
    std::vector<double> exact(9, 0.0);
    {
      std::vector<double> running(10, 0.0);
      std::vector<std::uint64_t> count(10, 0);
      for (std::uint64_t s = 1; s <= range; ++s) {
        std::uint64_t lead = s;
        while (lead >= 10) lead /= 10;
        ++count[lead];
        for (int d = 1; d <= 9; ++d) running[d] += double(count[d]) / double(s);
      }
      for (int d = 1; d <= 9; ++d) exact[d - 1] = running[d] / double(range);
    }
    std::vector<double> law(9);
    for (int d = 1; d <= 9; ++d) law[d - 1] = benford_pmf(d, 10);

    // the limiting law of this mixture sits ~0.076 away from the digit law
    double limit_gap = tv_distance(exact, law);
    CHECK(limit_gap > 0.07);
    CHECK(limit_gap < 0.08);

    for (std::uint64_t seed : {std::uint64_t{42}, std::uint64_t{1337}, std::uint64_t{20240809}}) {
      std::vector<double> freq = benford_mixture_sim(100000, range, seed);
      CHECK(tv_distance(freq, exact) < 0.01);  // sampling noise only
      double gap = tv_distance(freq, law);
      CHECK(std::abs(gap - limit_gap) < 0.01);
    }
  }

  CHECK_THROWS_AS(benford_mixture_sim(0, 100, 1), error);
  CHECK_THROWS_AS(benford_mixture_sim(10, 5, 1), error);
  try {
    benford_mixture_sim(10, 5, 1);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::bad_range);
  }
}

TEST_CASE("strip unit tail") {
  std::vector<double> degrees{5, 3, 2, 1, 1, 1};
  CHECK(strip_unit_tail(degrees) == std::vector<double>({5, 3, 2}));
  std::vector<double> ones{1, 1};
  CHECK(strip_unit_tail(ones).empty());
  std::vector<double> keep{5, 1, 3};
  CHECK(strip_unit_tail(keep) == keep);
}
