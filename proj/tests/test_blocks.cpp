#include <doctest.h>

#include <cmath>
#include <numeric>

#include "blocks.hpp"
#include "solvers.hpp"

using namespace ssnet;

namespace {
constexpr double kPhi = 1.6180339887498949;
}

TEST_CASE("block spans and indices") {
  CHECK(block_begin(2, 1) == 1);
  CHECK(block_begin(2, 3) == 4);
  CHECK(block_size(2, 3) == 4);
  CHECK(block_begin(3, 3) == 5);
  CHECK(block_size(3, 3) == 9);  // block 3 spans 5..13
  CHECK(block_support(2, 3) == 7);
  CHECK(block_support(3, 2) == 4);

  CHECK(block_index(1, 2) == 1);
  CHECK(block_index(5, 2) == 3);
  CHECK(block_index(13, 3) == 3);
  CHECK_THROWS_AS(block_index(0, 2), error);
  CHECK_THROWS_AS(block_index(1, 1), error);

  SUBCASE("block_index inverts the span layout") {
    for (int r : {2, 3, 4}) {
      for (int L = 1; L <= 6; ++L) {
        for (std::uint64_t rank = 1; rank <= block_support(r, L); ++rank) {
          int k = block_index(rank, r);
          CHECK(rank >= block_begin(r, k));
          CHECK(rank < block_begin(r, k) + block_size(r, k));
        }
      }
    }
  }
}

TEST_CASE("uniform block model pmf") {
  BlockEqualMassModel model(2, 3, WithinBlock::uniform);
  CHECK(model.support_size() == 7);
  CHECK(model.pmf(1) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(model.pmf(2) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(model.pmf(4) == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
  CHECK_THROWS_AS(model.pmf(8), error);
  try {
    model.pmf(0);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::rank_out_of_support);
  }
}

TEST_CASE("block masses are equal in every mode") {
  SUBCASE("uniform masses") {
    auto masses24 = BlockEqualMassModel(2, 4).block_mass_vector();
    REQUIRE(masses24.size() == 4);
    for (double m : masses24) CHECK(std::abs(m - 0.25) < 1e-12);
    auto masses32 = BlockEqualMassModel(3, 2).block_mass_vector();
    REQUIRE(masses32.size() == 2);
    for (double m : masses32) CHECK(std::abs(m - 0.5) < 1e-12);
  }
  SUBCASE("renormalized masses still sum to 1/L per block") {
    for (int r : {2, 3}) {
      for (int L : {3, 4, 6}) {
        BlockEqualMassModel model(r, L, WithinBlock::geometric_renormalized);
        auto masses = model.block_mass_vector();
        for (double m : masses) CHECK(std::abs(m - 1.0 / L) < 1e-12);
        // every pmf value positive and non-increasing within each block
        for (int k = 1; k <= L; ++k) {
          std::uint64_t begin = block_begin(r, k);
          for (std::uint64_t off = 1; off < block_size(r, k); ++off)
            CHECK(model.pmf(begin + off) <= model.pmf(begin + off - 1));
        }
      }
    }
  }
  SUBCASE("total mass is one") {
    for (auto within : {WithinBlock::uniform, WithinBlock::geometric_renormalized}) {
      BlockEqualMassModel model(2, 6, within);
      double total = 0.0;
      for (std::uint64_t rank = model.support_size(); rank >= 1; --rank)
        total += model.pmf(rank);
      CHECK(std::abs(total - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("renormalized blocks decay by the pair factors") {
  BlockEqualMassModel model(2, 4, WithinBlock::geometric_renormalized);
  // within block 3 (ranks 4..7) consecutive values shrink by 1/solve_block_pair(3)
  double factor = solve_block_pair(3).value;
  for (std::uint64_t rank = 4; rank < 7; ++rank)
    CHECK(std::abs(model.pmf(rank) / model.pmf(rank + 1) - factor) < 1e-9);
}

TEST_CASE("group sum ratio against explicit grouped partial sums") {
  CHECK(group_sum_ratio(2.0, 3) == doctest::Approx(0.125).epsilon(1e-14));
  CHECK(group_sum_ratio(3.0, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(std::abs(group_sum_ratio(kPhi, 3) - 0.2360679) < 1e-6);

  for (double a : {1.5, 2.0, kPhi}) {
    for (int g : {1, 2, 3}) {
      // grouped partial sums of 1 + 1/a + 1/a^2 + ... taken g at a time
      double prev = 0.0;
      for (int group = 0; group < 4; ++group) {
        double sum = 0.0;
        for (int i = group * g; i < (group + 1) * g; ++i) sum += std::pow(a, -i);
        if (group > 0) CHECK(std::abs(sum / prev - group_sum_ratio(a, g)) < 1e-12);
        prev = sum;
      }
    }
  }

  CHECK_THROWS_AS(group_sum_ratio(1.0, 3), error);
  CHECK_THROWS_AS(group_sum_ratio(2.0, 0), error);
}

TEST_CASE("dominance against the next double-size span") {
  SUBCASE("halving list dominates") {
    std::vector<double> values;
    for (int i = 0; i < 6; ++i) values.push_back(std::pow(2.0, -i));
    std::vector<std::size_t> partition{2, 2, 2};
    auto rows = misaligned_dominance(values, partition);
    REQUIRE(rows.size() == 1);  // later groups have no full successor span
    CHECK(rows[0].group == 1);
    CHECK(rows[0].group_mass == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(rows[0].successor_mass == doctest::Approx(0.46875).epsilon(1e-14));
    CHECK(rows[0].outcome == DominanceOutcome::dominates);
  }
  SUBCASE("aligned dyadic partition gives equality") {
    BlockEqualMassModel model(2, 3);
    std::vector<double> values;
    for (std::uint64_t rank = 1; rank <= model.support_size(); ++rank)
      values.push_back(model.pmf(rank));
    std::vector<std::size_t> partition{1, 2, 4};
    auto rows = misaligned_dominance(values, partition);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].group_mass == doctest::Approx(1.0 / 3.0));
    CHECK(rows[0].successor_mass == doctest::Approx(1.0 / 6.0 + 1.0 / 6.0));
    CHECK(rows[0].outcome == DominanceOutcome::equal);
    CHECK(rows[1].outcome == DominanceOutcome::equal);
  }
  SUBCASE("unit partition sits on the equality boundary") {
    BlockEqualMassModel model(2, 3);
    std::vector<double> values;
    for (std::uint64_t rank = 1; rank <= model.support_size(); ++rank)
      values.push_back(model.pmf(rank));
    std::vector<std::size_t> partition{1, 1, 1};
    auto rows = misaligned_dominance(values, partition);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].group_mass == doctest::Approx(1.0 / 3.0));
    CHECK(rows[0].successor_mass == doctest::Approx(1.0 / 3.0));
    CHECK(rows[0].outcome == DominanceOutcome::equal);
    CHECK(rows[1].outcome == DominanceOutcome::below);  // 1/6 vs 1/6 + 1/12
  }
  SUBCASE("partition overrun") {
    std::vector<double> values{1.0, 0.5};
    std::vector<std::size_t> partition{2, 1};
    CHECK_THROWS_AS(misaligned_dominance(values, partition), error);
    try {
      misaligned_dominance(values, partition);
      CHECK(false);
    } catch (const error& e) {
      CHECK(e.code() == errc::partition_overrun);
    }
  }
}

TEST_CASE("model construction guards") {
  CHECK_THROWS_AS(BlockEqualMassModel(1, 3), error);
  CHECK_THROWS_AS(BlockEqualMassModel(2, 0), error);
  CHECK_THROWS_AS(BlockEqualMassModel(2, 31, WithinBlock::geometric_renormalized), error);
  CHECK_NOTHROW(BlockEqualMassModel(2, 1));
}
