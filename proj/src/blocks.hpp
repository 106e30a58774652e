#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "error.hpp"

namespace ssnet {

// 1-indexed span of block k for branching r: the blocks have sizes
// 1, r, r^2, ... so block k covers (r^(k-1)-1)/(r-1)+1 .. (r^k-1)/(r-1).
std::uint64_t block_begin(int branching, int block);
std::uint64_t block_size(int branching, int block);
std::uint64_t block_support(int branching, int blocks);

// Smallest block whose cumulative span reaches the rank.
int block_index(std::uint64_t rank, int branching);

enum class WithinBlock {
  uniform,                 // every rank in block k has mass 1/(L * r^(k-1))
  geometric_renormalized,  // block k decays by the level-k pair factor
};

// Ranked distribution in which all L blocks carry equal mass 1/L.
class BlockEqualMassModel {
 public:
  BlockEqualMassModel(int branching, int blocks, WithinBlock within = WithinBlock::uniform);

  int branching() const { return branching_; }
  int blocks() const { return blocks_; }
  WithinBlock within() const { return within_; }
  std::uint64_t support_size() const { return support_; }

  double pmf(std::uint64_t rank) const;
  std::vector<double> block_mass_vector() const;

 private:
  struct Block {
    std::uint64_t begin;
    std::uint64_t size;
    double head;   // mass of the block's first rank
    double decay;  // per-rank multiplier within the block (1 for uniform)
  };

  int branching_;
  int blocks_;
  WithinBlock within_;
  std::uint64_t support_;
  std::vector<Block> layout_;
};

// Ratio between consecutive sums of the geometric series 1 + 1/a + 1/a^2 + ...
// grouped g terms at a time: a^-g.
double group_sum_ratio(double ratio, int group_size);

enum class DominanceOutcome {
  dominates,  // group mass exceeds the mass of the next 2*size ranks
  equal,      // within 1e-12; the aligned dyadic case
  below,
};

struct DominanceRow {
  std::size_t group;  // 1-indexed position in the partition
  double group_mass;
  double successor_mass;  // mass of the double-size span that follows
  DominanceOutcome outcome;
};

// Compares each partition group against the next group of double size.
// Groups whose double-size successor runs past the value list are omitted.
std::vector<DominanceRow> misaligned_dominance(std::span<const double> values,
                                               std::span<const std::size_t> partition);

}  // namespace ssnet
