#include "blocks.hpp"

#include <cmath>
#include <sstream>

#include "solvers.hpp"

namespace ssnet {

namespace {

constexpr std::uint64_t kMaxSupport = std::uint64_t{1} << 40;
constexpr double kMassTolerance = 1e-12;

void check_branching(int branching) {
  if (branching < 2) throw error(errc::bad_argument, "branching must be at least 2");
}

}  // namespace

std::uint64_t block_begin(int branching, int block) {
  check_branching(branching);
  if (block < 1) throw error(errc::bad_argument, "block numbers are 1-indexed");
  std::uint64_t power = 1;  // r^(block-1)
  std::uint64_t sum = 0;    // ranks before this block
  for (int i = 1; i < block; ++i) {
    sum += power;
    if (power > kMaxSupport) throw error(errc::bad_argument, "block layout exceeds supported size");
    power *= static_cast<std::uint64_t>(branching);
  }
  return sum + 1;
}

std::uint64_t block_size(int branching, int block) {
  check_branching(branching);
  if (block < 1) throw error(errc::bad_argument, "block numbers are 1-indexed");
  std::uint64_t power = 1;
  for (int i = 1; i < block; ++i) {
    if (power > kMaxSupport) throw error(errc::bad_argument, "block layout exceeds supported size");
    power *= static_cast<std::uint64_t>(branching);
  }
  return power;
}

std::uint64_t block_support(int branching, int blocks) {
  if (blocks < 1) throw error(errc::bad_argument, "need at least one block");
  return block_begin(branching, blocks + 1) - 1;
}

int block_index(std::uint64_t rank, int branching) {
  check_branching(branching);
  if (rank < 1) throw error(errc::invalid_rank, "ranks are 1-indexed");
  std::uint64_t power = 1;
  std::uint64_t cumulative = 1;
  int block = 1;
  while (cumulative < rank) {
    if (power > kMaxSupport) throw error(errc::invalid_rank, "rank exceeds supported block layout");
    power *= static_cast<std::uint64_t>(branching);
    cumulative += power;
    ++block;
  }
  return block;
}

BlockEqualMassModel::BlockEqualMassModel(int branching, int blocks, WithinBlock within)
    : branching_(branching), blocks_(blocks), within_(within) {
  check_branching(branching);
  if (blocks < 1) throw error(errc::bad_argument, "need at least one block");
  if (within == WithinBlock::geometric_renormalized && blocks > 30)
    throw error(errc::bad_argument,
                "renormalized mode supports at most 30 blocks (deeper pair factors are "
                "numerically indistinguishable from 1)");
  support_ = block_support(branching, blocks);

  double block_mass = 1.0 / blocks;
  layout_.reserve(static_cast<std::size_t>(blocks));
  for (int k = 1; k <= blocks; ++k) {
    Block b;
    b.begin = block_begin(branching, k);
    b.size = block_size(branching, k);
    if (within == WithinBlock::uniform || b.size == 1) {
      b.decay = 1.0;
      b.head = block_mass / static_cast<double>(b.size);
    } else {
      b.decay = 1.0 / block_pair_factor(branching, k).value;
      // scale the geometric run so the block mass is exactly 1/L
      double run = (1.0 - std::pow(b.decay, static_cast<double>(b.size))) / (1.0 - b.decay);
      b.head = block_mass / run;
    }
    layout_.push_back(b);
  }
}

double BlockEqualMassModel::pmf(std::uint64_t rank) const {
  if (rank < 1 || rank > support_) {
    std::ostringstream os;
    os << "rank " << rank << " outside support 1.." << support_;
    throw error(errc::rank_out_of_support, os.str());
  }
  const Block& b = layout_[static_cast<std::size_t>(block_index(rank, branching_) - 1)];
  return b.head * std::pow(b.decay, static_cast<double>(rank - b.begin));
}

std::vector<double> BlockEqualMassModel::block_mass_vector() const {
  if (support_ > (std::uint64_t{1} << 22))
    throw error(errc::bad_argument, "support too large for explicit block summation");
  std::vector<double> masses;
  masses.reserve(layout_.size());
  for (const Block& b : layout_) {
    double mass = 0.0;
    for (std::uint64_t off = b.size; off-- > 0;)
      mass += b.head * std::pow(b.decay, static_cast<double>(off));
    masses.push_back(mass);
  }
  return masses;
}

double group_sum_ratio(double ratio, int group_size) {
  if (!(ratio > 1.0)) throw error(errc::ratio_not_above_one, "ratio must exceed 1");
  if (group_size < 1) throw error(errc::invalid_group_size, "group size must be at least 1");
  return std::pow(ratio, -static_cast<double>(group_size));
}

std::vector<DominanceRow> misaligned_dominance(std::span<const double> values,
                                               std::span<const std::size_t> partition) {
  std::size_t covered = 0;
  for (std::size_t size : partition) {
    if (size == 0) throw error(errc::bad_argument, "partition groups must be non-empty");
    covered += size;
  }
  if (covered > values.size())
    throw error(errc::partition_overrun, "partition runs past the end of the value list");

  auto span_mass = [&](std::size_t begin, std::size_t count) {
    double mass = 0.0;
    for (std::size_t i = begin; i < begin + count; ++i) mass += values[i];
    return mass;
  };

  std::vector<DominanceRow> rows;
  std::size_t pos = 0;
  for (std::size_t g = 0; g < partition.size(); ++g) {
    std::size_t size = partition[g];
    std::size_t successor_begin = pos + size;
    std::size_t successor_count = 2 * size;
    if (successor_begin + successor_count <= values.size()) {
      DominanceRow row;
      row.group = g + 1;
      row.group_mass = span_mass(pos, size);
      row.successor_mass = span_mass(successor_begin, successor_count);
      double diff = row.group_mass - row.successor_mass;
      if (std::abs(diff) <= kMassTolerance)
        row.outcome = DominanceOutcome::equal;
      else
        row.outcome = diff > 0.0 ? DominanceOutcome::dominates : DominanceOutcome::below;
      rows.push_back(row);
    }
    pos += size;
  }
  return rows;
}

}  // namespace ssnet
