#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "graphs.hpp"

namespace ssnet {

// One of the two self-similarity modes the network oscillates between.
struct ModeSpec {
  std::uint32_t r;  // integer scaling factor, >= 2
  std::string label;
};

struct StageLayer {
  std::uint32_t level;     // 0 = top node
  std::uint64_t node_lo;   // 1-indexed, contiguous from 1 across layers
  std::uint64_t node_hi;
  std::uint64_t degree;    // r^(depth - level)
  std::uint64_t count() const { return node_hi - node_lo + 1; }
};

// Layered stage table: level l holds r^l nodes of degree r^(depth-l), so the
// total connectivity is (depth+1) * r^depth over (r^(depth+1)-1)/(r-1) nodes.
struct EvolutionStage {
  std::uint32_t index = 1;
  ModeSpec mode;
  std::uint32_t depth = 1;
  std::vector<StageLayer> layers;
  std::uint64_t node_count = 0;
  std::uint64_t total_connections = 0;

  std::uint64_t top_degree() const { return layers.front().degree; }
};

EvolutionStage stage_table(const ModeSpec& mode, std::uint32_t depth, std::uint32_t index = 1);

// Smallest depth whose top degree r^D reaches the previous top degree.
std::uint32_t next_depth(std::uint64_t prev_top_degree, std::uint32_t r);

// Alternates between the two modes. Depth follows next_depth of the previous
// top degree; when that choice would not grow the node count (always the case
// for a repeated mode), the depth advances by one more level.
std::vector<EvolutionStage> evolve(const ModeSpec& first, const ModeSpec& second,
                                   std::uint32_t stages, std::uint32_t initial_depth);

std::uint64_t stage_degree_of(const EvolutionStage& stage, std::uint64_t node);
DegreeSequence stage_degree_sequence(const EvolutionStage& stage);

struct TransitionReport {
  std::vector<std::int64_t> deltas;      // per node id of the earlier stage
  std::vector<std::uint64_t> new_nodes;  // ids present only in the later stage
  std::vector<std::uint64_t> unchanged;  // ids with delta 0
};

TransitionReport transition_report(const EvolutionStage& prev, const EvolutionStage& next);

struct RealizedStage {
  DegreeSequence actual;  // repaired when the theoretical table is unrealizable
  SimpleGraph graph;
  bool repaired;
  std::uint64_t theoretical_total;
  std::uint64_t actual_total;
};

RealizedStage realize_stage(const EvolutionStage& stage);

struct SecondLevelRatios {
  std::vector<double> per_stage;  // layer-0 degree over layer-1 degree
  double mean;
};

SecondLevelRatios second_level_ratio(std::span<const EvolutionStage> stages);

// Aggregate connectivity of one mode's state; same closed form as the rank
// model's aggregate.
double mode_aggregate(double top, double ratio, NodeCount count);

}  // namespace ssnet
