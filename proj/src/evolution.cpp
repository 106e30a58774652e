#include "evolution.hpp"

#include <algorithm>
#include <sstream>

namespace ssnet {

namespace {

constexpr std::uint64_t kMaxStageNodes = std::uint64_t{1} << 40;
constexpr std::uint64_t kMaxRealizeNodes = std::uint64_t{1} << 20;

void check_mode(const ModeSpec& mode) {
  if (mode.r < 2) throw error(errc::bad_argument, "mode scaling factor must be at least 2");
}

}  // namespace

EvolutionStage stage_table(const ModeSpec& mode, std::uint32_t depth, std::uint32_t index) {
  check_mode(mode);
  if (depth < 1) throw error(errc::bad_depth, "stage depth must be at least 1");

  EvolutionStage stage;
  stage.index = index;
  stage.mode = mode;
  stage.depth = depth;

  // degrees r^depth .. r^0 top-down; node ids assigned in rank order
  std::uint64_t top = 1;
  for (std::uint32_t l = 0; l < depth; ++l) {
    top *= mode.r;
    if (top > kMaxStageNodes) throw error(errc::bad_depth, "stage exceeds supported size");
  }
  std::uint64_t next_node = 1;
  std::uint64_t layer_count = 1;
  std::uint64_t layer_degree = top;
  for (std::uint32_t l = 0; l <= depth; ++l) {
    StageLayer layer;
    layer.level = l;
    layer.node_lo = next_node;
    layer.node_hi = next_node + layer_count - 1;
    layer.degree = layer_degree;
    stage.layers.push_back(layer);
    stage.total_connections += layer_count * layer_degree;
    next_node = layer.node_hi + 1;
    if (layer.node_hi > kMaxStageNodes) throw error(errc::bad_depth, "stage exceeds supported size");
    layer_count *= mode.r;
    layer_degree /= mode.r;
  }
  stage.node_count = next_node - 1;
  return stage;
}

std::uint32_t next_depth(std::uint64_t prev_top_degree, std::uint32_t r) {
  if (prev_top_degree < 1) throw error(errc::bad_argument, "previous top degree must be positive");
  if (r < 2) throw error(errc::bad_argument, "mode scaling factor must be at least 2");
  std::uint32_t depth = 1;
  std::uint64_t top = r;
  while (top < prev_top_degree) {
    top *= r;
    ++depth;
    if (top > kMaxStageNodes) throw error(errc::bad_depth, "stage exceeds supported size");
  }
  return depth;
}

std::vector<EvolutionStage> evolve(const ModeSpec& first, const ModeSpec& second,
                                   std::uint32_t stages, std::uint32_t initial_depth) {
  check_mode(first);
  check_mode(second);
  if (stages < 1) throw error(errc::bad_argument, "need at least one stage");

  std::vector<EvolutionStage> out;
  out.reserve(stages);
  out.push_back(stage_table(first, initial_depth, 1));
  for (std::uint32_t i = 2; i <= stages; ++i) {
    const EvolutionStage& prev = out.back();
    const ModeSpec& mode = (i % 2 == 1) ? first : second;
    std::uint32_t depth = next_depth(prev.top_degree(), mode.r);
    EvolutionStage stage = stage_table(mode, depth, i);
    if (stage.node_count <= prev.node_count) {
      // equal top degree stalls the rule (always the case for a repeated
      // mode); one extra level restores strict growth
      stage = stage_table(mode, depth + 1, i);
    }
    out.push_back(std::move(stage));
  }
  return out;
}

std::uint64_t stage_degree_of(const EvolutionStage& stage, std::uint64_t node) {
  if (node < 1 || node > stage.node_count)
    throw error(errc::invalid_rank, "node id outside the stage");
  for (const StageLayer& layer : stage.layers) {
    if (node <= layer.node_hi) return layer.degree;
  }
  throw error(errc::internal, "stage layers do not cover the node range");
}

DegreeSequence stage_degree_sequence(const EvolutionStage& stage) {
  if (stage.node_count > kMaxRealizeNodes)
    throw error(errc::bad_depth, "stage too large to expand into a degree sequence");
  std::vector<std::uint32_t> degrees;
  degrees.reserve(static_cast<std::size_t>(stage.node_count));
  for (const StageLayer& layer : stage.layers) {
    for (std::uint64_t i = 0; i < layer.count(); ++i)
      degrees.push_back(static_cast<std::uint32_t>(layer.degree));
  }
  return DegreeSequence(std::move(degrees));
}

TransitionReport transition_report(const EvolutionStage& prev, const EvolutionStage& next) {
  if (next.node_count < prev.node_count)
    throw error(errc::non_consecutive, "later stage has fewer nodes than the earlier one");
  TransitionReport report;
  report.deltas.reserve(static_cast<std::size_t>(prev.node_count));
  for (std::uint64_t node = 1; node <= prev.node_count; ++node) {
    std::int64_t delta = static_cast<std::int64_t>(stage_degree_of(next, node)) -
                         static_cast<std::int64_t>(stage_degree_of(prev, node));
    report.deltas.push_back(delta);
    if (delta == 0) report.unchanged.push_back(node);
  }
  for (std::uint64_t node = prev.node_count + 1; node <= next.node_count; ++node)
    report.new_nodes.push_back(node);
  return report;
}

RealizedStage realize_stage(const EvolutionStage& stage) {
  DegreeSequence theoretical = stage_degree_sequence(stage);
  bool needs_repair = !theoretical.even_sum() || !is_graphical(theoretical);
  DegreeSequence actual = needs_repair ? repair_sequence(theoretical) : theoretical;
  SimpleGraph graph = realize(actual);
  std::uint64_t theoretical_total = theoretical.sum();
  std::uint64_t actual_total = actual.sum();
  return RealizedStage{std::move(actual), std::move(graph), needs_repair, theoretical_total,
                       actual_total};
}

SecondLevelRatios second_level_ratio(std::span<const EvolutionStage> stages) {
  if (stages.empty()) throw error(errc::empty_input, "no stages to measure");
  SecondLevelRatios out;
  out.per_stage.reserve(stages.size());
  double sum = 0.0;
  for (const EvolutionStage& stage : stages) {
    double ratio = static_cast<double>(stage.layers[0].degree) /
                   static_cast<double>(stage.layers[1].degree);
    out.per_stage.push_back(ratio);
    sum += ratio;
  }
  out.mean = sum / static_cast<double>(stages.size());
  return out;
}

double mode_aggregate(double top, double ratio, NodeCount count) {
  return aggregate_connectivity(top, ratio, count);
}

}  // namespace ssnet
