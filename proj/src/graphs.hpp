#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "distributions.hpp"
#include "error.hpp"

namespace ssnet {

// Non-increasing integer degree sequence, ranks 1-indexed by position.
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<std::uint32_t> degrees);
  static DegreeSequence sorted_from(std::vector<std::uint32_t> degrees);

  const std::vector<std::uint32_t>& degrees() const { return degrees_; }
  std::size_t size() const { return degrees_.size(); }
  std::uint32_t operator[](std::size_t i) const { return degrees_[i]; }
  std::uint64_t sum() const { return sum_; }
  bool even_sum() const { return (sum_ & 1) == 0; }

 private:
  std::vector<std::uint32_t> degrees_;
  std::uint64_t sum_ = 0;
};

using Edge = std::pair<std::uint32_t, std::uint32_t>;

// Undirected simple graph over nodes 1..n; edges normalized to u < v and
// kept sorted.
class SimpleGraph {
 public:
  SimpleGraph(std::uint32_t node_count, std::vector<Edge> edges);

  std::uint32_t node_count() const { return node_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::uint64_t edge_count() const { return edges_.size(); }

  std::vector<std::uint32_t> degrees() const;          // indexed by node id - 1
  std::vector<std::vector<std::uint32_t>> adjacency() const;  // 0-based lists

 private:
  std::uint32_t node_count_;
  std::vector<Edge> edges_;
};

// Rounds the nominal degrees of a finite geometric rank model to integers,
// clamped to [1, N-1]. Rounding is half-up.
DegreeSequence quantize_degrees(const GeometricRankModel& model);

// Erdos-Gallai test: even sum plus the prefix inequalities.
bool is_graphical(const DegreeSequence& seq);

// Minimal increment-only repair to a graphical sequence. Increments always go
// to the lowest-degree ranks, one unit at a time, so the head of the sequence
// is left alone whenever possible. Idempotent on graphical input.
DegreeSequence repair_sequence(const DegreeSequence& seq);

// Havel-Hakimi construction, smallest remaining degree first, partners taken
// from the highest remaining degrees; all ties break toward the lowest node
// id. The smallest-first order keeps realizations connected whenever the
// sequence admits a connected graph.
SimpleGraph realize(const DegreeSequence& seq);

}  // namespace ssnet
