#include "graphs.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace ssnet {

DegreeSequence::DegreeSequence(std::vector<std::uint32_t> degrees) : degrees_(std::move(degrees)) {
  for (std::size_t i = 1; i < degrees_.size(); ++i) {
    if (degrees_[i] > degrees_[i - 1])
      throw error(errc::bad_argument, "degree sequence must be non-increasing");
  }
  sum_ = std::accumulate(degrees_.begin(), degrees_.end(), std::uint64_t{0});
}

DegreeSequence DegreeSequence::sorted_from(std::vector<std::uint32_t> degrees) {
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return DegreeSequence(std::move(degrees));
}

SimpleGraph::SimpleGraph(std::uint32_t node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  if (node_count_ < 1) throw error(errc::bad_argument, "graph needs at least one node");
  for (Edge& e : edges_) {
    if (e.first == e.second) throw error(errc::bad_argument, "self-loops are not allowed");
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first < 1 || e.second > node_count_)
      throw error(errc::bad_argument, "edge endpoint outside 1..n");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw error(errc::bad_argument, "duplicate edge");
}

std::vector<std::uint32_t> SimpleGraph::degrees() const {
  std::vector<std::uint32_t> d(node_count_, 0);
  for (const Edge& e : edges_) {
    ++d[e.first - 1];
    ++d[e.second - 1];
  }
  return d;
}

std::vector<std::vector<std::uint32_t>> SimpleGraph::adjacency() const {
  std::vector<std::vector<std::uint32_t>> adj(node_count_);
  for (const Edge& e : edges_) {
    adj[e.first - 1].push_back(e.second - 1);
    adj[e.second - 1].push_back(e.first - 1);
  }
  return adj;
}

DegreeSequence quantize_degrees(const GeometricRankModel& model) {
  if (model.count.is_infinite())
    throw error(errc::bad_argument, "quantization needs a finite node count");
  std::uint64_t n = model.count.value();
  if (n < 2) throw error(errc::bad_argument, "need at least two nodes");
  double cap = static_cast<double>(n - 1);
  if (model.top > cap) {
    std::ostringstream os;
    os << "top connectivity " << model.top << " exceeds the degree cap " << n - 1;
    throw error(errc::top_degree_exceeds_n, os.str());
  }
  std::vector<std::uint32_t> degrees;
  degrees.reserve(static_cast<std::size_t>(n));
  for (std::uint64_t k = 1; k <= n; ++k) {
    double rounded = std::floor(nominal_degree(model, k) + 0.5);  // half-up
    double clamped = std::min(std::max(rounded, 1.0), cap);
    degrees.push_back(static_cast<std::uint32_t>(clamped));
  }
  return DegreeSequence(std::move(degrees));
}

bool is_graphical(const DegreeSequence& seq) {
  const auto& d = seq.degrees();
  std::size_t n = d.size();
  if (n == 0) return true;
  if (!seq.even_sum()) return false;
  if (d[0] > n - 1) return false;

  std::uint64_t prefix = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    prefix += d[k - 1];
    std::uint64_t bound = static_cast<std::uint64_t>(k) * (k - 1);
    for (std::size_t i = k; i < n; ++i) bound += std::min<std::uint64_t>(d[i], k);
    if (prefix > bound) return false;
  }
  return true;
}

DegreeSequence repair_sequence(const DegreeSequence& seq) {
  std::size_t n = seq.size();
  if (n == 0) return seq;
  std::vector<std::uint32_t> d = seq.degrees();
  for (std::uint32_t deg : d) {
    if (deg < 1 || deg > n - 1)
      throw error(errc::bad_argument, "repair expects degrees within [1, n-1]");
  }

  auto graphical = [&] { return is_graphical(DegreeSequence(d)); };
  std::uint64_t sum = seq.sum();
  while ((sum & 1) != 0 || !graphical()) {
    std::uint32_t lowest = d.back();
    if (lowest >= n - 1)
      throw error(errc::unrepairable, "all degrees saturated without reaching a graphical sequence");
    // raise one member of the lowest-degree class; bumping its first
    // position keeps the sequence sorted
    auto it = std::lower_bound(d.begin(), d.end(), lowest, std::greater<>());
    ++(*it);
    ++sum;
  }
  return DegreeSequence(std::move(d));
}

SimpleGraph realize(const DegreeSequence& seq) {
  if (!is_graphical(seq)) throw error(errc::not_graphical, "sequence fails the graphicality test");
  std::size_t n = seq.size();
  std::vector<std::int64_t> rem(seq.degrees().begin(), seq.degrees().end());
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(seq.sum() / 2));

  std::vector<std::uint32_t> order(n);
  while (true) {
    // source: smallest positive remaining degree, lowest id on ties
    std::size_t source = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (rem[i] > 0 && (source == n || rem[i] < rem[source])) source = i;
    }
    if (source == n) break;

    std::int64_t need = rem[source];
    rem[source] = 0;
    // partners: highest remaining degree first, lowest id on ties
    std::uint32_t count = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (i != source && rem[i] > 0) order[count++] = i;
    }
    std::stable_sort(order.begin(), order.begin() + count,
                     [&](std::uint32_t a, std::uint32_t b) { return rem[a] > rem[b]; });
    if (need > count) throw error(errc::internal, "realization ran out of partners");
    for (std::int64_t j = 0; j < need; ++j) {
      std::uint32_t partner = order[static_cast<std::size_t>(j)];
      edges.emplace_back(static_cast<std::uint32_t>(source) + 1, partner + 1);
      --rem[partner];
    }
  }
  return SimpleGraph(static_cast<std::uint32_t>(n), std::move(edges));
}

}  // namespace ssnet
