#include "analysis.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <sstream>

#include "distributions.hpp"
#include "rng.hpp"

namespace ssnet {

namespace {

struct LineFit {
  double intercept;
  double slope;
  double r_squared;
};

LineFit least_squares(std::span<const double> xs, std::span<const double> ys) {
  std::size_t n = xs.size();
  double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(n);
  double my = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double dx = xs[i] - mx;
    double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double e = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss_res += e * e;
  }
  fit.r_squared = syy > 0.0 ? std::max(0.0, 1.0 - ss_res / syy) : 1.0;
  return fit;
}

std::vector<double> log_degrees(std::span<const double> degrees) {
  if (degrees.size() < 3)
    throw error(errc::degenerate_input, "need at least three degrees to fit");
  std::vector<double> ys;
  ys.reserve(degrees.size());
  bool all_equal = true;
  for (double d : degrees) {
    if (!(d > 0.0)) throw error(errc::degenerate_input, "degrees must be positive");
    if (d != degrees[0]) all_equal = false;
    ys.push_back(std::log(d));
  }
  if (all_equal)
    throw error(errc::degenerate_input, "constant degrees sit on the model boundary");
  return ys;
}

std::vector<std::uint32_t> component_labels(const SimpleGraph& graph, std::uint32_t* count_out) {
  auto adj = graph.adjacency();
  std::uint32_t n = graph.node_count();
  std::vector<std::uint32_t> label(n, 0);
  std::uint32_t count = 0;
  std::deque<std::uint32_t> queue;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (label[start] != 0) continue;
    ++count;
    label[start] = count;
    queue.push_back(start);
    while (!queue.empty()) {
      std::uint32_t u = queue.front();
      queue.pop_front();
      for (std::uint32_t v : adj[u]) {
        if (label[v] == 0) {
          label[v] = count;
          queue.push_back(v);
        }
      }
    }
  }
  if (count_out) *count_out = count;
  return label;
}

int leading_digit(std::uint64_t x, int base) {
  while (x >= static_cast<std::uint64_t>(base)) x /= static_cast<std::uint64_t>(base);
  return static_cast<int>(x);
}

}  // namespace

GeometricFit fit_geometric(std::span<const double> degrees) {
  std::vector<double> ys = log_degrees(degrees);
  std::vector<double> xs(ys.size());
  std::iota(xs.begin(), xs.end(), 0.0);  // rank - 1
  LineFit line = least_squares(xs, ys);
  return GeometricFit{std::exp(line.intercept), std::exp(-line.slope), line.r_squared,
                      degrees.size()};
}

PowerLawFit fit_power_law(std::span<const double> degrees) {
  std::vector<double> ys = log_degrees(degrees);
  std::vector<double> xs;
  xs.reserve(ys.size());
  for (std::size_t k = 1; k <= ys.size(); ++k) xs.push_back(std::log(static_cast<double>(k)));
  LineFit line = least_squares(xs, ys);
  return PowerLawFit{-line.slope, line.r_squared, degrees.size()};
}

std::vector<double> strip_unit_tail(std::span<const double> degrees) {
  std::size_t end = degrees.size();
  while (end > 0 && degrees[end - 1] == 1.0) --end;
  return std::vector<double>(degrees.begin(), degrees.begin() + end);
}

MidtermDeviation midterm_deviation(std::span<const double> values) {
  if (values.size() < 3) throw error(errc::too_short, "need at least three values");
  for (double v : values) {
    if (!(v > 0.0)) throw error(errc::non_positive, "values must be positive");
  }
  double geo = 0.0, harm = 0.0;
  std::size_t interior = values.size() - 2;
  for (std::size_t k = 1; k + 1 < values.size(); ++k) {
    double a = values[k - 1], x = values[k], b = values[k + 1];
    geo += std::abs(x - std::sqrt(a * b)) / x;
    harm += std::abs(x - 2.0 * a * b / (a + b)) / x;
  }
  return MidtermDeviation{geo / static_cast<double>(interior),
                          harm / static_cast<double>(interior)};
}

double pareto_share(std::span<const double> degrees, double top_frac) {
  if (degrees.empty()) throw error(errc::empty_input, "no degrees");
  if (!(top_frac > 0.0) || top_frac > 1.0)
    throw error(errc::bad_fraction, "top fraction must lie in (0, 1]");
  double total = 0.0;
  for (double d : degrees) {
    if (d < 0.0) throw error(errc::bad_argument, "degrees must be non-negative");
    total += d;
  }
  if (!(total > 0.0)) throw error(errc::bad_argument, "total degree is zero");
  std::uint64_t top = std::min<std::uint64_t>(leading_count(top_frac, degrees.size()),
                                              degrees.size());
  double head = 0.0;
  for (std::uint64_t i = 0; i < top; ++i) head += degrees[i];
  return head / total;
}

double tv_distance(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size() || p.empty())
    throw error(errc::support_mismatch, "distributions must share a non-empty support");
  double sp = std::accumulate(p.begin(), p.end(), 0.0);
  double sq = std::accumulate(q.begin(), q.end(), 0.0);
  if (!(sp > 0.0) || !(sq > 0.0))
    throw error(errc::bad_argument, "distributions must have positive mass");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += std::abs(p[i] / sp - q[i] / sq);
  return 0.5 * sum;
}

std::uint32_t component_count(const SimpleGraph& graph) {
  std::uint32_t count = 0;
  component_labels(graph, &count);
  return count;
}

SimpleGraph largest_component(const SimpleGraph& graph) {
  std::uint32_t count = 0;
  std::vector<std::uint32_t> label = component_labels(graph, &count);
  std::vector<std::uint64_t> sizes(count + 1, 0);
  for (std::uint32_t l : label) ++sizes[l];
  std::uint32_t best = 1;
  for (std::uint32_t c = 2; c <= count; ++c) {
    if (sizes[c] > sizes[best]) best = c;  // first-seen component wins ties
  }
  // relabel the kept nodes 1..m preserving id order
  std::vector<std::uint32_t> new_id(graph.node_count(), 0);
  std::uint32_t next = 0;
  for (std::uint32_t i = 0; i < graph.node_count(); ++i) {
    if (label[i] == best) new_id[i] = ++next;
  }
  std::vector<Edge> edges;
  for (const Edge& e : graph.edges()) {
    if (label[e.first - 1] == best)
      edges.emplace_back(new_id[e.first - 1], new_id[e.second - 1]);
  }
  return SimpleGraph(next, std::move(edges));
}

double characteristic_path_length(const SimpleGraph& graph) {
  std::uint32_t n = graph.node_count();
  if (n < 2) throw error(errc::bad_argument, "need at least two nodes");
  auto adj = graph.adjacency();
  std::uint64_t total = 0;
  std::vector<std::int64_t> dist(n);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    queue.clear();
    queue.push_back(s);
    std::uint32_t reached = 1;
    while (!queue.empty()) {
      std::uint32_t u = queue.front();
      queue.pop_front();
      for (std::uint32_t v : adj[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          ++reached;
          queue.push_back(v);
        }
      }
    }
    if (reached != n) {
      std::ostringstream os;
      os << "graph is disconnected (" << component_count(graph) << " components)";
      throw error(errc::disconnected, os.str());
    }
    for (std::uint32_t t = s + 1; t < n; ++t) total += static_cast<std::uint64_t>(dist[t]);
  }
  double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  return static_cast<double>(total) / pairs;
}

std::vector<double> benford_mixture_sim(std::uint64_t num_processes, std::uint64_t max_range,
                                        std::uint64_t seed, int base) {
  if (base < 2) throw error(errc::base_too_small, "base must be at least 2");
  if (num_processes < 1) throw error(errc::bad_range, "need at least one process");
  if (max_range < static_cast<std::uint64_t>(base))
    throw error(errc::bad_range, "range must reach at least the base");

  SplitMix64 rng(seed);
  std::vector<std::uint64_t> tally(static_cast<std::size_t>(base - 1), 0);
  for (std::uint64_t p = 0; p < num_processes; ++p) {
    std::uint64_t range = 1 + rng.bounded(max_range);
    std::uint64_t value = 1 + rng.bounded(range);
    ++tally[static_cast<std::size_t>(leading_digit(value, base) - 1)];
  }
  std::vector<double> freq(tally.size());
  for (std::size_t i = 0; i < tally.size(); ++i)
    freq[i] = static_cast<double>(tally[i]) / static_cast<double>(num_processes);
  return freq;
}

}  // namespace ssnet
