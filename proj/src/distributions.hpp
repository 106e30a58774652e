#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "error.hpp"

namespace ssnet {

// Node-count field of the rank models. The infinite variant selects the
// closed-form limit expressions; it is a distinct state, not a sentinel.
class NodeCount {
 public:
  static NodeCount finite(std::uint64_t n);
  static NodeCount infinite() { return NodeCount{}; }

  bool is_infinite() const { return !n_.has_value(); }
  std::uint64_t value() const;

 private:
  NodeCount() = default;
  std::optional<std::uint64_t> n_;
};

// Number of leading elements selected by a fraction, robust against the
// usual 0.2*10 = 2.0000000000000004 binary-rounding trap.
inline std::uint64_t leading_count(double fraction, std::uint64_t n) {
  double raw = std::ceil(fraction * static_cast<double>(n) - 1e-9);
  if (raw < 1.0) return 1;
  return static_cast<std::uint64_t>(raw);
}

// p1(k) = c * k^-lambda over ranks m..K.
struct PowerLawModel {
  PowerLawModel(double lambda, std::uint64_t m, std::uint64_t K);

  double lambda;
  std::uint64_t m;
  std::uint64_t K;

  double normalization() const;  // c, by direct summation
};

enum class ZipfMode {
  harmonic,   // pmf(k) = (1/k) / H_n
  top_match,  // pmf(k) = top / k
};

struct ZipfModel {
  static ZipfModel harmonic(std::uint64_t n);
  static ZipfModel top_match(std::uint64_t n, double top);

  std::uint64_t n;
  ZipfMode mode;
  double top;  // rank-1 value in top_match mode

  double harmonic_number() const;
};

struct BenfordModel {
  explicit BenfordModel(int base);
  int base;
};

// Density alpha * x_min^alpha / x^(alpha+1) on [x_min, inf).
struct ParetoModel {
  ParetoModel(double alpha, double x_min);
  double alpha;
  double x_min;
};

// Rank model with nominal degree A * a^-(k-1) and pmf p(k) = c * a^-k.
struct GeometricRankModel {
  GeometricRankModel(double top, double ratio, NodeCount count);

  double top;    // A, connectivity of the first-ranked node
  double ratio;  // a > 1, per-rank decay
  NodeCount count;
};

double benford_pmf(int digit, int base);
double zipf_pmf(const ZipfModel& model, std::uint64_t rank);
double power_law_pmf(const PowerLawModel& model, std::uint64_t rank, bool normalized);
double pareto_density(const ParetoModel& model, double x);
double geometric_rank_pmf(const GeometricRankModel& model, std::uint64_t rank);
double nominal_degree(const GeometricRankModel& model, std::uint64_t rank);

// Total connectivity A * (a - a^(1-N)) / (a - 1), or A * a / (a - 1) in the
// infinite limit.
double aggregate_connectivity(double top, double ratio, NodeCount count);
double aggregate_connectivity(const GeometricRankModel& model);

// d/da of the normalized (A = 1) infinite aggregate: -1 / (a - 1)^2.
double aggregate_sensitivity(double ratio);

using FrequencyTable = std::vector<std::pair<std::uint64_t, double>>;

FrequencyTable table_frequencies(const BenfordModel& model, std::uint64_t count);
FrequencyTable table_frequencies(const ZipfModel& model, std::uint64_t count);
FrequencyTable table_frequencies(const PowerLawModel& model, std::uint64_t count, bool normalized);
FrequencyTable table_frequencies(const GeometricRankModel& model, std::uint64_t count,
                                 bool normalized);

}  // namespace ssnet
