#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "error.hpp"
#include "graphs.hpp"

namespace ssnet {

struct GeometricFit {
  double top;       // recovered A
  double ratio;     // recovered a
  double goodness;  // R^2 of the log-space regression
  std::size_t n;
};

struct PowerLawFit {
  double exponent;  // recovered lambda
  double goodness;
  std::size_t n;
};

// Least squares on (rank-1, ln degree): ratio = exp(-slope), top = exp(intercept).
GeometricFit fit_geometric(std::span<const double> degrees);

// Least squares on (ln rank, ln degree): exponent = -slope.
PowerLawFit fit_power_law(std::span<const double> degrees);

// Drops the trailing run of exactly-1 degrees. Quantization clamps every
// nominal degree below 1 up to 1, so a rank-ordered quantized sequence ends
// in a flat plateau that carries no information about the decay; fits on
// quantized or realized data should run on the stripped head.
std::vector<double> strip_unit_tail(std::span<const double> degrees);

struct MidtermDeviation {
  double geometric;  // mean |x_k - sqrt(x_{k-1} x_{k+1})| / x_k
  double harmonic;   // mean |x_k - 2 x_{k-1} x_{k+1} / (x_{k-1} + x_{k+1})| / x_k
};

MidtermDeviation midterm_deviation(std::span<const double> values);

// Fraction of the total degree held by the top ceil(top_frac * n) ranks.
double pareto_share(std::span<const double> degrees, double top_frac);

// Total variation distance between two distributions over the same support;
// inputs are renormalized first.
double tv_distance(std::span<const double> p, std::span<const double> q);

std::uint32_t component_count(const SimpleGraph& graph);
SimpleGraph largest_component(const SimpleGraph& graph);

// Mean shortest-path length over all unordered node pairs; throws
// errc::disconnected (message carries the component count) when no path
// exists for some pair.
double characteristic_path_length(const SimpleGraph& graph);

// Leading-digit frequencies of the two-level uniform mixture: each process
// draws a range S uniformly from [1, max_range], then a value uniformly from
// [1, S]. Deterministic for a given seed (splitmix64 stream, see rng.hpp).
// Returns base-1 frequencies indexed by digit-1.
std::vector<double> benford_mixture_sim(std::uint64_t num_processes, std::uint64_t max_range,
                                        std::uint64_t seed, int base = 10);

}  // namespace ssnet
