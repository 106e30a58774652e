#include "solvers.hpp"

#include <sstream>

#include "distributions.hpp"

namespace ssnet {

namespace {

// sum_{i=b..e} a^-i = (a^(1-b) - a^-e) / (a - 1), stable for huge spans
double span_sum(double a, double b, double e) {
  return (std::pow(a, 1.0 - b) - std::pow(a, -e)) / (a - 1.0);
}

double block_begin_real(int r, int k) {
  // (r^(k-1) - 1) / (r - 1) + 1 without integer overflow concerns
  return (std::pow(static_cast<double>(r), k - 1.0) - 1.0) / (r - 1.0) + 1.0;
}

}  // namespace

RootResult solve_block_ratio(int group_size) {
  if (group_size < 2) {
    std::ostringstream os;
    os << "group size must be at least 2, got " << group_size
       << " (a single-element group forces the ratio to 1)";
    throw error(errc::invalid_group_size, os.str());
  }
  double r = static_cast<double>(group_size);
  auto f = [r](double a) { return 1.0 - (1.0 - std::pow(a, -r)) / (a - 1.0); };
  return bisect(f, solver_detail::kBracketLow, solver_detail::kBracketHigh, 1e-12);
}

RootResult solve_block_pair(int pair_index) {
  if (pair_index < 1 || pair_index > 40)
    throw error(errc::invalid_index, "pair index must be in 1..40");
  double lo1 = std::ldexp(1.0, pair_index - 1);  // 2^(j-1)
  double hi1 = 2.0 * lo1 - 1.0;
  double lo2 = 2.0 * lo1;
  double hi2 = 4.0 * lo1 - 1.0;
  auto f = [=](double a) { return span_sum(a, lo1, hi1) - span_sum(a, lo2, hi2); };
  // beyond j = 29 the root drops below the bracket floor; bisect reports
  // no_sign_change rather than returning a wrong value
  return bisect(f, solver_detail::kBracketLow, solver_detail::kBracketHigh, 1e-12);
}

RootResult block_pair_factor(int branching, int pair_index) {
  if (branching < 2) throw error(errc::invalid_group_size, "branching must be at least 2");
  if (pair_index < 1 || pair_index > 40)
    throw error(errc::invalid_index, "pair index must be in 1..40");
  double lo1 = block_begin_real(branching, pair_index);
  double hi1 = block_begin_real(branching, pair_index + 1) - 1.0;
  double lo2 = hi1 + 1.0;
  double hi2 = block_begin_real(branching, pair_index + 2) - 1.0;
  auto f = [=](double a) { return span_sum(a, lo1, hi1) - span_sum(a, lo2, hi2); };
  // deeper pairs have roots very close to 1; use a lower floor than the
  // public solvers so renormalized block models stay usable
  return bisect(f, 1.0 + 1e-13, solver_detail::kBracketHigh, 1e-12);
}

RootResult solve_pareto_ratio(std::uint64_t node_count, const ParetoSolveOptions& options) {
  if (node_count < 5) throw error(errc::bad_argument, "node count must be at least 5");
  if (!(options.top_frac > 0.0) || !(options.top_frac < 1.0) || !(options.mass_frac > 0.0) ||
      !(options.mass_frac < 1.0))
    throw error(errc::bad_fraction, "fractions must lie strictly between 0 and 1");
  std::uint64_t top = leading_count(options.top_frac, node_count);
  if (top < 1 || top >= node_count)
    throw error(errc::bad_fraction, "top fraction selects no proper subset of the nodes");

  NodeCount rhs_count =
      options.infinite_aggregate ? NodeCount::infinite() : NodeCount::finite(node_count);
  double mass = options.mass_frac;
  auto f = [=](double a) {
    // the top connectivity cancels; both sides are evaluated with A = 1
    double lhs = aggregate_connectivity(1.0, a, NodeCount::finite(top));
    double rhs = mass * aggregate_connectivity(1.0, a, rhs_count);
    return lhs - rhs;
  };
  try {
    return bisect(f, solver_detail::kBracketLow, solver_detail::kBracketHigh, 1e-9);
  } catch (const error& e) {
    if (e.code() == errc::no_sign_change)
      throw error(errc::no_solution, "no decay ratio in the search bracket balances the shares");
    throw;
  }
}

}  // namespace ssnet
