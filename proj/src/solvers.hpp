#pragma once

#include <cmath>
#include <cstdint>

#include "error.hpp"

namespace ssnet {

struct RootResult {
  double value = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

namespace solver_detail {
constexpr double kBracketLow = 1.0 + 1e-9;
constexpr double kBracketHigh = 64.0;
constexpr double kMinBracketWidth = 1e-15;
constexpr int kMaxIterations = 256;
}  // namespace solver_detail

// Deterministic bisection. Runs the bracket all the way down to
// kMinBracketWidth (or an exact zero), which lands well inside any of the
// tolerances used here; the residual against tol is the caller's contract.
template <typename F>
RootResult bisect(F&& f, double lo, double hi, double tol) {
  if (!(lo < hi)) throw error(errc::bad_argument, "bisect: bracket must satisfy lo < hi");
  if (!(tol > 0.0)) throw error(errc::bad_argument, "bisect: tolerance must be positive");
  double flo = f(lo);
  double fhi = f(hi);
  if (!std::isfinite(flo) || !std::isfinite(fhi))
    throw error(errc::non_finite, "bisect: function not finite at bracket endpoint");
  if (flo == 0.0) return {lo, 0.0, 0};
  if (fhi == 0.0) return {hi, 0.0, 0};
  if ((flo < 0.0) == (fhi < 0.0))
    throw error(errc::no_sign_change, "bisect: no sign change over bracket");

  RootResult result;
  double mid = lo;
  double fmid = flo;
  while (result.iterations < solver_detail::kMaxIterations) {
    mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket exhausted at double precision
    fmid = f(mid);
    ++result.iterations;
    if (!std::isfinite(fmid)) throw error(errc::non_finite, "bisect: function not finite");
    if (fmid == 0.0 || (hi - lo) <= solver_detail::kMinBracketWidth) break;
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  result.value = mid;
  result.residual = std::abs(fmid);
  return result;
}

// Root of 1 = sum_{i=1..r} a^-i; the two- and three-element cases give the
// golden ratio and the tribonacci constant.
RootResult solve_block_ratio(int group_size);

// Root of sum over block j of a^-i = sum over block j+1 of a^-i on the
// dyadic spans [2^(j-1), 2^j - 1]. Equals phi^(2^(1-j)).
RootResult solve_block_pair(int pair_index);

// Same pair equation on the general-branching block spans; block j covers
// ranks (r^(j-1)-1)/(r-1)+1 .. (r^j-1)/(r-1). Used by the block models to
// renormalize the within-block decay per level.
RootResult block_pair_factor(int branching, int pair_index);

struct ParetoSolveOptions {
  double top_frac = 0.2;
  double mass_frac = 0.8;
  bool infinite_aggregate = false;  // use A*a/(a-1) on the right-hand side
};

// Decay ratio a for which the top ceil(top_frac*N) ranks carry mass_frac of
// the total connectivity.
RootResult solve_pareto_ratio(std::uint64_t node_count, const ParetoSolveOptions& options = {});

}  // namespace ssnet
