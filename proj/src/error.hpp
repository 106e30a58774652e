#pragma once

#include <stdexcept>
#include <string>

namespace ssnet {

// Every domain failure maps to one of these codes. The C API exposes the
// same set, so codes must stay stable once published.
enum class errc {
  ok = 0,
  bad_argument,
  digit_out_of_range,
  base_too_small,
  rank_out_of_range,
  bad_exponent,
  below_support,
  ratio_not_above_one,
  count_out_of_range,
  no_sign_change,
  non_finite,
  invalid_group_size,
  invalid_index,
  no_solution,
  bad_fraction,
  invalid_rank,
  rank_out_of_support,
  partition_overrun,
  top_degree_exceeds_n,
  unrepairable,
  not_graphical,
  bad_depth,
  non_consecutive,
  empty_input,
  degenerate_input,
  too_short,
  non_positive,
  support_mismatch,
  disconnected,
  bad_range,
  io_error,
  parse_error,
  internal,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace ssnet
