#include "distributions.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace ssnet {

namespace {

template <typename... Args>
std::string msg(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

}  // namespace

const char* errc_name(errc code) {
  switch (code) {
    case errc::ok: return "ok";
    case errc::bad_argument: return "bad_argument";
    case errc::digit_out_of_range: return "digit_out_of_range";
    case errc::base_too_small: return "base_too_small";
    case errc::rank_out_of_range: return "rank_out_of_range";
    case errc::bad_exponent: return "bad_exponent";
    case errc::below_support: return "below_support";
    case errc::ratio_not_above_one: return "ratio_not_above_one";
    case errc::count_out_of_range: return "count_out_of_range";
    case errc::no_sign_change: return "no_sign_change";
    case errc::non_finite: return "non_finite";
    case errc::invalid_group_size: return "invalid_group_size";
    case errc::invalid_index: return "invalid_index";
    case errc::no_solution: return "no_solution";
    case errc::bad_fraction: return "bad_fraction";
    case errc::invalid_rank: return "invalid_rank";
    case errc::rank_out_of_support: return "rank_out_of_support";
    case errc::partition_overrun: return "partition_overrun";
    case errc::top_degree_exceeds_n: return "top_degree_exceeds_n";
    case errc::unrepairable: return "unrepairable";
    case errc::not_graphical: return "not_graphical";
    case errc::bad_depth: return "bad_depth";
    case errc::non_consecutive: return "non_consecutive";
    case errc::empty_input: return "empty_input";
    case errc::degenerate_input: return "degenerate_input";
    case errc::too_short: return "too_short";
    case errc::non_positive: return "non_positive";
    case errc::support_mismatch: return "support_mismatch";
    case errc::disconnected: return "disconnected";
    case errc::bad_range: return "bad_range";
    case errc::io_error: return "io_error";
    case errc::parse_error: return "parse_error";
    case errc::internal: return "internal";
  }
  return "unknown";
}

NodeCount NodeCount::finite(std::uint64_t n) {
  if (n < 1) throw error(errc::bad_argument, "node count must be at least 1");
  NodeCount c;
  c.n_ = n;
  return c;
}

std::uint64_t NodeCount::value() const {
  if (is_infinite()) throw error(errc::bad_argument, "node count is infinite");
  return *n_;
}

PowerLawModel::PowerLawModel(double lambda_, std::uint64_t m_, std::uint64_t K_)
    : lambda(lambda_), m(m_), K(K_) {
  if (!(lambda > 0.0)) throw error(errc::bad_exponent, msg("exponent must be positive, got ", lambda));
  if (m < 1) throw error(errc::bad_argument, "lower cutoff must be at least 1");
  if (K < m) throw error(errc::bad_argument, msg("upper cutoff ", K, " below lower cutoff ", m));
}

double PowerLawModel::normalization() const {
  // smallest terms first so the sum is accurate at the 1e-12 level
  double sum = 0.0;
  for (std::uint64_t k = K; k >= m; --k) {
    sum += std::pow(static_cast<double>(k), -lambda);
    if (k == m) break;
  }
  return 1.0 / sum;
}

ZipfModel ZipfModel::harmonic(std::uint64_t n) {
  if (n < 1) throw error(errc::bad_argument, "zipf support must be at least 1");
  return ZipfModel{n, ZipfMode::harmonic, 0.0};
}

ZipfModel ZipfModel::top_match(std::uint64_t n, double top) {
  if (n < 1) throw error(errc::bad_argument, "zipf support must be at least 1");
  if (!(top > 0.0)) throw error(errc::bad_argument, "top frequency must be positive");
  return ZipfModel{n, ZipfMode::top_match, top};
}

double ZipfModel::harmonic_number() const {
  double sum = 0.0;
  for (std::uint64_t k = n; k >= 1; --k) sum += 1.0 / static_cast<double>(k);
  return sum;
}

BenfordModel::BenfordModel(int base_) : base(base_) {
  if (base < 2) throw error(errc::base_too_small, msg("base must be at least 2, got ", base));
}

ParetoModel::ParetoModel(double alpha_, double x_min_) : alpha(alpha_), x_min(x_min_) {
  if (!(alpha > 0.0)) throw error(errc::bad_argument, "shape exponent must be positive");
  if (!(x_min > 0.0)) throw error(errc::bad_argument, "scale must be positive");
}

GeometricRankModel::GeometricRankModel(double top_, double ratio_, NodeCount count_)
    : top(top_), ratio(ratio_), count(count_) {
  if (!(ratio > 1.0))
    throw error(errc::ratio_not_above_one, msg("decay ratio must exceed 1, got ", ratio));
  if (!(top > 0.0)) throw error(errc::bad_argument, "top connectivity must be positive");
}

double benford_pmf(int digit, int base) {
  if (base < 2) throw error(errc::base_too_small, msg("base must be at least 2, got ", base));
  if (digit < 1 || digit >= base)
    throw error(errc::digit_out_of_range, msg("digit ", digit, " outside 1..", base - 1));
  return std::log1p(1.0 / digit) / std::log(static_cast<double>(base));
}

double zipf_pmf(const ZipfModel& model, std::uint64_t rank) {
  if (rank < 1 || rank > model.n)
    throw error(errc::rank_out_of_range, msg("rank ", rank, " outside 1..", model.n));
  double inv = 1.0 / static_cast<double>(rank);
  if (model.mode == ZipfMode::harmonic) return inv / model.harmonic_number();
  return model.top * inv;
}

double power_law_pmf(const PowerLawModel& model, std::uint64_t rank, bool normalized) {
  if (rank < model.m || rank > model.K)
    throw error(errc::rank_out_of_range, msg("rank ", rank, " outside ", model.m, "..", model.K));
  double raw = std::pow(static_cast<double>(rank), -model.lambda);
  return normalized ? model.normalization() * raw : raw;
}

double pareto_density(const ParetoModel& model, double x) {
  if (x < model.x_min)
    throw error(errc::below_support, msg("x = ", x, " below support minimum ", model.x_min));
  return model.alpha * std::pow(model.x_min, model.alpha) / std::pow(x, model.alpha + 1.0);
}

namespace {

// sum over k = 1..N of a^-k, smallest terms first
double geometric_pmf_norm(double ratio, std::uint64_t n) {
  double sum = 0.0;
  for (std::uint64_t k = n; k >= 1; --k) sum += std::pow(ratio, -static_cast<double>(k));
  return sum;
}

}  // namespace

double geometric_rank_pmf(const GeometricRankModel& model, std::uint64_t rank) {
  if (rank < 1 || (!model.count.is_infinite() && rank > model.count.value()))
    throw error(errc::rank_out_of_range, msg("rank ", rank, " outside model support"));
  double term = std::pow(model.ratio, -static_cast<double>(rank));
  if (model.count.is_infinite()) {
    return (model.ratio - 1.0) * term;  // sum_{k>=1} a^-k = 1/(a-1)
  }
  return term / geometric_pmf_norm(model.ratio, model.count.value());
}

double nominal_degree(const GeometricRankModel& model, std::uint64_t rank) {
  if (rank < 1 || (!model.count.is_infinite() && rank > model.count.value()))
    throw error(errc::rank_out_of_range, msg("rank ", rank, " outside model support"));
  return model.top * std::pow(model.ratio, -(static_cast<double>(rank) - 1.0));
}

double aggregate_connectivity(double top, double ratio, NodeCount count) {
  if (!(ratio > 1.0))
    throw error(errc::ratio_not_above_one, msg("decay ratio must exceed 1, got ", ratio));
  if (!(top > 0.0)) throw error(errc::bad_argument, "top connectivity must be positive");
  if (count.is_infinite()) return top * ratio / (ratio - 1.0);
  double n = static_cast<double>(count.value());
  return top * (ratio - std::pow(ratio, 1.0 - n)) / (ratio - 1.0);
}

double aggregate_connectivity(const GeometricRankModel& model) {
  return aggregate_connectivity(model.top, model.ratio, model.count);
}

double aggregate_sensitivity(double ratio) {
  if (!(ratio > 1.0))
    throw error(errc::ratio_not_above_one, msg("decay ratio must exceed 1, got ", ratio));
  double d = ratio - 1.0;
  return -1.0 / (d * d);
}

FrequencyTable table_frequencies(const BenfordModel& model, std::uint64_t count) {
  if (count < 1 || count > static_cast<std::uint64_t>(model.base - 1))
    throw error(errc::count_out_of_range, msg("count ", count, " outside 1..", model.base - 1));
  FrequencyTable table;
  table.reserve(count);
  for (std::uint64_t d = 1; d <= count; ++d)
    table.emplace_back(d, benford_pmf(static_cast<int>(d), model.base));
  return table;
}

FrequencyTable table_frequencies(const ZipfModel& model, std::uint64_t count) {
  if (count < 1 || count > model.n)
    throw error(errc::count_out_of_range, msg("count ", count, " outside 1..", model.n));
  FrequencyTable table;
  table.reserve(count);
  for (std::uint64_t k = 1; k <= count; ++k) table.emplace_back(k, zipf_pmf(model, k));
  return table;
}

FrequencyTable table_frequencies(const PowerLawModel& model, std::uint64_t count, bool normalized) {
  std::uint64_t support = model.K - model.m + 1;
  if (count < 1 || count > support)
    throw error(errc::count_out_of_range, msg("count ", count, " outside 1..", support));
  FrequencyTable table;
  table.reserve(count);
  for (std::uint64_t k = model.m; k < model.m + count; ++k)
    table.emplace_back(k, power_law_pmf(model, k, normalized));
  return table;
}

FrequencyTable table_frequencies(const GeometricRankModel& model, std::uint64_t count,
                                 bool normalized) {
  if (count < 1 || (!model.count.is_infinite() && count > model.count.value()))
    throw error(errc::count_out_of_range, msg("count ", count, " outside model support"));
  FrequencyTable table;
  table.reserve(count);
  for (std::uint64_t k = 1; k <= count; ++k) {
    // the un-normalized series starts at 1, matching the nominal-degree shape
    double v = normalized ? geometric_rank_pmf(model, k)
                          : std::pow(model.ratio, -(static_cast<double>(k) - 1.0));
    table.emplace_back(k, v);
  }
  return table;
}

}  // namespace ssnet
