// extern-C surface of the toolkit; thin translation onto the C++ core.

#include "ssnet/ssnet.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "blocks.hpp"
#include "distributions.hpp"
#include "evolution.hpp"
#include "formats.hpp"
#include "graphs.hpp"
#include "solvers.hpp"

using ssnet::errc;

extern "C" {

struct ssn_geom_model {
  ssnet::GeometricRankModel rep;
};

struct ssn_block_model {
  ssnet::BlockEqualMassModel rep;
};

struct ssn_degree_seq {
  ssnet::DegreeSequence rep;
};

struct ssn_graph {
  ssnet::SimpleGraph rep;
};

struct ssn_evolution {
  std::vector<ssnet::EvolutionStage> stages;
};

}  // extern "C"

namespace {

thread_local std::string g_last_error;

ssn_status to_status(errc code) { return static_cast<ssn_status>(static_cast<int>(code)); }

template <typename Fn>
ssn_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SSN_OK;
  } catch (const ssnet::error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SSN_E_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SSN_E_INTERNAL;
  }
}

ssn_status bad_pointer() {
  g_last_error = "null pointer argument";
  return SSN_E_BAD_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

const ssnet::EvolutionStage& stage_at(const ssn_evolution* evolution, uint32_t stage) {
  if (stage < 1 || stage > evolution->stages.size())
    throw ssnet::error(errc::invalid_index, "stage index outside the evolution");
  return evolution->stages[stage - 1];
}

void copy_table(const ssnet::FrequencyTable& table, double* out) {
  for (std::size_t i = 0; i < table.size(); ++i) out[i] = table[i].second;
}

void copy_root(const ssnet::RootResult& root, ssn_root* out) {
  out->value = root.value;
  out->residual = root.residual;
  out->iterations = root.iterations;
}

}  // namespace

extern "C" {

const char* ssn_status_name(ssn_status status) {
  return ssnet::errc_name(static_cast<errc>(static_cast<int>(status)));
}

const char* ssn_last_error(void) { return g_last_error.c_str(); }

const char* ssn_version(void) { return "1.0.0"; }

void ssn_string_free(char* s) { std::free(s); }

void ssn_doubles_free(double* values) { std::free(values); }

/* ---------- distributions ---------- */

ssn_status ssn_benford_pmf(int digit, int base, double* out) {
  if (!out) return bad_pointer();
  return guarded([&] { *out = ssnet::benford_pmf(digit, base); });
}

ssn_status ssn_zipf_pmf_harmonic(uint64_t rank, uint64_t n, double* out) {
  if (!out) return bad_pointer();
  return guarded([&] { *out = ssnet::zipf_pmf(ssnet::ZipfModel::harmonic(n), rank); });
}

ssn_status ssn_zipf_pmf_top_match(uint64_t rank, uint64_t n, double top, double* out) {
  if (!out) return bad_pointer();
  return guarded([&] { *out = ssnet::zipf_pmf(ssnet::ZipfModel::top_match(n, top), rank); });
}

ssn_status ssn_power_law_pmf(uint64_t rank, double lambda, uint64_t m, uint64_t k_max,
                             int normalized, double* out) {
  if (!out) return bad_pointer();
  return guarded([&] {
    *out = ssnet::power_law_pmf(ssnet::PowerLawModel(lambda, m, k_max), rank, normalized != 0);
  });
}

ssn_status ssn_pareto_density(double x, double alpha, double x_min, double* out) {
  if (!out) return bad_pointer();
  return guarded([&] { *out = ssnet::pareto_density(ssnet::ParetoModel(alpha, x_min), x); });
}

ssn_status ssn_aggregate_connectivity(double top, double ratio, uint64_t node_count,
                                      double* out) {
  if (!out) return bad_pointer();
  return guarded([&] {
    *out = ssnet::aggregate_connectivity(top, ratio, ssnet::NodeCount::finite(node_count));
  });
}

ssn_status ssn_aggregate_connectivity_infinite(double top, double ratio, double* out) {
  if (!out) return bad_pointer();
  return guarded([&] {
    *out = ssnet::aggregate_connectivity(top, ratio, ssnet::NodeCount::infinite());
  });
}

ssn_status ssn_aggregate_sensitivity(double ratio, double* out) {
  if (!out) return bad_pointer();
  return guarded([&] { *out = ssnet::aggregate_sensitivity(ratio); });
}

ssn_status ssn_table_benford(int base, uint64_t count, double* out) {
  if (!out) return bad_pointer();
  return guarded([&] {
    copy_table(ssnet::table_frequencies(ssnet::BenfordModel(base), count), out);
  });
}

ssn_status ssn_table_zipf_harmonic(uint64_t n, uint64_t count, double* out) {
  if (!out) return bad_pointer();
  return guarded([&] {
    copy_table(ssnet::table_frequencies(ssnet::ZipfModel::harmonic(n), count), out);
  });
}

ssn_status ssn_table_zipf_top_match(uint64_t n, double top, uint64_t count, double* out) {
  if (!out) return bad_pointer();
  return guarded([&] {
    copy_table(ssnet::table_frequencies(ssnet::ZipfModel::top_match(n, top), count), out);
  });
}

ssn_status ssn_table_power_law(double lambda, uint64_t m, uint64_t k_max, int normalized,
                               uint64_t count, double* out) {
  if (!out) return bad_pointer();
  return guarded([&] {
    copy_table(
        ssnet::table_frequencies(ssnet::PowerLawModel(lambda, m, k_max), count, normalized != 0),
        out);
  });
}

/* ---------- geometric rank model ---------- */

ssn_status ssn_geom_model_new(double top, double ratio, uint64_t node_count,
                              ssn_geom_model** out) {
  if (!out) return bad_pointer();
  return guarded([&] {
    *out = new ssn_geom_model{
        ssnet::GeometricRankModel(top, ratio, ssnet::NodeCount::finite(node_count))};
  });
}

ssn_status ssn_geom_model_new_infinite(double top, double ratio, ssn_geom_model** out) {
  if (!out) return bad_pointer();
  return guarded([&] {
    *out = new ssn_geom_model{
        ssnet::GeometricRankModel(top, ratio, ssnet::NodeCount::infinite())};
  });
}

void ssn_geom_model_free(ssn_geom_model* model) { delete model; }

ssn_status ssn_geom_pmf(const ssn_geom_model* model, uint64_t rank, double* out) {
  if (!model || !out) return bad_pointer();
  return guarded([&] { *out = ssnet::geometric_rank_pmf(model->rep, rank); });
}

ssn_status ssn_geom_nominal_degree(const ssn_geom_model* model, uint64_t rank, double* out) {
  if (!model || !out) return bad_pointer();
  return guarded([&] { *out = ssnet::nominal_degree(model->rep, rank); });
}

ssn_status ssn_geom_aggregate(const ssn_geom_model* model, double* out) {
  if (!model || !out) return bad_pointer();
  return guarded([&] { *out = ssnet::aggregate_connectivity(model->rep); });
}

ssn_status ssn_geom_table(const ssn_geom_model* model, int normalized, uint64_t count,
                          double* out) {
  if (!model || !out) return bad_pointer();
  return guarded([&] {
    copy_table(ssnet::table_frequencies(model->rep, count, normalized != 0), out);
  });
}

ssn_status ssn_geom_quantize(const ssn_geom_model* model, ssn_degree_seq** out) {
  if (!model || !out) return bad_pointer();
  return guarded([&] { *out = new ssn_degree_seq{ssnet::quantize_degrees(model->rep)}; });
}

/* ---------- scaling-factor solvers ---------- */

ssn_status ssn_solve_block_ratio(int group_size, ssn_root* out) {
  if (!out) return bad_pointer();
  return guarded([&] { copy_root(ssnet::solve_block_ratio(group_size), out); });
}

ssn_status ssn_solve_block_pair(int pair_index, ssn_root* out) {
  if (!out) return bad_pointer();
  return guarded([&] { copy_root(ssnet::solve_block_pair(pair_index), out); });
}

ssn_status ssn_solve_pareto_ratio(uint64_t node_count, double top_frac, double mass_frac,
                                  int infinite_aggregate, ssn_root* out) {
  if (!out) return bad_pointer();
  return guarded([&] {
    ssnet::ParetoSolveOptions options;
    options.top_frac = top_frac;
    options.mass_frac = mass_frac;
    options.infinite_aggregate = infinite_aggregate != 0;
    copy_root(ssnet::solve_pareto_ratio(node_count, options), out);
  });
}

/* ---------- block-equal-mass models ---------- */

ssn_status ssn_block_model_new(int branching, int blocks, int within_mode,
                               ssn_block_model** out) {
  if (!out) return bad_pointer();
  return guarded([&] {
    if (within_mode != SSN_WITHIN_UNIFORM && within_mode != SSN_WITHIN_GEOMETRIC_RENORMALIZED)
      throw ssnet::error(errc::bad_argument, "unknown within-block mode");
    auto within = within_mode == SSN_WITHIN_UNIFORM
                      ? ssnet::WithinBlock::uniform
                      : ssnet::WithinBlock::geometric_renormalized;
    *out = new ssn_block_model{ssnet::BlockEqualMassModel(branching, blocks, within)};
  });
}

void ssn_block_model_free(ssn_block_model* model) { delete model; }

uint64_t ssn_block_model_support(const ssn_block_model* model) {
  return model ? model->rep.support_size() : 0;
}

ssn_status ssn_block_pmf(const ssn_block_model* model, uint64_t rank, double* out) {
  if (!model || !out) return bad_pointer();
  return guarded([&] { *out = model->rep.pmf(rank); });
}

ssn_status ssn_block_mass_vector(const ssn_block_model* model, double* out) {
  if (!model || !out) return bad_pointer();
  return guarded([&] {
    std::vector<double> masses = model->rep.block_mass_vector();
    std::memcpy(out, masses.data(), masses.size() * sizeof(double));
  });
}

ssn_status ssn_block_index(uint64_t rank, int branching, int* out) {
  if (!out) return bad_pointer();
  return guarded([&] { *out = ssnet::block_index(rank, branching); });
}

ssn_status ssn_group_sum_ratio(double ratio, int group_size, double* out) {
  if (!out) return bad_pointer();
  return guarded([&] { *out = ssnet::group_sum_ratio(ratio, group_size); });
}

ssn_status ssn_misaligned_dominance(const double* values, size_t value_count,
                                    const size_t* partition, size_t group_count,
                                    ssn_dominance_row* rows, size_t* row_count) {
  if (!values || !partition || !rows || !row_count) return bad_pointer();
  return guarded([&] {
    auto result = ssnet::misaligned_dominance({values, value_count}, {partition, group_count});
    for (std::size_t i = 0; i < result.size(); ++i) {
      rows[i].group = result[i].group;
      rows[i].group_mass = result[i].group_mass;
      rows[i].successor_mass = result[i].successor_mass;
      switch (result[i].outcome) {
        case ssnet::DominanceOutcome::dominates: rows[i].outcome = 1; break;
        case ssnet::DominanceOutcome::equal: rows[i].outcome = 0; break;
        case ssnet::DominanceOutcome::below: rows[i].outcome = -1; break;
      }
    }
    *row_count = result.size();
  });
}

/* ---------- degree sequences and graphs ---------- */

ssn_status ssn_degree_seq_new(const uint32_t* degrees, size_t count, ssn_degree_seq** out) {
  if (!degrees || !out) return bad_pointer();
  return guarded([&] {
    *out = new ssn_degree_seq{
        ssnet::DegreeSequence(std::vector<uint32_t>(degrees, degrees + count))};
  });
}

void ssn_degree_seq_free(ssn_degree_seq* seq) { delete seq; }

size_t ssn_degree_seq_size(const ssn_degree_seq* seq) { return seq ? seq->rep.size() : 0; }

uint64_t ssn_degree_seq_sum(const ssn_degree_seq* seq) { return seq ? seq->rep.sum() : 0; }

ssn_status ssn_degree_seq_values(const ssn_degree_seq* seq, uint32_t* out) {
  if (!seq || !out) return bad_pointer();
  return guarded([&] {
    const auto& d = seq->rep.degrees();
    std::memcpy(out, d.data(), d.size() * sizeof(uint32_t));
  });
}

int ssn_degree_seq_is_graphical(const ssn_degree_seq* seq) {
  return seq && ssnet::is_graphical(seq->rep) ? 1 : 0;
}

ssn_status ssn_degree_seq_repair(const ssn_degree_seq* seq, ssn_degree_seq** out) {
  if (!seq || !out) return bad_pointer();
  return guarded([&] { *out = new ssn_degree_seq{ssnet::repair_sequence(seq->rep)}; });
}

ssn_status ssn_degree_seq_realize(const ssn_degree_seq* seq, ssn_graph** out) {
  if (!seq || !out) return bad_pointer();
  return guarded([&] { *out = new ssn_graph{ssnet::realize(seq->rep)}; });
}

void ssn_graph_free(ssn_graph* graph) { delete graph; }

uint32_t ssn_graph_node_count(const ssn_graph* graph) {
  return graph ? graph->rep.node_count() : 0;
}

uint64_t ssn_graph_edge_count(const ssn_graph* graph) {
  return graph ? graph->rep.edge_count() : 0;
}

ssn_status ssn_graph_edge(const ssn_graph* graph, uint64_t index, uint32_t* u, uint32_t* v) {
  if (!graph || !u || !v) return bad_pointer();
  return guarded([&] {
    if (index >= graph->rep.edge_count())
      throw ssnet::error(errc::invalid_index, "edge index out of range");
    const ssnet::Edge& e = graph->rep.edges()[index];
    *u = e.first;
    *v = e.second;
  });
}

ssn_status ssn_graph_degrees(const ssn_graph* graph, uint32_t* out) {
  if (!graph || !out) return bad_pointer();
  return guarded([&] {
    std::vector<uint32_t> d = graph->rep.degrees();
    std::memcpy(out, d.data(), d.size() * sizeof(uint32_t));
  });
}

ssn_status ssn_graph_degree_sequence(const ssn_graph* graph, ssn_degree_seq** out) {
  if (!graph || !out) return bad_pointer();
  return guarded([&] {
    *out = new ssn_degree_seq{ssnet::DegreeSequence::sorted_from(graph->rep.degrees())};
  });
}

ssn_status ssn_graph_path_length(const ssn_graph* graph, double* out) {
  if (!graph || !out) return bad_pointer();
  return guarded([&] { *out = ssnet::characteristic_path_length(graph->rep); });
}

uint32_t ssn_graph_component_count(const ssn_graph* graph) {
  return graph ? ssnet::component_count(graph->rep) : 0;
}

ssn_status ssn_graph_largest_component(const ssn_graph* graph, ssn_graph** out) {
  if (!graph || !out) return bad_pointer();
  return guarded([&] { *out = new ssn_graph{ssnet::largest_component(graph->rep)}; });
}

ssn_status ssn_graph_edge_list_string(const ssn_graph* graph, char** out) {
  if (!graph || !out) return bad_pointer();
  return guarded([&] { *out = copy_string(ssnet::edge_list_string(graph->rep)); });
}

ssn_status ssn_graph_write_edge_list(const ssn_graph* graph, const char* path) {
  if (!graph || !path) return bad_pointer();
  return guarded([&] { ssnet::write_text_file(path, ssnet::edge_list_string(graph->rep)); });
}

ssn_status ssn_graph_read_edge_list(const char* path, ssn_graph** out) {
  if (!path || !out) return bad_pointer();
  return guarded([&] {
    *out = new ssn_graph{ssnet::parse_edge_list(ssnet::read_text_file(path))};
  });
}

ssn_status ssn_degree_csv_string(const double* degrees, size_t count, char** out) {
  if (!degrees || !out) return bad_pointer();
  return guarded([&] { *out = copy_string(ssnet::degree_csv_string({degrees, count})); });
}

ssn_status ssn_degree_seq_csv_string(const ssn_degree_seq* seq, char** out) {
  if (!seq || !out) return bad_pointer();
  return guarded([&] { *out = copy_string(ssnet::degree_csv_string(seq->rep)); });
}

ssn_status ssn_read_degree_csv(const char* path, double** values, size_t* count) {
  if (!path || !values || !count) return bad_pointer();
  return guarded([&] {
    std::vector<double> parsed = ssnet::parse_degree_csv(ssnet::read_text_file(path));
    double* out = static_cast<double*>(std::malloc(parsed.size() * sizeof(double)));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, parsed.data(), parsed.size() * sizeof(double));
    *values = out;
    *count = parsed.size();
  });
}

/* ---------- two-mode evolution ---------- */

ssn_status ssn_evolve(uint32_t mode_a, uint32_t mode_b, uint32_t stages, uint32_t initial_depth,
                      ssn_evolution** out) {
  if (!out) return bad_pointer();
  return guarded([&] {
    *out = new ssn_evolution{ssnet::evolve(ssnet::ModeSpec{mode_a, "a"},
                                           ssnet::ModeSpec{mode_b, "b"}, stages, initial_depth)};
  });
}

void ssn_evolution_free(ssn_evolution* evolution) { delete evolution; }

uint32_t ssn_evolution_stage_count(const ssn_evolution* evolution) {
  return evolution ? static_cast<uint32_t>(evolution->stages.size()) : 0;
}

ssn_status ssn_stage_info(const ssn_evolution* evolution, uint32_t stage, uint32_t* mode,
                          uint32_t* depth, uint64_t* node_count, uint64_t* total_connections) {
  if (!evolution) return bad_pointer();
  return guarded([&] {
    const ssnet::EvolutionStage& s = stage_at(evolution, stage);
    if (mode) *mode = s.mode.r;
    if (depth) *depth = s.depth;
    if (node_count) *node_count = s.node_count;
    if (total_connections) *total_connections = s.total_connections;
  });
}

ssn_status ssn_stage_layer_count(const ssn_evolution* evolution, uint32_t stage, uint32_t* out) {
  if (!evolution || !out) return bad_pointer();
  return guarded([&] {
    *out = static_cast<uint32_t>(stage_at(evolution, stage).layers.size());
  });
}

ssn_status ssn_stage_layer(const ssn_evolution* evolution, uint32_t stage, uint32_t layer,
                           uint64_t* node_lo, uint64_t* node_hi, uint64_t* degree) {
  if (!evolution) return bad_pointer();
  return guarded([&] {
    const ssnet::EvolutionStage& s = stage_at(evolution, stage);
    if (layer >= s.layers.size())
      throw ssnet::error(errc::invalid_index, "layer index outside the stage");
    const ssnet::StageLayer& l = s.layers[layer];
    if (node_lo) *node_lo = l.node_lo;
    if (node_hi) *node_hi = l.node_hi;
    if (degree) *degree = l.degree;
  });
}

ssn_status ssn_stage_degree_sequence(const ssn_evolution* evolution, uint32_t stage,
                                     ssn_degree_seq** out) {
  if (!evolution || !out) return bad_pointer();
  return guarded([&] {
    *out = new ssn_degree_seq{ssnet::stage_degree_sequence(stage_at(evolution, stage))};
  });
}

ssn_status ssn_stage_realize(const ssn_evolution* evolution, uint32_t stage, int* repaired,
                             uint64_t* theoretical_total, uint64_t* actual_total,
                             ssn_degree_seq** actual, ssn_graph** graph) {
  if (!evolution) return bad_pointer();
  return guarded([&] {
    ssnet::RealizedStage realized = ssnet::realize_stage(stage_at(evolution, stage));
    if (repaired) *repaired = realized.repaired ? 1 : 0;
    if (theoretical_total) *theoretical_total = realized.theoretical_total;
    if (actual_total) *actual_total = realized.actual_total;
    if (actual) *actual = new ssn_degree_seq{std::move(realized.actual)};
    if (graph) *graph = new ssn_graph{std::move(realized.graph)};
  });
}

ssn_status ssn_transition_deltas(const ssn_evolution* evolution, uint32_t stage, int64_t* deltas,
                                 uint64_t* first_new_node, uint64_t* new_node_count) {
  if (!evolution || !deltas) return bad_pointer();
  return guarded([&] {
    const ssnet::EvolutionStage& prev = stage_at(evolution, stage);
    const ssnet::EvolutionStage& next = stage_at(evolution, stage + 1);
    ssnet::TransitionReport report = ssnet::transition_report(prev, next);
    std::memcpy(deltas, report.deltas.data(), report.deltas.size() * sizeof(int64_t));
    if (first_new_node) *first_new_node = prev.node_count + 1;
    if (new_node_count) *new_node_count = report.new_nodes.size();
  });
}

ssn_status ssn_second_level_ratio(const ssn_evolution* evolution, double* per_stage,
                                  double* mean) {
  if (!evolution || !per_stage || !mean) return bad_pointer();
  return guarded([&] {
    ssnet::SecondLevelRatios ratios = ssnet::second_level_ratio(evolution->stages);
    std::memcpy(per_stage, ratios.per_stage.data(), ratios.per_stage.size() * sizeof(double));
    *mean = ratios.mean;
  });
}

ssn_status ssn_next_depth(uint64_t prev_top_degree, uint32_t r, uint32_t* out) {
  if (!out) return bad_pointer();
  return guarded([&] { *out = ssnet::next_depth(prev_top_degree, r); });
}

/* ---------- similarity analysis ---------- */

ssn_status ssn_fit_geometric(const double* degrees, size_t count, ssn_geometric_fit* out) {
  if (!degrees || !out) return bad_pointer();
  return guarded([&] {
    ssnet::GeometricFit fit = ssnet::fit_geometric({degrees, count});
    *out = ssn_geometric_fit{fit.top, fit.ratio, fit.goodness, fit.n};
  });
}

ssn_status ssn_fit_power_law(const double* degrees, size_t count, ssn_power_law_fit* out) {
  if (!degrees || !out) return bad_pointer();
  return guarded([&] {
    ssnet::PowerLawFit fit = ssnet::fit_power_law({degrees, count});
    *out = ssn_power_law_fit{fit.exponent, fit.goodness, fit.n};
  });
}

ssn_status ssn_midterm_deviation(const double* values, size_t count, double* geometric,
                                 double* harmonic) {
  if (!values || !geometric || !harmonic) return bad_pointer();
  return guarded([&] {
    ssnet::MidtermDeviation dev = ssnet::midterm_deviation({values, count});
    *geometric = dev.geometric;
    *harmonic = dev.harmonic;
  });
}

ssn_status ssn_pareto_share(const double* degrees, size_t count, double top_frac, double* out) {
  if (!degrees || !out) return bad_pointer();
  return guarded([&] { *out = ssnet::pareto_share({degrees, count}, top_frac); });
}

ssn_status ssn_tv_distance(const double* p, const double* q, size_t count, double* out) {
  if (!p || !q || !out) return bad_pointer();
  return guarded([&] { *out = ssnet::tv_distance({p, count}, {q, count}); });
}

ssn_status ssn_benford_mixture_sim(uint64_t processes, uint64_t max_range, uint64_t seed,
                                   int base, double* frequencies) {
  if (!frequencies) return bad_pointer();
  return guarded([&] {
    std::vector<double> freq = ssnet::benford_mixture_sim(processes, max_range, seed, base);
    std::memcpy(frequencies, freq.data(), freq.size() * sizeof(double));
  });
}

}  // extern "C"
