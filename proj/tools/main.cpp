// ssnet command-line front end. Everything flows through the C API in
// ssnet/ssnet.h; this file only parses arguments and formats output.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <ssnet/ssnet.h>

namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string fmt_root(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10f", v);
  return buf;
}

// exit 2 for IO and file-format problems, 1 for domain errors
int exit_for(ssn_status st) { return (st == SSN_E_IO || st == SSN_E_PARSE) ? 2 : 1; }

int report(ssn_status st) {
  std::cerr << "error: " << ssn_last_error() << "\n";
  return exit_for(st);
}

#define CHECK_OK(call)                        \
  do {                                        \
    ssn_status st__ = (call);                 \
    if (st__ != SSN_OK) return report(st__);  \
  } while (0)

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return 2;
  }
  f << text;
  if (!f) {
    std::cerr << "error: failed writing " << out_path << "\n";
    return 2;
  }
  return 0;
}

using Row = std::vector<std::string>;

std::string render(const std::vector<Row>& rows, const std::string& format) {
  std::string out;
  if (format == "table") {
    std::vector<std::size_t> width;
    for (const Row& row : rows) {
      if (width.size() < row.size()) width.resize(row.size(), 0);
      for (std::size_t i = 0; i < row.size(); ++i)
        width[i] = std::max(width[i], row[i].size());
    }
    for (const Row& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += "  ";
        out += row[i];
        if (i + 1 < row.size()) out.append(width[i] - row[i].size(), ' ');
      }
      out += '\n';
    }
  } else {
    for (const Row& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += row[i];
      }
      out += '\n';
    }
  }
  return out;
}

// owners for the opaque handles used below
struct GeomModel {
  ssn_geom_model* p = nullptr;
  ~GeomModel() { ssn_geom_model_free(p); }
};
struct BlockModel {
  ssn_block_model* p = nullptr;
  ~BlockModel() { ssn_block_model_free(p); }
};
struct DegreeSeq {
  ssn_degree_seq* p = nullptr;
  ~DegreeSeq() { ssn_degree_seq_free(p); }
};
struct Graph {
  ssn_graph* p = nullptr;
  ~Graph() { ssn_graph_free(p); }
};
struct Evolution {
  ssn_evolution* p = nullptr;
  ~Evolution() { ssn_evolution_free(p); }
};
struct CString {
  char* p = nullptr;
  ~CString() { ssn_string_free(p); }
};

// ---------------------------------------------------------------- gen

struct GenOptions {
  double top = 10.0;
  double ratio = 1.5;
  std::uint64_t nodes = 20;
  std::uint32_t branching = 2;
  std::uint32_t depth = 2;
  std::string emit_kind = "edges";
  std::string out_path;
};

int run_gen_geometric(const GenOptions& opt) {
  GeomModel model;
  CHECK_OK(ssn_geom_model_new(opt.top, opt.ratio, opt.nodes, &model.p));
  if (opt.emit_kind == "nominal") {
    std::vector<double> degrees(opt.nodes);
    for (std::uint64_t k = 1; k <= opt.nodes; ++k)
      CHECK_OK(ssn_geom_nominal_degree(model.p, k, &degrees[k - 1]));
    CString csv;
    CHECK_OK(ssn_degree_csv_string(degrees.data(), degrees.size(), &csv.p));
    return emit(csv.p, opt.out_path);
  }
  DegreeSeq quantized;
  CHECK_OK(ssn_geom_quantize(model.p, &quantized.p));
  DegreeSeq repaired;
  CHECK_OK(ssn_degree_seq_repair(quantized.p, &repaired.p));
  if (opt.emit_kind == "degrees") {
    CString csv;
    CHECK_OK(ssn_degree_seq_csv_string(repaired.p, &csv.p));
    return emit(csv.p, opt.out_path);
  }
  Graph graph;
  CHECK_OK(ssn_degree_seq_realize(repaired.p, &graph.p));
  CString edges;
  CHECK_OK(ssn_graph_edge_list_string(graph.p, &edges.p));
  return emit(edges.p, opt.out_path);
}

int run_gen_p3(const GenOptions& opt) {
  Evolution evo;
  CHECK_OK(ssn_evolve(opt.branching, opt.branching, 1, opt.depth, &evo.p));
  DegreeSeq actual;
  Graph graph;
  CHECK_OK(ssn_stage_realize(evo.p, 1, nullptr, nullptr, nullptr, &actual.p, &graph.p));
  if (opt.emit_kind == "degrees") {
    CString csv;
    CHECK_OK(ssn_degree_seq_csv_string(actual.p, &csv.p));
    return emit(csv.p, opt.out_path);
  }
  CString edges;
  CHECK_OK(ssn_graph_edge_list_string(graph.p, &edges.p));
  return emit(edges.p, opt.out_path);
}

// ---------------------------------------------------------------- solve

int print_root(const ssn_root& root, const std::string& format) {
  if (format == "json") {
    json record = {{"value", root.value},
                   {"residual", root.residual},
                   {"iterations", root.iterations}};
    std::cout << record.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "value,residual,iterations\n"
              << fmt(root.value) << ',' << fmt(root.residual) << ',' << root.iterations << "\n";
  } else {
    std::cout << fmt_root(root.value) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- evolve

struct EvolveOptions {
  std::vector<std::uint32_t> modes;
  std::uint32_t stages = 5;
  std::uint32_t depth = 2;
  std::string format = "csv";
  bool layers = false;
  bool realize = false;
  std::string out_dir;
};

int run_evolve(const EvolveOptions& opt) {
  Evolution evo;
  CHECK_OK(ssn_evolve(opt.modes[0], opt.modes[1], opt.stages, opt.depth, &evo.p));
  std::uint32_t count = ssn_evolution_stage_count(evo.p);

  std::vector<Row> rows;
  if (opt.layers) {
    rows.push_back({"stage", "mode", "depth", "layer", "node_lo", "node_hi", "degree"});
    for (std::uint32_t s = 1; s <= count; ++s) {
      std::uint32_t mode = 0, depth = 0, layer_count = 0;
      CHECK_OK(ssn_stage_info(evo.p, s, &mode, &depth, nullptr, nullptr));
      CHECK_OK(ssn_stage_layer_count(evo.p, s, &layer_count));
      for (std::uint32_t l = 0; l < layer_count; ++l) {
        std::uint64_t lo = 0, hi = 0, degree = 0;
        CHECK_OK(ssn_stage_layer(evo.p, s, l, &lo, &hi, &degree));
        rows.push_back({std::to_string(s), std::to_string(mode), std::to_string(depth),
                        std::to_string(l), std::to_string(lo), std::to_string(hi),
                        std::to_string(degree)});
      }
    }
  } else {
    rows.push_back({"stage", "mode", "depth", "nodes", "total_connections"});
    for (std::uint32_t s = 1; s <= count; ++s) {
      std::uint32_t mode = 0, depth = 0;
      std::uint64_t nodes = 0, total = 0;
      CHECK_OK(ssn_stage_info(evo.p, s, &mode, &depth, &nodes, &total));
      rows.push_back({std::to_string(s), std::to_string(mode), std::to_string(depth),
                      std::to_string(nodes), std::to_string(total)});
    }
  }

  if (opt.realize) {
    std::string notes;
    for (std::uint32_t s = 1; s <= count; ++s) {
      int repaired = 0;
      std::uint64_t theoretical = 0, actual_total = 0;
      DegreeSeq actual;
      Graph graph;
      CHECK_OK(ssn_stage_realize(evo.p, s, &repaired, &theoretical, &actual_total, &actual.p,
                                 &graph.p));
      std::string base = opt.out_dir + "/stage_" + std::to_string(s);
      CHECK_OK(ssn_graph_write_edge_list(graph.p, (base + ".edges").c_str()));
      CString csv;
      CHECK_OK(ssn_degree_seq_csv_string(actual.p, &csv.p));
      std::ofstream df(base + "_degrees.csv", std::ios::binary);
      if (!df) {
        std::cerr << "error: cannot open " << base << "_degrees.csv for writing\n";
        return 2;
      }
      df << csv.p;
      if (repaired) {
        notes += "stage " + std::to_string(s) + ": theoretical degree total " +
                 std::to_string(theoretical) +
                 " is not realizable as a simple graph; repaired to " +
                 std::to_string(actual_total) + " by raising the lowest-degree nodes\n";
      }
    }
    if (!notes.empty()) {
      std::ofstream nf(opt.out_dir + "/notes.txt", std::ios::binary);
      if (!nf) {
        std::cerr << "error: cannot open " << opt.out_dir << "/notes.txt for writing\n";
        return 2;
      }
      nf << notes;
    }
  }

  std::cout << render(rows, opt.format);
  return 0;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeOptions {
  std::string in_path;
  bool no_trim = false;
  bool midterm = false;
  double share = 0.0;  // 0 = off
  bool path_length = false;
  bool use_largest_component = false;
};

std::vector<double> trim_unit_tail(std::vector<double> degrees) {
  while (!degrees.empty() && degrees.back() == 1.0) degrees.pop_back();
  return degrees;
}

int analyze_degrees_common(const std::vector<double>& raw, const AnalyzeOptions& opt,
                           std::string* out) {
  // the quantization floor pins trailing degrees at 1; fits run on the
  // stripped head unless --no-trim is given
  std::vector<double> fit_input = opt.no_trim ? raw : trim_unit_tail(raw);

  ssn_geometric_fit gfit;
  CHECK_OK(ssn_fit_geometric(fit_input.data(), fit_input.size(), &gfit));
  json grec = {{"model", "geometric"},
               {"parameters", {{"top", gfit.top}, {"ratio", gfit.ratio}}},
               {"goodness", gfit.goodness},
               {"n", gfit.n}};
  *out += grec.dump() + "\n";

  ssn_power_law_fit pfit;
  CHECK_OK(ssn_fit_power_law(fit_input.data(), fit_input.size(), &pfit));
  json prec = {{"model", "power_law"},
               {"parameters", {{"lambda", pfit.exponent}}},
               {"goodness", pfit.goodness},
               {"n", pfit.n}};
  *out += prec.dump() + "\n";

  if (opt.midterm) {
    double geo = 0.0, harm = 0.0;
    CHECK_OK(ssn_midterm_deviation(raw.data(), raw.size(), &geo, &harm));
    json rec = {{"model", "midterm_deviation"},
                {"parameters", {{"geometric", geo}, {"harmonic", harm}}},
                {"n", raw.size()}};
    *out += rec.dump() + "\n";
  }
  if (opt.share > 0.0) {
    double share = 0.0;
    CHECK_OK(ssn_pareto_share(raw.data(), raw.size(), opt.share, &share));
    json rec = {{"model", "pareto_share"},
                {"parameters", {{"top_frac", opt.share}, {"share", share}}},
                {"n", raw.size()}};
    *out += rec.dump() + "\n";
  }
  return 0;
}

int run_analyze_degrees(const AnalyzeOptions& opt) {
  double* values = nullptr;
  size_t count = 0;
  CHECK_OK(ssn_read_degree_csv(opt.in_path.c_str(), &values, &count));
  std::vector<double> raw(values, values + count);
  ssn_doubles_free(values);
  std::string out;
  int rc = analyze_degrees_common(raw, opt, &out);
  if (rc != 0) return rc;
  std::cout << out;
  return 0;
}

int run_analyze_edges(const AnalyzeOptions& opt) {
  Graph graph;
  CHECK_OK(ssn_graph_read_edge_list(opt.in_path.c_str(), &graph.p));
  Graph component;
  const ssn_graph* target = graph.p;
  if (opt.use_largest_component) {
    CHECK_OK(ssn_graph_largest_component(graph.p, &component.p));
    target = component.p;
  }
  DegreeSeq seq;
  CHECK_OK(ssn_graph_degree_sequence(target, &seq.p));
  std::vector<uint32_t> degrees(ssn_degree_seq_size(seq.p));
  CHECK_OK(ssn_degree_seq_values(seq.p, degrees.data()));
  std::vector<double> raw(degrees.begin(), degrees.end());

  std::string out;
  int rc = analyze_degrees_common(raw, opt, &out);
  if (rc != 0) return rc;
  if (opt.path_length) {
    double delta = 0.0;
    CHECK_OK(ssn_graph_path_length(target, &delta));
    json rec = {{"model", "path_length"},
                {"parameters", {{"value", delta}}},
                {"n", ssn_graph_node_count(target)}};
    out += rec.dump() + "\n";
  }
  std::cout << out;
  return 0;
}

struct MixtureOptions {
  std::uint64_t processes = 0;
  std::uint64_t max_range = 0;
  std::uint64_t seed = 0;
  int base = 10;
  bool tv_only = false;
};

int run_analyze_mixture(const MixtureOptions& opt) {
  if (opt.base < 2) {
    std::cerr << "error: base must be at least 2\n";
    return 2;
  }
  std::vector<double> observed(static_cast<std::size_t>(opt.base - 1));
  CHECK_OK(ssn_benford_mixture_sim(opt.processes, opt.max_range, opt.seed, opt.base,
                                   observed.data()));
  std::vector<double> expected(observed.size());
  CHECK_OK(ssn_table_benford(opt.base, expected.size(), expected.data()));
  if (opt.tv_only) {
    double tv = 0.0;
    CHECK_OK(ssn_tv_distance(observed.data(), expected.data(), observed.size(), &tv));
    std::cout << fmt(tv) << "\n";
    return 0;
  }
  std::vector<Row> rows;
  rows.push_back({"digit", "observed", "benford"});
  for (std::size_t d = 0; d < observed.size(); ++d)
    rows.push_back({std::to_string(d + 1), fmt(observed[d]), fmt(expected[d])});
  std::cout << render(rows, "csv");
  return 0;
}

// ---------------------------------------------------------------- tables

int run_table1(const std::string& format) {
  std::vector<double> benford(9), zipf(9);
  CHECK_OK(ssn_table_benford(10, 9, benford.data()));
  CHECK_OK(ssn_table_zipf_top_match(9, 0.301, 9, zipf.data()));
  std::vector<Row> rows;
  rows.push_back({"digit", "benford", "zipf"});
  for (int d = 0; d < 9; ++d)
    rows.push_back({std::to_string(d + 1), fmt(benford[d]), fmt(zipf[d])});
  std::cout << render(rows, format);
  return 0;
}

int run_fig1(std::uint64_t count, const std::string& format) {
  if (count < 1 || count > 1000) {
    std::cerr << "error: count must be in 1..1000\n";
    return 2;
  }
  // a proper first-digit law over `count` digits needs base count+1
  std::vector<double> benford(count), zipf(count);
  CHECK_OK(ssn_table_benford(static_cast<int>(count) + 1, count, benford.data()));
  CHECK_OK(ssn_table_zipf_top_match(count, 0.301, count, zipf.data()));
  std::vector<Row> rows;
  rows.push_back({"rank", "benford", "zipf"});
  for (std::uint64_t k = 0; k < count; ++k)
    rows.push_back({std::to_string(k + 1), fmt(benford[k]), fmt(zipf[k])});
  std::cout << render(rows, format);
  return 0;
}

int run_fig3(std::uint64_t count, const std::string& format) {
  if (count < 1 || count > 1000000) {
    std::cerr << "error: count must be in 1..1000000\n";
    return 2;
  }
  GeomModel fast, slow;
  CHECK_OK(ssn_geom_model_new_infinite(1.0, 1.5, &fast.p));
  CHECK_OK(ssn_geom_model_new_infinite(1.0, 1.4, &slow.p));
  std::vector<double> g15(count), g14(count), zipf(count);
  CHECK_OK(ssn_geom_table(fast.p, 0, count, g15.data()));
  CHECK_OK(ssn_geom_table(slow.p, 0, count, g14.data()));
  CHECK_OK(ssn_table_zipf_top_match(count, 1.0, count, zipf.data()));
  std::vector<Row> rows;
  rows.push_back({"rank", "geometric_a1.5", "geometric_a1.4", "zipf"});
  for (std::uint64_t k = 0; k < count; ++k)
    rows.push_back({std::to_string(k + 1), fmt(g15[k]), fmt(g14[k]), fmt(zipf[k])});
  std::cout << render(rows, format);
  return 0;
}

int run_fig4(std::uint64_t from, std::uint64_t to, std::uint64_t step,
             const std::string& format) {
  if (step == 0 || from < 5 || to < from) {
    std::cerr << "error: need from >= 5, to >= from and a positive step\n";
    return 2;
  }
  std::vector<Row> rows;
  rows.push_back({"N", "a"});
  for (std::uint64_t n = from; n <= to; n += step) {
    ssn_root root;
    CHECK_OK(ssn_solve_pareto_ratio(n, 0.2, 0.8, 0, &root));
    rows.push_back({std::to_string(n), fmt(root.value)});
  }
  std::cout << render(rows, format);
  return 0;
}

int run_table_p3(int branching, int blocks, bool renormalized, const std::string& format) {
  BlockModel model;
  CHECK_OK(ssn_block_model_new(branching, blocks,
                               renormalized ? SSN_WITHIN_GEOMETRIC_RENORMALIZED
                                            : SSN_WITHIN_UNIFORM,
                               &model.p));
  std::uint64_t support = ssn_block_model_support(model.p);
  if (support > 1000000) {
    std::cerr << "error: support too large to print (" << support << " ranks)\n";
    return 2;
  }
  std::vector<Row> rows;
  rows.push_back({"rank", "probability"});
  for (std::uint64_t rank = 1; rank <= support; ++rank) {
    double p = 0.0;
    CHECK_OK(ssn_block_pmf(model.p, rank, &p));
    rows.push_back({std::to_string(rank), fmt(p)});
  }
  std::cout << render(rows, format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank-ordered self-similar network toolkit"};
  app.require_subcommand(1);
  std::function<int()> action;

  // gen
  GenOptions gen_opt;
  CLI::App* gen = app.add_subcommand("gen", "generate a network as an edge list");
  gen->require_subcommand(1);
  CLI::App* gen_geom = gen->add_subcommand("geometric", "geometric rank-degree network");
  gen_geom->add_option("--top", gen_opt.top, "connectivity of the first-ranked node")->required();
  gen_geom->add_option("--ratio", gen_opt.ratio, "per-rank decay ratio (> 1)")->required();
  gen_geom->add_option("--nodes", gen_opt.nodes, "node count")->required();
  gen_geom->add_option("--emit", gen_opt.emit_kind, "edges | degrees | nominal")
      ->check(CLI::IsMember({"edges", "degrees", "nominal"}));
  gen_geom->add_option("--out", gen_opt.out_path, "output file (default: stdout)");
  gen_geom->callback([&] { action = [&] { return run_gen_geometric(gen_opt); }; });

  CLI::App* gen_p3 = gen->add_subcommand("p3", "block-equal-mass layered network");
  gen_p3->add_option("--branching", gen_opt.branching, "block branching factor (>= 2)")
      ->required();
  gen_p3->add_option("--depth", gen_opt.depth, "layer depth (>= 1)")->required();
  gen_p3->add_option("--emit", gen_opt.emit_kind, "edges | degrees")
      ->check(CLI::IsMember({"edges", "degrees"}));
  gen_p3->add_option("--out", gen_opt.out_path, "output file (default: stdout)");
  gen_p3->callback([&] { action = [&] { return run_gen_p3(gen_opt); }; });

  // solve
  int solve_size = 2;
  int solve_index = 1;
  std::uint64_t solve_nodes = 10;
  double solve_top_frac = 0.2, solve_mass_frac = 0.8;
  bool solve_infinite = false;
  std::string solve_format = "plain";
  CLI::App* solve = app.add_subcommand("solve", "solve a self-similarity scaling equation");
  solve->require_subcommand(1);
  CLI::App* solve_ratio =
      solve->add_subcommand("block-ratio", "1 = sum of r reciprocal powers");
  solve_ratio->add_option("--size", solve_size, "group size r (>= 2)")->required();
  solve_ratio->add_option("--format", solve_format, "plain | json | csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  solve_ratio->callback([&] {
    action = [&] {
      ssn_root root;
      CHECK_OK(ssn_solve_block_ratio(solve_size, &root));
      return print_root(root, solve_format);
    };
  });
  CLI::App* solve_pair = solve->add_subcommand("block-pair", "dyadic block-pair balance");
  solve_pair->add_option("--index", solve_index, "pair index j (>= 1)")->required();
  solve_pair->add_option("--format", solve_format, "plain | json | csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  solve_pair->callback([&] {
    action = [&] {
      ssn_root root;
      CHECK_OK(ssn_solve_block_pair(solve_index, &root));
      return print_root(root, solve_format);
    };
  });
  CLI::App* solve_pareto = solve->add_subcommand("pareto-a", "decay ratio for the 80-20 split");
  solve_pareto->add_option("--nodes", solve_nodes, "node count (>= 5)")->required();
  solve_pareto->add_option("--top-frac", solve_top_frac, "top node fraction");
  solve_pareto->add_option("--mass-frac", solve_mass_frac, "connectivity share of the top");
  solve_pareto->add_flag("--infinite", solve_infinite, "use the infinite-tail aggregate");
  solve_pareto->add_option("--format", solve_format, "plain | json | csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  solve_pareto->callback([&] {
    action = [&] {
      ssn_root root;
      CHECK_OK(ssn_solve_pareto_ratio(solve_nodes, solve_top_frac, solve_mass_frac,
                                      solve_infinite ? 1 : 0, &root));
      return print_root(root, solve_format);
    };
  });

  // evolve
  EvolveOptions evolve_opt;
  CLI::App* evolve = app.add_subcommand("evolve", "two-mode oscillation stages");
  evolve->add_option("--modes", evolve_opt.modes, "two scaling factors, e.g. 2,3")
      ->required()
      ->delimiter(',');
  evolve->add_option("--stages", evolve_opt.stages, "number of stages")->required();
  evolve->add_option("--depth", evolve_opt.depth, "depth of the first stage")->required();
  evolve->add_option("--format", evolve_opt.format, "csv | table")
      ->check(CLI::IsMember({"csv", "table"}));
  evolve->add_flag("--layers", evolve_opt.layers, "emit the per-layer table");
  evolve->add_flag("--realize", evolve_opt.realize, "write per-stage edge lists");
  evolve->add_option("--out-dir", evolve_opt.out_dir, "directory for --realize output");
  evolve->callback([&] {
    action = [&] {
      if (evolve_opt.modes.size() != 2) {
        std::cerr << "error: --modes needs exactly two values\n";
        return 2;
      }
      if (evolve_opt.realize && evolve_opt.out_dir.empty()) {
        std::cerr << "error: --realize requires --out-dir\n";
        return 2;
      }
      return run_evolve(evolve_opt);
    };
  });

  // analyze
  AnalyzeOptions analyze_opt;
  MixtureOptions mixture_opt;
  CLI::App* analyze = app.add_subcommand("analyze", "fit and diagnose degree data");
  analyze->require_subcommand(1);
  CLI::App* an_deg = analyze->add_subcommand("degrees", "fit a rank,degree CSV file");
  an_deg->add_option("--in", analyze_opt.in_path, "degree CSV file")->required();
  an_deg->add_flag("--no-trim", analyze_opt.no_trim, "keep the trailing degree-1 plateau");
  an_deg->add_flag("--midterm", analyze_opt.midterm, "report mid-term mean deviations");
  an_deg->add_option("--share", analyze_opt.share, "report the top-fraction degree share");
  an_deg->callback([&] { action = [&] { return run_analyze_degrees(analyze_opt); }; });
  CLI::App* an_edges = analyze->add_subcommand("edges", "fit an edge-list file");
  an_edges->add_option("--in", analyze_opt.in_path, "edge-list file")->required();
  an_edges->add_flag("--no-trim", analyze_opt.no_trim, "keep the trailing degree-1 plateau");
  an_edges->add_flag("--midterm", analyze_opt.midterm, "report mid-term mean deviations");
  an_edges->add_option("--share", analyze_opt.share, "report the top-fraction degree share");
  an_edges->add_flag("--path-length", analyze_opt.path_length,
                     "report the characteristic path length");
  an_edges->add_flag("--largest-component", analyze_opt.use_largest_component,
                     "analyze only the largest component");
  an_edges->callback([&] { action = [&] { return run_analyze_edges(analyze_opt); }; });
  CLI::App* an_mix = analyze->add_subcommand(
      "benford-mixture", "first digits of a two-level uniform mixture");
  an_mix->add_option("--processes", mixture_opt.processes, "number of processes")->required();
  an_mix->add_option("--max-range", mixture_opt.max_range, "upper bound of the range draw")
      ->required();
  an_mix->add_option("--seed", mixture_opt.seed, "RNG seed")->required();
  an_mix->add_option("--base", mixture_opt.base, "digit base (default 10)");
  an_mix->add_flag("--tv", mixture_opt.tv_only,
                   "print only the total-variation distance to the first-digit law");
  an_mix->callback([&] { action = [&] { return run_analyze_mixture(mixture_opt); }; });

  // tables
  std::uint64_t fig_count = 20;
  std::uint64_t fig4_from = 10, fig4_to = 55, fig4_step = 5;
  int p3_branching = 2, p3_blocks = 3;
  bool p3_renormalized = false;
  std::string tables_format = "csv";
  CLI::App* tables = app.add_subcommand("tables", "emit reference table and figure data");
  tables->require_subcommand(1);
  CLI::App* t1 = tables->add_subcommand("table1", "first-digit law vs rank-inverse frequencies");
  t1->add_option("--format", tables_format, "csv | table")
      ->check(CLI::IsMember({"csv", "table"}));
  t1->callback([&] { action = [&] { return run_table1(tables_format); }; });
  CLI::App* f1 = tables->add_subcommand("fig1", "long-tail comparison of the two laws");
  f1->add_option("--count", fig_count, "number of ranks");
  f1->add_option("--format", tables_format, "csv | table")
      ->check(CLI::IsMember({"csv", "table"}));
  f1->callback([&] { action = [&] { return run_fig1(fig_count, tables_format); }; });
  CLI::App* f3 = tables->add_subcommand("fig3", "geometric series vs rank-inverse frequencies");
  f3->add_option("--count", fig_count, "number of ranks");
  f3->add_option("--format", tables_format, "csv | table")
      ->check(CLI::IsMember({"csv", "table"}));
  f3->callback([&] { action = [&] { return run_fig3(fig_count, tables_format); }; });
  CLI::App* f4 = tables->add_subcommand("fig4", "80-20 decay ratio against node count");
  f4->add_option("--from", fig4_from, "first node count");
  f4->add_option("--to", fig4_to, "last node count");
  f4->add_option("--step", fig4_step, "node count step");
  f4->add_option("--format", tables_format, "csv | table")
      ->check(CLI::IsMember({"csv", "table"}));
  f4->callback([&] {
    action = [&] { return run_fig4(fig4_from, fig4_to, fig4_step, tables_format); };
  });
  CLI::App* tp3 = tables->add_subcommand("p3", "block-equal-mass probabilities by rank");
  tp3->add_option("--branching", p3_branching, "block branching factor")->required();
  tp3->add_option("--blocks", p3_blocks, "number of blocks")->required();
  tp3->add_flag("--renormalized", p3_renormalized, "geometric-renormalized within blocks");
  tp3->add_option("--format", tables_format, "csv | table")
      ->check(CLI::IsMember({"csv", "table"}));
  tp3->callback([&] {
    action = [&] { return run_table_p3(p3_branching, p3_blocks, p3_renormalized, tables_format); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help exits 0, every other parse problem is usage
  }
  if (!action) {
    std::cerr << "error: no action selected\n";
    return 2;
  }
  return action();
}
