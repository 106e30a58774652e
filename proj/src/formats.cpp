#include "formats.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ssnet {

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

std::string edge_list_string(const SimpleGraph& graph) {
  std::ostringstream os;
  for (const Edge& e : graph.edges()) os << e.first << '\t' << e.second << '\n';
  return os.str();
}

SimpleGraph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::uint32_t max_node = 0;
  std::size_t line_no = 0;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::uint64_t u = 0, v = 0;
    if (!(ls >> u >> v) || u < 1 || v < 1) {
      std::ostringstream os;
      os << "edge list line " << line_no << ": expected two positive node ids";
      throw error(errc::parse_error, os.str());
    }
    std::string rest;
    if (ls >> rest) {
      std::ostringstream os;
      os << "edge list line " << line_no << ": trailing content";
      throw error(errc::parse_error, os.str());
    }
    max_node = std::max<std::uint32_t>(max_node,
                                       static_cast<std::uint32_t>(std::max(u, v)));
    edges.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
  }
  if (max_node == 0) throw error(errc::parse_error, "edge list is empty");
  return SimpleGraph(max_node, std::move(edges));
}

std::string degree_csv_string(const DegreeSequence& seq) {
  std::ostringstream os;
  os << "rank,degree\n";
  for (std::size_t i = 0; i < seq.size(); ++i) os << i + 1 << ',' << seq[i] << '\n';
  return os.str();
}

std::string degree_csv_string(std::span<const double> degrees) {
  std::ostringstream os;
  os << "rank,degree\n";
  for (std::size_t i = 0; i < degrees.size(); ++i)
    os << i + 1 << ',' << format_double(degrees[i]) << '\n';
  return os.str();
}

std::vector<double> parse_degree_csv(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  if (!std::getline(is, line) || line != "rank,degree")
    throw error(errc::parse_error, "degree file must start with a rank,degree header");
  std::vector<double> degrees;
  std::size_t expected_rank = 1;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::size_t comma = line.find(',');
    if (comma == std::string::npos) {
      std::ostringstream os;
      os << "degree file line " << line_no << ": missing comma";
      throw error(errc::parse_error, os.str());
    }
    try {
      std::size_t used = 0;
      unsigned long rank = std::stoul(line.substr(0, comma), &used);
      if (used != comma || rank != expected_rank) {
        std::ostringstream os;
        os << "degree file line " << line_no << ": expected rank " << expected_rank;
        throw error(errc::parse_error, os.str());
      }
      degrees.push_back(std::stod(line.substr(comma + 1)));
    } catch (const error&) {
      throw;
    } catch (const std::exception&) {
      std::ostringstream os;
      os << "degree file line " << line_no << ": malformed row";
      throw error(errc::parse_error, os.str());
    }
    ++expected_rank;
  }
  if (degrees.empty()) throw error(errc::parse_error, "degree file has no rows");
  return degrees;
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error(errc::io_error, "cannot open " + path + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw error(errc::io_error, "failed writing " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::io_error, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw error(errc::io_error, "failed reading " + path);
  return os.str();
}

}  // namespace ssnet
