#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "graphs.hpp"

namespace ssnet {

// Edge-list text format: one edge per line, "u<TAB>v", 1-indexed, u < v,
// sorted. Degree files are CSV with a "rank,degree" header; real-valued
// degrees are printed with 10 significant digits.

std::string edge_list_string(const SimpleGraph& graph);
SimpleGraph parse_edge_list(std::string_view text);

std::string degree_csv_string(const DegreeSequence& seq);
std::string degree_csv_string(std::span<const double> degrees);
std::vector<double> parse_degree_csv(std::string_view text);

void write_text_file(const std::string& path, std::string_view text);
std::string read_text_file(const std::string& path);

// 10-significant-digit formatting shared by every CSV emitter.
std::string format_double(double value);

}  // namespace ssnet
