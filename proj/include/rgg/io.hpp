#ifndef RGG_IO_HPP
#define RGG_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "rgg/coloring.hpp"
#include "rgg/experiments.hpp"
#include "rgg/graph.hpp"
#include "rgg/theory.hpp"

namespace rgg {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// shortest decimal string that round-trips the double (locale-independent)
std::string format_double(double v);
double parse_double(const std::string& s);

// "n m" header, then one "i j" line per edge, 0-indexed, i < j, sorted
std::string to_edgelist(const Graph& g);
Graph read_edgelist(std::istream& in);
Graph read_edgelist_file(const std::string& path);

// one "index color" line per vertex
std::string to_color_lines(const Coloring& c);

// trial table, fixed column order, one row per trial; byte-identical for
// identical configs (no wall-time field)
std::string trial_table_csv(const ExperimentReport& report);
std::vector<TrialRecord> parse_trial_table_csv(const std::string& csv);

// aggregates, trend statistics and the run manifest
std::string summary_json(const ExperimentReport& report);

// "t,xi,c_ratio" rows
std::string theory_csv(const std::vector<TheoryRow>& rows);

void write_file(const std::string& path, const std::string& content);

}  // namespace rgg

#endif  // RGG_IO_HPP
