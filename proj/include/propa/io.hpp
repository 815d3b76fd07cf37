#pragma once

#include <string>
#include <utility>
#include <vector>

#include "propa/covers.hpp"
#include "propa/dimension.hpp"
#include "propa/spaces.hpp"
#include "propa/witness.hpp"

namespace propa {

// Serialization policy: documents are JSON with a fixed key order, two-space
// indentation and a trailing newline, so identical inputs produce
// byte-identical files. Exact rationals serialize as "p/q" strings; the few
// genuinely real-valued quantities serialize with 12 significant digits.

// %.12g rendering (12 significant digits, no trailing zero noise).
std::string format_real(double value);

// Space documents. Generated spaces keep their generator parameters;
// explicit graphs keep the canonical edge list.
std::string space_doc(const FiniteMetricSpace& space);
FiniteMetricSpace parse_space_doc(const std::string& text);

// Cover documents embed their space, so every downstream command needs only
// one input. Basepoints are optional on input (chosen by choose_basepoints
// when absent) and always present on output.
std::string cover_doc(const FiniteMetricSpace& space, const Cover& cover);
std::pair<FiniteMetricSpace, Cover> parse_cover_doc(const std::string& text);

std::string stats_doc(const CoverStats& stats);
std::string witness_doc(const WitnessReport& report);
std::string dim_doc(const DimEstimate& estimate);

// CSV with the fixed column header
// n,m,bound,measured_sup_eta,measured_sup_zeta,sup_pair_x,sup_pair_y.
std::string bound_curve_csv(const std::vector<BoundCurveRow>& rows);

// Plain-text graph input: '#' comment lines, then a vertex count on the
// first data line, then one "a b" edge per line. Errors cite line numbers.
FiniteMetricSpace parse_graph_edge_list(const std::string& text,
                                        std::size_t point_budget = kDefaultPointBudget);

// CLI plumbing: "-" (or empty) means stdin/stdout.
std::string read_input(const std::string& path);
void write_output(const std::string& path, const std::string& content);

}  // namespace propa
