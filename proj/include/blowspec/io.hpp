#pragma once

#include <string>
#include <vector>

#include "blowspec/eigen.hpp"
#include "blowspec/graph.hpp"

namespace blowspec {

/// Decode one graph in graph6 format (short form, n <= 62). Accepts an
/// optional ">>graph6<<" header and surrounding whitespace; anything else
/// beyond a single encoded graph is rejected.
Graph parse_graph6(const std::string& text);

/// Encode in graph6 short form. Throws std::invalid_argument for n > 62.
std::string write_graph6(const Graph& g);

/// Plain-text edge list: first non-comment line "n <count>", then one "u v"
/// pair per line. '#' starts a comment, blank lines are ignored, duplicate
/// edges are tolerated. Diagnostics carry the offending line number.
Graph parse_edge_list(const std::string& text);

struct FamilyRecord {
    std::string family;
    Spectrum formula;
    Spectrum oracle;
    double max_deviation = 0.0;
    bool pass = false;
};

struct VerificationReport {
    std::string graph_id;
    int n = 0;
    int t = 1;
    double tol = kDefaultTolerance;
    std::vector<FamilyRecord> families;
    double eigenvector_residuals = 0.0;
    bool overall_pass = false;
};

/// JSON with a fixed key order and floats at 12 significant digits; the
/// output is byte-stable for identical reports. Not newline-terminated.
std::string write_report(const VerificationReport& report);

/// 12 significant digits ("%.12g"); non-finite values become "null".
std::string format_double(double x);

std::string json_escape(const std::string& s);

}  // namespace blowspec
