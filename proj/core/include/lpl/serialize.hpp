#pragma once

#include <string>

#include "lpl/certificate.hpp"
#include "lpl/connectivity.hpp"
#include "lpl/graph.hpp"
#include "lpl/replacement.hpp"
#include "lpl/verifier.hpp"

namespace lpl {

// JSON documents with sorted keys and sorted vertex/edge arrays, so identical
// inputs serialize byte-identically.

std::string graph_json(const Graph& g, const std::string& family,
                       const std::vector<std::string>& vertex_names = {},
                       int indent = 2);
std::string replacement_json(const ReplacementProduct& p, long cross_edges,
                             int indent = 2);
std::string analyze_json(const Graph& g, const ConnectivityReport& r,
                         const std::string& violations, int brute_force_value,
                         int indent = 2);  // brute_force_value: -1 when not run
std::string bound_report_json(const BoundReport& r, const std::string& suite,
                              int indent = 2);
std::string atom_json(const Graph& g, const AtomResult& a, int indent = 2);

}  // namespace lpl
