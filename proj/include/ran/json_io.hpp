#pragma once

#include <string>

#include "ran/generators.hpp"
#include "ran/graph.hpp"

namespace ran {

// Graph file format: {"n": 5, "edges": [[0,1], ...], "name": "..."} with
// sorted unique edges; the loader rejects duplicate or reversed duplicates,
// self-loops and out-of-range endpoints.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

// Trace file format: {"base": [0,1,2], "steps": [{"v": 3, "face": [0,1,2]}, ...]}.
std::string trace_to_json(const InsertionTrace& t);
InsertionTrace trace_from_json(const std::string& text);

// Thin file helpers; failures surface as validation_error.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

Graph load_graph_file(const std::string& path);
InsertionTrace load_trace_file(const std::string& path);

}  // namespace ran
