#include "ran/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "ran/errors.hpp"

namespace ran {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw validation_error(std::string("malformed JSON: ") + e.what());
  }
}

int as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw validation_error(what + " must be an integer");
  return j.get<int>();
}

}  // namespace

std::string graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.vertex_count();
  j["edges"] = json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  if (!g.name().empty()) j["name"] = g.name();
  return j.dump(2) + "\n";
}

Graph graph_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw validation_error("graph JSON needs \"n\" and \"edges\"");
  int n = as_int(j["n"], "\"n\"");
  if (!j["edges"].is_array()) throw validation_error("\"edges\" must be an array");
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  for (const json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw validation_error("each edge must be a pair");
    int u = as_int(e[0], "edge endpoint");
    int v = as_int(e[1], "edge endpoint");
    std::pair<int, int> key = std::minmax(u, v);
    if (!seen.insert(key).second)
      throw validation_error("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    edges.emplace_back(u, v);
  }
  std::string name = j.value("name", std::string());
  return Graph(n, edges, name);
}

std::string trace_to_json(const InsertionTrace& t) {
  json j;
  j["base"] = {t.base[0], t.base[1], t.base[2]};
  j["steps"] = json::array();
  for (const InsertionStep& s : t.steps) {
    json step;
    step["v"] = s.v;
    step["face"] = {s.face[0], s.face[1], s.face[2]};
    j["steps"].push_back(step);
  }
  return j.dump(2) + "\n";
}

InsertionTrace trace_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("base") || !j.contains("steps"))
    throw validation_error("trace JSON needs \"base\" and \"steps\"");
  if (!j["base"].is_array() || j["base"].size() != 3)
    throw validation_error("\"base\" must hold three vertices");
  InsertionTrace t;
  for (int i = 0; i < 3; ++i) t.base[i] = as_int(j["base"][i], "base vertex");
  if (!j["steps"].is_array()) throw validation_error("\"steps\" must be an array");
  for (const json& s : j["steps"]) {
    if (!s.is_object() || !s.contains("v") || !s.contains("face") || !s["face"].is_array() ||
        s["face"].size() != 3)
      throw validation_error("each step needs \"v\" and a three-vertex \"face\"");
    InsertionStep step;
    step.v = as_int(s["v"], "step vertex");
    for (int i = 0; i < 3; ++i) step.face[i] = as_int(s["face"][i], "face vertex");
    t.steps.push_back(step);
  }
  return t;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw validation_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw validation_error("cannot write " + path);
  out << content;
  if (!out) throw validation_error("short write to " + path);
}

Graph load_graph_file(const std::string& path) { return graph_from_json(read_file(path)); }

InsertionTrace load_trace_file(const std::string& path) {
  return trace_from_json(read_file(path));
}

}  // namespace ran
