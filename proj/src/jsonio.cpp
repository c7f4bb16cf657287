#include "mcb/jsonio.hpp"

#include <algorithm>

#include "mcb/error.hpp"
#include "mcb/linalg.hpp"

namespace mcb {

namespace {

int require_int(const Json& j, const char* key, int lo, int hi) {
  if (!j.contains(key) || !j[key].is_number_integer())
    fail("BadDescriptor", std::string("missing or non-integer field '") + key + "'");
  long long v = j[key].get<long long>();
  if (v < lo || v > hi)
    fail("BadDescriptor", std::string("field '") + key + "' = " + std::to_string(v) +
                              " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(v);
}

const Json& require_array(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    fail("BadDescriptor", std::string("missing or non-array field '") + key + "'");
  return j[key];
}

std::vector<SmallSet> family_field(const Json& j, const char* key, int n) {
  std::vector<SmallSet> out;
  for (const auto& row : require_array(j, key)) out.push_back(set_from_json(row, n));
  return out;
}

Rational rational_from_json(const Json& v) {
  if (v.is_number_integer()) return Rational{BigInt(v.get<long long>()), 1};
  if (v.is_string()) return parse_rational(v.get<std::string>());
  fail("BadDescriptor", "expected an integer or a rational string, got " + v.dump());
}

std::string require_type(const Json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    fail("BadDescriptor", "descriptor must be an object with a string 'type'");
  return j["type"].get<std::string>();
}

}  // namespace

std::vector<int> to_one_based(SmallSet s) {
  std::vector<int> out;
  s.for_each([&](int e) { out.push_back(e + 1); });
  return out;
}

Json set_to_json(SmallSet s) { return Json(to_one_based(s)); }

Json family_to_json(const std::vector<SmallSet>& v) {
  Json arr = Json::array();
  for (const auto& s : v) arr.push_back(set_to_json(s));
  return arr;
}

SmallSet set_from_json(const Json& arr, int n) {
  if (!arr.is_array()) fail("BadDescriptor", "expected an array of elements, got " + arr.dump());
  SmallSet s;
  for (const auto& v : arr) {
    if (!v.is_number_integer())
      fail("BadDescriptor", "expected a 1-based element index, got " + v.dump());
    long long e = v.get<long long>();
    if (e < 1 || e > n)
      fail("BadDescriptor",
           "element " + std::to_string(e) + " outside 1.." + std::to_string(n));
    s.set(static_cast<int>(e - 1));
  }
  return s;
}

Graph graph_from_descriptor(const Json& j) {
  Graph g;
  g.vertices = require_int(j, "vertices", 1, 512);
  for (const auto& row : require_array(j, "edges")) {
    if (!row.is_array() || row.size() != 2 || !row[0].is_number_integer() ||
        !row[1].is_number_integer())
      fail("BadDescriptor", "edge must be a pair of 1-based vertices, got " + row.dump());
    long long u = row[0].get<long long>(), v = row[1].get<long long>();
    if (u < 1 || u > g.vertices || v < 1 || v > g.vertices)
      fail("BadDescriptor", "edge endpoint outside 1.." + std::to_string(g.vertices));
    g.edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
  }
  return g;
}

Matroid matroid_from_descriptor(const Json& j) {
  std::string type = require_type(j);
  if (type == "flats") {
    int n = require_int(j, "n", 1, 128);
    return matroid_from_flats(n, family_field(j, "flats", n));
  }
  if (type == "graph") return matroid_from_graph(graph_from_descriptor(j));
  if (type == "uniform") {
    int n = require_int(j, "n", 1, 128);
    int r = require_int(j, "r", 0, n);
    return uniform_matroid(r, n);
  }
  if (type == "paving") {
    int n = require_int(j, "n", 1, 128);
    int m = require_int(j, "m", 1, n);
    return paving_from_blocks(n, m, family_field(j, "blocks", n));
  }
  fail("BadDescriptor", "unknown matroid descriptor type '" + type + "'");
}

std::pair<int, std::vector<SmallSet>> family_from_descriptor(const Json& j) {
  std::string type = require_type(j);
  if (type != "building_set")
    fail("BadDescriptor", "expected type 'building_set', got '" + type + "'");
  int n = require_int(j, "n", 1, 128);
  return {n, family_field(j, "members", n)};
}

Arrangement arrangement_from_descriptor(const Json& j) {
  std::string type = require_type(j);
  if (type == "graph_arrangement") return graphic_arrangement(graph_from_descriptor(j));
  if (type != "arrangement")
    fail("BadDescriptor", "expected type 'arrangement' or 'graph_arrangement', got '" + type + "'");
  int dim = require_int(j, "dim", 1, 512);
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : require_array(j, "normals")) {
    if (!row.is_array()) fail("BadDescriptor", "normal must be an array, got " + row.dump());
    std::vector<Rational> r;
    for (const auto& v : row) r.push_back(rational_from_json(v));
    rows.push_back(std::move(r));
  }
  return arrangement_from_normals(dim, rows);
}

LineArrangement lines_from_descriptor(const Json& j) {
  std::string type = require_type(j);
  if (type != "lines") fail("BadDescriptor", "expected type 'lines', got '" + type + "'");
  std::vector<std::array<Rational, 3>> triples;
  for (const auto& row : require_array(j, "triples")) {
    if (!row.is_array() || row.size() != 3)
      fail("BadDescriptor", "line must be a coefficient triple, got " + row.dump());
    triples.push_back({rational_from_json(row[0]), rational_from_json(row[1]),
                       rational_from_json(row[2])});
  }
  return lines_from_triples(triples);
}

Json descriptor_for_flats(const Matroid& m) {
  Json j;
  j["type"] = "flats";
  j["n"] = m.n;
  j["flats"] = family_to_json(m.flats);
  return j;
}

Json descriptor_for_graph(const Graph& g) {
  Json j;
  j["type"] = "graph";
  j["vertices"] = g.vertices;
  Json edges = Json::array();
  for (auto [u, v] : g.edges) edges.push_back(Json::array({u + 1, v + 1}));
  j["edges"] = edges;
  return j;
}

Json descriptor_for_uniform(int r, int n) {
  Json j;
  j["type"] = "uniform";
  j["r"] = r;
  j["n"] = n;
  return j;
}

Json descriptor_for_paving(int n, int m, const std::vector<SmallSet>& blocks) {
  Json j;
  j["type"] = "paving";
  j["n"] = n;
  j["m"] = m;
  j["blocks"] = family_to_json(blocks);
  return j;
}

Json descriptor_for_family(int n, const std::vector<SmallSet>& members) {
  Json j;
  j["type"] = "building_set";
  j["n"] = n;
  j["members"] = family_to_json(members);
  return j;
}

Json descriptor_for_arrangement(const Arrangement& a) {
  Json j;
  j["type"] = "arrangement";
  j["dim"] = a.dim;
  Json rows = Json::array();
  for (const auto& nv : a.normals) {
    Json row = Json::array();
    for (const auto& x : nv) row.push_back(x.str());
    rows.push_back(row);
  }
  j["normals"] = rows;
  return j;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace mcb
