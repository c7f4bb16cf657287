#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "mcb/arrangement.hpp"
#include "mcb/catalog.hpp"
#include "mcb/jsonio.hpp"
#include "mcb/matroid.hpp"

using mcb::Json;
using mcb::Matroid;
using mcb::SmallSet;
using testutil::error_code_of;
using testutil::set_of;

TEST_CASE("sets serialize 1-based") {
  SmallSet s = set_of({0, 2, 5});
  CHECK(mcb::to_one_based(s) == std::vector<int>{1, 3, 6});
  CHECK(mcb::set_to_json(s).dump() == "[1,3,6]");
  CHECK(mcb::set_from_json(Json::parse("[1,3,6]"), 6) == s);
  CHECK(mcb::set_from_json(Json::parse("[]"), 4) == SmallSet{});

  CHECK(error_code_of([] {
          mcb::set_from_json(Json::parse("{\"a\":1}"), 4);
        }) == "BadDescriptor");
  CHECK(error_code_of([] {
          mcb::set_from_json(Json::parse("[0]"), 4);
        }) == "BadDescriptor");  // indices start at 1
  CHECK(error_code_of([] {
          mcb::set_from_json(Json::parse("[5]"), 4);
        }) == "BadDescriptor");
  CHECK(error_code_of([] {
          mcb::set_from_json(Json::parse("[1,\"x\"]"), 4);
        }) == "BadDescriptor");
}

TEST_CASE("matroid descriptors round-trip") {
  Matroid u24 = mcb::uniform_matroid(2, 4);
  CHECK(mcb::matroid_from_descriptor(mcb::descriptor_for_uniform(2, 4)).flats ==
        u24.flats);

  Matroid fano = mcb::fano_matroid();
  CHECK(mcb::matroid_from_descriptor(mcb::descriptor_for_flats(fano)).flats ==
        fano.flats);
  CHECK(mcb::matroid_from_descriptor(
            mcb::descriptor_for_paving(7, 2, mcb::fano_lines()))
            .flats == fano.flats);

  mcb::Graph k4 = mcb::complete_graph(4);
  CHECK(mcb::matroid_from_descriptor(mcb::descriptor_for_graph(k4)).flats ==
        mcb::matroid_from_graph(k4).flats);
}

TEST_CASE("building set descriptors round-trip") {
  std::vector<SmallSet> members = {set_of({0}), set_of({1}), set_of({2}),
                                   set_of({0, 1}), set_of({0, 1, 2})};
  Json d = mcb::descriptor_for_family(3, members);
  auto [n, parsed] = mcb::family_from_descriptor(d);
  CHECK(n == 3);
  CHECK(parsed == members);
}

TEST_CASE("arrangement descriptors accept rational entries") {
  Json d = Json::parse(R"({
    "type": "arrangement",
    "dim": 2,
    "normals": [["1/2", "1/2"], [1, 0], ["-2/3", 1]]
  })");
  mcb::Arrangement a = mcb::arrangement_from_descriptor(d);
  REQUIRE(a.normals.size() == 3);
  CHECK(a.normals[0] == mcb::IntVec{1, 1});  // scaled to primitive
  CHECK(a.normals[2] == mcb::IntVec{2, -3});  // sign: first entry positive

  // Emitted descriptor parses back to the same normals.
  mcb::Arrangement b =
      mcb::arrangement_from_descriptor(mcb::descriptor_for_arrangement(a));
  CHECK(b.normals == a.normals);

  CHECK(error_code_of([] {
          mcb::arrangement_from_descriptor(Json::parse(
              R"({"type":"arrangement","dim":2,"normals":[["1/x",1]]})"));
        }) == "BadRational");
  CHECK(error_code_of([] {
          mcb::arrangement_from_descriptor(Json::parse(
              R"({"type":"arrangement","dim":2,"normals":[[0,0]]})"));
        }) == "ZeroNormal");  // shape is fine, module validation fires
}

TEST_CASE("graph arrangement descriptor") {
  Json d = Json::parse(
      R"({"type":"graph_arrangement","vertices":3,"edges":[[1,2],[2,3],[1,3]]})");
  mcb::Arrangement a = mcb::arrangement_from_descriptor(d);
  CHECK(a.normals.size() == 3);
  CHECK(mcb::intersection_matroid(a).flats == mcb::uniform_matroid(2, 3).flats);
}

TEST_CASE("line descriptors") {
  Json d = Json::parse(
      R"({"type":"lines","triples":[[1,0,0],[0,1,0],[1,1,0],["1/2",0,1]]})");
  mcb::LineArrangement la = mcb::lines_from_descriptor(d);
  CHECK(la.lines == 4);

  CHECK(error_code_of([] {
          mcb::lines_from_descriptor(
              Json::parse(R"({"type":"lines","triples":[[1,0]]})"));
        }) == "BadDescriptor");
}

TEST_CASE("malformed descriptors are rejected") {
  CHECK(error_code_of([] {
          mcb::matroid_from_descriptor(Json::parse("[1,2]"));
        }) == "BadDescriptor");
  CHECK(error_code_of([] {
          mcb::matroid_from_descriptor(Json::parse(R"({"type":"mystery"})"));
        }) == "BadDescriptor");
  CHECK(error_code_of([] {
          mcb::matroid_from_descriptor(Json::parse(R"({"type":"uniform","r":2})"));
        }) == "BadDescriptor");  // n missing
  CHECK(error_code_of([] {
          mcb::matroid_from_descriptor(
              Json::parse(R"({"type":"uniform","r":5,"n":3})"));
        }) == "BadDescriptor");  // r outside 0..n
  CHECK(error_code_of([] {
          mcb::graph_from_descriptor(
              Json::parse(R"({"type":"graph","vertices":2,"edges":[[1]]})"));
        }) == "BadDescriptor");
  CHECK(error_code_of([] {
          mcb::family_from_descriptor(Json::parse(R"({"type":"flats","n":2})"));
        }) == "BadDescriptor");

  // Module-level validation codes pass through untouched.
  CHECK(error_code_of([] {
          mcb::matroid_from_descriptor(Json::parse(
              R"({"type":"graph","vertices":2,"edges":[[1,1]]})"));
        }) == "SelfLoop");
}

TEST_CASE("canonical rendering") {
  Json j;
  j["zebra"] = 1;
  j["apple"] = Json::array({1, 2});
  std::string text = mcb::json_text(j);
  CHECK(text == "{\n  \"zebra\": 1,\n  \"apple\": [\n    1,\n    2\n  ]\n}\n");
  CHECK(mcb::json_text(j) == text);  // stable across calls
}

TEST_CASE("catalog descriptors re-parse to their instances") {
  int checked = 0;
  for (const auto& e : mcb::catalog_matroids()) {
    if (e.matroid.n > 9) continue;  // keep the spot check quick
    CHECK(mcb::matroid_from_descriptor(e.descriptor).flats == e.matroid.flats);
    ++checked;
  }
  CHECK(checked >= 20);

  for (const auto& e : mcb::catalog_building_sets()) {
    auto [n, members] = mcb::family_from_descriptor(e.descriptor);
    CHECK(n == e.bset.n);
    CHECK(members == e.bset.members);
  }

  int arrs = 0;
  for (const auto& e : mcb::catalog_arrangements()) {
    mcb::Arrangement a = mcb::arrangement_from_descriptor(e.descriptor);
    CHECK(a.dim == e.arr.dim);
    CHECK(a.normals == e.arr.normals);
    ++arrs;
  }
  CHECK(arrs >= 10);
}
