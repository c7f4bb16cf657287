#pragma once

#include <string>
#include <vector>

#include "mcb/arrangement.hpp"
#include "mcb/building.hpp"
#include "mcb/jsonio.hpp"
#include "mcb/linalg.hpp"
#include "mcb/matroid.hpp"

namespace mcb {

// Named, reproducible instances. Every entry is produced by a validating
// constructor, so loading the catalog re-checks the whole corpus. The
// descriptor round-trips through the jsonio parsers.

struct MatroidEntry {
  std::string name;
  std::string kind;  // uniform | graphic | paving | line
  Json descriptor;
  Matroid matroid;
};
std::vector<MatroidEntry> catalog_matroids();

struct BuildingSetEntry {
  std::string name;
  Json descriptor;
  BuildingSet bset;
};
std::vector<BuildingSetEntry> catalog_building_sets();

struct ArrangementEntry {
  std::string name;
  Json descriptor;
  Arrangement arr;
};
std::vector<ArrangementEntry> catalog_arrangements();

// Pencil extensions keep their ingredients so the subspace invariant and
// the e-vector bookkeeping stay checkable after the fact.
struct PencilInstance {
  std::string name;
  Arrangement base;
  IntMat subspace;
  int count = 0;
  Arrangement extended;
};
std::vector<PencilInstance> catalog_pencil_instances();

// One canonical representative per isomorphism class on exactly
// `vertices` labeled vertices, at least one edge, deterministic order.
std::vector<Graph> nonisomorphic_graphs(int vertices);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

std::vector<SmallSet> fano_lines();
Matroid fano_matroid();

}  // namespace mcb
