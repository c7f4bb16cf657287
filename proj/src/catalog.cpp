#include "mcb/catalog.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "mcb/error.hpp"
#include "mcb/paving.hpp"

namespace mcb {

namespace {

std::vector<std::pair<int, int>> vertex_pairs(int v) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j) out.emplace_back(i, j);
  return out;
}

Graph graph_from_mask(int v, std::uint32_t mask,
                      const std::vector<std::pair<int, int>>& pairs) {
  Graph g;
  g.vertices = v;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (mask >> k & 1u) g.edges.push_back(pairs[k]);
  return g;
}

IntVec int_vec(std::initializer_list<int> xs) {
  IntVec v;
  for (int x : xs) v.push_back(x);
  return v;
}

}  // namespace

std::vector<Graph> nonisomorphic_graphs(int vertices) {
  if (vertices < 1 || vertices > 7)
    fail("BadGraph", "vertex count must be between 1 and 7");
  auto pairs = vertex_pairs(vertices);
  const int np = static_cast<int>(pairs.size());

  std::vector<std::vector<int>> at(vertices, std::vector<int>(vertices, -1));
  for (int k = 0; k < np; ++k) {
    at[pairs[k].first][pairs[k].second] = k;
    at[pairs[k].second][pairs[k].first] = k;
  }

  // One remap table per vertex permutation: where each edge slot lands.
  std::vector<std::vector<int>> remaps;
  std::vector<int> perm(vertices);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> r(np);
    for (int k = 0; k < np; ++k) r[k] = at[perm[pairs[k].first]][perm[pairs[k].second]];
    remaps.push_back(std::move(r));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Graph> out;
  for (std::uint32_t mask = 1; mask < (1u << np); ++mask) {
    bool least = true;
    for (const auto& r : remaps) {
      std::uint32_t image = 0;
      for (int k = 0; k < np; ++k)
        if (mask >> k & 1u) image |= 1u << r[k];
      if (image < mask) {
        least = false;
        break;
      }
    }
    if (least) out.push_back(graph_from_mask(vertices, mask, pairs));
  }
  return out;
}

Graph complete_graph(int n) {
  Graph g;
  g.vertices = n;
  g.edges = vertex_pairs(n);
  return g;
}

Graph path_graph(int n) {
  Graph g;
  g.vertices = n;
  for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.edges.emplace_back(0, n - 1);
  return g;
}

std::vector<SmallSet> fano_lines() {
  return {SmallSet::of({0, 1, 2}), SmallSet::of({0, 3, 4}), SmallSet::of({0, 5, 6}),
          SmallSet::of({1, 3, 5}), SmallSet::of({1, 4, 6}), SmallSet::of({2, 3, 6}),
          SmallSet::of({2, 4, 5})};
}

Matroid fano_matroid() { return paving_from_blocks(7, 2, fano_lines()); }

std::vector<MatroidEntry> catalog_matroids() {
  std::vector<MatroidEntry> out;

  for (int n = 1; n <= 7; ++n)
    for (int r = 1; r <= n; ++r)
      out.push_back({"uniform_r" + std::to_string(r) + "_n" + std::to_string(n),
                     "uniform", descriptor_for_uniform(r, n), uniform_matroid(r, n)});

  for (int v = 2; v <= 5; ++v) {
    auto graphs = nonisomorphic_graphs(v);
    std::stable_sort(graphs.begin(), graphs.end(),
                     [](const Graph& a, const Graph& b) { return a.edges.size() < b.edges.size(); });
    std::map<int, int> index_within;
    for (const auto& g : graphs) {
      int e = static_cast<int>(g.edges.size());
      int i = ++index_within[e];
      out.push_back({"graph_" + std::to_string(v) + "v_" + std::to_string(e) + "e_" +
                         std::to_string(i),
                     "graphic", descriptor_for_graph(g), matroid_from_graph(g)});
    }
  }

  out.push_back({"fano", "paving", descriptor_for_paving(7, 2, fano_lines()), fano_matroid()});

  std::vector<SmallSet> demo = {SmallSet::of({0, 1, 2}), SmallSet::of({0, 3}),
                                SmallSet::of({1, 3}), SmallSet::of({2, 3})};
  out.push_back({"paving_4_demo", "paving", descriptor_for_paving(4, 2, demo),
                 paving_from_blocks(4, 2, demo)});

  auto add_paving = [&out](std::string name, int n, int m, const Matroid& M) {
    std::vector<SmallSet> blocks = M.hyperplanes();
    out.push_back({std::move(name), "paving", descriptor_for_paving(n, m, blocks), M});
  };
  add_paving("sparse_paving_7_2_s1", 7, 2, random_sparse_paving(7, 2, 1));
  add_paving("sparse_paving_9_3_s3", 9, 3, random_sparse_paving(9, 3, 3));
  add_paving("sparse_paving_10_2_s5", 10, 2, random_sparse_paving(10, 2, 5));
  add_paving("partition_paving_8_2_2", 8, 2, partition_paving(8, 2, 2));

  auto add_line = [&out](std::string name, const HhFamily& f) {
    out.push_back({std::move(name), "line", descriptor_for_flats(f.matroid), f.matroid});
  };
  add_line("hh_two_modular_2_3", hh_two_modular(2, 3));
  add_line("hh_two_modular_3_4", hh_two_modular(3, 4));
  add_line("hh_two_modular_3_5", hh_two_modular(3, 5));
  for (int m = 4; m <= 8; ++m)
    add_line("hh_three_modular_" + std::to_string(m), hh_three_modular(m));
  add_line("hh_four_modular", hh_four_modular());

  return out;
}

std::vector<BuildingSetEntry> catalog_building_sets() {
  std::vector<BuildingSetEntry> out;
  auto add = [&out](std::string name, BuildingSet b) {
    out.push_back({std::move(name), descriptor_for_family(b.n, b.members), std::move(b)});
  };

  for (int n = 2; n <= 4; ++n) {
    std::vector<SmallSet> members;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      SmallSet s;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1u) s.set(i);
      members.push_back(s);
    }
    add("full_" + std::to_string(n), building_set(n, members));
  }

  for (int n = 3; n <= 5; ++n) {
    std::vector<SmallSet> singles;
    for (int i = 0; i < n; ++i) singles.push_back(SmallSet::single(i));
    add("discrete_" + std::to_string(n), building_set(n, singles));
  }

  auto graphical = [](const Graph& g) {
    std::vector<SmallSet> members;
    for (auto [u, v] : g.edges) members.push_back(SmallSet::of({u, v}));
    return building_set_closure(g.vertices, members);
  };
  add("path_4", graphical(path_graph(4)));
  add("path_5", graphical(path_graph(5)));
  add("cycle_4", graphical(cycle_graph(4)));
  add("cycle_5", graphical(cycle_graph(5)));
  add("star_5", building_set_closure(
                    5, {SmallSet::of({0, 1}), SmallSet::of({0, 2}), SmallSet::of({0, 3}),
                        SmallSet::of({0, 4})}));

  add("split_4", building_set(4, {SmallSet::single(0), SmallSet::single(1),
                                  SmallSet::single(2), SmallSet::single(3),
                                  SmallSet::of({0, 1}), SmallSet::of({2, 3})}));

  return out;
}

std::vector<ArrangementEntry> catalog_arrangements() {
  std::vector<ArrangementEntry> out;
  auto add = [&out](std::string name, Arrangement a) {
    out.push_back({std::move(name), descriptor_for_arrangement(a), std::move(a)});
  };

  for (int v = 3; v <= 6; ++v)
    add("braid_k" + std::to_string(v), graphic_arrangement(complete_graph(v)));
  add("graphic_path_4", graphic_arrangement(path_graph(4)));
  add("graphic_cycle_4", graphic_arrangement(cycle_graph(4)));
  add("graphic_cycle_5", graphic_arrangement(cycle_graph(5)));

  for (int d = 2; d <= 4; ++d) {
    IntMat normals;
    for (int i = 0; i < d; ++i) {
      IntVec v(d, BigInt(0));
      v[i] = 1;
      normals.push_back(v);
    }
    add("coords_" + std::to_string(d), arrangement_from_integer_normals(d, normals));
  }

  add("concurrent_3", arrangement_from_integer_normals(
                          2, {int_vec({1, 0}), int_vec({0, 1}), int_vec({1, 1})}));
  add("pencil_4_lines", arrangement_from_integer_normals(
                            2, {int_vec({1, 0}), int_vec({0, 1}), int_vec({1, 1}),
                                int_vec({1, -1})}));
  add("generic_3d_4", arrangement_from_integer_normals(
                          3, {int_vec({1, 0, 0}), int_vec({0, 1, 0}), int_vec({0, 0, 1}),
                              int_vec({1, 1, 1})}));
  add("near_pencil_5", arrangement_from_integer_normals(
                           3, {int_vec({1, 0, 0}), int_vec({0, 1, 0}), int_vec({1, 1, 0}),
                               int_vec({1, -1, 0}), int_vec({0, 0, 1})}));
  add("hh_four_planes", arrangement_from_integer_normals(
                            3, {int_vec({1, 0, 0}), int_vec({0, 1, 0}), int_vec({0, 0, 1}),
                                int_vec({1, -1, 0}), int_vec({1, 0, -1}), int_vec({0, 1, -1})}));

  for (const auto& p : catalog_pencil_instances()) add(p.name + "_ext", p.extended);

  return out;
}

std::vector<PencilInstance> catalog_pencil_instances() {
  std::vector<PencilInstance> out;
  auto add = [&out](std::string name, Arrangement base, IntMat subspace, int count) {
    Arrangement ext = extend_by_pencil(base, subspace, count);
    out.push_back({std::move(name), std::move(base), std::move(subspace), count,
                   std::move(ext)});
  };

  Arrangement two_coords_3d = arrangement_from_integer_normals(
      3, {int_vec({1, 0, 0}), int_vec({0, 1, 0})});
  add("pencil_coords3", two_coords_3d, {int_vec({0, 1, 0})}, 3);
  add("pencil_coords3_wide", two_coords_3d, {int_vec({0, 1, 0})}, 5);

  Arrangement one_plane_3d = arrangement_from_integer_normals(3, {int_vec({1, 0, 0})});
  add("pencil_tower3_step1", one_plane_3d, {int_vec({0, 1, 0})}, 2);
  add("pencil_tower3_step2", out.back().extended, {int_vec({1, 0, 0})}, 2);

  Arrangement three_coords_4d = arrangement_from_integer_normals(
      4, {int_vec({1, 0, 0, 0}), int_vec({0, 1, 0, 0}), int_vec({0, 0, 1, 0})});
  add("pencil_dim4", three_coords_4d, {int_vec({0, 1, 0, 0}), int_vec({0, 0, 1, 0})}, 3);

  return out;
}

}  // namespace mcb
