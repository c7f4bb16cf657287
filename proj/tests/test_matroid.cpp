#include <algorithm>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "mcb/matroid.hpp"

using mcb::Matroid;
using mcb::SmallSet;
using testutil::all_subsets;
using testutil::error_code_of;
using testutil::set_of;

TEST_CASE("boolean matroid from the full subset family") {
  Matroid m = mcb::matroid_from_flats(3, all_subsets(3));
  CHECK(m.n == 3);
  CHECK(m.rank == 3);
  CHECK(m.flats.size() == 8);
  CHECK(m.loopless());
  CHECK(m.closure(set_of({0, 1})) == set_of({0, 1}));
  CHECK(m.rank_of(set_of({0, 2})) == 2);
  CHECK(m.hyperplanes().size() == 3);
}

TEST_CASE("uniform matroids") {
  Matroid u24 = mcb::uniform_matroid(2, 4);
  CHECK(u24.rank == 2);
  CHECK(u24.flats.size() == 6);  // bottom, four singletons, top
  CHECK(u24.closure(set_of({0, 1})) == u24.ground());
  CHECK(u24.rank_of(set_of({2})) == 1);
  CHECK(u24.hyperplanes() == std::vector<SmallSet>{set_of({0}), set_of({1}),
                                                   set_of({2}), set_of({3})});

  Matroid u11 = mcb::uniform_matroid(1, 1);
  CHECK(u11.flats.size() == 2);
  CHECK(u11.rank == 1);

  CHECK(error_code_of([] { mcb::uniform_matroid(3, 2); }) == "BadGroundSet");
  CHECK(error_code_of([] { mcb::uniform_matroid(1, 0); }) == "BadGroundSet");
}

TEST_CASE("flat family validation") {
  CHECK(error_code_of([] {
          mcb::matroid_from_flats(3, {SmallSet{}, set_of({0})});
        }) == "MissingTop");
  // {0,1} and {1,2} meet in {1}, which is missing.
  CHECK(error_code_of([] {
          mcb::matroid_from_flats(
              3, {SmallSet{}, set_of({0, 1}), set_of({1, 2}), set_of({0, 1, 2})});
        }) == "NotIntersectionClosed");
  // The unique atom {0} cannot account for elements 1 and 2.
  CHECK(error_code_of([] {
          mcb::matroid_from_flats(3, {SmallSet{}, set_of({0}), set_of({0, 1, 2})});
        }) == "BadPartition");
  CHECK(error_code_of([] {
          mcb::matroid_from_flats(2, {SmallSet{}, set_of({0, 5}), set_of({0, 1})});
        }) == "BadGroundSet");
  CHECK(error_code_of([] { mcb::matroid_from_flats(0, {}); }) == "BadGroundSet");
}

TEST_CASE("graphic matroids") {
  mcb::Graph k3{3, {{0, 1}, {0, 2}, {1, 2}}};
  Matroid m = mcb::matroid_from_graph(k3);
  CHECK(m.n == 3);
  CHECK(m.rank == 2);
  CHECK(m.flats.size() == 5);  // triangle = three-point line
  CHECK(m.closure(set_of({0, 1})) == m.ground());

  mcb::Graph path{3, {{0, 1}, {1, 2}}};
  Matroid p = mcb::matroid_from_graph(path);
  CHECK(p.rank == 2);
  CHECK(p.flats.size() == 4);  // free on two elements

  CHECK(error_code_of([] {
          mcb::matroid_from_graph({2, {{0, 0}}});
        }) == "SelfLoop");
  CHECK(error_code_of([] {
          mcb::matroid_from_graph({2, {{0, 1}, {1, 0}}});
        }) == "DuplicateEdge");
  CHECK(error_code_of([] {
          mcb::matroid_from_graph({2, {{0, 3}}});
        }) == "BadGraph");
}

TEST_CASE("characteristic polynomials") {
  Matroid u23 = mcb::uniform_matroid(2, 3);
  CHECK(mcb::characteristic_polynomial(u23).c ==
        std::vector<long long>{2, -3, 1});  // (t-1)(t-2)

  Matroid b3 = mcb::matroid_from_flats(3, all_subsets(3));
  CHECK(mcb::characteristic_polynomial(b3).c ==
        std::vector<long long>{-1, 3, -3, 1});  // (t-1)^3

  mcb::Graph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  Matroid mk4 = mcb::matroid_from_graph(k4);
  CHECK(mcb::characteristic_polynomial(mk4).c ==
        std::vector<long long>{-6, 11, -6, 1});  // (t-1)(t-2)(t-3)
}

TEST_CASE("mobius values and the cover relation") {
  Matroid b2 = mcb::matroid_from_flats(2, all_subsets(2));
  mcb::FlatLattice lat = mcb::mobius_and_lattice(b2);
  CHECK(lat.mobius == std::vector<long long>{1, -1, -1, 1});
  CHECK(lat.covers.size() == 4);
  CHECK(mcb::mobius_from_bottom(b2) == lat.mobius);

  // Mobius values over the whole lattice sum to zero past rank 0.
  Matroid u24 = mcb::uniform_matroid(2, 4);
  long long total = 0;
  for (long long v : mcb::mobius_from_bottom(u24)) total += v;
  CHECK(total == 0);
}

TEST_CASE("connected components") {
  Matroid u23 = mcb::uniform_matroid(2, 3);
  CHECK(mcb::connected_components(u23) == std::vector<SmallSet>{set_of({0, 1, 2})});

  mcb::Graph two_edges{4, {{0, 1}, {2, 3}}};
  Matroid m = mcb::matroid_from_graph(two_edges);
  CHECK(mcb::connected_components(m).size() == 2);

  Matroid b3 = mcb::matroid_from_flats(3, all_subsets(3));
  CHECK(mcb::connected_components(b3).size() == 3);  // three coloops
}

TEST_CASE("restriction renumbers and keeps traces") {
  Matroid u24 = mcb::uniform_matroid(2, 4);
  Matroid r = mcb::restriction(u24, set_of({0, 1, 2}));
  Matroid u23 = mcb::uniform_matroid(2, 3);
  CHECK(r.flats == u23.flats);
  CHECK(r.rank == 2);

  mcb::Graph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  Matroid mk4 = mcb::matroid_from_graph(k4);
  // Edges 01, 02, 12 form a triangle: the restriction is a 3-point line.
  Matroid tri = mcb::restriction(mk4, set_of({0, 1, 3}));
  CHECK(tri.flats == u23.flats);
}

TEST_CASE("ranked-flats fast path agrees with the validator") {
  std::vector<std::pair<SmallSet, int>> ranked;
  ranked.push_back({SmallSet{}, 0});
  for (int i = 0; i < 4; i++) ranked.push_back({SmallSet::single(i), 1});
  ranked.push_back({SmallSet::full(4), 2});
  Matroid fast = mcb::matroid_from_ranked_flats(4, ranked);
  Matroid slow = mcb::uniform_matroid(2, 4);
  CHECK(fast.flats == slow.flats);
  CHECK(fast.flat_rank == slow.flat_rank);
}

TEST_CASE("flats are sorted by rank then canonical order") {
  Matroid u35 = mcb::uniform_matroid(3, 5);
  for (std::size_t i = 1; i < u35.flats.size(); i++) {
    bool ok = u35.flat_rank[i - 1] < u35.flat_rank[i] ||
              (u35.flat_rank[i - 1] == u35.flat_rank[i] &&
               u35.flats[i - 1] < u35.flats[i]);
    CHECK(ok);
  }
}
