#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "mcb/catalog.hpp"
#include "mcb/cover.hpp"
#include "mcb/matroid.hpp"
#include "mcb/paving.hpp"

using mcb::Matroid;
using mcb::SmallSet;
using testutil::all_subsets;
using testutil::error_code_of;
using testutil::set_of;

TEST_CASE("fano incidences form a paving matroid") {
  Matroid fano = mcb::fano_matroid();
  CHECK(fano.n == 7);
  CHECK(fano.rank == 3);
  CHECK(fano.flats.size() == 16);  // bottom, 7 points, 7 lines, top
  CHECK(fano.hyperplanes().size() == 7);
  for (SmallSet line : fano.hyperplanes()) CHECK(line.count() == 3);
}

TEST_CASE("m-partition validation") {
  CHECK(error_code_of([] {
          mcb::paving_from_blocks(3, 2, {set_of({0, 1}), set_of({1, 2})});
        }) == "UncoveredMSet");  // pair {0,2} in no block
  CHECK(error_code_of([] {
          mcb::paving_from_blocks(4, 2, {set_of({0, 1, 2}), set_of({1, 2, 3})});
        }) == "DoublyCovered");
  CHECK(error_code_of([] {
          mcb::paving_from_blocks(4, 3, {set_of({0, 1}), set_of({0, 1, 2, 3})});
        }) == "TooSmallBlock");
  CHECK(error_code_of([] {
          mcb::paving_from_blocks(2, 3, {set_of({0, 1})});
        }) == "BadParameters");

  // Blocks = all pairs gives the boolean matroid of rank 3.
  Matroid b3 = mcb::paving_from_blocks(
      3, 2, {set_of({0, 1}), set_of({0, 2}), set_of({1, 2})});
  CHECK(b3.flats == mcb::matroid_from_flats(3, all_subsets(3)).flats);
}

TEST_CASE("minimum hyperplane covers") {
  Matroid fano = mcb::fano_matroid();
  mcb::Cover c = mcb::min_hyperplane_cover(fano);
  CHECK(c.size == 3);
  SmallSet u;
  for (SmallSet s : c.members) u = u | s;
  CHECK(u == fano.ground());

  // Two disjoint parts cover a partition instance.
  Matroid pp = mcb::partition_paving(8, 2, 2);
  CHECK(mcb::min_hyperplane_cover(pp).size == 2);
}

TEST_CASE("degree bound arithmetic") {
  mcb::PavBound1 v = mcb::pav_bound_part1_values(36, 3, 2, 2);
  CHECK(v.bound == 2);  // 1 + floor(36 / 32)
  CHECK_FALSE(v.in_regime);  // 36 < 4*2*8*2 = 128
  CHECK(v.regime_factor == 4);

  mcb::PavBound1 big = mcb::pav_bound_part1_values(128, 2, 2, 2);
  CHECK(big.bound == 9);
  CHECK(big.in_regime);  // 128 >= 64
}

TEST_CASE("degree bounds on a partition instance") {
  Matroid pp = mcb::partition_paving(8, 2, 2);
  CHECK(pp.rank == 3);
  CHECK(pp.hyperplanes().size() == 18);  // 2 parts + 16 crossing pairs

  mcb::PavBound1 b1 = mcb::pav_bound_part1(pp, 2, 2);
  CHECK(b1.bound == 1);  // 1 + floor(8/16)
  CHECK_FALSE(b1.in_regime);
  REQUIRE(b1.designated.size() == 2);
  for (SmallSet d : b1.designated) CHECK(d.count() == 4);

  mcb::PavBound2 b2 = mcb::pav_bound_part2(pp, b1.designated);
  CHECK(b2.bound == 2);  // ceil(1*4 / (2*1))
  CHECK(b2.min_designated == 4);
  CHECK(mcb::is_mcb(pp, b2.bound).holds);
  CHECK(mcb::min_failure_degree(pp) == 4);  // other part + three singletons

  CHECK(error_code_of([&] {
          mcb::pav_bound_part1(pp, 19, 2);
        }) == "BadParameters");
  CHECK(error_code_of([&] {
          mcb::pav_bound_part2(pp, {set_of({0, 1, 2, 3})});
        }) == "NotACover");
  CHECK(error_code_of([&] {
          mcb::pav_bound_part2(pp, {set_of({0, 1, 2}), set_of({4, 5, 6, 7})});
        }) == "BadParameters");  // first set is not a hyperplane
}

TEST_CASE("ratio cap enforcement") {
  // Blocks of sizes 4 and 2+2 crossing: designate k=2 largest out of a
  // lopsided family. 5 elements, m=2: block {0,1,2,3} plus pairs with 4.
  Matroid lop = mcb::paving_from_blocks(
      5, 2, {set_of({0, 1, 2, 3}), set_of({0, 4}), set_of({1, 4}), set_of({2, 4}),
             set_of({3, 4})});
  CHECK(error_code_of([&] { mcb::pav_bound_part1(lop, 2, 2); }) == "RatioViolated");
  mcb::PavBound1 ok = mcb::pav_bound_part1(lop, 2, 3);
  CHECK(ok.ratio_cap == 3);
}

TEST_CASE("partition paving shape") {
  Matroid pp = mcb::partition_paving(6, 2, 3);
  CHECK(pp.rank == 3);
  // 3 parts of size 2 plus 12 crossing pairs.
  CHECK(pp.hyperplanes().size() == 15);

  CHECK(error_code_of([] { mcb::partition_paving(7, 2, 2); }) == "BadParameters");
  CHECK(error_code_of([] { mcb::partition_paving(4, 3, 2); }) == "BadParameters");
}

TEST_CASE("seeded sparse paving generator") {
  Matroid a = mcb::random_sparse_paving(9, 3, 3);
  Matroid b = mcb::random_sparse_paving(9, 3, 3);
  CHECK(a.flats == b.flats);  // same seed, same matroid
  CHECK(a.rank == 4);

  Matroid c = mcb::random_sparse_paving(9, 3, 4);
  CHECK(c.rank == 4);  // different seed still validates

  CHECK(error_code_of([] { mcb::random_sparse_paving(21, 2, 0); }) == "TooLarge");
  CHECK(error_code_of([] { mcb::random_sparse_paving(3, 1, 0); }) == "BadParameters");
}

TEST_CASE("large partition instances stay tractable") {
  Matroid pp = mcb::partition_paving(64, 2, 2);
  CHECK(pp.rank == 3);
  CHECK(pp.n == 64);
  mcb::PavBound1 b1 = mcb::pav_bound_part1(pp, 2, 2);
  CHECK(b1.bound == 5);
  CHECK(b1.in_regime);
  // Far below the failure threshold: certificates answer instantly.
  CHECK(mcb::is_mcb(pp, 4).holds);
}
