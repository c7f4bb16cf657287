#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "mcb/catalog.hpp"
#include "mcb/chow.hpp"
#include "mcb/matroid.hpp"

using mcb::IntPoly;
using mcb::Matroid;
using testutil::all_subsets;
using testutil::error_code_of;
using testutil::set_of;

namespace {
Matroid boolean(int n) { return mcb::matroid_from_flats(n, all_subsets(n)); }
}  // namespace

TEST_CASE("hilbert series of small boolean matroids") {
  CHECK(mcb::hilbert_fy(boolean(3)).c == std::vector<long long>{1, 4, 1});
  CHECK(mcb::hilbert_fy(boolean(4)).c == std::vector<long long>{1, 11, 11, 1});
  CHECK(mcb::hilbert_fy(boolean(5)).c == std::vector<long long>{1, 26, 66, 26, 1});
  CHECK(mcb::hilbert_fy(boolean(6)).c ==
        std::vector<long long>{1, 57, 302, 302, 57, 1});
}

TEST_CASE("hilbert series of small uniform matroids") {
  CHECK(mcb::hilbert_fy(mcb::uniform_matroid(2, 3)).c ==
        std::vector<long long>{1, 1});
  CHECK(mcb::hilbert_fy(mcb::uniform_matroid(2, 4)).c ==
        std::vector<long long>{1, 1});
  CHECK(mcb::hilbert_fy(mcb::uniform_matroid(3, 4)).c ==
        std::vector<long long>{1, 7, 1});
}

TEST_CASE("presentation oracle agrees with the flag count") {
  std::vector<Matroid> ms;
  ms.push_back(mcb::uniform_matroid(2, 3));
  ms.push_back(mcb::uniform_matroid(3, 4));
  ms.push_back(mcb::uniform_matroid(3, 5));
  ms.push_back(boolean(4));
  mcb::Graph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  ms.push_back(mcb::matroid_from_graph(k4));
  for (const Matroid& m : ms) {
    IntPoly fy = mcb::hilbert_fy(m);
    IntPoly pres = mcb::hilbert_presentation_oracle(m, m.rank > 0 ? m.rank - 1 : 0);
    CHECK(fy == pres);
  }
}

TEST_CASE("corank-one uniform series frozen from the double computation") {
  IntPoly fy = mcb::hilbert_fy(mcb::uniform_matroid(5, 6));
  CHECK(fy == mcb::hilbert_presentation_oracle(mcb::uniform_matroid(5, 6), 4));
  CHECK(fy.c == std::vector<long long>{1, 51, 161, 51, 1});
}

TEST_CASE("palindromic coefficients on connected matroids") {
  std::vector<Matroid> ms;
  ms.push_back(mcb::uniform_matroid(3, 6));
  ms.push_back(mcb::uniform_matroid(4, 6));
  ms.push_back(mcb::fano_matroid());
  mcb::Graph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  ms.push_back(mcb::matroid_from_graph(k4));
  for (const Matroid& m : ms) {
    IntPoly h = mcb::hilbert_fy(m);
    int d = h.degree();
    for (int i = 0; i <= d; i++) CHECK(h.coeff(i) == h.coeff(d - i));
  }
}

TEST_CASE("basis enumeration counts match the series") {
  std::vector<Matroid> ms;
  ms.push_back(mcb::uniform_matroid(3, 5));
  ms.push_back(boolean(4));
  ms.push_back(mcb::fano_matroid());
  for (const Matroid& m : ms) {
    IntPoly h = mcb::hilbert_fy(m);
    for (int d = 0; d <= h.degree() + 1; d++) {
      auto monos = mcb::fy_basis_enumerate(m, d);
      CHECK(static_cast<long long>(monos.size()) == h.coeff(d));
      for (const auto& mono : monos) {
        int total = 0;
        for (const auto& f : mono) {
          CHECK(f.exponent >= 1);
          total += f.exponent;
        }
        CHECK(total == d);
      }
    }
  }
}

TEST_CASE("degree-one basis lists flats of rank at least two") {
  auto monos = mcb::fy_basis_enumerate(boolean(3), 1);
  REQUIRE(monos.size() == 4);  // three doubletons and the ground set
  for (const auto& mono : monos) {
    REQUIRE(mono.size() == 1);
    CHECK(mono[0].exponent == 1);
    CHECK(mono[0].flat.count() >= 2);
  }
}

TEST_CASE("loops are rejected") {
  Matroid loopy = mcb::matroid_from_flats(2, {set_of({0}), set_of({0, 1})});
  CHECK(error_code_of([&] { mcb::hilbert_fy(loopy); }) == "LoopyMatroid");
  CHECK(error_code_of([&] {
          mcb::hilbert_presentation_oracle(loopy, 1);
        }) == "LoopyMatroid");
}

TEST_CASE("presentation oracle size guard") {
  CHECK(error_code_of([] {
          mcb::hilbert_presentation_oracle(mcb::uniform_matroid(2, 7), 1);
        }) == "TooLarge");
  CHECK(error_code_of([] {
          mcb::annihilator_quotient_dims(mcb::uniform_matroid(2, 7),
                                         mcb::SmallSet::single(0));
        }) == "TooLarge");
}

TEST_CASE("annihilator quotient dimensions") {
  Matroid u23 = mcb::uniform_matroid(2, 3);
  mcb::AnnihilatorReport r = mcb::annihilator_quotient_dims(u23, set_of({0}));
  CHECK(r.dims == std::vector<long long>{1, 0});
  CHECK(r.total == 1);

  CHECK(error_code_of([&] {
          mcb::annihilator_quotient_dims(u23, u23.ground());
        }) == "NotAHyperplane");
  CHECK(error_code_of([&] {
          mcb::annihilator_quotient_dims(u23, set_of({0, 1}));
        }) == "NotAHyperplane");
}
