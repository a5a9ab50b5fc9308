#include <doctest.h>

#include "oracles.hpp"
#include "tfd/exceptional.hpp"

using namespace tfd;

TEST_CASE("exceptional counts on X_k agree with the Diophantine oracle") {
  const std::vector<Int> expected{0, 1, 3, 6, 10, 16, 27, 56, 240};
  for (int k = 0; k <= 8; ++k) {
    CAPTURE(k);
    CHECK(oracle::exceptional_count_projplane(k) == expected[k]);
    CHECK(static_cast<Int>(enumerate_exceptional(make_surface(Root::ProjPlane, k)).classes.size()) == expected[k]);
  }
}

TEST_CASE("quadric and Hirzebruch roots match X_{m+1}") {
  for (int m = 0; m <= 7; ++m) {
    CAPTURE(m);
    const Int q = oracle::exceptional_count_quadric(m);
    CHECK(static_cast<Int>(enumerate_exceptional(make_surface(Root::Quadric, m)).classes.size()) == q);
    if (m >= 1) CHECK(q == oracle::exceptional_count_projplane(m + 1));
    CHECK(enumerate_exceptional(make_surface(Root::Hirzebruch, m)).classes.size() ==
          enumerate_exceptional(make_surface(Root::ProjPlane, m + 1)).classes.size());
  }
  CHECK(enumerate_exceptional(make_surface(Root::Quadric, 0)).classes.empty());
}

TEST_CASE("every listed class is exceptional") {
  for (Root r : {Root::ProjPlane, Root::Quadric, Root::Hirzebruch})
    for (int m = 0; m <= (r == Root::ProjPlane ? 8 : 7); ++m) {
      const SurfaceModel s = make_surface(r, m);
      const CohClass c1 = anticanonical(s);
      for (const CohClass& e : enumerate_exceptional(s).classes) {
        CHECK(pair(e, e) == -1);
        CHECK(pair(c1, e) == 1);
      }
    }
}

TEST_CASE("closed list") {
  for (int k = 1; k <= 8; ++k) CHECK(verify_against_closed_list(make_surface(Root::ProjPlane, k)));
  CHECK_FALSE(verify_against_closed_list(make_surface(Root::Quadric, 2)));
  CHECK(closed_list(2).size() == 3);
  const auto& x8 = enumerate_exceptional(make_surface(Root::ProjPlane, 8)).classes;
  CHECK(std::binary_search(x8.begin(), x8.end(), parse_class(make_surface(Root::ProjPlane, 8), "6u-3E1-2E2-2E3-2E4-2E5-2E6-2E7-2E8")));
}

TEST_CASE("H0 has one exceptional curve, the y fibre class") {
  const auto& h0 = enumerate_exceptional(make_surface(Root::Hirzebruch, 0)).classes;
  REQUIRE(h0.size() == 1);
  CHECK(format_class(h0[0]) == "y");
}
