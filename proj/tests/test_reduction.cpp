#include <doctest.h>

#include "tfd/invariants.hpp"
#include "tfd/reduction.hpp"

using namespace tfd;

namespace {

void split_as_given(PathInput& in) {
  if (in.z0.empty()) return;
  Decomposition d;
  for (const CohClass& z : in.z0) d.parts.push_back(make_component(z));
  in.decomposition = d;
}

PathInput case_one(const char* root, Int k, int m, std::vector<std::string> z0 = {}) {
  const SurfaceModel r0 = SurfaceModel::parse(root);
  const SurfaceModel s0 = blow_up(r0, m);
  PathInput in;
  in.min_dim = 2;
  in.euler_min = CohClass(r0, {k, -1});
  in.m_isolated = m;
  for (const auto& z : z0) in.z0.push_back(parse_class(s0, z));
  split_as_given(in);
  return in;
}

PathInput case_two(const char* surface, const char* e, std::vector<std::string> z0 = {}) {
  const SurfaceModel s0 = SurfaceModel::parse(surface);
  PathInput in;
  in.min_dim = 4;
  in.euler_min = parse_class(s0, e);
  for (const auto& z : z0) in.z0.push_back(parse_class(s0, z));
  split_as_given(in);
  return in;
}

}  // namespace

TEST_CASE("case I path: I-4-1.2 by hand") {
  // k = -1 on H0, two points at -1, Z0 = x+y-E1-E2.
  const MomentPath p = build_path(case_one("H0", -1, 2, {"x+y-E1-E2"}));
  REQUIRE(p.slices.size() == 3);
  CHECK(p.crit_values == std::vector<Int>{-2, -1, 0, 1});
  CHECK(format_class(p.omega(0)) == "3x+2y-E1-E2");
  // omega_-2 = (b_min + 2) x with b_min = 1 - 2 = -1.
  CHECK(format_class(p.slices[0].omega_lo) == "x");
  CHECK(format_class(p.slices[0].omega_at(-1)) == "2x+y");
  // e(P_0^+) = -x - y + E1 + E2 + (x+y-E1-E2) = 0.
  CHECK(p.slices[2].euler.is_zero());
  CHECK(format_class(p.omega(1)) == "3x+2y-E1-E2");
  CHECK(p.slices[1].lo_kind == EndpointKind::Degenerate);
  CHECK(p.slices[0].lo_kind == EndpointKind::Degenerate);
  CHECK(p.slices[2].lo_kind == EndpointKind::Regular);
  CHECK(validate_level_structure(p));
  for (const auto& s : p.slices) CHECK(positivity_ok(s));
}

TEST_CASE("case II path: II-2-1.6 by hand") {
  const MomentPath p = build_path(case_two("X0", "-2u", {"4u"}));
  CHECK(format_class(p.slices.front().omega_lo) == "u");  // 3u + e
  CHECK(format_class(p.omega(1)) == "u");                 // 3u - e - Z
  CHECK(validate_level_structure(p));
}

TEST_CASE("Euler class law and rational levels") {
  const MomentPath p = build_path(case_two("Q0", "-x+y", {"x"}));
  for (const LevelSlice& s : p.slices) CHECK(s.omega_at(s.lo) - s.omega_at(s.hi) == (s.hi - s.lo) * s.euler);
  const LevelSlice& s = p.slices.front();
  CHECK_THROWS_AS(dh_class(s, Rational(1, 2)), LatticeError);
  CHECK_THROWS_AS(s.omega_at(5), LatticeError);
}

TEST_CASE("wall crossing adds the new exceptional labels and Z0") {
  const SurfaceModel h0 = make_surface(Root::Hirzebruch, 0);
  LevelSlice first;
  first.lo = -2;
  first.hi = -1;
  first.surface = h0;
  first.euler = CohClass(h0, {-1, -1});
  first.omega_lo = parse_class(h0, "x");
  const LevelSlice next = cross_index_two(first, 0, 1, {});
  CHECK(next.surface == make_surface(Root::Hirzebruch, 1));
  CHECK(format_class(next.euler) == "-x-y+E1");
  CHECK(format_class(next.omega_lo) == "2x+y");
  CHECK(next.lo_kind == EndpointKind::Degenerate);
}

TEST_CASE("positivity rejects a vanishing exceptional curve") {
  // e = 3u on CP^2: omega_1 = 3u - 3u = 0.
  const MomentPath p = build_path(case_two("X0", "3u"));
  CHECK_FALSE(positivity_ok(p.slices.back()));
  // X_2 with e = E1: omega_-1 = 3u - E2, so E1 has size 0.
  const MomentPath q = build_path(case_two("X2", "E1"));
  CHECK_FALSE(positivity_report(q.slices.front()).endpoints_ok);
}

TEST_CASE("fixed component table") {
  CHECK(admissible_component({-2, 2, 0, Role::Min}));
  CHECK(admissible_component({0, 2, 2, Role::None}));
  CHECK(admissible_component({1, 4, 2, Role::Max}));
  CHECK_FALSE(admissible_component({0, 4, 2, Role::None}));
  CHECK_FALSE(admissible_component({-2, 2, 0, Role::Max}));
}

TEST_CASE("input validation") {
  PathInput bad = case_two("X0", "u");
  bad.m_isolated = 1;
  CHECK_THROWS_AS(build_path(bad), LatticeError);
  PathInput wrong = case_one("H0", 0, 0);
  wrong.euler_min = CohClass(make_surface(Root::Hirzebruch, 0), {0, 1});
  CHECK_THROWS_AS(build_path(wrong), LatticeError);
  CHECK_THROWS_AS(build_path(case_one("H0", 0, 8)), LatticeError);
}
