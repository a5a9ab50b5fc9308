#pragma once

// Closed-form invariants of a moment path: c1^3 by the two localization
// formulas, b2 by component counting, extremal volumes.

#include <vector>

#include "tfd/reduction.hpp"

namespace tfd {

struct InvariantReport {
  Int c1_cubed = 0;
  Int b2 = 0;
  Int vol_min = 0;
  Int vol_max = 0;
  std::vector<Int> vol_z0;

  bool operator==(const InvariantReport&) const = default;
};

// 24 + 4 b_min - m + <3 c1^2 - 3 c1 e + e^2, [M0]>, e = e(P_0^+).
Int c1_cubed_case_I(Int b_min, int m, const SurfaceModel& surface0, const CohClass& e0plus);
// <2 e^2 + 6 c1^2 - 3 c1 Z + 2 e Z + Z^2, [M0]>, e = e(P_{-1}^+), Z = PD(Z0).
Int c1_cubed_case_II(const SurfaceModel& surface0, const CohClass& e, const CohClass& z0);
// rank(M0) + #Z0 components + #4-dimensional extrema - 1.
Int b2(const SurfaceModel& surface0, int num_z0_components, int num_4dim_extrema);

struct Volumes {
  Int vol_min = 0;
  Int vol_max = 0;
  bool operator==(const Volumes&) const = default;
};
Volumes extremal_volumes(const MomentPath& path);

InvariantReport compute_invariants(const MomentPath& path);

}  // namespace tfd
