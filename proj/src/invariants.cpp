#include "tfd/invariants.hpp"

namespace tfd {

Int c1_cubed_case_I(Int b_min, int m, const SurfaceModel& surface0, const CohClass& e0plus) {
  const CohClass c1 = anticanonical(surface0);
  return 24 + 4 * b_min - m + 3 * pair(c1, c1) - 3 * pair(c1, e0plus) + pair(e0plus, e0plus);
}

Int c1_cubed_case_II(const SurfaceModel& surface0, const CohClass& e, const CohClass& z0) {
  const CohClass c1 = anticanonical(surface0);
  return 2 * pair(e, e) + 6 * pair(c1, c1) - 3 * pair(c1, z0) + 2 * pair(e, z0) + pair(z0, z0);
}

Int b2(const SurfaceModel& surface0, int num_z0_components, int num_4dim_extrema) {
  if (num_4dim_extrema < 1 || num_4dim_extrema > 2) throw LatticeError("expected one or two 4-dimensional extrema");
  return surface0.rank() + num_z0_components + num_4dim_extrema - 1;
}

Volumes extremal_volumes(const MomentPath& path) {
  Volumes v;
  if (path.extremal.min_dim == 2) {
    v.vol_min = *path.extremal.b_min + 2;
  } else {
    const CohClass w = path.slices.front().omega_lo;
    v.vol_min = pair(w, w);
  }
  const LevelSlice& last = path.slices.back();
  const CohClass w = last.omega_at(last.hi);
  v.vol_max = pair(w, w);
  return v;
}

InvariantReport compute_invariants(const MomentPath& path) {
  InvariantReport r;
  const SurfaceModel& s0 = path.surface0();
  const int n_z0 = path.z0 ? static_cast<int>(path.z0->parts.size()) : 0;
  if (path.extremal.min_dim == 2) {
    r.c1_cubed = c1_cubed_case_I(*path.extremal.b_min, path.m_isolated, s0, path.slice_above_zero().euler);
    r.b2 = b2(s0, n_z0, 1);
  } else {
    const CohClass& e = path.slices.front().euler;
    CohClass z = zero_class(s0);
    if (path.z0)
      for (const auto& p : path.z0->parts) z += p.cls;
    r.c1_cubed = c1_cubed_case_II(s0, e, z);
    r.b2 = b2(s0, n_z0, 2);
  }
  const Volumes v = extremal_volumes(path);
  r.vol_min = v.vol_min;
  r.vol_max = v.vol_max;
  if (path.z0)
    for (const auto& p : path.z0->parts) r.vol_z0.push_back(p.volume);
  return r;
}

}  // namespace tfd
