#include "tfd/reduction.hpp"

#include <algorithm>

namespace tfd {

CohClass LevelSlice::omega_at(Int t) const {
  if (t < lo || t > hi) throw LatticeError("level " + std::to_string(t) + " outside slice");
  return omega_lo - (t - lo) * euler;
}

CohClass dh_class(const LevelSlice& slice, Rational t) {
  if (t < Rational(slice.lo) || t > Rational(slice.hi)) throw LatticeError("level outside slice");
  const Rational dt = t - Rational(slice.lo);
  CohClass out = slice.omega_lo;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
    Rational v = Rational(slice.omega_lo[i]) - dt * Rational(slice.euler[i]);
    if (v.denominator() != 1) throw LatticeError("class is not integral at this level");
    out.coeffs[i] = v.numerator();
  }
  return out;
}

LevelSlice cross_index_two(const LevelSlice& prev, Int next_level, int isolated_points,
                           const std::vector<CohClass>& surfaces) {
  LevelSlice next;
  next.lo = prev.hi;
  next.hi = next_level;
  next.surface = blow_up(prev.surface, isolated_points);
  next.euler = extend(prev.euler, next.surface);
  for (int i = prev.surface.num_blowups + 1; i <= next.surface.num_blowups; ++i)
    next.euler += e_class(next.surface, i);
  for (const CohClass& z : surfaces) {
    if (z.surface != next.surface) throw LatticeError("inconsistent surface ranks at wall crossing");
    next.euler += z;
  }
  // New exceptional curves have zero size at the wall.
  next.omega_lo = extend(prev.omega_at(prev.hi), next.surface);
  next.lo_kind = isolated_points > 0 ? EndpointKind::Degenerate : EndpointKind::Regular;
  return next;
}

std::vector<EndpointCheck> endpoint_checks(const LevelSlice& slice) {
  auto bound = [](EndpointKind k) -> Int { return k == EndpointKind::Regular ? 1 : 0; };
  return {{slice.lo, slice.omega_lo, bound(slice.lo_kind)},
          {slice.hi, slice.omega_at(slice.hi), bound(slice.hi_kind)}};
}

PositivityReport positivity_report(const LevelSlice& slice) {
  PositivityReport rep;
  rep.endpoints_ok = true;
  const auto& gens = effective_generators(slice.surface);
  for (const EndpointCheck& chk : endpoint_checks(slice)) {
    if (pair(chk.omega, chk.omega) < chk.bound) rep.endpoints_ok = false;
    for (const CohClass& g : gens)
      if (pair(chk.omega, g) < chk.bound) rep.endpoints_ok = false;
  }
  // Twice the midpoint class keeps the arithmetic integral.
  const CohClass mid2 = slice.omega_lo + slice.omega_at(slice.hi);
  rep.midpoint_ok = pair(mid2, mid2) > 0;
  return rep;
}

bool positivity_ok(const LevelSlice& slice) { return positivity_report(slice).ok(); }

namespace {

struct TableRow {
  int level, dim, index;
  Role role;
};

// Possible fixed components of a balanced semifree action in dimension six.
constexpr TableRow kFixedTable[] = {
    {3, 0, 6, Role::Max},  {2, 2, 4, Role::Max},  {1, 4, 2, Role::Max},
    {1, 0, 4, Role::None}, {0, 2, 2, Role::None}, {-1, 0, 2, Role::None},
    {-1, 4, 0, Role::Min}, {-2, 2, 0, Role::Min}, {-3, 0, 0, Role::Min},
};

}  // namespace

bool admissible_component(const FixedComponent& c) {
  for (const TableRow& r : kFixedTable)
    if (r.level == c.level && r.dim == c.dim && r.index == c.index && r.role == c.role) return true;
  return false;
}

const SurfaceModel& MomentPath::surface0() const { return slice_above_zero().surface; }

const LevelSlice& MomentPath::slice_above_zero() const {
  for (const LevelSlice& s : slices)
    if (s.lo <= 0 && 0 < s.hi) return s;
  throw LatticeError("moment path does not cross level 0");
}

CohClass MomentPath::omega(Int level) const {
  for (const LevelSlice& s : slices)
    if (s.lo <= level && level < s.hi) return s.omega_at(level);
  if (!slices.empty() && level == slices.back().hi) return slices.back().omega_at(level);
  throw LatticeError("level outside the moment path");
}

std::vector<FixedComponent> MomentPath::components() const {
  std::vector<FixedComponent> out;
  if (extremal.min_dim == 2) out.push_back({-2, 2, 0, Role::Min});
  else out.push_back({-1, 4, 0, Role::Min});
  for (int i = 0; i < m_isolated; ++i) out.push_back({-1, 0, 2, Role::None});
  if (z0)
    for (std::size_t i = 0; i < z0->parts.size(); ++i) out.push_back({0, 2, 2, Role::None});
  out.push_back({1, 4, 2, Role::Max});
  return out;
}

MomentPath build_path(const PathInput& in) {
  MomentPath path;
  path.family = in.family;
  path.m_isolated = in.m_isolated;
  path.z0 = in.decomposition;
  path.extremal.min_dim = in.min_dim;
  path.extremal.max_dim = 4;

  const Int min_level = in.min_dim == 2 ? -2 : -1;
  if (in.min_dim != 2 && in.min_dim != 4) throw LatticeError("minimum must be 2- or 4-dimensional");
  if (in.min_dim == 4 && in.m_isolated != 0) throw LatticeError("isolated points need a 2-dimensional minimum");
  if (in.m_isolated < 0 || in.m_isolated > 7) throw LatticeError("isolated point count outside [0, 7]");

  path.crit_values.push_back(min_level);
  if (in.m_isolated > 0) path.crit_values.push_back(-1);
  if (!in.z0.empty()) path.crit_values.push_back(0);
  path.crit_values.push_back(1);

  if (in.min_dim == 2) {
    const CohClass& e = in.euler_min;
    if (e.surface.root == Root::ProjPlane || e.surface.num_blowups != 0 || e[1] != -1)
      throw LatticeError("Euler class at a 2-dimensional minimum must be kx - y on Q0 or H0");
    path.extremal.k = e[0];
    path.extremal.b_min = -pair(e, e);
  }

  LevelSlice first;
  first.lo = min_level;
  first.hi = path.crit_values[1];
  first.surface = in.euler_min.surface;
  first.euler = in.euler_min;
  first.omega_lo = zero_class(first.surface);
  first.lo_kind = in.min_dim == 2 ? EndpointKind::Degenerate : EndpointKind::Regular;
  path.slices.push_back(first);
  for (std::size_t i = 1; i + 1 < path.crit_values.size(); ++i) {
    const Int c = path.crit_values[i];
    static const std::vector<CohClass> none;
    path.slices.push_back(cross_index_two(path.slices.back(), path.crit_values[i + 1],
                                          c == -1 ? in.m_isolated : 0, c == 0 ? in.z0 : none));
  }

  // Anchor at level 0, where the reduced class is c1(M0).
  std::size_t j = 0;
  while (!(path.slices[j].lo <= 0 && 0 < path.slices[j].hi)) ++j;
  {
    LevelSlice& s = path.slices[j];
    s.omega_lo = anticanonical(s.surface) - s.lo * s.euler;
  }
  for (std::size_t i = j + 1; i < path.slices.size(); ++i) {
    const LevelSlice& p = path.slices[i - 1];
    path.slices[i].omega_lo = extend(p.omega_at(p.hi), path.slices[i].surface);
  }
  for (std::size_t i = j; i-- > 0;) {
    LevelSlice& s = path.slices[i];
    const CohClass top = restrict_to(path.slices[i + 1].omega_lo, s.surface);
    s.omega_lo = top + (s.hi - s.lo) * s.euler;
  }
  return path;
}

bool validate_level_structure(const MomentPath& path) {
  const auto comps = path.components();
  if (path.crit_values.empty()) return false;
  for (const FixedComponent& c : comps)
    if (!admissible_component(c)) return false;
  int mins = 0, maxs = 0;
  for (const FixedComponent& c : comps) {
    if (c.role == Role::Min) {
      ++mins;
      if (c.level != path.crit_values.front()) return false;
    }
    if (c.role == Role::Max) {
      ++maxs;
      if (c.level != path.crit_values.back()) return false;
    }
    if (std::find(path.crit_values.begin(), path.crit_values.end(), c.level) == path.crit_values.end())
      return false;
  }
  if (mins != 1 || maxs != 1) return false;
  // Every declared critical value carries a component.
  for (Int v : path.crit_values)
    if (std::none_of(comps.begin(), comps.end(), [&](const FixedComponent& c) { return c.level == v; }))
      return false;
  return true;
}

}  // namespace tfd
