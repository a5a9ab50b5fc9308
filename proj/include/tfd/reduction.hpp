#pragma once

// Moment path: critical levels, reduced surfaces, Euler classes and the
// affine Duistermaat-Heckman evolution [w_s] - [w_t] = (t - s) e.

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "tfd/curves.hpp"
#include "tfd/lattice.hpp"

namespace tfd {

using Rational = boost::rational<Int>;

// Regular: the reduced space at the endpoint is a genuine symplectic
// surface, so every positivity test is strict (>= 1 by integrality).
// Degenerate: the class is a limit that collapses something by
// construction (the level of a 2-dimensional minimum, or the lower end of a
// slice whose exceptional curves were just born); tests there are >= 0.
enum class EndpointKind { Regular, Degenerate };

struct LevelSlice {
  Int lo = 0, hi = 0;  // critical endpoints; all critical values here are integers
  SurfaceModel surface;
  CohClass euler;
  CohClass omega_lo;  // class at the reference level lo
  EndpointKind lo_kind = EndpointKind::Regular;
  EndpointKind hi_kind = EndpointKind::Regular;

  CohClass omega_at(Int t) const;  // t in [lo, hi]
};

// Omega at rational level t; throws LatticeError when t is outside the
// slice or the class is not integral there.
CohClass dh_class(const LevelSlice& slice, Rational t);

// Passing an index-two critical level: blow up once per isolated point and
// add the new exceptional classes and the fixed-surface classes to the
// Euler class. The new slice starts at `level` and ends at `next_level`.
LevelSlice cross_index_two(const LevelSlice& prev, Int next_level, int isolated_points,
                           const std::vector<CohClass>& surfaces);

struct PositivityReport {
  bool endpoints_ok = false;
  bool midpoint_ok = false;
  bool ok() const { return endpoints_ok && midpoint_ok; }
};

PositivityReport positivity_report(const LevelSlice& slice);
bool positivity_ok(const LevelSlice& slice);

// One endpoint test: pair(omega, g) >= bound for every generator g of the
// surface, and pair(omega, omega) >= bound.
struct EndpointCheck {
  Int level;
  CohClass omega;
  Int bound;
};
std::vector<EndpointCheck> endpoint_checks(const LevelSlice& slice);

enum class Role { None, Min, Max };

struct FixedComponent {
  int level;
  int dim;
  int index;
  Role role;
};

bool admissible_component(const FixedComponent& c);

struct ExtremalData {
  int min_dim = 4;
  int max_dim = 4;
  std::optional<Int> k;      // 2-dimensional minimum only
  std::optional<Int> b_min;  // 2-dimensional minimum only
};

struct MomentPath {
  std::string family;
  std::vector<Int> crit_values;
  std::vector<LevelSlice> slices;
  int m_isolated = 0;
  std::optional<Decomposition> z0;
  ExtremalData extremal;

  const SurfaceModel& surface0() const;  // reduced space at level 0
  const LevelSlice& slice_above_zero() const;
  CohClass omega(Int level) const;  // from the slice whose interior is above level, or the last slice
  std::vector<FixedComponent> components() const;
};

// Input for building a path bottom-up.
struct PathInput {
  std::string family;
  int min_dim = 2;               // 2: minimum at -2 (case I); 4: minimum at -1 (case II)
  CohClass euler_min;            // Euler class just above the minimum
  int m_isolated = 0;            // index-two points at level -1 (min_dim 2 only)
  std::vector<CohClass> z0;      // classes of fixed surfaces at level 0, on M0
  std::optional<Decomposition> decomposition;
};

// Builds slices by repeated cross_index_two, then fixes omega using the
// monotone condition [w_0] = c1(M0).
MomentPath build_path(const PathInput& in);

bool validate_level_structure(const MomentPath& path);

}  // namespace tfd
