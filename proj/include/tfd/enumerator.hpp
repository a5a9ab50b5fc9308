#pragma once

// Per-family exhaustive search producing every admissible fixed point
// datum, symmetry canonicalization, and infeasibility certificates.

#include <string>
#include <string_view>
#include <vector>

#include "tfd/record.hpp"
#include "tfd/search.hpp"

namespace tfd {

// One search space: root surface, number of blow-ups, presence of Z0.
//  case 1: minimum S^2 at -2 on root (m = 0); `m` index-two points at -1;
//          params = (k, PD(Z0) coefficients on M0 if has_z0).
//  case 2: 4-dimensional extrema at -1 and 1, M0 = root blown up m times;
//          params = (e(P_{-1}^+) coefficients, PD(Z0) coefficients if has_z0).
struct Scenario {
  int case_no = 1;
  Root root = Root::Hirzebruch;
  int m = 0;
  bool has_z0 = false;

  SurfaceModel surface0() const { return make_surface(root, m); }
  int num_params() const;
  PathInput path_input(const std::string& family, const std::vector<Int>& params) const;
};

struct FamilySpec {
  std::string label;
  int case_no = 1;
  std::vector<Int> crit_values;
  std::vector<Scenario> scenarios;
  Int box = 8;  // parameters range over [-box, box]
};

// The 13 families in table order.
const std::vector<FamilySpec>& builtin_families();
// Throws ParseError for an unknown label.
const FamilySpec& family_spec(std::string_view label);
// Case II with M0 = X_k (2 <= k <= 8) and a fixed surface at level 0.
FamilySpec xk_level0_spec(int k);

// Linear system of a scenario: every endpoint positivity test against the
// effective generators, Vol(Z0) >= 1, and the bound on k at a 2-dimensional
// minimum. Squares are quadratic and checked per candidate.
SearchProblem linear_system(const Scenario& sc, Int box);

// Affine form p -> pair(omega_T(p), cls) for case-II scenarios at T = -1 or 1.
LinearConstraint positivity_row(const Scenario& sc, Int level, const CohClass& cls);

struct EnumerationOptions {
  int jobs = 1;
};

struct EnumerationResult {
  std::vector<TFDRecord> records;  // canonical, deduplicated, sorted by key
  // Candidates that pass every endpoint test but fail the midpoint square
  // test. Reported, never silently dropped.
  std::vector<TFDRecord> flagged;
  std::size_t linear_solutions = 0;
  std::size_t nodes = 0;
};

// Throws TruncationError if an admitted solution touches the box boundary.
EnumerationResult enumerate_family(const FamilySpec& spec, const EnumerationOptions& opt = {});
EnumerationResult enumerate_all(const EnumerationOptions& opt = {});

// Lexicographically least encoding over E-index permutations, the x<->y
// swap (case II, Quadric) and the moment reversal (case II), keeping only
// representatives with Vol(Zmin) >= Vol(Zmax). Label and Fano data kept.
TFDRecord canonicalize(const TFDRecord& r);

}  // namespace tfd
