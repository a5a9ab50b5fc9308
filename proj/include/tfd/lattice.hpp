#pragma once

// Integral second cohomology of the reduced spaces.
//
// Three root types keep the bases used by the classification tables:
//   ProjPlane  (CP^2)     basis u, E1..Em        u^2 = 1
//   Quadric    (S^2xS^2)  basis x, y, E1..Em     x^2 = y^2 = 0, xy = 1
//   Hirzebruch (E_{S^2})  basis x, y, E1..Em     x^2 = 0, y^2 = -1, xy = 1
// Every Ei squares to -1 and is orthogonal to everything else.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tfd/errors.hpp"

namespace tfd {

using Int = std::int64_t;

enum class Root { ProjPlane, Quadric, Hirzebruch };

inline constexpr int kMaxRank = 9;

struct SurfaceModel {
  Root root = Root::ProjPlane;
  int num_blowups = 0;

  int base_rank() const { return root == Root::ProjPlane ? 1 : 2; }
  int rank() const { return base_rank() + num_blowups; }
  std::vector<std::string> basis() const;
  Int gram(int i, int j) const;

  // "X3" (CP^2 blown up 3 times), "Q1", "H0", ...
  std::string id() const;
  // Accepts the ids above plus the aliases CP2, P2, S2xS2, ES2.
  static SurfaceModel parse(std::string_view id);

  auto operator<=>(const SurfaceModel&) const = default;
};

// Throws LatticeError when the rank would exceed 9 or m < 0.
SurfaceModel make_surface(Root root, int num_blowups);

struct CohClass {
  SurfaceModel surface;
  std::vector<Int> coeffs;

  CohClass() = default;
  CohClass(SurfaceModel s, std::vector<Int> c);

  bool is_zero() const;
  Int operator[](std::size_t i) const { return coeffs[i]; }

  CohClass operator-() const;
  CohClass& operator+=(const CohClass& o);
  CohClass& operator-=(const CohClass& o);

  bool operator==(const CohClass&) const = default;
  // Lexicographic on coefficients; surfaces compared first.
  std::strong_ordering operator<=>(const CohClass& o) const;
};

CohClass operator+(CohClass a, const CohClass& b);
CohClass operator-(CohClass a, const CohClass& b);
CohClass operator*(Int s, CohClass a);

CohClass zero_class(const SurfaceModel& s);
CohClass basis_class(const SurfaceModel& s, int index);
// Class of the i-th exceptional label Ei, i starting at 1.
CohClass e_class(const SurfaceModel& s, int i);

Int pair(const CohClass& a, const CohClass& b);

// ProjPlane: 3u - sum Ei; Quadric: 2x + 2y - sum Ei; Hirzebruch: 3x + 2y - sum Ei.
CohClass anticanonical(const SurfaceModel& s);

SurfaceModel blow_up(const SurfaceModel& s, int count);
// Zero-extension along a blow-up (pullback under the blow-down map).
CohClass extend(const CohClass& c, const SurfaceModel& target);
// Inverse of extend; throws LatticeError when a dropped coefficient is nonzero.
CohClass restrict_to(const CohClass& c, const SurfaceModel& target);

enum class ConvertDirection { xy_to_uE, uE_to_xy };
// u = x + y, E1 = y; further labels shift by one index.
CohClass convert_hirzebruch_basis(const CohClass& c, ConvertDirection dir);

// Generators of the curve cone used for positivity tests.
const std::vector<CohClass>& effective_generators(const SurfaceModel& s);

std::string format_class(const CohClass& c);
// Parses "3x+2y-E1-E2", "-u", "0", ... against the basis of s.
CohClass parse_class(const SurfaceModel& s, std::string_view text);

}  // namespace tfd
