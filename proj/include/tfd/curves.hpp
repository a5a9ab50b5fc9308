#pragma once

// Adjunction genus and splitting of PD(Z0) into disjoint fixed surfaces.

#include <vector>

#include "tfd/lattice.hpp"

namespace tfd {

struct ComponentClass {
  CohClass cls;
  Int genus = 0;
  Int volume = 0;  // pair(c1, cls)

  bool operator==(const ComponentClass&) const = default;
};

struct Decomposition {
  std::vector<ComponentClass> parts;  // lexicographically nonincreasing

  bool operator==(const Decomposition&) const = default;
};

// 1 + (D.D - c1.D)/2; may be negative.
Int genus(const SurfaceModel& s, const CohClass& d);
// c1.D >= 1 and genus >= 0.
bool is_realizable(const SurfaceModel& s, const CohClass& d);
ComponentClass make_component(const CohClass& d);

// Every multiset of realizable classes, pairwise orthogonal (equal classes
// included), summing to target. Candidate coefficients live in
// [-(V+2), V+2] with V = c1.target; TruncationError if an admissible
// candidate sits on that boundary. Empty when c1.target < 1.
std::vector<Decomposition> enumerate_decompositions(const SurfaceModel& s, const CohClass& target);

}  // namespace tfd
