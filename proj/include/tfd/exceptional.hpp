#pragma once

// Exceptional classes: D.D = -1 and c1.D = 1.

#include <vector>

#include "tfd/lattice.hpp"

namespace tfd {

struct ExceptionalSet {
  SurfaceModel surface;
  std::vector<CohClass> classes;  // sorted lexicographically, no duplicates
};

// Brute force inside the box |u| <= 6, |Ei| <= 3 of the ProjPlane picture.
// Hirzebruch roots are converted to ProjPlane and back; Quadric roots are
// searched directly in the (x, y, E) form with |x|, |y| <= 8, |Ei| <= 4
// (the 3u template reaches E = 3 in that basis).
// Results are cached per surface. Throws TruncationError when a solution
// touches the box boundary other than through the 6u template.
const ExceptionalSet& enumerate_exceptional(const SurfaceModel& s);

// The seven template shapes E1, u-E12, 2u-E12345, 3u-2E1-E234567,
// 4u-2E123-E45678, 5u-2E123456-E78, 6u-3E1-2E2345678 closed under index
// permutations and restricted to labels E1..Ek.
std::vector<CohClass> closed_list(int k);

// ProjPlane roots only; false otherwise.
bool verify_against_closed_list(const SurfaceModel& s);

}  // namespace tfd
