#pragma once

// Randomized property suites shared by the unit tests and the acceptance
// binary. Each returns the number of cases run and the failures seen.

#include <cstdint>
#include <string>
#include <vector>

#include "tfd/record.hpp"

namespace props {

struct Result {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0; }
  void fail(const std::string& why) {
    if (failures++ == 0) first_failure = why;
  }
};

Result pairing_symmetry_bilinearity(std::size_t n, std::uint64_t seed);
Result genus_parity(std::size_t n, std::uint64_t seed);
Result conversion_isometry_roundtrip(std::size_t n, std::uint64_t seed);
// Applies random symmetry group elements to the given records.
Result canonicalize_idempotent_orbit(const std::vector<tfd::TFDRecord>& records, std::size_t n, std::uint64_t seed);
// Random case-I paths against the closed form of omega_t on [0, 1], the
// affine law inside each slice, and extend/restrict round trips.
Result wall_crossing_roundtrip(std::size_t n, std::uint64_t seed);
// Linear system rows accept a parameter vector exactly when every endpoint
// test, Vol(Z0) >= 1 and the k bound hold on the built path.
Result affine_rows(std::size_t n, std::uint64_t seed);
// solve_box against plain enumeration of the box.
Result search_vs_bruteforce(std::size_t n, std::uint64_t seed);

}  // namespace props
