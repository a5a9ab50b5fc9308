#include <doctest.h>

#include <filesystem>

#include "property_checks.hpp"
#include "tfd/catalog.hpp"

namespace {

void expect(const props::Result& r) {
  CHECK(r.cases >= 1000);
  CHECK_MESSAGE(r.ok(), r.first_failure);
}

}  // namespace

TEST_CASE("pairing is symmetric, bilinear and matches the Gram matrix") { expect(props::pairing_symmetry_bilinearity(2000, 11)); }
TEST_CASE("adjunction numerator is even") { expect(props::genus_parity(2000, 12)); }
TEST_CASE("Hirzebruch conversion is an isometry and round-trips") { expect(props::conversion_isometry_roundtrip(2000, 13)); }
TEST_CASE("canonicalize is idempotent and constant on orbits") {
  expect(props::canonicalize_idempotent_orbit(tfd::golden_catalog(std::filesystem::path(TFD_GOLDEN_DIR_DEFAULT)), 1500, 14));
}
TEST_CASE("wall crossing agrees with the closed form of omega_t") { expect(props::wall_crossing_roundtrip(1500, 15)); }
TEST_CASE("linear rows are exactly the endpoint tests") { expect(props::affine_rows(2000, 16)); }
TEST_CASE("solve_box agrees with plain enumeration") { expect(props::search_vs_bruteforce(1500, 17)); }
