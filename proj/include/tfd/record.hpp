#pragma once

// One topological fixed point datum with its invariants, plus JSON I/O.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tfd/reduction.hpp"

namespace tfd {

struct Z0Component {
  CohClass cls;
  Int genus = 0;
  bool operator==(const Z0Component&) const = default;
};

struct FanoInfo {
  std::string mori_mukai_id;
  std::string description;
  std::optional<Int> quoted_vol_min;
  std::optional<Int> quoted_vol_max;
  bool operator==(const FanoInfo&) const = default;
};

struct SliceRecord {
  Int lo = 0, hi = 0;
  CohClass euler;
  CohClass omega_lo;
  CohClass omega_hi;
  bool operator==(const SliceRecord&) const = default;
};

struct TFDRecord {
  std::string label;
  std::string family;
  SurfaceModel surface0;  // reduced space at level 0
  CohClass omega0;
  // Euler class just above the minimum: e(P_{-2}^+) on the root surface in
  // case I, e(P_{-1}^+) on M0 in case II.
  CohClass euler_min;
  int m_isolated = 0;
  std::vector<Z0Component> z0_components;
  std::vector<SliceRecord> slices;
  Int b2 = 0;
  Int c1_cubed = 0;
  std::optional<FanoInfo> fano;

  bool operator==(const TFDRecord&) const = default;
};

// 1 for families I-*, 2 for II-*.
int case_of(std::string_view family);

// Rebuild the moment path from the raw fields (slices are ignored).
MomentPath path_of(const TFDRecord& r);
// Record with slices and invariants filled from the path.
TFDRecord record_from_path(const MomentPath& path, std::string label);

nlohmann::json class_to_json(const CohClass& c);
CohClass class_from_json(const nlohmann::json& j, const std::string& field);
nlohmann::json to_json(const TFDRecord& r);
// Throws ParseError naming the offending field.
TFDRecord record_from_json(const nlohmann::json& j, const std::string& where = "record");

// Identity of a record for matching: family, surface, Euler class,
// isolated points and the Z0 classes (sorted).
struct RecordKey {
  std::string family;
  std::string surface;
  std::vector<Int> euler;
  int m_isolated = 0;
  std::vector<std::vector<Int>> z0;
  auto operator<=>(const RecordKey&) const = default;
};
RecordKey key_of(const TFDRecord& r);

// Short human-readable renderings used by the CLI tables.
std::string surface_display(const SurfaceModel& s);
std::string components_display(const TFDRecord& r);

}  // namespace tfd
