#pragma once

// Golden classification tables, loading with checksum verification, and
// the record-level diff used by `verify`.

#include <filesystem>
#include <string>
#include <vector>

#include "tfd/record.hpp"

namespace tfd {

// $TFD_GOLDEN_DIR if set, otherwise the directory configured at build time.
std::filesystem::path golden_dir();

// The two golden table files, in load order.
const std::vector<std::string>& golden_files();

// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

// Loads every golden table after checking it against SHA256SUMS in the same
// directory. Throws CatalogIOError for missing or unreadable files and for
// checksum mismatches, ParseError for malformed JSON.
std::vector<TFDRecord> golden_catalog(const std::filesystem::path& dir = golden_dir());

// Records of one JSON document: either {"records": [...]} or a bare array.
std::vector<TFDRecord> records_from_json(const nlohmann::json& j, const std::string& where);

enum class DiffKind { Missing, Extra, Mismatch };

struct DiffEntry {
  DiffKind kind;
  std::string label;  // golden label when known
  std::string key;    // printable record key
  std::string field;  // Mismatch only
  std::string detail;
};

struct DiffReport {
  std::vector<DiffEntry> entries;
  std::size_t matched = 0;
  bool empty() const { return entries.empty(); }
};

// Both sides are canonicalized and matched by key; matched pairs are
// compared on omega0, component genera, b2 and c1_cubed. Fano metadata is
// informational and never compared.
DiffReport diff(const std::vector<TFDRecord>& computed, const std::vector<TFDRecord>& golden);
std::string format_diff(const DiffReport& report);
std::string key_text(const RecordKey& k);

// Copies label and Fano data from matching golden records (by canonical key).
void attach_golden_labels(std::vector<TFDRecord>& computed, const std::vector<TFDRecord>& golden);

// Family table order, then natural label order, then key.
void sort_records(std::vector<TFDRecord>& records);

// Internal consistency of a catalog: unique labels, admissible level
// structure, positivity on every slice, a unique decomposition of PD(Z0)
// equal to the stored components, and recomputed invariants. Returns one
// line per problem.
std::vector<std::string> consistency_problems(const std::vector<TFDRecord>& records);

}  // namespace tfd
