#include "tfd/catalog.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "tfd/curves.hpp"
#include "tfd/enumerator.hpp"
#include "tfd/invariants.hpp"

namespace tfd {

namespace fs = std::filesystem;

fs::path golden_dir() {
  if (const char* env = std::getenv("TFD_GOLDEN_DIR"); env && *env) return fs::path(env);
  return fs::path(TFD_GOLDEN_DIR_DEFAULT);
}

const std::vector<std::string>& golden_files() {
  static const std::vector<std::string> files{"table_list_1.json", "table_list_2.json"};
  return files;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw CatalogIOError("SHA-256 computation failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw CatalogIOError("cannot read " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw CatalogIOError("error while reading " + p.string());
  return os.str();
}

std::map<std::string, std::string> read_sums(const fs::path& dir) {
  std::map<std::string, std::string> sums;
  std::istringstream in(read_file(dir / "SHA256SUMS"));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string digest, name;
    ls >> digest >> name;
    if (!name.empty() && name[0] == '*') name.erase(0, 1);
    if (digest.size() != 64 || name.empty()) throw CatalogIOError("malformed SHA256SUMS line: " + line);
    sums[name] = digest;
  }
  return sums;
}

}  // namespace

std::vector<TFDRecord> records_from_json(const nlohmann::json& j, const std::string& where) {
  const nlohmann::json* arr = &j;
  if (j.is_object()) {
    auto it = j.find("records");
    if (it == j.end()) throw ParseError("missing field '" + where + ".records'");
    arr = &*it;
  }
  if (!arr->is_array()) throw ParseError("field '" + where + ".records': expected array");
  std::vector<TFDRecord> out;
  for (std::size_t i = 0; i < arr->size(); ++i)
    out.push_back(record_from_json((*arr)[i], where + ".records[" + std::to_string(i) + "]"));
  return out;
}

std::vector<TFDRecord> golden_catalog(const fs::path& dir) {
  const auto sums = read_sums(dir);
  std::vector<TFDRecord> out;
  for (const std::string& name : golden_files()) {
    const std::string bytes = read_file(dir / name);
    auto it = sums.find(name);
    if (it == sums.end()) throw CatalogIOError("no checksum listed for " + name);
    if (sha256_hex(bytes) != it->second) throw CatalogIOError("checksum mismatch for " + name);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(name + ": " + e.what());
    }
    for (TFDRecord& r : records_from_json(j, name)) out.push_back(std::move(r));
  }
  return out;
}

std::string key_text(const RecordKey& k) {
  std::ostringstream os;
  auto vec = [&](const std::vector<Int>& v) {
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
  };
  os << k.family << ' ' << k.surface << " e=";
  vec(k.euler);
  os << " m=" << k.m_isolated << " Z0=[";
  for (std::size_t i = 0; i < k.z0.size(); ++i) {
    if (i) os << ',';
    vec(k.z0[i]);
  }
  os << ']';
  return os.str();
}

namespace {

std::map<RecordKey, const TFDRecord*> index_by_key(const std::vector<TFDRecord>& canon) {
  std::map<RecordKey, const TFDRecord*> m;
  for (const TFDRecord& r : canon) m.emplace(key_of(r), &r);
  return m;
}

std::vector<Int> sorted_genera(const TFDRecord& r) {
  std::vector<std::pair<std::vector<Int>, Int>> g;
  for (const auto& c : r.z0_components) g.push_back({c.cls.coeffs, c.genus});
  std::sort(g.begin(), g.end());
  std::vector<Int> out;
  for (const auto& [cls, genus] : g) out.push_back(genus);
  return out;
}

std::string ints(const std::vector<Int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

}  // namespace

DiffReport diff(const std::vector<TFDRecord>& computed, const std::vector<TFDRecord>& golden) {
  std::vector<TFDRecord> cc, gc;
  for (const TFDRecord& r : computed) cc.push_back(canonicalize(r));
  for (const TFDRecord& r : golden) gc.push_back(canonicalize(r));
  const auto ci = index_by_key(cc);
  const auto gi = index_by_key(gc);

  DiffReport rep;
  for (const auto& [key, g] : gi) {
    auto it = ci.find(key);
    if (it == ci.end()) {
      rep.entries.push_back({DiffKind::Missing, g->label, key_text(key), "", "no computed record"});
      continue;
    }
    const TFDRecord& c = *it->second;
    bool ok = true;
    auto mismatch = [&](const std::string& field, const std::string& want, const std::string& got) {
      ok = false;
      rep.entries.push_back({DiffKind::Mismatch, g->label, key_text(key), field, "golden " + want + ", computed " + got});
    };
    if (c.omega0 != g->omega0) mismatch("omega0", format_class(g->omega0), format_class(c.omega0));
    if (sorted_genera(c) != sorted_genera(*g)) mismatch("z0_components.genus", ints(sorted_genera(*g)), ints(sorted_genera(c)));
    if (c.b2 != g->b2) mismatch("b2", std::to_string(g->b2), std::to_string(c.b2));
    if (c.c1_cubed != g->c1_cubed) mismatch("c1_cubed", std::to_string(g->c1_cubed), std::to_string(c.c1_cubed));
    if (ok) ++rep.matched;
  }
  for (const auto& [key, c] : ci)
    if (!gi.count(key)) rep.entries.push_back({DiffKind::Extra, c->label, key_text(key), "", "not in golden tables"});
  return rep;
}

std::string format_diff(const DiffReport& report) {
  std::ostringstream os;
  for (const DiffEntry& e : report.entries) {
    switch (e.kind) {
      case DiffKind::Missing: os << "missing  "; break;
      case DiffKind::Extra: os << "extra    "; break;
      case DiffKind::Mismatch: os << "mismatch "; break;
    }
    if (!e.label.empty()) os << e.label << ' ';
    os << '{' << e.key << '}';
    if (!e.field.empty()) os << " field " << e.field;
    os << ": " << e.detail << '\n';
  }
  return os.str();
}

void attach_golden_labels(std::vector<TFDRecord>& computed, const std::vector<TFDRecord>& golden) {
  std::map<RecordKey, const TFDRecord*> gi;
  std::vector<TFDRecord> gc;
  gc.reserve(golden.size());
  for (const TFDRecord& g : golden) gc.push_back(canonicalize(g));
  for (const TFDRecord& g : gc) gi.emplace(key_of(g), &g);
  for (TFDRecord& r : computed) {
    auto it = gi.find(key_of(canonicalize(r)));
    if (it == gi.end()) continue;
    r.label = it->second->label;
    r.fano = it->second->fano;
  }
}

namespace {

int family_rank(const std::string& f) {
  const auto& fam = builtin_families();
  for (std::size_t i = 0; i < fam.size(); ++i)
    if (fam[i].label == f) return static_cast<int>(i);
  return static_cast<int>(fam.size());
}

// Splits "II-1-4.10" into text and number chunks so that 4.10 sorts after 4.9.
bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
      std::size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
      while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
      const long x = std::stol(a.substr(i, i2 - i)), y = std::stol(b.substr(j, j2 - j));
      if (x != y) return x < y;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

}  // namespace

void sort_records(std::vector<TFDRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const TFDRecord& a, const TFDRecord& b) {
    const int fa = family_rank(a.family), fb = family_rank(b.family);
    if (fa != fb) return fa < fb;
    if (a.label != b.label) {
      if (a.label.empty() || b.label.empty()) return !a.label.empty();
      return natural_less(a.label, b.label);
    }
    return key_of(a) < key_of(b);
  });
}

std::vector<std::string> consistency_problems(const std::vector<TFDRecord>& records) {
  std::vector<std::string> out;
  std::set<std::string> labels;
  for (const TFDRecord& r : records) {
    const std::string who = r.label.empty() ? key_text(key_of(r)) : r.label;
    if (!r.label.empty() && !labels.insert(r.label).second) out.push_back(who + ": duplicate label");
    MomentPath path;
    try {
      path = path_of(r);
    } catch (const std::exception& e) {
      out.push_back(who + ": cannot rebuild moment path: " + e.what());
      continue;
    }
    if (!validate_level_structure(path)) out.push_back(who + ": inadmissible level structure");
    for (const LevelSlice& s : path.slices)
      if (!positivity_ok(s))
        out.push_back(who + ": positivity fails on [" + std::to_string(s.lo) + "," + std::to_string(s.hi) + "]");
    if (path.surface0() != r.surface0) out.push_back(who + ": surface0 disagrees with the path");
    if (path.omega(0) != r.omega0) out.push_back(who + ": omega0 is not c1(M0)");
    if (!r.z0_components.empty()) {
      CohClass z = zero_class(r.surface0);
      for (const auto& c : r.z0_components) {
        z += c.cls;
        if (genus(r.surface0, c.cls) != c.genus) out.push_back(who + ": stored genus of " + format_class(c.cls) + " is wrong");
      }
      const auto decs = enumerate_decompositions(r.surface0, z);
      if (decs.size() != 1 || decs.front() != *path.z0)
        out.push_back(who + ": PD(Z0) does not split uniquely into the stored components");
    }
    const InvariantReport inv = compute_invariants(path);
    if (inv.b2 != r.b2) out.push_back(who + ": b2 recomputes to " + std::to_string(inv.b2));
    if (inv.c1_cubed != r.c1_cubed) out.push_back(who + ": c1^3 recomputes to " + std::to_string(inv.c1_cubed));
  }
  return out;
}

}  // namespace tfd
