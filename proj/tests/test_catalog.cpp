#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "tfd/catalog.hpp"
#include "tfd/curves.hpp"
#include "tfd/enumerator.hpp"
#include "tfd/invariants.hpp"

using namespace tfd;
namespace fs = std::filesystem;

namespace {

const std::vector<TFDRecord>& golden() {
  static const std::vector<TFDRecord> g = golden_catalog(fs::path(TFD_GOLDEN_DIR_DEFAULT));
  return g;
}

const TFDRecord& by_label(const std::string& label) {
  for (const TFDRecord& r : golden())
    if (r.label == label) return r;
  FAIL("no golden record " << label);
  throw std::logic_error("unreachable");
}

fs::path scratch_copy(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("tfd_catalog_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  for (const auto& e : fs::directory_iterator(TFD_GOLDEN_DIR_DEFAULT)) fs::copy_file(e.path(), dir / e.path().filename());
  return dir;
}

}  // namespace

TEST_CASE("golden catalog shape") {
  REQUIRE(golden().size() == 56);
  std::map<std::string, int> per_family;
  for (const TFDRecord& r : golden()) ++per_family[r.family];
  CHECK(per_family["I-1"] == 3);
  CHECK(per_family["I-2"] == 1);
  CHECK(per_family["I-3-1"] == 6);
  CHECK(per_family["I-3-2"] == 7);
  CHECK(per_family["I-4-1"] + per_family["I-4-2"] == 3);
  CHECK(per_family["II-1-1"] + per_family["II-1-2"] + per_family["II-1-3"] + per_family["II-1-4"] == 16);
  CHECK(per_family["II-1-4"] == 7);
  CHECK(per_family["II-2-1"] == 6);
  CHECK(per_family["II-2-2"] == 9);
  CHECK(per_family["II-2-3"] == 5);
}

TEST_CASE("golden spot rows") {
  const TFDRecord& r = by_label("II-1-4.5");
  CHECK(r.surface0.id() == "X5");
  CHECK(r.euler_min.is_zero());
  CHECK(r.c1_cubed == 24);
  CHECK(r.b2 == 7);
  const TFDRecord& i2 = by_label("I-2");
  CHECK(i2.m_isolated == 1);
  CHECK(i2.c1_cubed == 46);
  CHECK(by_label("I-1-1.1").fano->mori_mukai_id == "No.33 in Section 12.3");
  CHECK(by_label("I-4-2").family == "I-4-2");
}

TEST_CASE("golden catalog is internally consistent") {
  const auto problems = consistency_problems(golden());
  for (const auto& p : problems) MESSAGE(p);
  CHECK(problems.empty());
}

TEST_CASE("quoted example volumes agree with the moment paths") {
  int checked = 0;
  for (const TFDRecord& r : golden()) {
    if (!r.fano) continue;
    const Volumes v = extremal_volumes(path_of(r));
    if (r.fano->quoted_vol_min) {
      CHECK_MESSAGE(*r.fano->quoted_vol_min == v.vol_min, r.label);
      ++checked;
    }
    if (r.fano->quoted_vol_max) CHECK_MESSAGE(*r.fano->quoted_vol_max == v.vol_max, r.label);
  }
  CHECK(checked >= 10);
}

TEST_CASE("decomposition of every golden Z0 is unique and equals the stored components") {
  for (const TFDRecord& r : golden()) {
    if (r.z0_components.empty()) continue;
    CAPTURE(r.label);
    CohClass z = zero_class(r.surface0);
    std::vector<CohClass> stored;
    for (const auto& c : r.z0_components) {
      z += c.cls;
      stored.push_back(c.cls);
    }
    std::sort(stored.begin(), stored.end(), std::greater<>());
    const auto decs = enumerate_decompositions(r.surface0, z);
    REQUIRE(decs.size() == 1);
    std::vector<CohClass> got;
    for (const auto& p : decs[0].parts) got.push_back(p.cls);
    CHECK(got == stored);
  }
}

TEST_CASE("diff") {
  SUBCASE("identical") { CHECK(diff(golden(), golden()).empty()); }
  SUBCASE("perturbed c1^3") {
    auto g = golden();
    g[10].c1_cubed += 1;
    const DiffReport rep = diff(golden(), g);
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].kind == DiffKind::Mismatch);
    CHECK(rep.entries[0].field == "c1_cubed");
    CHECK(rep.matched == 55);
  }
  SUBCASE("missing record") {
    std::vector<TFDRecord> computed;
    for (const TFDRecord& r : golden())
      if (r.label != "II-2-2.9") computed.push_back(r);
    const DiffReport rep = diff(computed, golden());
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].kind == DiffKind::Missing);
    CHECK(rep.entries[0].label == "II-2-2.9");
  }
  SUBCASE("extra record") {
    auto computed = golden();
    computed.pop_back();
    const DiffReport rep = diff(golden(), computed);
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].kind == DiffKind::Extra);
  }
  SUBCASE("fano metadata is ignored") {
    auto g = golden();
    g[0].fano->mori_mukai_id = "changed";
    CHECK(diff(golden(), g).empty());
  }
}

TEST_CASE("enumeration matches the golden tables") {
  EnumerationResult res = enumerate_all({4});
  const DiffReport rep = diff(res.records, golden());
  MESSAGE(format_diff(rep));
  CHECK(rep.empty());
  CHECK(rep.matched == 56);
  attach_golden_labels(res.records, golden());
  sort_records(res.records);
  CHECK(res.records.front().label == "I-1-1.1");
  CHECK(res.records.back().label == "II-2-3.5");
  for (const TFDRecord& r : res.records) CHECK(!r.label.empty());
}

TEST_CASE("natural label order") {
  std::vector<TFDRecord> v = golden();
  std::reverse(v.begin(), v.end());
  sort_records(v);
  std::vector<std::string> labels;
  for (const auto& r : v) labels.push_back(r.label);
  const auto it = std::find(labels.begin(), labels.end(), "II-1-4.2");
  REQUIRE(it != labels.end());
  CHECK(*(it + 6) == "II-1-4.8");
  CHECK(*(it - 1) == "II-1-3.2");
}

TEST_CASE("checksum and I/O failures") {
  SUBCASE("edited table") {
    const fs::path dir = scratch_copy("edited");
    {
      std::ifstream in(dir / "table_list_2.json");
      std::stringstream ss;
      ss << in.rdbuf();
      std::string text = ss.str();
      const auto pos = text.find("\"c1_cubed\": 26");
      REQUIRE(pos != std::string::npos);
      text.replace(pos, 14, "\"c1_cubed\": 27");
      std::ofstream(dir / "table_list_2.json") << text;
    }
    CHECK_THROWS_AS(golden_catalog(dir), CatalogIOError);
  }
  SUBCASE("missing table") {
    const fs::path dir = scratch_copy("missing");
    fs::remove(dir / "table_list_1.json");
    CHECK_THROWS_AS(golden_catalog(dir), CatalogIOError);
  }
  SUBCASE("missing checksums") {
    const fs::path dir = scratch_copy("nosums");
    fs::remove(dir / "SHA256SUMS");
    CHECK_THROWS_AS(golden_catalog(dir), CatalogIOError);
  }
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
