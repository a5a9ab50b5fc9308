// tfd: enumerate, verify and inspect topological fixed point data of
// six-dimensional monotone semifree circle actions.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tfd/catalog.hpp"
#include "tfd/certificate.hpp"
#include "tfd/curves.hpp"
#include "tfd/enumerator.hpp"
#include "tfd/exceptional.hpp"
#include "tfd/invariants.hpp"

namespace {

using namespace tfd;

enum Exit { kOk = 0, kUsage = 1, kTruncation = 2, kIO = 3, kMismatch = 4 };

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::vector<std::string> table_row(const TFDRecord& r) {
  return {r.label,
          surface_display(r.surface0),
          format_class(r.omega0),
          format_class(r.euler_min),
          components_display(r),
          std::to_string(r.b2),
          std::to_string(r.c1_cubed)};
}

const std::vector<std::string> kColumns{"label", "M0", "omega0", "e", "fixed components", "b2", "c1^3"};

void emit(const std::vector<TFDRecord>& records, const std::string& format, std::ostream& os) {
  if (format == "json") {
    nlohmann::json j{{"records", nlohmann::json::array()}};
    for (const TFDRecord& r : records) j["records"].push_back(to_json(r));
    os << j.dump(1) << '\n';
  } else if (format == "csv") {
    for (std::size_t i = 0; i < kColumns.size(); ++i) os << (i ? "," : "") << csv_field(kColumns[i]);
    os << '\n';
    for (const TFDRecord& r : records) {
      const auto row = table_row(r);
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
      os << '\n';
    }
  } else {
    os << '|';
    for (const auto& c : kColumns) os << ' ' << c << " |";
    os << "\n|";
    for (std::size_t i = 0; i < kColumns.size(); ++i) os << "---|";
    os << '\n';
    for (const TFDRecord& r : records) {
      os << '|';
      for (const auto& c : table_row(r)) os << ' ' << c << " |";
      os << '\n';
    }
  }
}

int cmd_enumerate(const std::string& family, const std::string& format, int jobs) {
  EnumerationResult res;
  if (family.empty()) {
    res = enumerate_all({jobs});
  } else {
    res = enumerate_family(family_spec(family), {jobs});
  }
  try {
    attach_golden_labels(res.records, golden_catalog());
  } catch (const std::exception& e) {
    std::cerr << "warning: golden labels unavailable (" << e.what() << ")\n";
  }
  sort_records(res.records);
  for (const TFDRecord& f : res.flagged)
    std::cerr << "flagged (midpoint square test): " << key_text(key_of(f)) << '\n';
  emit(res.records, format, std::cout);
  return kOk;
}

int cmd_verify(int jobs) {
  const std::vector<TFDRecord> golden = golden_catalog();
  bool ok = true;
  for (const std::string& p : consistency_problems(golden)) {
    std::cout << "golden inconsistency: " << p << '\n';
    ok = false;
  }
  const EnumerationResult res = enumerate_all({jobs});
  for (const TFDRecord& f : res.flagged) {
    std::cout << "flagged (midpoint square test): " << key_text(key_of(f)) << '\n';
    ok = false;
  }
  const DiffReport rep = diff(res.records, golden);
  std::cout << format_diff(rep);
  if (!rep.empty()) ok = false;

  int valid = 0;
  for (int k = 2; k <= 8; ++k) {
    const bool cert_ok = check_certificate(prove_empty_case_II_Xk(k));
    const bool search_empty = enumerate_family(xk_level0_spec(k), {jobs}).records.empty();
    if (cert_ok && search_empty) {
      ++valid;
    } else {
      std::cout << "X" << k << ": certificate " << (cert_ok ? "valid" : "INVALID") << ", bounded search "
                << (search_empty ? "empty" : "NOT EMPTY") << '\n';
      ok = false;
    }
  }
  std::cout << rep.matched << '/' << golden.size() << " match, " << valid << "/7 certificates valid\n";
  return ok ? kOk : kMismatch;
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogIOError("cannot read " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

int cmd_invariants(const std::string& input) {
  const nlohmann::json j = read_json(input);
  std::vector<TFDRecord> recs;
  if (j.is_object() && !j.contains("records")) recs.push_back(record_from_json(j, "record"));
  else recs = records_from_json(j, "input");
  for (const TFDRecord& r : recs) {
    const InvariantReport inv = compute_invariants(path_of(r));
    std::cout << (r.label.empty() ? key_text(key_of(r)) : r.label) << '\n';
    std::cout << "  b2        stored " << r.b2 << "  recomputed " << inv.b2 << '\n';
    std::cout << "  c1^3      stored " << r.c1_cubed << "  recomputed " << inv.c1_cubed << '\n';
    std::cout << "  Vol(Zmin) " << inv.vol_min << "\n  Vol(Zmax) " << inv.vol_max << '\n';
    if (!inv.vol_z0.empty()) {
      std::cout << "  Vol(Z0)  ";
      for (Int v : inv.vol_z0) std::cout << ' ' << v;
      std::cout << '\n';
    }
  }
  return kOk;
}

int cmd_exceptional(const std::string& surface) {
  const SurfaceModel s = SurfaceModel::parse(surface);
  const auto& set = enumerate_exceptional(s);
  for (const CohClass& c : set.classes) std::cout << format_class(c) << '\n';
  std::cout << set.classes.size() << " exceptional classes on " << s.id() << '\n';
  return kOk;
}

int cmd_decompose(const std::string& surface, const std::string& cls) {
  const SurfaceModel s = SurfaceModel::parse(surface);
  const CohClass target = parse_class(s, cls);
  const auto decs = enumerate_decompositions(s, target);
  for (const Decomposition& d : decs) {
    for (std::size_t i = 0; i < d.parts.size(); ++i)
      std::cout << (i ? " + " : "") << format_class(d.parts[i].cls) << " (g=" << d.parts[i].genus
                << ", vol=" << d.parts[i].volume << ")";
    std::cout << '\n';
  }
  std::cout << decs.size() << " decomposition(s)\n";
  return kOk;
}

int cmd_certificate(int k, const std::string& check) {
  if (!check.empty()) {
    const InfeasibilityCertificate cert = certificate_from_json(read_json(check));
    const bool ok = check_certificate(cert);
    std::cout << "certificate for X" << cert.k << ": " << (ok ? "valid" : "invalid") << '\n';
    return ok ? kOk : kMismatch;
  }
  std::cout << certificate_to_json(prove_empty_case_II_Xk(k)).dump(1) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topological fixed point data of 6-dimensional monotone semifree S^1-manifolds"};
  app.require_subcommand(1);

  std::string family, format = "markdown";
  int jobs = 1;
  auto* en = app.add_subcommand("enumerate", "enumerate fixed point data");
  en->add_option("--family", family, "family label, e.g. I-3-1 (default: all)");
  en->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "markdown"}));
  en->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* ve = app.add_subcommand("verify", "enumerate, diff against the golden tables, check certificates");
  ve->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  std::string input;
  auto* in = app.add_subcommand("invariants", "recompute invariants of records in a JSON file");
  in->add_option("--input", input, "record or catalog JSON")->required();

  std::string surface, cls;
  auto* ex = app.add_subcommand("exceptional", "list exceptional classes of a surface");
  ex->add_option("surface", surface, "surface id, e.g. X5, Q2, H1, CP2")->required();

  auto* de = app.add_subcommand("decompose", "split a class into disjoint fixed surfaces");
  de->add_option("surface", surface, "surface id")->required();
  de->add_option("class", cls, "class, e.g. 2x+y")->required();

  int k = 2;
  std::string check;
  auto* ce = app.add_subcommand("certificate", "print or check an infeasibility certificate for M0 = X_k");
  ce->add_option("--k", k, "number of blow-ups")->check(CLI::Range(2, 8));
  ce->add_option("--check", check, "certificate JSON to check instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*en) return cmd_enumerate(family, format, jobs);
    if (*ve) return cmd_verify(jobs);
    if (*in) return cmd_invariants(input);
    if (*ex) return cmd_exceptional(surface);
    if (*de) return cmd_decompose(surface, cls);
    if (*ce) return cmd_certificate(k, check);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (*en) std::cerr << en->help();
    return kUsage;
  } catch (const TruncationError& e) {
    std::cerr << "truncation: " << e.what() << '\n';
    return kTruncation;
  } catch (const CatalogIOError& e) {
    std::cerr << "i/o: " << e.what() << '\n';
    return kIO;
  } catch (const CertificateError& e) {
    std::cerr << "certificate: " << e.what() << '\n';
    return kUsage;
  } catch (const LatticeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
