#include "tfd/record.hpp"

#include <algorithm>
#include <sstream>

#include "tfd/invariants.hpp"

namespace tfd {

using nlohmann::json;

int case_of(std::string_view family) {
  if (family.rfind("II-", 0) == 0) return 2;
  if (family.rfind("I-", 0) == 0) return 1;
  throw ParseError("unknown family '" + std::string(family) + "'");
}

MomentPath path_of(const TFDRecord& r) {
  PathInput in;
  in.family = r.family;
  in.min_dim = case_of(r.family) == 1 ? 2 : 4;
  in.euler_min = r.euler_min;
  in.m_isolated = r.m_isolated;
  if (!r.z0_components.empty()) {
    Decomposition dec;
    for (const auto& c : r.z0_components) {
      in.z0.push_back(c.cls);
      dec.parts.push_back(make_component(c.cls));
    }
    std::sort(dec.parts.begin(), dec.parts.end(),
              [](const ComponentClass& a, const ComponentClass& b) { return a.cls > b.cls; });
    in.decomposition = dec;
  }
  return build_path(in);
}

TFDRecord record_from_path(const MomentPath& path, std::string label) {
  TFDRecord r;
  r.label = std::move(label);
  r.family = path.family;
  r.surface0 = path.surface0();
  r.omega0 = path.omega(0);
  r.euler_min = path.slices.front().euler;
  r.m_isolated = path.m_isolated;
  if (path.z0)
    for (const auto& p : path.z0->parts) r.z0_components.push_back({p.cls, p.genus});
  for (const LevelSlice& s : path.slices) r.slices.push_back({s.lo, s.hi, s.euler, s.omega_lo, s.omega_at(s.hi)});
  const InvariantReport inv = compute_invariants(path);
  r.b2 = inv.b2;
  r.c1_cubed = inv.c1_cubed;
  return r;
}

json class_to_json(const CohClass& c) { return json{{"surface", c.surface.id()}, {"coeffs", c.coeffs}}; }

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("missing field '" + where + "." + key + "'");
  return *it;
}

Int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError("field '" + where + "': expected integer");
  return j.get<Int>();
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError("field '" + where + "': expected string");
  return j.get<std::string>();
}

std::optional<Int> opt_int(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return as_int(*it, where + "." + key);
}

}  // namespace

CohClass class_from_json(const json& j, const std::string& where) {
  const std::string sid = as_string(field(j, "surface", where), where + ".surface");
  SurfaceModel s;
  try {
    s = SurfaceModel::parse(sid);
  } catch (const ParseError& e) {
    throw ParseError("field '" + where + ".surface': " + e.what());
  }
  const json& cj = field(j, "coeffs", where);
  if (!cj.is_array()) throw ParseError("field '" + where + ".coeffs': expected array");
  std::vector<Int> co;
  for (std::size_t i = 0; i < cj.size(); ++i) co.push_back(as_int(cj[i], where + ".coeffs[" + std::to_string(i) + "]"));
  if (static_cast<int>(co.size()) != s.rank())
    throw ParseError("field '" + where + ".coeffs': expected " + std::to_string(s.rank()) + " entries");
  return CohClass(s, std::move(co));
}

json to_json(const TFDRecord& r) {
  json j;
  j["label"] = r.label;
  j["family"] = r.family;
  j["surface0"] = r.surface0.id();
  j["omega0"] = class_to_json(r.omega0);
  j["euler_min"] = class_to_json(r.euler_min);
  j["m_isolated"] = r.m_isolated;
  j["z0_components"] = json::array();
  for (const auto& c : r.z0_components) j["z0_components"].push_back({{"class", class_to_json(c.cls)}, {"genus", c.genus}});
  if (!r.slices.empty()) {
    j["slices"] = json::array();
    for (const auto& s : r.slices)
      j["slices"].push_back({{"lo", s.lo},
                             {"hi", s.hi},
                             {"euler", class_to_json(s.euler)},
                             {"omega_lo", class_to_json(s.omega_lo)},
                             {"omega_hi", class_to_json(s.omega_hi)}});
  }
  j["b2"] = r.b2;
  j["c1_cubed"] = r.c1_cubed;
  if (r.fano) {
    json f{{"mori_mukai_id", r.fano->mori_mukai_id}, {"description", r.fano->description}};
    if (r.fano->quoted_vol_min) f["quoted_vol_min"] = *r.fano->quoted_vol_min;
    if (r.fano->quoted_vol_max) f["quoted_vol_max"] = *r.fano->quoted_vol_max;
    j["fano"] = f;
  }
  return j;
}

TFDRecord record_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  TFDRecord r;
  r.label = as_string(field(j, "label", where), where + ".label");
  r.family = as_string(field(j, "family", where), where + ".family");
  try {
    case_of(r.family);
  } catch (const ParseError&) {
    throw ParseError("field '" + where + ".family': unknown family '" + r.family + "'");
  }
  const std::string sid = as_string(field(j, "surface0", where), where + ".surface0");
  try {
    r.surface0 = SurfaceModel::parse(sid);
  } catch (const ParseError& e) {
    throw ParseError("field '" + where + ".surface0': " + e.what());
  }
  r.omega0 = class_from_json(field(j, "omega0", where), where + ".omega0");
  r.euler_min = class_from_json(field(j, "euler_min", where), where + ".euler_min");
  r.m_isolated = static_cast<int>(as_int(field(j, "m_isolated", where), where + ".m_isolated"));
  const json& zs = field(j, "z0_components", where);
  if (!zs.is_array()) throw ParseError("field '" + where + ".z0_components': expected array");
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const std::string w = where + ".z0_components[" + std::to_string(i) + "]";
    Z0Component c{class_from_json(field(zs[i], "class", w), w + ".class"), as_int(field(zs[i], "genus", w), w + ".genus")};
    r.z0_components.push_back(std::move(c));
  }
  if (auto it = j.find("slices"); it != j.end()) {
    if (!it->is_array()) throw ParseError("field '" + where + ".slices': expected array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string w = where + ".slices[" + std::to_string(i) + "]";
      const json& s = (*it)[i];
      r.slices.push_back({as_int(field(s, "lo", w), w + ".lo"), as_int(field(s, "hi", w), w + ".hi"),
                          class_from_json(field(s, "euler", w), w + ".euler"),
                          class_from_json(field(s, "omega_lo", w), w + ".omega_lo"),
                          class_from_json(field(s, "omega_hi", w), w + ".omega_hi")});
    }
  }
  r.b2 = as_int(field(j, "b2", where), where + ".b2");
  r.c1_cubed = as_int(field(j, "c1_cubed", where), where + ".c1_cubed");
  if (auto it = j.find("fano"); it != j.end() && !it->is_null()) {
    const std::string w = where + ".fano";
    FanoInfo f;
    f.mori_mukai_id = as_string(field(*it, "mori_mukai_id", w), w + ".mori_mukai_id");
    f.description = as_string(field(*it, "description", w), w + ".description");
    f.quoted_vol_min = opt_int(*it, "quoted_vol_min", w);
    f.quoted_vol_max = opt_int(*it, "quoted_vol_max", w);
    r.fano = f;
  }
  // Structural consistency between the raw fields.
  if (r.omega0.surface != r.surface0) throw ParseError("field '" + where + ".omega0': lives on the wrong surface");
  for (std::size_t i = 0; i < r.z0_components.size(); ++i)
    if (r.z0_components[i].cls.surface != r.surface0)
      throw ParseError("field '" + where + ".z0_components[" + std::to_string(i) + "].class': lives on the wrong surface");
  return r;
}

RecordKey key_of(const TFDRecord& r) {
  RecordKey k;
  k.family = r.family;
  k.surface = r.surface0.id();
  k.euler = r.euler_min.coeffs;
  k.m_isolated = r.m_isolated;
  for (const auto& c : r.z0_components) k.z0.push_back(c.cls.coeffs);
  std::sort(k.z0.begin(), k.z0.end(), std::greater<>());
  return k;
}

std::string surface_display(const SurfaceModel& s) {
  std::string base;
  switch (s.root) {
    case Root::ProjPlane:
      return s.num_blowups == 0 ? "CP2" : "X" + std::to_string(s.num_blowups);
    case Root::Quadric: base = "S2xS2"; break;
    case Root::Hirzebruch: base = "E_S2"; break;
  }
  if (s.num_blowups == 0) return base;
  return base + "#" + (s.num_blowups > 1 ? std::to_string(s.num_blowups) : "") + "CP2bar";
}

std::string components_display(const TFDRecord& r) {
  std::ostringstream os;
  if (case_of(r.family) == 1) {
    const Int b_min = -pair(r.euler_min, r.euler_min);
    os << "Zmin=S2 (b_min=" << b_min << ")";
    if (r.m_isolated > 0) os << "; Z-1=" << r.m_isolated << " pt";
  } else {
    os << "Zmin=" << surface_display(r.surface0);
  }
  if (!r.z0_components.empty()) {
    os << "; Z0=";
    for (std::size_t i = 0; i < r.z0_components.size(); ++i) {
      if (i) os << ", ";
      os << format_class(r.z0_components[i].cls) << " (g=" << r.z0_components[i].genus << ")";
    }
  }
  os << "; Zmax=" << surface_display(r.surface0);
  return os.str();
}

}  // namespace tfd
