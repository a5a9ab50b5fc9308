#include "tfd/certificate.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "tfd/enumerator.hpp"
#include "tfd/exceptional.hpp"

namespace tfd {

namespace {

struct EmbeddedMultiplier {
  int k;
  const char* id;
  const char* value;
};

constexpr EmbeddedMultiplier kEmbedded[] = {
#include "certificate_data.inc"
};

void check_k(int k) {
  if (k < 2 || k > 8) throw CertificateError("certificate k must lie in [2, 8], got " + std::to_string(k));
}

[[noreturn]] void malformed(const std::string& id, const std::string& why) {
  throw CertificateError("malformed constraint id '" + id + "': " + why);
}

std::vector<int> parse_indices(const std::string& id, std::string_view s, int k) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = std::min(s.find(',', pos), s.size());
    const std::string_view tok = s.substr(pos, comma - pos);
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size()) malformed(id, "bad index list");
    if (v < 1 || v > k) malformed(id, "index out of range");
    out.push_back(v);
    pos = comma + 1;
  }
  std::set<int> uniq(out.begin(), out.end());
  if (uniq.size() != out.size()) malformed(id, "repeated index");
  return out;
}

// Row of pair(omega_level, cls) >= 1 reordered to (a, x, b.., y..).
CertificateConstraint positivity(int k, Int level, const CohClass& cls, std::string id) {
  const Scenario sc{2, Root::ProjPlane, k, true};
  const LinearConstraint lc = positivity_row(sc, level, cls);
  // positivity_row orders parameters as (a, b_1..b_k, x, y_1..y_k).
  CertificateConstraint c;
  c.id = std::move(id);
  c.row.assign(2 + 2 * k, 0);
  c.row[0] = lc.coef[0];
  c.row[1] = lc.coef[k + 1];
  for (int i = 1; i <= k; ++i) {
    c.row[1 + i] = lc.coef[i];
    c.row[1 + k + i] = lc.coef[k + 1 + i];
  }
  c.bound = lc.bound;
  return c;
}

CohClass class_with(int k, Int d, const std::vector<std::pair<int, Int>>& es) {
  CohClass c = d * basis_class(make_surface(Root::ProjPlane, k), 0);
  for (auto [i, v] : es) c += v * e_class(c.surface, i);
  return c;
}

}  // namespace

std::vector<std::string> certificate_variables(int k) {
  check_k(k);
  std::vector<std::string> v{"a", "x"};
  for (int i = 1; i <= k; ++i) v.push_back("b" + std::to_string(i));
  for (int i = 1; i <= k; ++i) v.push_back("y" + std::to_string(i));
  return v;
}

CertificateConstraint certificate_constraint(int k, const std::string& id) {
  check_k(k);
  const SurfaceModel xk = make_surface(Root::ProjPlane, k);
  if (id == "(1)") {
    CertificateConstraint c{id, std::vector<Int>(2 + 2 * k, 0), 1};
    const CohClass c1 = anticanonical(xk);
    c.row[1] = pair(c1, basis_class(xk, 0));
    for (int i = 1; i <= k; ++i) c.row[1 + k + i] = pair(c1, e_class(xk, i));
    return c;
  }
  if (id.rfind("pos(", 0) == 0) {
    if (id.back() != ')') malformed(id, "missing ')'");
    const std::size_t comma = id.find(',');
    if (comma == std::string::npos) malformed(id, "missing ','");
    const std::string lv = id.substr(4, comma - 4);
    Int level;
    if (lv == "-1") level = -1;
    else if (lv == "+1" || lv == "1") level = 1;
    else malformed(id, "level must be -1 or +1");
    CohClass cls;
    try {
      cls = parse_class(xk, id.substr(comma + 1, id.size() - comma - 2));
    } catch (const std::exception& e) {
      malformed(id, e.what());
    }
    const auto& ex = enumerate_exceptional(xk).classes;
    if (!std::binary_search(ex.begin(), ex.end(), cls)) malformed(id, "class is not exceptional on " + xk.id());
    return positivity(k, level, cls, id);
  }
  const std::size_t open = id.find('[');
  if (open == std::string::npos || id.back() != ']') malformed(id, "expected tag[indices]");
  const std::string tag = id.substr(0, open);
  const std::string_view body = std::string_view(id).substr(open + 1, id.size() - open - 2);
  if (tag == "(2)" || tag == "(4)") {
    const auto ix = parse_indices(id, body, k);
    if (ix.size() != 1) malformed(id, "expected one index");
    return positivity(k, tag == "(2)" ? -1 : 1, class_with(k, 0, {{ix[0], 1}}), id);
  }
  if (tag == "(3)" || tag == "(5)") {
    const auto ix = parse_indices(id, body, k);
    if (ix.size() != 2) malformed(id, "expected two indices");
    return positivity(k, tag == "(3)" ? -1 : 1, class_with(k, 1, {{ix[0], -1}, {ix[1], -1}}), id);
  }
  if (tag == "(c-)" || tag == "(c+)") {
    if (k < 7) malformed(id, "cubic classes need k >= 7");
    const std::size_t semi = body.find(';');
    if (semi == std::string_view::npos) malformed(id, "expected i;j1,...,j6");
    const auto head = parse_indices(id, body.substr(0, semi), k);
    const auto rest = parse_indices(id, body.substr(semi + 1), k);
    if (head.size() != 1 || rest.size() != 6) malformed(id, "expected one index and six others");
    if (std::find(rest.begin(), rest.end(), head[0]) != rest.end()) malformed(id, "repeated index");
    std::vector<std::pair<int, Int>> es{{head[0], -2}};
    for (int j : rest) es.push_back({j, -1});
    return positivity(k, tag == "(c-)" ? -1 : 1, class_with(k, 3, es), id);
  }
  malformed(id, "unknown tag");
}

bool check_certificate(const InfeasibilityCertificate& cert) {
  check_k(cert.k);
  const std::size_t n = 2 + 2 * static_cast<std::size_t>(cert.k);
  if (cert.multipliers.size() != cert.constraints.size()) return false;
  std::vector<Rational> total(n, Rational(0));
  Rational bound_sum(0);
  for (std::size_t i = 0; i < cert.constraints.size(); ++i) {
    const CertificateConstraint& c = cert.constraints[i];
    const CertificateConstraint expect = certificate_constraint(cert.k, c.id);
    if (c.row != expect.row || c.bound != expect.bound) return false;
    const Rational& w = cert.multipliers[i];
    if (w < Rational(0)) return false;
    for (std::size_t t = 0; t < n; ++t) total[t] += w * Rational(c.row[t]);
    bound_sum += w * Rational(c.bound);
  }
  for (const Rational& v : total)
    if (v != Rational(0)) return false;
  return bound_sum >= Rational(1);
}

namespace {

Rational parse_rational(const std::string& s) {
  const std::size_t slash = s.find('/');
  auto num = [&](std::string_view t) {
    Int v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || p != t.data() + t.size()) throw ParseError("bad rational '" + s + "'");
    return v;
  };
  if (slash == std::string::npos) return Rational(num(s));
  const Int d = num(std::string_view(s).substr(slash + 1));
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  return Rational(num(std::string_view(s).substr(0, slash)), d);
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace

InfeasibilityCertificate prove_empty_case_II_Xk(int k) {
  if (k < 2 || k > 8) throw LatticeError("prove_empty_case_II_Xk needs 2 <= k <= 8");
  InfeasibilityCertificate cert;
  cert.k = k;
  for (const EmbeddedMultiplier& m : kEmbedded) {
    if (m.k != k) continue;
    cert.constraints.push_back(certificate_constraint(k, m.id));
    cert.multipliers.push_back(parse_rational(m.value));
  }
  return cert;
}

nlohmann::json certificate_to_json(const InfeasibilityCertificate& cert) {
  nlohmann::json j;
  j["k"] = cert.k;
  j["variables"] = certificate_variables(cert.k);
  j["constraints"] = nlohmann::json::array();
  for (std::size_t i = 0; i < cert.constraints.size(); ++i) {
    const auto& c = cert.constraints[i];
    j["constraints"].push_back({{"id", c.id},
                                {"row", c.row},
                                {"bound", c.bound},
                                {"multiplier", i < cert.multipliers.size() ? format_rational(cert.multipliers[i]) : "0"}});
  }
  return j;
}

InfeasibilityCertificate certificate_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("certificate: expected an object");
  InfeasibilityCertificate cert;
  if (!j.contains("k") || !j["k"].is_number_integer()) throw ParseError("field 'certificate.k': expected integer");
  cert.k = j["k"].get<int>();
  if (!j.contains("constraints") || !j["constraints"].is_array())
    throw ParseError("field 'certificate.constraints': expected array");
  const auto& cs = j["constraints"];
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const std::string w = "certificate.constraints[" + std::to_string(i) + "]";
    const auto& c = cs[i];
    if (!c.is_object()) throw ParseError("field '" + w + "': expected object");
    if (!c.contains("id") || !c["id"].is_string()) throw ParseError("field '" + w + ".id': expected string");
    if (!c.contains("row") || !c["row"].is_array()) throw ParseError("field '" + w + ".row': expected array");
    if (!c.contains("bound") || !c["bound"].is_number_integer()) throw ParseError("field '" + w + ".bound': expected integer");
    if (!c.contains("multiplier") || !c["multiplier"].is_string())
      throw ParseError("field '" + w + ".multiplier': expected string");
    CertificateConstraint cc;
    cc.id = c["id"].get<std::string>();
    for (const auto& v : c["row"]) {
      if (!v.is_number_integer()) throw ParseError("field '" + w + ".row': expected integers");
      cc.row.push_back(v.get<Int>());
    }
    cc.bound = c["bound"].get<Int>();
    cert.constraints.push_back(std::move(cc));
    try {
      cert.multipliers.push_back(parse_rational(c["multiplier"].get<std::string>()));
    } catch (const ParseError& e) {
      throw ParseError("field '" + w + ".multiplier': " + e.what());
    }
  }
  return cert;
}

}  // namespace tfd
