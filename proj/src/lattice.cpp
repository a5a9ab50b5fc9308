#include "tfd/lattice.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <mutex>
#include <sstream>

#include "tfd/exceptional.hpp"

namespace tfd {

namespace {

int root_index(Root r) { return static_cast<int>(r); }

void require_same(const SurfaceModel& a, const SurfaceModel& b) {
  if (a != b) throw LatticeError("basis mismatch: " + a.id() + " vs " + b.id());
}

}  // namespace

std::vector<std::string> SurfaceModel::basis() const {
  std::vector<std::string> out;
  if (root == Root::ProjPlane) {
    out.push_back("u");
  } else {
    out.push_back("x");
    out.push_back("y");
  }
  for (int i = 1; i <= num_blowups; ++i) out.push_back("E" + std::to_string(i));
  return out;
}

Int SurfaceModel::gram(int i, int j) const {
  const int b = base_rank();
  if (i >= b || j >= b) return (i == j) ? -1 : 0;
  switch (root) {
    case Root::ProjPlane: return 1;
    case Root::Quadric: return i == j ? 0 : 1;
    case Root::Hirzebruch: return (i == j) ? (i == 0 ? 0 : -1) : 1;
  }
  return 0;
}

std::string SurfaceModel::id() const {
  const char* p = root == Root::ProjPlane ? "X" : root == Root::Quadric ? "Q" : "H";
  return p + std::to_string(num_blowups);
}

SurfaceModel SurfaceModel::parse(std::string_view id) {
  if (id == "CP2" || id == "P2") return make_surface(Root::ProjPlane, 0);
  if (id == "S2xS2") return make_surface(Root::Quadric, 0);
  if (id == "ES2") return make_surface(Root::Hirzebruch, 0);
  if (id.size() < 2) throw ParseError("unknown surface id '" + std::string(id) + "'");
  Root r;
  switch (id[0]) {
    case 'X': r = Root::ProjPlane; break;
    case 'Q': r = Root::Quadric; break;
    case 'H': r = Root::Hirzebruch; break;
    default: throw ParseError("unknown surface id '" + std::string(id) + "'");
  }
  int m = 0;
  for (char ch : id.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw ParseError("unknown surface id '" + std::string(id) + "'");
    m = m * 10 + (ch - '0');
    if (m > kMaxRank) break;
  }
  try {
    return make_surface(r, m);
  } catch (const LatticeError& e) {
    throw ParseError(std::string("surface id '") + std::string(id) + "': " + e.what());
  }
}

SurfaceModel make_surface(Root root, int num_blowups) {
  SurfaceModel s{root, num_blowups};
  if (num_blowups < 0) throw LatticeError("negative blow-up count");
  if (s.rank() > kMaxRank)
    throw LatticeError("del Pezzo bound violated: rank " + std::to_string(s.rank()) + " > 9");
  return s;
}

CohClass::CohClass(SurfaceModel s, std::vector<Int> c) : surface(s), coeffs(std::move(c)) {
  if (static_cast<int>(coeffs.size()) != surface.rank())
    throw LatticeError("coefficient count " + std::to_string(coeffs.size()) +
                       " does not match rank of " + surface.id());
}

bool CohClass::is_zero() const {
  for (Int v : coeffs)
    if (v != 0) return false;
  return true;
}

CohClass CohClass::operator-() const {
  CohClass r = *this;
  for (Int& v : r.coeffs) v = -v;
  return r;
}

CohClass& CohClass::operator+=(const CohClass& o) {
  require_same(surface, o.surface);
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

CohClass& CohClass::operator-=(const CohClass& o) {
  require_same(surface, o.surface);
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

std::strong_ordering CohClass::operator<=>(const CohClass& o) const {
  if (auto c = surface <=> o.surface; c != 0) return c;
  return coeffs <=> o.coeffs;
}

CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
CohClass operator*(Int s, CohClass a) {
  for (Int& v : a.coeffs) v *= s;
  return a;
}

CohClass zero_class(const SurfaceModel& s) { return CohClass(s, std::vector<Int>(s.rank(), 0)); }

CohClass basis_class(const SurfaceModel& s, int index) {
  if (index < 0 || index >= s.rank()) throw LatticeError("basis index out of range");
  CohClass c = zero_class(s);
  c.coeffs[index] = 1;
  return c;
}

CohClass e_class(const SurfaceModel& s, int i) {
  if (i < 1 || i > s.num_blowups) throw LatticeError("no label E" + std::to_string(i) + " on " + s.id());
  return basis_class(s, s.base_rank() + i - 1);
}

Int pair(const CohClass& a, const CohClass& b) {
  require_same(a.surface, b.surface);
  const auto& p = a.coeffs;
  const auto& q = b.coeffs;
  Int v = 0;
  int first_e;
  switch (a.surface.root) {
    case Root::ProjPlane:
      v = p[0] * q[0];
      first_e = 1;
      break;
    case Root::Quadric:
      v = p[0] * q[1] + p[1] * q[0];
      first_e = 2;
      break;
    default:
      v = p[0] * q[1] + p[1] * q[0] - p[1] * q[1];
      first_e = 2;
      break;
  }
  for (std::size_t i = first_e; i < p.size(); ++i) v -= p[i] * q[i];
  return v;
}

CohClass anticanonical(const SurfaceModel& s) {
  CohClass c = zero_class(s);
  switch (s.root) {
    case Root::ProjPlane: c.coeffs[0] = 3; break;
    case Root::Quadric: c.coeffs[0] = 2; c.coeffs[1] = 2; break;
    case Root::Hirzebruch: c.coeffs[0] = 3; c.coeffs[1] = 2; break;
  }
  for (int i = s.base_rank(); i < s.rank(); ++i) c.coeffs[i] = -1;
  return c;
}

SurfaceModel blow_up(const SurfaceModel& s, int count) {
  if (count < 0) throw LatticeError("negative blow-up count");
  return make_surface(s.root, s.num_blowups + count);
}

CohClass extend(const CohClass& c, const SurfaceModel& target) {
  if (target.root != c.surface.root || target.num_blowups < c.surface.num_blowups)
    throw LatticeError("cannot extend " + c.surface.id() + " to " + target.id());
  CohClass r = zero_class(target);
  std::copy(c.coeffs.begin(), c.coeffs.end(), r.coeffs.begin());
  return r;
}

CohClass restrict_to(const CohClass& c, const SurfaceModel& target) {
  if (target.root != c.surface.root || target.num_blowups > c.surface.num_blowups)
    throw LatticeError("cannot restrict " + c.surface.id() + " to " + target.id());
  for (std::size_t i = target.rank(); i < c.coeffs.size(); ++i)
    if (c.coeffs[i] != 0) throw LatticeError("restriction drops a nonzero coefficient of " + format_class(c));
  return CohClass(target, std::vector<Int>(c.coeffs.begin(), c.coeffs.begin() + target.rank()));
}

CohClass convert_hirzebruch_basis(const CohClass& c, ConvertDirection dir) {
  const SurfaceModel& s = c.surface;
  if (dir == ConvertDirection::xy_to_uE) {
    if (s.root != Root::Hirzebruch) throw LatticeError("xy_to_uE needs a Hirzebruch root");
    // a x + b y = a u + (b - a) E1
    SurfaceModel t = make_surface(Root::ProjPlane, s.num_blowups + 1);
    std::vector<Int> out(t.rank());
    out[0] = c[0];
    out[1] = c[1] - c[0];
    for (int i = 2; i < s.rank(); ++i) out[i] = c[i];
    return CohClass(t, std::move(out));
  }
  if (s.root != Root::ProjPlane || s.num_blowups < 1) throw LatticeError("uE_to_xy needs ProjPlane with m >= 1");
  // a u + b E1 = a x + (a + b) y
  SurfaceModel t = make_surface(Root::Hirzebruch, s.num_blowups - 1);
  std::vector<Int> out(t.rank());
  out[0] = c[0];
  out[1] = c[0] + c[1];
  for (int i = 2; i < s.rank(); ++i) out[i] = c[i];
  return CohClass(t, std::move(out));
}

const std::vector<CohClass>& effective_generators(const SurfaceModel& s) {
  struct Slot {
    std::once_flag once;
    std::vector<CohClass> gens;
  };
  static std::array<std::array<Slot, kMaxRank>, 3> cache;
  Slot& slot = cache[root_index(s.root)][s.num_blowups];
  std::call_once(slot.once, [&] {
    if (s.rank() >= 3) {
      slot.gens = enumerate_exceptional(s).classes;
    } else if (s.root == Root::ProjPlane && s.num_blowups == 0) {
      slot.gens = {basis_class(s, 0)};
    } else if (s.root == Root::ProjPlane) {
      // X1 in the (u, E1) basis: the ruling u - E1 and the section E1.
      slot.gens = {e_class(s, 1), basis_class(s, 0) - e_class(s, 1)};
    } else {
      slot.gens = {basis_class(s, 0), basis_class(s, 1)};
    }
  });
  return slot.gens;
}

std::string format_class(const CohClass& c) {
  const auto labels = c.surface.basis();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
    Int v = c.coeffs[i];
    if (v == 0) continue;
    if (v < 0) os << '-';
    else if (!first) os << '+';
    Int a = v < 0 ? -v : v;
    if (a != 1) os << a;
    os << labels[i];
    first = false;
  }
  if (first) return "0";
  return os.str();
}

CohClass parse_class(const SurfaceModel& s, std::string_view text) {
  const auto labels = s.basis();
  CohClass out = zero_class(s);
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) throw ParseError("empty class expression");
  if (t == "0") return out;
  std::size_t i = 0;
  while (i < t.size()) {
    Int sign = 1;
    if (t[i] == '+' || t[i] == '-') {
      sign = t[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw ParseError("expected '+' or '-' at position " + std::to_string(i) + " in '" + t + "'");
    }
    Int coef = 1;
    std::size_t j = i;
    while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
    if (j > i) {
      if (j - i > 6) throw ParseError("coefficient too large in '" + t + "'");
      coef = std::stoll(t.substr(i, j - i));
    }
    i = j;
    std::size_t k = i;
    if (k < t.size() && t[k] == 'E') {
      ++k;
      while (k < t.size() && std::isdigit(static_cast<unsigned char>(t[k]))) ++k;
    } else if (k < t.size() && std::isalpha(static_cast<unsigned char>(t[k]))) {
      ++k;
    }
    std::string sym = t.substr(i, k - i);
    if (sym.empty()) {
      // A bare number is only meaningful as the zero class.
      throw ParseError("missing basis label in '" + t + "'");
    }
    auto it = std::find(labels.begin(), labels.end(), sym);
    if (it == labels.end()) throw ParseError("label '" + sym + "' is not in the basis of " + s.id());
    out.coeffs[it - labels.begin()] += sign * coef;
    i = k;
  }
  return out;
}

}  // namespace tfd
