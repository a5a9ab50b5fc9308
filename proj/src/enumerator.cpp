#include "tfd/enumerator.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#include "tfd/curves.hpp"

namespace tfd {

int Scenario::num_params() const {
  const int r = surface0().rank();
  if (case_no == 1) return 1 + (has_z0 ? r : 0);
  return r + (has_z0 ? r : 0);
}

PathInput Scenario::path_input(const std::string& family, const std::vector<Int>& params) const {
  if (static_cast<int>(params.size()) != num_params()) throw LatticeError("parameter count mismatch");
  const SurfaceModel s0 = surface0();
  const int r = s0.rank();
  PathInput in;
  in.family = family;
  if (case_no == 1) {
    in.min_dim = 2;
    in.euler_min = CohClass(make_surface(root, 0), {params[0], -1});
    in.m_isolated = m;
    if (has_z0) in.z0.emplace_back(s0, std::vector<Int>(params.begin() + 1, params.end()));
  } else {
    in.min_dim = 4;
    in.euler_min = CohClass(s0, std::vector<Int>(params.begin(), params.begin() + r));
    if (has_z0) in.z0.emplace_back(s0, std::vector<Int>(params.begin() + r, params.end()));
  }
  return in;
}

const std::vector<FamilySpec>& builtin_families() {
  static const std::vector<FamilySpec> families = [] {
    std::vector<FamilySpec> f;
    auto range = [](int case_no, Root root, int from, int to, bool z0) {
      std::vector<Scenario> out;
      for (int m = from; m <= to; ++m) out.push_back({case_no, root, m, z0});
      return out;
    };
    auto join = [](std::vector<Scenario> a, const std::vector<Scenario>& b) {
      a.insert(a.end(), b.begin(), b.end());
      return a;
    };
    const Root H = Root::Hirzebruch, Q = Root::Quadric, P = Root::ProjPlane;
    f.push_back({"I-1", 1, {-2, 1}, {{1, H, 0, false}, {1, Q, 0, false}}, 8});
    f.push_back({"I-2", 1, {-2, -1, 1}, join(range(1, H, 1, 7, false), range(1, Q, 1, 7, false)), 8});
    f.push_back({"I-3-1", 1, {-2, 0, 1}, {{1, H, 0, true}}, 8});
    f.push_back({"I-3-2", 1, {-2, 0, 1}, {{1, Q, 0, true}}, 8});
    f.push_back({"I-4-1", 1, {-2, -1, 0, 1}, range(1, H, 1, 7, true), 8});
    f.push_back({"I-4-2", 1, {-2, -1, 0, 1}, range(1, Q, 1, 7, true), 8});
    f.push_back({"II-1-1", 2, {-1, 1}, {{2, P, 0, false}}, 5});
    f.push_back({"II-1-2", 2, {-1, 1}, {{2, Q, 0, false}}, 5});
    f.push_back({"II-1-3", 2, {-1, 1}, {{2, H, 0, false}}, 5});
    f.push_back({"II-1-4", 2, {-1, 1}, range(2, P, 2, 8, false), 5});
    f.push_back({"II-2-1", 2, {-1, 0, 1}, {{2, P, 0, true}}, 5});
    f.push_back({"II-2-2", 2, {-1, 0, 1}, {{2, Q, 0, true}}, 5});
    f.push_back({"II-2-3", 2, {-1, 0, 1}, {{2, P, 1, true}}, 5});
    return f;
  }();
  return families;
}

const FamilySpec& family_spec(std::string_view label) {
  for (const FamilySpec& f : builtin_families())
    if (f.label == label) return f;
  throw ParseError("unknown family '" + std::string(label) + "'");
}

FamilySpec xk_level0_spec(int k) {
  if (k < 2 || k > 8) throw LatticeError("X_k scenario needs 2 <= k <= 8");
  return {"II-2-X" + std::to_string(k), 2, {-1, 0, 1}, {{2, Root::ProjPlane, k, true}}, 5};
}

namespace {

// Omega classes at every slice endpoint, in a fixed order.
struct EndpointOmegas {
  std::vector<SurfaceModel> surfaces;
  std::vector<CohClass> omegas;
  std::vector<Int> bounds;
  std::vector<Int> levels;
};

EndpointOmegas endpoint_omegas(const MomentPath& path) {
  EndpointOmegas out;
  for (const LevelSlice& s : path.slices)
    for (const EndpointCheck& c : endpoint_checks(s)) {
      out.surfaces.push_back(s.surface);
      out.omegas.push_back(c.omega);
      out.bounds.push_back(c.bound);
      out.levels.push_back(c.level);
    }
  return out;
}

std::vector<MomentPath> basis_paths(const Scenario& sc) {
  const int n = sc.num_params();
  std::vector<MomentPath> paths;
  std::vector<Int> p(n, 0);
  paths.push_back(build_path(sc.path_input("", p)));
  for (int j = 0; j < n; ++j) {
    p.assign(n, 0);
    p[j] = 1;
    paths.push_back(build_path(sc.path_input("", p)));
  }
  return paths;
}

}  // namespace

SearchProblem linear_system(const Scenario& sc, Int box) {
  SearchProblem prob;
  const int n = sc.num_params();
  const SurfaceModel s0 = sc.surface0();
  const int r = s0.rank();
  const int nb = s0.base_rank();
  prob.nvars = n;
  prob.lo.assign(n, -box);
  prob.hi.assign(n, box);

  // Order: base coordinates first, then the E coordinates grouped per index
  // so that E-permutation symmetry can be broken blockwise.
  if (sc.case_no == 1) {
    prob.order.push_back(0);
    if (sc.has_z0) {
      for (int i = 0; i < r; ++i) prob.order.push_back(1 + i);
      if (sc.m >= 2)
        for (int i = nb; i < r; ++i) prob.blocks.push_back({1 + i});
    }
  } else {
    for (int i = 0; i < nb; ++i) prob.order.push_back(i);
    if (sc.has_z0)
      for (int i = 0; i < nb; ++i) prob.order.push_back(r + i);
    for (int i = nb; i < r; ++i) {
      std::vector<int> blk{i};
      if (sc.has_z0) blk.push_back(r + i);
      for (int v : blk) prob.order.push_back(v);
      if (sc.m >= 2) prob.blocks.push_back(blk);
    }
  }

  const std::vector<MomentPath> paths = basis_paths(sc);
  std::vector<EndpointOmegas> ends;
  for (const MomentPath& p : paths) ends.push_back(endpoint_omegas(p));

  std::set<std::pair<std::vector<Int>, Int>> seen;
  auto add = [&](std::vector<Int> coef, Int bound, std::string origin) {
    if (std::all_of(coef.begin(), coef.end(), [](Int c) { return c == 0; }) && bound <= 0) return;
    if (!seen.insert({coef, bound}).second) return;
    prob.constraints.push_back({std::move(coef), bound, std::move(origin)});
  };

  const EndpointOmegas& e0 = ends[0];
  for (std::size_t c = 0; c < e0.omegas.size(); ++c) {
    for (const CohClass& g : effective_generators(e0.surfaces[c])) {
      const Int base = pair(e0.omegas[c], g);
      std::vector<Int> coef(n);
      for (int j = 0; j < n; ++j) coef[j] = pair(ends[j + 1].omegas[c], g) - base;
      add(std::move(coef), e0.bounds[c] - base,
          "omega(" + std::to_string(e0.levels[c]) + ")." + format_class(g) + " on " + e0.surfaces[c].id());
    }
  }
  if (sc.has_z0) {
    const CohClass c1 = anticanonical(s0);
    std::vector<Int> coef(n);
    for (int j = 0; j < n; ++j) {
      const PathInput in = sc.path_input("", [&] {
        std::vector<Int> p(n, 0);
        p[j] = 1;
        return p;
      }());
      coef[j] = pair(c1, in.z0[0]);
    }
    add(std::move(coef), 1, "Vol(Z0) >= 1");
  }
  if (sc.case_no == 1) {
    // b_min >= -1: k >= -1 on the Hirzebruch root, k >= 0 on the quadric.
    std::vector<Int> coef(n, 0);
    coef[0] = 1;
    add(std::move(coef), sc.root == Root::Hirzebruch ? -1 : 0, "b_min >= -1");
  }
  return prob;
}

LinearConstraint positivity_row(const Scenario& sc, Int level, const CohClass& cls) {
  if (sc.case_no != 2 || (level != -1 && level != 1)) throw LatticeError("positivity rows exist for case II at +-1");
  const std::vector<MomentPath> paths = basis_paths(sc);
  auto value = [&](const MomentPath& p) { return pair(p.omega(level), cls); };
  const Int base = value(paths[0]);
  LinearConstraint row;
  row.coef.resize(sc.num_params());
  for (int j = 0; j < sc.num_params(); ++j) row.coef[j] = value(paths[j + 1]) - base;
  row.bound = 1 - base;
  row.origin = "omega(" + std::to_string(level) + ")." + format_class(cls);
  return row;
}

namespace {

struct CandidateOutcome {
  std::vector<TFDRecord> accepted;
  std::vector<TFDRecord> flagged;
};

CandidateOutcome process_candidate(const FamilySpec& spec, const Scenario& sc, const std::vector<Int>& params) {
  CandidateOutcome out;
  PathInput in = sc.path_input(spec.label, params);
  const MomentPath path = build_path(in);
  bool midpoint_fail = false;
  for (const LevelSlice& s : path.slices) {
    const PositivityReport rep = positivity_report(s);
    if (!rep.endpoints_ok) return out;
    if (!rep.midpoint_ok) midpoint_fail = true;
  }
  if (midpoint_fail) {
    out.flagged.push_back(record_from_path(path, ""));
    return out;
  }
  if (!sc.has_z0) {
    out.accepted.push_back(record_from_path(path, ""));
    return out;
  }
  const CohClass z = in.z0.front();
  for (const Decomposition& dec : enumerate_decompositions(z.surface, z)) {
    PathInput split = in;
    split.z0.clear();
    for (const auto& p : dec.parts) split.z0.push_back(p.cls);
    split.decomposition = dec;
    out.accepted.push_back(record_from_path(build_path(split), ""));
  }
  return out;
}

bool touches_box(const std::vector<Int>& v, Int box) {
  return std::any_of(v.begin(), v.end(), [&](Int c) { return std::abs(c) >= box; });
}

std::vector<Int> record_params(const TFDRecord& r) {
  std::vector<Int> v = r.euler_min.coeffs;
  for (const auto& c : r.z0_components) v.insert(v.end(), c.cls.coeffs.begin(), c.cls.coeffs.end());
  return v;
}

}  // namespace

EnumerationResult enumerate_family(const FamilySpec& spec, const EnumerationOptions& opt) {
  EnumerationResult res;
  std::map<RecordKey, TFDRecord> unique;
  for (const Scenario& sc : spec.scenarios) {
    const SearchProblem prob = linear_system(sc, spec.box);
    SearchStats stats;
    const auto points = solve_box(prob, opt.jobs, &stats);
    res.nodes += stats.nodes;
    res.linear_solutions += points.size();
    for (const auto& p : points) {
      CandidateOutcome o = process_candidate(spec, sc, p);
      for (auto& f : o.flagged) res.flagged.push_back(std::move(f));
      if (!o.accepted.empty() && touches_box(p, spec.box))
        throw TruncationError(spec.label + ": admitted candidate on the search box boundary");
      for (const TFDRecord& r : o.accepted) {
        TFDRecord c = canonicalize(r);
        // The canonical representative must lie strictly inside the box too,
        // otherwise part of its orbit was never searched.
        if (touches_box(record_params(c), spec.box))
          throw TruncationError(spec.label + ": canonical representative outside the search box");
        unique.emplace(key_of(c), std::move(c));
      }
    }
  }
  for (auto& [k, r] : unique) res.records.push_back(std::move(r));
  return res;
}

EnumerationResult enumerate_all(const EnumerationOptions& opt) {
  EnumerationResult all;
  for (const FamilySpec& f : builtin_families()) {
    EnumerationResult r = enumerate_family(f, opt);
    all.nodes += r.nodes;
    all.linear_solutions += r.linear_solutions;
    for (auto& x : r.records) all.records.push_back(std::move(x));
    for (auto& x : r.flagged) all.flagged.push_back(std::move(x));
  }
  return all;
}

TFDRecord canonicalize(const TFDRecord& r) {
  const int cs = case_of(r.family);
  const SurfaceModel s0 = r.surface0;
  const int nb = s0.base_rank();
  const int m = s0.num_blowups;
  const CohClass c1 = anticanonical(s0);

  // Stored genera travel with their classes; isometries preserve them.
  std::vector<std::pair<CohClass, Int>> parts;
  CohClass zsum = zero_class(s0);
  for (const auto& c : r.z0_components) {
    parts.emplace_back(c.cls, c.genus);
    zsum += c.cls;
  }

  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  const bool can_reverse = cs == 2;
  const bool can_swap = cs == 2 && s0.root == Root::Quadric;

  auto act = [&](const CohClass& c, const std::vector<int>& pm, bool swap) {
    CohClass o = c;
    if (swap) std::swap(o.coeffs[0], o.coeffs[1]);
    if (o.surface.num_blowups == m && m > 0)
      for (int i = 0; i < m; ++i) o.coeffs[nb + i] = c.coeffs[nb + pm[i]];
    return o;
  };
  auto by_class = [](const auto& a, const auto& b) { return a.first > b.first; };

  bool have = false;
  std::vector<Int> best_code;
  CohClass best_e;
  std::vector<std::pair<CohClass, Int>> best_parts;
  std::vector<int> best_perm;
  bool best_swap = false;
  do {
    for (int rev = 0; rev <= (can_reverse ? 1 : 0); ++rev) {
      const CohClass e = rev ? -(r.euler_min + zsum) : r.euler_min;
      if (cs == 2) {
        const CohClass wmin = c1 + e;
        const CohClass wmax = c1 - e - zsum;
        if (pair(wmin, wmin) < pair(wmax, wmax)) continue;
      }
      for (int sw = 0; sw <= (can_swap ? 1 : 0); ++sw) {
        CohClass e2 = act(e, perm, sw);
        std::vector<std::pair<CohClass, Int>> p2;
        for (const auto& [cls, g] : parts) p2.emplace_back(act(cls, perm, sw), g);
        std::sort(p2.begin(), p2.end(), by_class);
        std::vector<Int> code = e2.coeffs;
        for (const auto& p : p2) code.insert(code.end(), p.first.coeffs.begin(), p.first.coeffs.end());
        if (!have || code < best_code) {
          have = true;
          best_code = std::move(code);
          best_e = std::move(e2);
          best_parts = std::move(p2);
          best_perm = perm;
          best_swap = sw;
        }
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!have) throw LatticeError("no orbit representative satisfies Vol(Zmin) >= Vol(Zmax)");

  PathInput in;
  in.family = r.family;
  in.min_dim = cs == 1 ? 2 : 4;
  in.euler_min = best_e;
  in.m_isolated = r.m_isolated;
  if (!best_parts.empty()) {
    Decomposition dec;
    for (const auto& p : best_parts) {
      in.z0.push_back(p.first);
      dec.parts.push_back(make_component(p.first));
    }
    in.decomposition = dec;
  }
  // Slices come from the rebuilt path; the stored columns are carried over
  // (moved by the same symmetry) so that a diff compares what was written.
  TFDRecord out = record_from_path(build_path(in), r.label);
  out.omega0 = act(r.omega0, best_perm, best_swap);
  for (std::size_t i = 0; i < out.z0_components.size(); ++i) out.z0_components[i].genus = best_parts[i].second;
  out.b2 = r.b2;
  out.c1_cubed = r.c1_cubed;
  out.fano = r.fano;
  return out;
}

}  // namespace tfd
