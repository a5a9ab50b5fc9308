#include "tfd/curves.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace tfd {

Int genus(const SurfaceModel& s, const CohClass& d) {
  const Int twice = pair(d, d) - pair(anticanonical(s), d);
  // Lattice parity makes this even; an odd value would mean a corrupt Gram form.
  if (twice % 2 != 0) throw LatticeError("odd adjunction numerator for " + format_class(d));
  return 1 + twice / 2;
}

bool is_realizable(const SurfaceModel& s, const CohClass& d) {
  return pair(anticanonical(s), d) >= 1 && genus(s, d) >= 0;
}

ComponentClass make_component(const CohClass& d) {
  return {d, genus(d.surface, d), pair(anticanonical(d.surface), d)};
}

namespace {

// Realizable classes D with 1 <= c1.D <= V and D.target = D.D.
std::vector<CohClass> candidate_parts(const SurfaceModel& s, const CohClass& target, Int V) {
  const Int box = V + 2;
  const int nb = s.base_rank();
  const int r = s.rank();
  const CohClass c1 = anticanonical(s);
  std::vector<CohClass> out;
  CohClass d = zero_class(s);

  // Writing D = B + sum c_i E_i, genus >= 0 reads
  //   sum c_i (c_i + 1) <= B.B - c1.B + 2,
  // which bounds the E coordinates once the base part B is fixed.
  std::function<void(int, Int)> fill = [&](int pos, Int budget) {
    if (pos == r) {
      const Int v = pair(c1, d);
      if (v < 1 || v > V) return;
      const Int sq = pair(d, d);
      if (1 + (sq - v) / 2 < 0) return;
      if (pair(d, target) != sq) return;
      for (Int c : d.coeffs)
        if (std::abs(c) == box)
          throw TruncationError("decomposition box saturated by " + format_class(d));
      out.push_back(d);
      return;
    }
    for (Int c = -box; c <= box; ++c) {
      const Int cost = c * (c + 1);
      if (cost > budget) continue;
      d.coeffs[pos] = c;
      fill(pos + 1, budget - cost);
    }
    d.coeffs[pos] = 0;
  };

  std::function<void(int)> base = [&](int pos) {
    if (pos == nb) {
      CohClass b = d;
      const Int budget = pair(b, b) - pair(c1, b) + 2;
      if (budget < 0) return;
      fill(nb, budget);
      return;
    }
    for (Int c = -box; c <= box; ++c) {
      d.coeffs[pos] = c;
      base(pos + 1);
    }
    d.coeffs[pos] = 0;
  };
  base(0);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

std::vector<Decomposition> enumerate_decompositions(const SurfaceModel& s, const CohClass& target) {
  if (target.surface != s) throw LatticeError("target class lives on " + target.surface.id());
  const CohClass c1 = anticanonical(s);
  const Int V = pair(c1, target);
  std::vector<Decomposition> result;
  if (V < 1) return result;

  const std::vector<CohClass> cands = candidate_parts(s, target, V);
  std::vector<Int> vols(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i) vols[i] = pair(c1, cands[i]);

  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, const CohClass&, Int)> rec = [&](std::size_t start, const CohClass& rest,
                                                                    Int vol_left) {
    if (rest.is_zero()) {
      Decomposition dec;
      for (std::size_t i : chosen) dec.parts.push_back(make_component(cands[i]));
      result.push_back(std::move(dec));
      return;
    }
    if (vol_left < 1) return;
    for (std::size_t i = start; i < cands.size(); ++i) {
      if (vols[i] > vol_left) continue;
      bool ok = true;
      for (std::size_t j : chosen)
        if (pair(cands[i], cands[j]) != 0) {
          ok = false;
          break;
        }
      // A repeated class must also be orthogonal to itself.
      if (!ok) continue;
      chosen.push_back(i);
      rec(i, rest - cands[i], vol_left - vols[i]);
      chosen.pop_back();
    }
  };
  rec(0, target, V);

  // Post-hoc re-verification of every returned decomposition.
  for (const Decomposition& dec : result) {
    CohClass sum = zero_class(s);
    for (std::size_t i = 0; i < dec.parts.size(); ++i) {
      sum += dec.parts[i].cls;
      for (std::size_t j = i + 1; j < dec.parts.size(); ++j)
        if (pair(dec.parts[i].cls, dec.parts[j].cls) != 0) throw LatticeError("decomposition check failed");
    }
    if (sum != target) throw LatticeError("decomposition does not re-sum to target");
  }
  return result;
}

}  // namespace tfd
