#include "tfd/exceptional.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <mutex>
#include <set>

namespace tfd {

namespace {

constexpr Int kBaseBox = 6;
constexpr Int kEBox = 3;
// On Q_m the blown-up 3-template 6u-3E_i-2E_j... keeps an E coefficient of
// 3, so the quadric box is one wider than any coefficient it can produce.
constexpr Int kQuadricBaseBox = 8;
constexpr Int kQuadricEBox = 4;

// Fill cs[pos..] with values in [-ebox, ebox] so that their sum and sum of
// squares hit the targets exactly.
template <class Emit>
void fill_e(std::vector<Int>& cs, std::size_t pos, Int sum, Int sq, Int ebox, Emit&& emit) {
  const Int left = static_cast<Int>(cs.size() - pos);
  if (left == 0) {
    if (sum == 0 && sq == 0) emit();
    return;
  }
  if (sq < 0 || std::abs(sum) > ebox * left || sum * sum > left * sq) return;
  for (Int c = -ebox; c <= ebox; ++c) {
    if (c * c > sq) continue;
    cs[pos] = c;
    fill_e(cs, pos + 1, sum - c, sq - c * c, ebox, emit);
  }
}

bool is_six_template(Int d, const std::vector<Int>& cs) {
  if (d != 6 || cs.size() != 8) return false;
  int threes = 0, twos = 0;
  for (Int c : cs) {
    if (c == -3) ++threes;
    else if (c == -2) ++twos;
  }
  return threes == 1 && twos == 7;
}

std::vector<CohClass> projplane_classes(const SurfaceModel& s) {
  std::vector<CohClass> out;
  std::vector<Int> cs(s.num_blowups);
  for (Int d = -kBaseBox; d <= kBaseBox; ++d) {
    // d^2 - sum c^2 = -1 and 3d + sum c = 1
    fill_e(cs, 0, 1 - 3 * d, d * d + 1, kEBox, [&] {
      bool edge = std::abs(d) == kBaseBox;
      for (Int c : cs) edge = edge || std::abs(c) == kEBox;
      if (edge && !is_six_template(d, cs))
        throw TruncationError("exceptional search box saturated on " + s.id());
      std::vector<Int> co{d};
      co.insert(co.end(), cs.begin(), cs.end());
      out.emplace_back(s, std::move(co));
    });
  }
  return out;
}

std::vector<CohClass> quadric_classes(const SurfaceModel& s) {
  std::vector<CohClass> out;
  std::vector<Int> cs(s.num_blowups);
  for (Int a = -kQuadricBaseBox; a <= kQuadricBaseBox; ++a) {
    for (Int b = -kQuadricBaseBox; b <= kQuadricBaseBox; ++b) {
      // 2ab - sum c^2 = -1 and 2a + 2b + sum c = 1
      fill_e(cs, 0, 1 - 2 * (a + b), 2 * a * b + 1, kQuadricEBox, [&] {
        bool edge = std::abs(a) == kQuadricBaseBox || std::abs(b) == kQuadricBaseBox;
        for (Int c : cs) edge = edge || std::abs(c) == kQuadricEBox;
        if (edge) throw TruncationError("exceptional search box saturated on " + s.id());
        std::vector<Int> co{a, b};
        co.insert(co.end(), cs.begin(), cs.end());
        out.emplace_back(s, std::move(co));
      });
    }
  }
  return out;
}

ExceptionalSet compute(const SurfaceModel& s) {
  ExceptionalSet set{s, {}};
  switch (s.root) {
    case Root::ProjPlane:
      set.classes = projplane_classes(s);
      break;
    case Root::Quadric:
      set.classes = quadric_classes(s);
      break;
    case Root::Hirzebruch: {
      SurfaceModel p = make_surface(Root::ProjPlane, s.num_blowups + 1);
      for (const CohClass& c : projplane_classes(p))
        set.classes.push_back(convert_hirzebruch_basis(c, ConvertDirection::uE_to_xy));
      break;
    }
  }
  std::sort(set.classes.begin(), set.classes.end());
  set.classes.erase(std::unique(set.classes.begin(), set.classes.end()), set.classes.end());
  return set;
}

}  // namespace

const ExceptionalSet& enumerate_exceptional(const SurfaceModel& s) {
  if (s.rank() > kMaxRank) throw LatticeError("rank > 9");
  struct Slot {
    std::once_flag once;
    ExceptionalSet set;
  };
  static std::array<std::array<Slot, kMaxRank>, 3> cache;
  Slot& slot = cache[static_cast<int>(s.root)][s.num_blowups];
  std::call_once(slot.once, [&] { slot.set = compute(s); });
  return slot.set;
}

std::vector<CohClass> closed_list(int k) {
  SurfaceModel s = make_surface(Root::ProjPlane, k);
  struct Template {
    Int d;
    std::vector<Int> e;
  };
  const std::vector<Template> templates = {
      {0, {1}},
      {1, {-1, -1}},
      {2, {-1, -1, -1, -1, -1}},
      {3, {-2, -1, -1, -1, -1, -1, -1}},
      {4, {-2, -2, -2, -1, -1, -1, -1, -1}},
      {5, {-2, -2, -2, -2, -2, -2, -1, -1}},
      {6, {-3, -2, -2, -2, -2, -2, -2, -2}},
  };
  std::set<CohClass> out;
  for (const auto& t : templates) {
    if (static_cast<int>(t.e.size()) > k) continue;
    std::vector<Int> slots(t.e);
    slots.resize(k, 0);
    std::sort(slots.begin(), slots.end());
    do {
      std::vector<Int> co{t.d};
      co.insert(co.end(), slots.begin(), slots.end());
      out.emplace(s, std::move(co));
    } while (std::next_permutation(slots.begin(), slots.end()));
  }
  return {out.begin(), out.end()};
}

bool verify_against_closed_list(const SurfaceModel& s) {
  if (s.root != Root::ProjPlane) return false;
  return enumerate_exceptional(s).classes == closed_list(s.num_blowups);
}

}  // namespace tfd
