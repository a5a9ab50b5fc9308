#include <doctest.h>

#include "oracles.hpp"
#include "tfd/curves.hpp"

using namespace tfd;

namespace {

std::vector<std::vector<std::string>> split(const std::string& surface, const std::string& cls) {
  const SurfaceModel s = SurfaceModel::parse(surface);
  std::vector<std::vector<std::string>> out;
  for (const Decomposition& d : enumerate_decompositions(s, parse_class(s, cls))) {
    std::vector<std::string> parts;
    for (const auto& p : d.parts) parts.push_back(format_class(p.cls));
    out.push_back(parts);
  }
  return out;
}

}  // namespace

TEST_CASE("adjunction genus of plane curves and torus classes") {
  const SurfaceModel p2 = make_surface(Root::ProjPlane, 0);
  // (d-1)(d-2)/2 for plane curves of degree d.
  for (Int d = 1; d <= 6; ++d) CHECK(genus(p2, d * basis_class(p2, 0)) == (d - 1) * (d - 2) / 2);
  CHECK(genus(make_surface(Root::Quadric, 0), parse_class(make_surface(Root::Quadric, 0), "2x+2y")) == 1);
  CHECK(genus(make_surface(Root::Hirzebruch, 0), parse_class(make_surface(Root::Hirzebruch, 0), "2y")) == -2);  // 2g-2 = -4-2
  CHECK(oracle::genus('Q', 0, {2, 3}) == genus(make_surface(Root::Quadric, 0), parse_class(make_surface(Root::Quadric, 0), "2x+3y")));
}

TEST_CASE("realizability") {
  const SurfaceModel q0 = make_surface(Root::Quadric, 0);
  CHECK(is_realizable(q0, parse_class(q0, "x")));
  CHECK_FALSE(is_realizable(q0, parse_class(q0, "-x+2y")));  // genus -1
  CHECK_FALSE(is_realizable(q0, parse_class(q0, "x-y")));    // volume 0
}

TEST_CASE("decompositions of golden Z0 classes") {
  using V = std::vector<std::vector<std::string>>;
  CHECK(split("H0", "x+2y") == V{{"x+y", "y"}});
  CHECK(split("H0", "2x+2y") == V{{"2x+2y"}});
  CHECK(split("Q0", "2y") == V{{"y", "y"}});
  CHECK(split("Q0", "2x") == V{{"x", "x"}});
  CHECK(split("Q0", "x+2y") == V{{"x+2y"}});
  CHECK(split("X0", "4u") == V{{"4u"}});
  CHECK(split("X1", "u+E1") == V{{"u", "E1"}});
  CHECK(split("H2", "x+y-E1-E2") == V{{"x+y-E1-E2"}});
}

TEST_CASE("eliminated configurations have no decomposition") {
  CHECK(split("H0", "2y").empty());
  CHECK(split("Q0", "-x+2y").empty());
  CHECK(split("X0", "0").empty());
  CHECK(split("Q0", "x-y").empty());
}

TEST_CASE("decompositions re-sum and are pairwise orthogonal") {
  const SurfaceModel q1 = make_surface(Root::Quadric, 1);
  for (const char* t : {"2x+2y-E1", "x+2y", "2x+y-E1", "x+y"}) {
    const CohClass target = parse_class(q1, t);
    for (const Decomposition& d : enumerate_decompositions(q1, target)) {
      CohClass sum = zero_class(q1);
      for (std::size_t i = 0; i < d.parts.size(); ++i) {
        sum += d.parts[i].cls;
        CHECK(d.parts[i].genus >= 0);
        CHECK(d.parts[i].volume >= 1);
        for (std::size_t j = i + 1; j < d.parts.size(); ++j) CHECK(pair(d.parts[i].cls, d.parts[j].cls) == 0);
        if (i) CHECK(d.parts[i - 1].cls >= d.parts[i].cls);
      }
      CHECK(sum == target);
    }
  }
}
