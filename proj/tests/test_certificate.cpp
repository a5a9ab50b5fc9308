#include <doctest.h>

#include "tfd/certificate.hpp"

using namespace tfd;

namespace {

// Rows written out from the inequalities of the X_k argument, variables
// ordered (a, x, b_1..b_k, y_1..y_k).
std::vector<Int> hand_row(int k, const std::string& tag, std::vector<int> idx) {
  std::vector<Int> r(2 + 2 * k, 0);
  auto b = [&](int i) -> Int& { return r[1 + i]; };
  auto y = [&](int i) -> Int& { return r[1 + k + i]; };
  if (tag == "1") {
    r[1] = 3;
    for (int i = 1; i <= k; ++i) y(i) = 1;
  } else if (tag == "2") {
    b(idx[0]) = -1;
  } else if (tag == "3") {
    r[0] = 1;
    b(idx[0]) = b(idx[1]) = 1;
  } else if (tag == "4") {
    b(idx[0]) = y(idx[0]) = 1;
  } else if (tag == "5") {
    r[0] = r[1] = -1;
    b(idx[0]) = b(idx[1]) = y(idx[0]) = y(idx[1]) = -1;
  } else if (tag == "c-") {
    r[0] = 3;
    b(idx[0]) = 2;
    for (std::size_t j = 1; j < idx.size(); ++j) b(idx[j]) = 1;
  } else if (tag == "c+") {
    r[0] = r[1] = -3;
    b(idx[0]) = y(idx[0]) = -2;
    for (std::size_t j = 1; j < idx.size(); ++j) b(idx[j]) = y(idx[j]) = -1;
  }
  return r;
}

}  // namespace

TEST_CASE("constraint rows agree with the hand-written inequalities") {
  for (int k = 2; k <= 8; ++k) {
    CAPTURE(k);
    CHECK(certificate_constraint(k, "(1)").row == hand_row(k, "1", {}));
    CHECK(certificate_constraint(k, "(1)").bound == 1);
    for (int i = 1; i <= k; ++i) {
      CHECK(certificate_constraint(k, "(2)[" + std::to_string(i) + "]").row == hand_row(k, "2", {i}));
      CHECK(certificate_constraint(k, "(4)[" + std::to_string(i) + "]").row == hand_row(k, "4", {i}));
      for (int j = i + 1; j <= k; ++j) {
        const std::string ij = "[" + std::to_string(i) + "," + std::to_string(j) + "]";
        CHECK(certificate_constraint(k, "(3)" + ij).row == hand_row(k, "3", {i, j}));
        CHECK(certificate_constraint(k, "(5)" + ij).row == hand_row(k, "5", {i, j}));
        CHECK(certificate_constraint(k, "(5)" + ij).bound == 0);
      }
    }
  }
  CHECK(certificate_constraint(7, "(c-)[1;2,3,4,5,6,7]").row == hand_row(7, "c-", {1, 2, 3, 4, 5, 6, 7}));
  CHECK(certificate_constraint(8, "(c+)[3;1,2,5,6,7,8]").row == hand_row(8, "c+", {3, 1, 2, 5, 6, 7, 8}));
  CHECK(certificate_constraint(3, "pos(-1,u-E1-E2)").row == hand_row(3, "3", {1, 2}));
  CHECK(certificate_constraint(3, "pos(+1,E2)").row == hand_row(3, "4", {2}));
}

TEST_CASE("k = 2 certificate with multipliers 1, 3, 3, 2, 2, 2, 2") {
  InfeasibilityCertificate c;
  c.k = 2;
  const std::vector<std::pair<std::string, Int>> m{{"(1)", 1},    {"(3)[1,2]", 3}, {"(5)[1,2]", 3}, {"(2)[1]", 2},
                                                   {"(2)[2]", 2}, {"(4)[1]", 2},   {"(4)[2]", 2}};
  for (const auto& [id, w] : m) {
    c.constraints.push_back(certificate_constraint(2, id));
    c.multipliers.push_back(Rational(w));
  }
  CHECK(check_certificate(c));
  for (auto& w : c.multipliers) w = Rational(0);
  CHECK_FALSE(check_certificate(c));
}

TEST_CASE("embedded certificates") {
  for (int k = 2; k <= 8; ++k) {
    CAPTURE(k);
    const InfeasibilityCertificate c = prove_empty_case_II_Xk(k);
    CHECK(c.k == k);
    CHECK(check_certificate(c));
    bool cubic = false;
    for (const auto& con : c.constraints) cubic = cubic || con.id.rfind("(c", 0) == 0;
    CHECK(cubic == (k >= 7));
  }
  // k = 6: the pair sums leave (3 - k/2) x >= 1 with 3 - k/2 = 0, so no
  // x <= 0 rows are needed.
  for (const auto& con : prove_empty_case_II_Xk(6).constraints) CHECK(con.id.rfind("(2)", 0) != 0);
  CHECK(prove_empty_case_II_Xk(8).constraints.size() == 113);
  CHECK_THROWS_AS(prove_empty_case_II_Xk(1), LatticeError);
  CHECK_THROWS_AS(prove_empty_case_II_Xk(9), LatticeError);
}

TEST_CASE("tampering is detected") {
  InfeasibilityCertificate c = prove_empty_case_II_Xk(4);
  SUBCASE("negative multiplier") {
    c.multipliers[1] = Rational(-1, 3);
    CHECK_FALSE(check_certificate(c));
  }
  SUBCASE("edited row") {
    c.constraints[0].row[1] += 1;
    CHECK_FALSE(check_certificate(c));
  }
  SUBCASE("edited bound") {
    c.constraints[0].bound = 5;
    CHECK_FALSE(check_certificate(c));
  }
  SUBCASE("dropped multiplier") {
    c.multipliers.pop_back();
    CHECK_FALSE(check_certificate(c));
  }
  SUBCASE("scaled down") {
    for (auto& w : c.multipliers) w /= 2;
    CHECK_FALSE(check_certificate(c));
  }
}

TEST_CASE("malformed ids throw") {
  for (const char* id : {"(9)[1]", "(2)[0]", "(2)[5]", "(3)[1,1]", "(3)[1]", "(c-)[1;2,3]", "pos(0,E1)",
                         "pos(-1,u)", "pos(-1,E7)", "(2)1", "(c-)[1;2,3,4,5,6,7]"}) {
    CAPTURE(id);
    CHECK_THROWS_AS(certificate_constraint(4, id), CertificateError);
  }
  InfeasibilityCertificate c;
  c.k = 12;
  CHECK_THROWS_AS(check_certificate(c), CertificateError);
}

TEST_CASE("JSON round trip") {
  const InfeasibilityCertificate c = prove_empty_case_II_Xk(7);
  const auto j = certificate_to_json(c);
  CHECK(j["variables"].size() == 16);
  const InfeasibilityCertificate back = certificate_from_json(j);
  CHECK(back.constraints.size() == c.constraints.size());
  CHECK(back.multipliers == c.multipliers);
  CHECK(check_certificate(back));
  auto broken = j;
  broken["constraints"][0]["multiplier"] = "1/0";
  CHECK_THROWS_AS(certificate_from_json(broken), ParseError);
}
