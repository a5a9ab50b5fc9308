#pragma once

// Farkas certificates for the case-II scenarios with M0 = X_k (k >= 2) and a
// fixed surface at level 0. Variables are ordered (a, x, b_1..b_k, y_1..y_k)
// where e = a u + sum b_i E_i and PD(Z0) = x u + sum y_i E_i.
//
// Constraint ids (each row reads row . v >= bound):
//   (1)              Vol(Z0) >= 1
//   (2)[i]           omega_-1 on E_i
//   (3)[i,j]         omega_-1 on u - E_i - E_j
//   (4)[i]           omega_1 on E_i
//   (5)[i,j]         omega_1 on u - E_i - E_j
//   (c-)[i;j1,..,j6] omega_-1 on 3u - 2E_i - E_j1 - ... - E_j6
//   (c+)[i;j1,..,j6] omega_1 on the same cubic class
//   pos(-1,<class>)  omega_-1 on any exceptional class of X_k
//   pos(+1,<class>)  omega_1 on any exceptional class of X_k

#include <string>
#include <vector>

#include <json.hpp>

#include "tfd/reduction.hpp"

namespace tfd {

struct CertificateConstraint {
  std::string id;
  std::vector<Int> row;
  Int bound = 0;
};

struct InfeasibilityCertificate {
  int k = 2;
  std::vector<CertificateConstraint> constraints;
  std::vector<Rational> multipliers;  // one per constraint
};

// Names of the 2k + 2 variables in order.
std::vector<std::string> certificate_variables(int k);

// The row and bound a constraint id denotes, generated from the moment path
// model. Throws CertificateError on a malformed id.
CertificateConstraint certificate_constraint(int k, const std::string& id);

// True iff every constraint matches its id, the multipliers are nonnegative,
// the weighted rows cancel and the weighted bounds sum to at least 1.
// Throws CertificateError on malformed ids or k outside [2, 8].
bool check_certificate(const InfeasibilityCertificate& cert);

// Embedded certificate for 2 <= k <= 8; throws LatticeError otherwise.
InfeasibilityCertificate prove_empty_case_II_Xk(int k);

nlohmann::json certificate_to_json(const InfeasibilityCertificate& cert);
// Throws ParseError naming the offending field.
InfeasibilityCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace tfd
