#pragma once

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

#include "annular/laurent.hpp"
#include "annular/matchings.hpp"
#include "annular/rt_rep.hpp"
#include "annular/tensor.hpp"

namespace annular {

// Class of the one-point fiber: (v_0 - q^-1 v_1) (x) ... (x) (v_0 - q^-m v_1).
TensorVector base_class(int m);

// The cup-insertion word of a good matching applied to the base class.
// This is the ground truth that the closed formula is checked against.
TensorVector good_class_oracle(const Matching& beta, const Evaluator& ev);

// Closed form for a good matching's class. corrected carries the repaired
// through-point factor prod_{i: d_i in J} (-q^-i); literal evaluates the
// printed factor (-q)^{sum i J_i}, which contradicts the n = 0 base class
// in both sign and exponent sign. differing lists the basis masks where
// the two readings disagree, so the repair stays auditable.
struct GoodClassFormula {
  TensorVector corrected;
  TensorVector literal;
  std::vector<Mask> differing;
};
GoodClassFormula good_class_formula(const Matching& beta);

// The displayed product for arbitrary line-bundle powers, expanded in the
// monomial basis: slot s with power l contributes
// l q^(2l-2) q^(-s) v_1 - (l-1) q^(2l) v_0.
TensorVector line_bundle_class(const LineBundleIndex& idx);

// Class of the crossingless sheaf of any matching: decompose alpha as the
// k-fold rotation of a good matching beta, then apply the rotation matrix
// k times to beta's oracle class. The ledger snapshot records the
// conventions the numbers were produced under (relations list left to the
// verify pass).
struct ClassResult {
  Matching matching;
  RotationDecomposition decomposition;
  TensorVector class_v;
  std::map<std::vector<int>, LaurentPoly> class_lambda;
  ConventionLedger ledger;
};
ClassResult crossingless_class(const Matching& alpha, const Evaluator& ev);

// {"matching":..,"k":..,"class_v":..,"class_lambda":[{"powers":..,"coeff":..}],
//  "ledger":..}
nlohmann::ordered_json class_result_json(const ClassResult& r);

// Header "matching,basis,coeff", one row per nonzero coefficient, basis
// labels in display order. The matching field is quoted.
std::string class_result_csv(const ClassResult& r);

}  // namespace annular
