#pragma once

#include <map>
#include <string>
#include <vector>

#include "annular/tangles.hpp"
#include "annular/tensor.hpp"

namespace annular {

// t1_corrected selects the t(1) table forced by the triangle formula
// id + q·g∘f, under which v_1⊗v_0 ↦ q·v_0⊗v_1. The literal variant drops
// that q factor; it breaks t(1)∘t(2) = id but is the table the displayed
// rotation closed form is consistent with. rot_chain_sign is the crossing
// flavor used in the rotation word.
struct Conventions {
  bool t1_corrected = true;
  int rot_chain_sign = 1;
};

// Operators on V^⊗n for generators and words. Ground truth is generated by
// the cup/cap tables, the triangle formulas for the crossings, the
// Reidemeister-1 closure for the twist scalars, and the last-strand winding
// rule; every other displayed formula is checked against compositions of
// these, never assumed.
class Evaluator {
 public:
  explicit Evaluator(Conventions conv = {});

  const Conventions& conventions() const { return conv_; }

  // Winding strands are only defined on the last position; s(n,i) with
  // i != n is rejected.
  LinearOperator psi_generator(const Generator& g) const;
  LinearOperator psi_word(const TangleWord& w) const;

  // Scalar by which any twist of the given flavor acts: -q^-1 for flavor 1,
  // -q for flavor 2, computed once from the Reidemeister-1 closure
  // f_3^1 ∘ t_3^2 ∘ g_3^1 and cached.
  const LaurentPoly& twist_scalar(int sign) const;

  // Rotation on k strands via the generator chain s(k,k) t(k,k-1) ... t(k,1),
  // and its exact inverse (reversed chain with the flavors swapped, composed
  // with the inverse winding table). Cached per k.
  const LinearOperator& rot_matrix(int k) const;
  const LinearOperator& rot_inv_matrix(int k) const;

 private:
  LinearOperator cross_table(int sign) const;
  LinearOperator wind_table(int n) const;      // last-slot action of s(n,n)
  LinearOperator wind_inv_table(int n) const;  // its exact inverse

  Conventions conv_;
  LinearOperator cup_{0, 2};
  LinearOperator cap_{2, 0};
  LinearOperator cross_[2]{LinearOperator(2, 2), LinearOperator(2, 2)};
  LaurentPoly twist_[2];
  mutable std::map<int, LinearOperator> rot_cache_;
  mutable std::map<int, LinearOperator> rot_inv_cache_;
};

// Displayed closed form for the rotation action on k strands:
//   v_1 ⊗ v_I ↦ q^k · v_I ⊗ v_0
//   v_0 ⊗ v_I ↦ (1-q^2) Σ_j [I_j = 1] q^{#ones before j} q^k v_{I, j↦0} ⊗ v_0
//               + q^{#ones} v_I ⊗ (2q^-2 v_0 - q^{-4-k} v_1)
LinearOperator rotation_closed_form(int k);

struct RotationDiff {
  Mask input;
  TensorVector composed;
  TensorVector closed;
};

// Basis inputs where the composed rotation differs from the closed form.
std::vector<RotationDiff> check_rotation_closed_form(const Evaluator& ev,
                                                     int k);

struct LedgerEntry {
  int id;
  nlohmann::ordered_json params;
  bool holds;
  std::string counterexample;  // empty when the group holds
};

// Verification record: which relation groups hold under the stated
// conventions, with the smallest failing instance for each group that
// does not.
struct ConventionLedger {
  bool t1_table_corrected = true;
  int rot_chain_sign = 1;
  std::vector<LedgerEntry> relations;

  bool all_hold() const;
  // Whether a failing entry records a documented property of the stated
  // relations rather than a build defect: 11 holds only up to a factor q;
  // 13 and 14 fail under either chain flavor (the winding rule shifts the
  // grading of the closed strand); 15's double-rotation wrap-around form
  // fails when the rotation word uses flavor-2 crossings.
  bool documented_failure(const LedgerEntry& e) const;
  // 0: everything holds; 2: only documented failures; 1: anything else.
  int status_code() const;
  nlohmann::ordered_json to_json() const;
};

// Checks every instance from instantiate_relations(n_max) for exact
// operator equality, grouped by (relation id, reading). Relations 13-15
// are additionally checked under the swapped rotation chain flavor.
ConventionLedger verify_relations(const Evaluator& ev, int n_max);

}  // namespace annular
