#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "annular/laurent.hpp"

namespace annular {

using Mask = std::uint32_t;

// Sparse element of V^tensor(k). Basis vectors are keyed by bitmask with
// bit s-1 holding the digit of slot s, so v_I has bit s-1 set iff s in I.
// Arity 0 is the scalar module: the single basis vector is mask 0.
// Invariant: no stored coefficient is zero and every mask is < 2^arity.
class TensorVector {
 public:
  explicit TensorVector(int arity = 0);

  static TensorVector basis(int arity, Mask mask);
  static TensorVector scalar(const LaurentPoly& value);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Mask, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly coeff(Mask mask) const;

  void add_term(Mask mask, const LaurentPoly& c);

  TensorVector& operator+=(const TensorVector& o);
  TensorVector& operator-=(const TensorVector& o);
  TensorVector& operator*=(const LaurentPoly& c);

  friend bool operator==(const TensorVector& a, const TensorVector& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const TensorVector& a, const TensorVector& b) {
    return !(a == b);
  }

  // Slot digits of a basis label, slot 1 first: mask 2, arity 3 -> {0,1,0}.
  static std::vector<int> index_of(Mask mask, int arity);
  static std::string label(Mask mask, int arity);  // "v_010"

  // Terms ordered by slot digits read as a binary string, slot 1 most
  // significant, e.g. "v_0 - q^-1 v_1". Arity 0 prints the bare polynomial.
  std::string str() const;
  nlohmann::ordered_json to_json() const;

 private:
  int arity_;
  std::map<Mask, LaurentPoly> terms_;
};

TensorVector operator+(TensorVector a, const TensorVector& b);
TensorVector operator-(TensorVector a, const TensorVector& b);
TensorVector operator*(const LaurentPoly& c, TensorVector v);

// a in slots 1..arity(a), b in the following slots.
TensorVector tv_tensor(const TensorVector& a, const TensorVector& b);

// Column-sparse map V^tensor(r) -> V^tensor(s): columns[m] is the image of
// the domain basis vector with mask m; a missing column is the zero image.
class LinearOperator {
 public:
  LinearOperator(int domain_arity, int codomain_arity);
  static LinearOperator identity(int arity);

  int domain_arity() const { return domain_; }
  int codomain_arity() const { return codomain_; }
  const std::map<Mask, TensorVector>& columns() const { return columns_; }

  void set_column(Mask m, TensorVector image);
  TensorVector column(Mask m) const;

  TensorVector apply(const TensorVector& v) const;
  LinearOperator& operator*=(const LaurentPoly& c);

  friend bool operator==(const LinearOperator& a, const LinearOperator& b);
  friend bool operator!=(const LinearOperator& a, const LinearOperator& b) {
    return !(a == b);
  }

  nlohmann::ordered_json to_json() const;

 private:
  int domain_;
  int codomain_;
  std::map<Mask, TensorVector> columns_;
};

LinearOperator op_compose(const LinearOperator& a, const LinearOperator& b);
LinearOperator op_add(const LinearOperator& a, const LinearOperator& b);
LinearOperator op_sub(const LinearOperator& a, const LinearOperator& b);
LinearOperator operator*(const LaurentPoly& c, LinearOperator a);

// id_before (x) A (x) id_after.
LinearOperator slot_extend(const LinearOperator& a, int before, int after);

// A acting at slots i..i+span-1 of an n-slot boundary, span the larger of
// A's arities; n is the larger boundary count of the extended operator.
LinearOperator op_slot_extend(const LinearOperator& a, int n, int i);

struct LineBundleIndex {
  std::vector<int> powers;  // slot s power at position s-1
  int arity() const { return static_cast<int>(powers.size()); }
};

// q^(-sum s*i_s) v_I for powers i_s in {0,1}.
TensorVector from_line_bundle(const LineBundleIndex& idx);

// Coefficients in the basis from_line_bundle ranges over; exact inverse.
std::map<std::vector<int>, LaurentPoly> to_line_bundle_coeffs(
    const TensorVector& v);

}  // namespace annular
