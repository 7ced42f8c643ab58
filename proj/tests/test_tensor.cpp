#include <doctest.h>

#include <random>

#include "annular/tensor.hpp"

using annular::LaurentPoly;
using annular::LinearOperator;
using annular::Mask;
using annular::TensorVector;

namespace {

LaurentPoly q(int e) { return LaurentPoly::q(e); }

// Cup operator on two slots: 1 -> q^-1 v_10 - v_01.
LinearOperator cup2() {
  LinearOperator g(0, 2);
  TensorVector img(2);
  img.add_term(1, q(-1));
  img.add_term(2, LaurentPoly(-1));
  g.set_column(0, img);
  return g;
}

TensorVector random_vector(std::mt19937_64& rng, int arity) {
  std::uniform_int_distribution<int> nterms(0, 4);
  std::uniform_int_distribution<int> exp(-3, 3);
  std::uniform_int_distribution<int> coeff(-4, 4);
  TensorVector v(arity);
  std::uniform_int_distribution<Mask> mask(0, (Mask(1) << arity) - 1);
  int n = nterms(rng);
  for (int i = 0; i < n; ++i)
    v.add_term(mask(rng), LaurentPoly::monomial(coeff(rng), exp(rng)));
  return v;
}

LinearOperator random_operator(std::mt19937_64& rng, int dom, int cod) {
  LinearOperator op(dom, cod);
  for (Mask m = 0; m < (Mask(1) << dom); ++m) {
    TensorVector col = random_vector(rng, cod);
    if (!col.is_zero()) op.set_column(m, col);
  }
  return op;
}

}  // namespace

TEST_CASE("basis vectors") {
  TensorVector a = TensorVector::basis(2, 1);  // v_1 (x) v_0
  CHECK(a.coeff(1) == LaurentPoly(1));
  CHECK(a.str() == "v_10");
  CHECK(TensorVector::basis(3, 2).str() == "v_010");
  CHECK(TensorVector::basis(0, 0).str() == "1");
  CHECK(TensorVector::scalar(q(2) + LaurentPoly(1)).str() == "q^2 + 1");
  CHECK_THROWS_AS(TensorVector::basis(2, 4), std::invalid_argument);
}

TEST_CASE("tensor product pinned expansion") {
  TensorVector f1(1), f2(1);
  f1.add_term(0, LaurentPoly(1));
  f1.add_term(1, -q(-1));
  f2.add_term(0, LaurentPoly(1));
  f2.add_term(1, -q(-2));
  TensorVector prod = tv_tensor(f1, f2);
  CHECK(prod.arity() == 2);
  CHECK(prod.coeff(0) == LaurentPoly(1));
  CHECK(prod.coeff(2) == -q(-2));  // v_01
  CHECK(prod.coeff(1) == -q(-1));  // v_10
  CHECK(prod.coeff(3) == q(-3));   // v_11
  CHECK(prod.str() == "v_00 - q^-2 v_01 - q^-1 v_10 + q^-3 v_11");

  CHECK(tv_tensor(prod, TensorVector::scalar(LaurentPoly(1))) == prod);
  CHECK(tv_tensor(TensorVector::scalar(LaurentPoly(1)), prod) == prod);
  TensorVector scaled = tv_tensor(q(1) * TensorVector::basis(1, 0),
                                  TensorVector::basis(1, 1));
  CHECK(scaled.coeff(2) == q(1));
}

TEST_CASE("tensor str formatting") {
  TensorVector v(1);
  v.add_term(0, LaurentPoly(1));
  v.add_term(1, -q(-1));
  CHECK(v.str() == "v_0 - q^-1 v_1");

  TensorVector w(2);
  w.add_term(0, LaurentPoly(2) - q(2));
  w.add_term(3, -LaurentPoly(1));
  CHECK(w.str() == "(-q^2 + 2) v_00 - v_11");
  CHECK(TensorVector(2).str() == "0");
  CHECK(TensorVector(0).str() == "0");
}

TEST_CASE("line bundle basis conversion") {
  annular::LineBundleIndex i10{{1, 0}};
  TensorVector v = from_line_bundle(i10);
  CHECK(v.arity() == 2);
  CHECK(v.coeff(1) == q(-1));
  CHECK(v.terms().size() == 1);

  CHECK(annular::from_line_bundle({{0, 0}}) == TensorVector::basis(2, 0));
  TensorVector v11 = annular::from_line_bundle({{1, 1}});
  CHECK(v11.coeff(3) == q(-3));
  CHECK_THROWS_AS(annular::from_line_bundle({{2, 0}}), std::invalid_argument);

  auto coeffs = to_line_bundle_coeffs(TensorVector::basis(2, 1));
  REQUIRE(coeffs.size() == 1);
  CHECK(coeffs.at({1, 0}) == q(1));

  TensorVector mix = TensorVector::basis(2, 0) + q(-3) * TensorVector::basis(2, 3);
  auto mixed = to_line_bundle_coeffs(mix);
  REQUIRE(mixed.size() == 2);
  CHECK(mixed.at({0, 0}) == LaurentPoly(1));
  CHECK(mixed.at({1, 1}) == LaurentPoly(1));
}

TEST_CASE("line bundle round trip") {
  for (int k = 1; k <= 6; ++k) {
    for (Mask m = 0; m < (Mask(1) << k); ++m) {
      annular::LineBundleIndex idx{TensorVector::index_of(m, k)};
      TensorVector v = from_line_bundle(idx);
      auto coeffs = to_line_bundle_coeffs(v);
      REQUIRE(coeffs.size() == 1);
      CHECK(coeffs.begin()->first == idx.powers);
      CHECK(coeffs.begin()->second == LaurentPoly(1));
    }
  }
}

TEST_CASE("operator apply and compose basics") {
  LinearOperator id2 = LinearOperator::identity(2);
  TensorVector v(2);
  v.add_term(1, q(3));
  v.add_term(2, LaurentPoly(-2));
  CHECK(id2.apply(v) == v);

  LinearOperator g = cup2();
  CHECK(op_compose(g, LinearOperator::identity(0)) == g);
  CHECK(op_compose(LinearOperator::identity(2), g) == g);

  CHECK_THROWS_WITH_AS(op_compose(g, cup2()),
                       doctest::Contains("inner codomain 2"),
                       std::invalid_argument);
}

TEST_CASE("slot extension pinned example") {
  LinearOperator ext = op_slot_extend(cup2(), 3, 2);
  CHECK(ext.domain_arity() == 1);
  CHECK(ext.codomain_arity() == 3);
  TensorVector img = ext.apply(TensorVector::basis(1, 0));
  CHECK(img.coeff(2) == q(-1));          // v_010
  CHECK(img.coeff(4) == LaurentPoly(-1));  // v_001
  CHECK(img.terms().size() == 2);

  // Identity away from the acted slots.
  LinearOperator ext1 = op_slot_extend(cup2(), 4, 1);
  TensorVector img1 = ext1.apply(TensorVector::basis(2, 3));
  CHECK(img1.coeff(1 | (3 << 2)) == q(-1));
  CHECK(img1.coeff(2 | (3 << 2)) == LaurentPoly(-1));

  CHECK_THROWS_AS(op_slot_extend(cup2(), 3, 3), std::invalid_argument);
}

TEST_CASE("operator algebra on random elements") {
  std::mt19937_64 rng(91);
  for (int iter = 0; iter < 40; ++iter) {
    LinearOperator a = random_operator(rng, 2, 1);
    LinearOperator b = random_operator(rng, 3, 2);
    LinearOperator c = random_operator(rng, 1, 3);
    CHECK(op_compose(op_compose(a, b), c) == op_compose(a, op_compose(b, c)));

    TensorVector v = random_vector(rng, 2);
    CHECK(op_compose(a, b).apply(random_vector(rng, 3)).arity() == 1);
    CHECK(op_add(a, a) == LaurentPoly(2) * a);
    CHECK(op_sub(a, a) == LinearOperator(2, 1));
    CHECK(a.apply(v + v) == a.apply(v) + a.apply(v));
  }
}

TEST_CASE("tensor product associativity on random elements") {
  std::mt19937_64 rng(92);
  for (int iter = 0; iter < 60; ++iter) {
    TensorVector a = random_vector(rng, 2);
    TensorVector b = random_vector(rng, 1);
    TensorVector c = random_vector(rng, 2);
    CHECK(tv_tensor(tv_tensor(a, b), c) == tv_tensor(a, tv_tensor(b, c)));
    CHECK(tv_tensor(a + a, b) == tv_tensor(a, b) + tv_tensor(a, b));
  }
}

TEST_CASE("tensor json shape") {
  TensorVector v(2);
  v.add_term(2, q(-1));
  v.add_term(1, LaurentPoly(3));
  auto js = v.to_json();
  CHECK(js["arity"] == 2);
  REQUIRE(js["terms"].size() == 2);
  CHECK(js["terms"][0]["index"] == nlohmann::ordered_json::array({0, 1}));
  CHECK(js["terms"][0]["coeff"][0][0] == -1);
  CHECK(js["terms"][1]["index"] == nlohmann::ordered_json::array({1, 0}));
  CHECK(js["terms"][1]["coeff"][0][1] == 3);
}
