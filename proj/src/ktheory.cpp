#include "annular/ktheory.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace annular {

namespace {

// v_0 and v_1 coefficients as a one-slot vector.
TensorVector slot_vector(const LaurentPoly& at0, const LaurentPoly& at1) {
  TensorVector v(1);
  v.add_term(0, at0);
  v.add_term(1, at1);
  return v;
}

}  // namespace

TensorVector base_class(int m) {
  if (m < 1) throw std::invalid_argument("base class needs m >= 1");
  TensorVector out = TensorVector::scalar(LaurentPoly(1));
  for (int i = 1; i <= m; ++i)
    out = tv_tensor(out, slot_vector(LaurentPoly(1),
                                     LaurentPoly::monomial(-1, -i)));
  return out;
}

TensorVector good_class_oracle(const Matching& beta, const Evaluator& ev) {
  return ev.psi_word(good_to_word(beta)).apply(base_class(beta.shape.m));
}

GoodClassFormula good_class_formula(const Matching& beta) {
  if (!is_good(beta))
    throw std::invalid_argument("matching is not good: " + beta.str());
  MatchingCombinatorics comb = combinatorics(beta);
  int m = beta.shape.m;
  int N = beta.shape.outer();
  GoodClassFormula out{TensorVector(N), TensorVector(N), {}};
  LaurentPoly scale = LaurentPoly::q(-beta.shape.n);
  for (size_t t = 0; t < comb.t_set.size(); ++t) {
    Mask base = 0;
    for (int p : comb.t_set[t]) base |= Mask(1) << (p - 1);
    for (int jmask = 0; jmask < (1 << m); ++jmask) {
      Mask mask = base;
      LaurentPoly corrected = comb.sgn[t] * scale;
      LaurentPoly literal = corrected;
      for (int i = 1; i <= m; ++i) {
        if (!(jmask >> (i - 1) & 1)) continue;
        mask |= Mask(1) << (comb.d_set[i - 1] - 1);
        corrected *= LaurentPoly::monomial(-1, -i);
        literal *= LaurentPoly::monomial(-1, i);
      }
      out.corrected.add_term(mask, corrected);
      out.literal.add_term(mask, literal);
    }
  }
  TensorVector diff = out.corrected - out.literal;
  for (const auto& [mask, c] : diff.terms()) out.differing.push_back(mask);
  return out;
}

TensorVector line_bundle_class(const LineBundleIndex& idx) {
  TensorVector out = TensorVector::scalar(LaurentPoly(1));
  for (int s = 1; s <= idx.arity(); ++s) {
    int l = idx.powers[s - 1];
    out = tv_tensor(out,
                    slot_vector(LaurentPoly::monomial(1 - l, 2 * l),
                                LaurentPoly::monomial(l, 2 * l - 2 - s)));
  }
  return out;
}

ClassResult crossingless_class(const Matching& alpha, const Evaluator& ev) {
  ClassResult res;
  res.matching = alpha;
  res.decomposition = decompose(alpha);
  TensorVector v = good_class_oracle(res.decomposition.beta, ev);
  if (res.decomposition.k > 0) {
    const LinearOperator& rot = ev.rot_matrix(alpha.shape.outer());
    for (int t = 0; t < res.decomposition.k; ++t) v = rot.apply(v);
  }
  res.class_v = std::move(v);
  res.class_lambda = to_line_bundle_coeffs(res.class_v);
  res.ledger.t1_table_corrected = ev.conventions().t1_corrected;
  res.ledger.rot_chain_sign = ev.conventions().rot_chain_sign;
  return res;
}

nlohmann::ordered_json class_result_json(const ClassResult& r) {
  nlohmann::ordered_json j;
  j["matching"] = r.matching.to_json();
  j["k"] = r.decomposition.k;
  j["class_v"] = r.class_v.to_json();
  auto lambda = nlohmann::ordered_json::array();
  for (const auto& [powers, coeff] : r.class_lambda) {
    nlohmann::ordered_json entry;
    entry["powers"] = powers;
    entry["coeff"] = coeffs_json(coeff);
    lambda.push_back(std::move(entry));
  }
  j["class_lambda"] = std::move(lambda);
  j["ledger"] = r.ledger.to_json();
  return j;
}

std::string class_result_csv(const ClassResult& r) {
  int N = r.class_v.arity();
  std::vector<std::pair<std::string, std::string>> rows;
  rows.reserve(r.class_v.terms().size());
  for (const auto& [mask, coeff] : r.class_v.terms())
    rows.emplace_back(TensorVector::label(mask, N), coeff.str());
  std::sort(rows.begin(), rows.end());
  std::string out = "matching,basis,coeff\n";
  for (const auto& [label, coeff] : rows)
    out += "\"" + r.matching.str() + "\"," + label + "," + coeff + "\n";
  return out;
}

}  // namespace annular
