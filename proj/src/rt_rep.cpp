#include "annular/rt_rep.hpp"

#include <bit>
#include <optional>
#include <stdexcept>
#include <utility>

namespace annular {

namespace {

LaurentPoly qp(int e) { return LaurentPoly::q(e); }

LaurentPoly one() { return LaurentPoly(1); }

}  // namespace

Evaluator::Evaluator(Conventions conv) : conv_(conv) {
  if (conv_.rot_chain_sign != 1 && conv_.rot_chain_sign != 2)
    throw std::invalid_argument("rotation chain flavor must be 1 or 2");

  TensorVector cup_img(2);
  cup_img.add_term(1, qp(-1));  // v_1 ⊗ v_0
  cup_img.add_term(2, -one());  // v_0 ⊗ v_1
  cup_.set_column(0, cup_img);

  cap_.set_column(2, TensorVector::scalar(qp(1)));
  cap_.set_column(1, TensorVector::scalar(-one()));

  cross_[0] = cross_table(1);
  cross_[1] = cross_table(2);

  // Twist scalars from the Reidemeister-1 closure f_3^1 t_3^2(sign) g_3^1,
  // which must act on V as a scalar.
  for (int sign : {1, 2}) {
    LinearOperator closure = op_compose(
        op_slot_extend(cap_, 3, 1),
        op_compose(op_slot_extend(cross_[sign - 1], 3, 2),
                   op_slot_extend(cup_, 3, 1)));
    LaurentPoly c = closure.column(0).coeff(0);
    LinearOperator scaled = LinearOperator::identity(1);
    scaled *= c;
    if (closure != scaled)
      throw std::logic_error("Reidemeister-1 closure is not scalar");
    twist_[sign - 1] = c;
  }
}

LinearOperator Evaluator::cross_table(int sign) const {
  LinearOperator gf = op_compose(cup_, cap_);
  LinearOperator t =
      op_add(LinearOperator::identity(2), qp(sign == 1 ? 1 : -1) * gf);
  if (sign == 1 && !conv_.t1_corrected) {
    TensorVector img(2);
    img.add_term(2, one());  // v_1 ⊗ v_0 ↦ v_0 ⊗ v_1, dropping the q
    t.set_column(1, img);
  }
  return t;
}

LinearOperator Evaluator::wind_table(int n) const {
  LinearOperator m(1, 1);
  TensorVector on0(1);
  on0.add_term(0, LaurentPoly(2) * qp(-2));
  on0.add_term(1, -qp(-4 - n));
  m.set_column(0, on0);
  TensorVector on1(1);
  on1.add_term(0, qp(n));
  m.set_column(1, on1);
  return m;
}

LinearOperator Evaluator::wind_inv_table(int n) const {
  LinearOperator m(1, 1);
  TensorVector on0(1);
  on0.add_term(1, qp(-n));
  m.set_column(0, on0);
  TensorVector on1(1);
  on1.add_term(0, -qp(n + 4));
  on1.add_term(1, LaurentPoly(2) * qp(2));
  m.set_column(1, on1);
  return m;
}

LinearOperator Evaluator::psi_generator(const Generator& g) const {
  switch (g.kind) {
    case GenKind::Cup:
      return op_slot_extend(cup_, g.n, g.i);
    case GenKind::Cap:
      return op_slot_extend(cap_, g.n, g.i);
    case GenKind::Cross:
      return op_slot_extend(cross_[g.sign - 1], g.n, g.i);
    case GenKind::Twist: {
      LinearOperator t = LinearOperator::identity(g.n);
      t *= twist_[g.sign - 1];
      return t;
    }
    case GenKind::Wind:
      if (g.i != g.n)
        throw std::invalid_argument(
            g.str() + ": only the last-position winding strand s(n,n) "
                      "is supported");
      return op_slot_extend(wind_table(g.n), g.n, g.n);
    case GenKind::Rot:
      return rot_matrix(g.n);
    case GenKind::RotInv:
      return rot_inv_matrix(g.n);
  }
  throw std::logic_error("unhandled generator kind");
}

LinearOperator Evaluator::psi_word(const TangleWord& w) const {
  LinearOperator acc = LinearOperator::identity(w.codomain_arity());
  for (const Generator& g : w.factors()) acc = op_compose(acc, psi_generator(g));
  return acc;
}

const LaurentPoly& Evaluator::twist_scalar(int sign) const {
  if (sign != 1 && sign != 2)
    throw std::invalid_argument("twist flavor must be 1 or 2");
  return twist_[sign - 1];
}

const LinearOperator& Evaluator::rot_matrix(int k) const {
  auto it = rot_cache_.find(k);
  if (it == rot_cache_.end())
    it = rot_cache_
             .emplace(k, psi_word(rot_as_word(k, conv_.rot_chain_sign)))
             .first;
  return it->second;
}

const LinearOperator& Evaluator::rot_inv_matrix(int k) const {
  if (k < 1) throw std::invalid_argument("rotation needs k >= 1");
  auto it = rot_inv_cache_.find(k);
  if (it == rot_inv_cache_.end()) {
    LinearOperator acc = op_slot_extend(wind_inv_table(k), k, k);
    int swapped = 3 - conv_.rot_chain_sign;
    for (int i = k - 1; i >= 1; --i)
      acc = op_compose(op_slot_extend(cross_[swapped - 1], k, i), acc);
    it = rot_inv_cache_.emplace(k, std::move(acc)).first;
  }
  return it->second;
}

LinearOperator rotation_closed_form(int k) {
  if (k < 1) throw std::invalid_argument("rotation needs k >= 1");
  LinearOperator out(k, k);
  for (Mask m = 0; m < (Mask(1) << k); ++m) {
    TensorVector img(k);
    Mask shifted = m >> 1;
    if (m & 1) {
      img.add_term(shifted, qp(k));
    } else {
      int ones = std::popcount(m);
      for (int j = 2; j <= k; ++j) {
        if (!((m >> (j - 1)) & 1)) continue;
        int before = std::popcount(m & ((Mask(1) << (j - 1)) - 1));
        LaurentPoly c = (one() - qp(2)) * qp(before + k);
        img.add_term(shifted & ~(Mask(1) << (j - 2)), c);
      }
      img.add_term(shifted, LaurentPoly(2) * qp(ones - 2));
      img.add_term(shifted | (Mask(1) << (k - 1)), -qp(ones - 4 - k));
    }
    out.set_column(m, img);
  }
  return out;
}

std::vector<RotationDiff> check_rotation_closed_form(const Evaluator& ev,
                                                     int k) {
  const LinearOperator& composed = ev.rot_matrix(k);
  LinearOperator closed = rotation_closed_form(k);
  std::vector<RotationDiff> out;
  for (Mask m = 0; m < (Mask(1) << k); ++m) {
    TensorVector a = composed.column(m);
    TensorVector b = closed.column(m);
    if (!(a == b)) out.push_back({m, a, b});
  }
  return out;
}

bool ConventionLedger::all_hold() const {
  for (const LedgerEntry& e : relations)
    if (!e.holds) return false;
  return true;
}

bool ConventionLedger::documented_failure(const LedgerEntry& e) const {
  if (e.id == 11 || e.id == 13 || e.id == 14) return true;
  if (e.id == 15) {
    int sign = rot_chain_sign;
    if (e.params.contains("rot_chain_sign"))
      sign = e.params["rot_chain_sign"].get<int>();
    return sign == 2;
  }
  return false;
}

int ConventionLedger::status_code() const {
  bool any_failure = false;
  for (const LedgerEntry& e : relations) {
    if (e.holds) continue;
    if (!documented_failure(e)) return 1;
    any_failure = true;
  }
  return any_failure ? 2 : 0;
}

nlohmann::ordered_json ConventionLedger::to_json() const {
  nlohmann::ordered_json j;
  j["t1_table_corrected"] = t1_table_corrected;
  j["rot_chain_sign"] = rot_chain_sign;
  nlohmann::ordered_json rels = nlohmann::ordered_json::array();
  for (const LedgerEntry& e : relations) {
    nlohmann::ordered_json r;
    r["id"] = e.id;
    r["params"] = e.params;
    r["holds"] = e.holds;
    if (e.holds)
      r["counterexample"] = nullptr;
    else
      r["counterexample"] = e.counterexample;
    rels.push_back(std::move(r));
  }
  j["relations"] = std::move(rels);
  return j;
}

namespace {

std::string word_or_id(const TangleWord& w) {
  if (w.empty()) return "id(" + std::to_string(w.domain_arity()) + ")";
  return w.str();
}

struct GroupState {
  int instances = 0;
  bool holds = true;
  nlohmann::ordered_json fail_params;
  std::string counterexample;
};

using GroupKey = std::pair<int, std::string>;

void run_pass(const Evaluator& ev, const std::vector<RelationInstance>& rels,
              bool rot_conjugation_only, std::map<GroupKey, GroupState>& out) {
  for (const RelationInstance& r : rels) {
    if (rot_conjugation_only && (r.id < 13 || r.id > 15)) continue;
    GroupState& g = out[{r.id, r.reading}];
    ++g.instances;
    if (!g.holds) continue;  // keep the first (smallest) failing instance
    if (ev.psi_word(r.lhs) == ev.psi_word(r.rhs)) continue;
    g.holds = false;
    g.fail_params = r.params;
    g.counterexample = word_or_id(r.lhs) + " != " + word_or_id(r.rhs);
  }
}

LedgerEntry make_entry(const GroupKey& key, const GroupState& g, int n_max,
                       std::optional<int> rot_sign) {
  LedgerEntry e;
  e.id = key.first;
  nlohmann::ordered_json p;
  p["reading"] = key.second;
  if (rot_sign) p["rot_chain_sign"] = *rot_sign;
  if (g.holds) {
    p["n_max"] = n_max;
    p["instances"] = g.instances;
  } else {
    for (const auto& item : g.fail_params.items()) p[item.key()] = item.value();
  }
  e.params = std::move(p);
  e.holds = g.holds;
  e.counterexample = g.counterexample;
  return e;
}

}  // namespace

ConventionLedger verify_relations(const Evaluator& ev, int n_max) {
  std::vector<RelationInstance> rels = instantiate_relations(n_max);

  ConventionLedger ledger;
  ledger.t1_table_corrected = ev.conventions().t1_corrected;
  ledger.rot_chain_sign = ev.conventions().rot_chain_sign;

  std::map<GroupKey, GroupState> main_groups;
  run_pass(ev, rels, false, main_groups);

  // The rotation-conjugation relations are checked under both chain flavors.
  Conventions alt = ev.conventions();
  alt.rot_chain_sign = 3 - alt.rot_chain_sign;
  Evaluator ev_alt(alt);
  std::map<GroupKey, GroupState> alt_groups;
  run_pass(ev_alt, rels, true, alt_groups);

  for (int id = 1; id <= 20; ++id) {
    for (const auto& [key, group] : main_groups) {
      if (key.first != id) continue;
      std::optional<int> sign;
      if (id >= 13 && id <= 15) sign = ev.conventions().rot_chain_sign;
      ledger.relations.push_back(make_entry(key, group, n_max, sign));
    }
    for (const auto& [key, group] : alt_groups) {
      if (key.first != id) continue;
      ledger.relations.push_back(
          make_entry(key, group, n_max, alt.rot_chain_sign));
    }
  }
  return ledger;
}

}  // namespace annular
