#include "annular/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace annular {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// Slot digits read slot-1-first as a binary string; used to order output.
Mask display_key(Mask mask, int arity) {
  Mask key = 0;
  for (int s = 1; s <= arity; ++s)
    if (mask & (Mask(1) << (s - 1))) key |= Mask(1) << (arity - s);
  return key;
}

std::vector<Mask> display_order(const std::map<Mask, LaurentPoly>& terms,
                                int arity) {
  std::vector<Mask> order;
  order.reserve(terms.size());
  for (const auto& [m, c] : terms) order.push_back(m);
  std::sort(order.begin(), order.end(), [arity](Mask a, Mask b) {
    return display_key(a, arity) < display_key(b, arity);
  });
  return order;
}

}  // namespace

TensorVector::TensorVector(int arity) : arity_(arity) {
  require(arity >= 0, "tensor arity must be nonnegative");
}

TensorVector TensorVector::basis(int arity, Mask mask) {
  TensorVector v(arity);
  v.add_term(mask, LaurentPoly(1));
  return v;
}

TensorVector TensorVector::scalar(const LaurentPoly& value) {
  TensorVector v(0);
  v.add_term(0, value);
  return v;
}

LaurentPoly TensorVector::coeff(Mask mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void TensorVector::add_term(Mask mask, const LaurentPoly& c) {
  require(arity_ >= 32 || mask < (Mask(1) << arity_),
          "basis mask out of range for arity " + std::to_string(arity_));
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(mask, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
  require(arity_ == o.arity_, "tensor arity mismatch: " +
                                  std::to_string(arity_) + " vs " +
                                  std::to_string(o.arity_));
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o) {
  require(arity_ == o.arity_, "tensor arity mismatch: " +
                                  std::to_string(arity_) + " vs " +
                                  std::to_string(o.arity_));
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

TensorVector& TensorVector::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }
TensorVector operator*(const LaurentPoly& c, TensorVector v) { return v *= c; }

TensorVector tv_tensor(const TensorVector& a, const TensorVector& b) {
  TensorVector out(a.arity() + b.arity());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      out.add_term(ma | (mb << a.arity()), ca * cb);
  return out;
}

std::vector<int> TensorVector::index_of(Mask mask, int arity) {
  std::vector<int> digits(arity);
  for (int s = 1; s <= arity; ++s)
    digits[s - 1] = (mask >> (s - 1)) & 1u;
  return digits;
}

std::string TensorVector::label(Mask mask, int arity) {
  std::string out = "v_";
  for (int s = 1; s <= arity; ++s)
    out += ((mask >> (s - 1)) & 1u) ? '1' : '0';
  return out;
}

std::string TensorVector::str() const {
  if (arity_ == 0) return coeff(0).str();
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (Mask m : display_order(terms_, arity_)) {
    const LaurentPoly& c = terms_.at(m);
    auto mono = c.as_monomial();
    bool neg = mono && mono->first < 0;
    std::string body;
    if (mono) {
      Int mag = neg ? Int(-mono->first) : mono->first;
      if (!(mag == 1 && mono->second == 0))
        body = LaurentPoly::monomial(mag, mono->second).str() + " ";
    } else {
      body = "(" + c.str() + ") ";
    }
    body += label(m, arity_);
    if (first) {
      out += neg ? "-" : "";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    out += body;
  }
  return out;
}

nlohmann::ordered_json TensorVector::to_json() const {
  nlohmann::ordered_json js;
  js["arity"] = arity_;
  auto terms = nlohmann::ordered_json::array();
  for (Mask m : display_order(terms_, arity_)) {
    nlohmann::ordered_json term;
    term["index"] = index_of(m, arity_);
    term["coeff"] = coeffs_json(terms_.at(m));
    terms.push_back(std::move(term));
  }
  js["terms"] = std::move(terms);
  return js;
}

LinearOperator::LinearOperator(int domain_arity, int codomain_arity)
    : domain_(domain_arity), codomain_(codomain_arity) {
  require(domain_ >= 0 && codomain_ >= 0, "operator arity must be nonnegative");
}

LinearOperator LinearOperator::identity(int arity) {
  LinearOperator op(arity, arity);
  for (Mask m = 0; m < (Mask(1) << arity); ++m)
    op.columns_.emplace(m, TensorVector::basis(arity, m));
  return op;
}

void LinearOperator::set_column(Mask m, TensorVector image) {
  require(domain_ >= 32 || m < (Mask(1) << domain_),
          "column mask out of range for domain arity " +
              std::to_string(domain_));
  require(image.arity() == codomain_,
          "column arity " + std::to_string(image.arity()) +
              " does not match codomain arity " + std::to_string(codomain_));
  if (image.is_zero())
    columns_.erase(m);
  else
    columns_[m] = std::move(image);
}

TensorVector LinearOperator::column(Mask m) const {
  auto it = columns_.find(m);
  return it == columns_.end() ? TensorVector(codomain_) : it->second;
}

TensorVector LinearOperator::apply(const TensorVector& v) const {
  require(v.arity() == domain_,
          "operator domain arity " + std::to_string(domain_) +
              " does not match vector arity " + std::to_string(v.arity()));
  TensorVector out(codomain_);
  for (const auto& [m, c] : v.terms()) {
    auto it = columns_.find(m);
    if (it == columns_.end()) continue;
    for (const auto& [mi, ci] : it->second.terms()) out.add_term(mi, c * ci);
  }
  return out;
}

LinearOperator& LinearOperator::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    columns_.clear();
    return *this;
  }
  for (auto& [m, col] : columns_) col *= c;
  return *this;
}

bool operator==(const LinearOperator& a, const LinearOperator& b) {
  if (a.domain_ != b.domain_ || a.codomain_ != b.codomain_) return false;
  // Stored columns are never zero, so sparse maps compare directly.
  return a.columns_ == b.columns_;
}

nlohmann::ordered_json LinearOperator::to_json() const {
  nlohmann::ordered_json js;
  js["domain_arity"] = domain_;
  js["codomain_arity"] = codomain_;
  auto cols = nlohmann::ordered_json::array();
  for (const auto& [m, col] : columns_) {
    nlohmann::ordered_json entry;
    entry["index"] = TensorVector::index_of(m, domain_);
    entry["image"] = col.to_json();
    cols.push_back(std::move(entry));
  }
  js["columns"] = std::move(cols);
  return js;
}

LinearOperator op_compose(const LinearOperator& a, const LinearOperator& b) {
  require(a.domain_arity() == b.codomain_arity(),
          "composition arity mismatch: inner codomain " +
              std::to_string(b.codomain_arity()) + " vs outer domain " +
              std::to_string(a.domain_arity()));
  LinearOperator out(b.domain_arity(), a.codomain_arity());
  for (const auto& [m, col] : b.columns()) out.set_column(m, a.apply(col));
  return out;
}

LinearOperator op_add(const LinearOperator& a, const LinearOperator& b) {
  require(a.domain_arity() == b.domain_arity() &&
              a.codomain_arity() == b.codomain_arity(),
          "operator sum arity mismatch");
  LinearOperator out = a;
  for (const auto& [m, col] : b.columns())
    out.set_column(m, out.column(m) + col);
  return out;
}

LinearOperator op_sub(const LinearOperator& a, const LinearOperator& b) {
  return op_add(a, LaurentPoly(-1) * b);
}

LinearOperator operator*(const LaurentPoly& c, LinearOperator a) {
  return a *= c;
}

LinearOperator slot_extend(const LinearOperator& a, int before, int after) {
  require(before >= 0 && after >= 0, "slot padding must be nonnegative");
  const int dom = before + a.domain_arity() + after;
  const int cod = before + a.codomain_arity() + after;
  LinearOperator out(dom, cod);
  const Mask before_count = Mask(1) << before;
  const Mask after_count = Mask(1) << after;
  for (const auto& [mid, col] : a.columns()) {
    for (Mask lo = 0; lo < before_count; ++lo) {
      for (Mask hi = 0; hi < after_count; ++hi) {
        TensorVector image(cod);
        for (const auto& [mi, c] : col.terms())
          image.add_term(lo | (mi << before) |
                             (hi << (before + a.codomain_arity())),
                         c);
        out.set_column(lo | (mid << before) |
                           (hi << (before + a.domain_arity())),
                       std::move(image));
      }
    }
  }
  return out;
}

LinearOperator op_slot_extend(const LinearOperator& a, int n, int i) {
  const int span = std::max(a.domain_arity(), a.codomain_arity());
  require(i >= 1 && i + span - 1 <= n,
          "slot position " + std::to_string(i) + " does not fit arity " +
              std::to_string(n));
  return slot_extend(a, i - 1, n - i + 1 - span);
}

TensorVector from_line_bundle(const LineBundleIndex& idx) {
  Mask mask = 0;
  int weight = 0;
  for (int s = 1; s <= idx.arity(); ++s) {
    int p = idx.powers[s - 1];
    require(p == 0 || p == 1, "line bundle basis power must be 0 or 1");
    if (p == 1) {
      mask |= Mask(1) << (s - 1);
      weight += s;
    }
  }
  TensorVector v(idx.arity());
  v.add_term(mask, LaurentPoly::q(-weight));
  return v;
}

std::map<std::vector<int>, LaurentPoly> to_line_bundle_coeffs(
    const TensorVector& v) {
  std::map<std::vector<int>, LaurentPoly> out;
  for (const auto& [m, c] : v.terms()) {
    int weight = 0;
    for (int s = 1; s <= v.arity(); ++s)
      if (m & (Mask(1) << (s - 1))) weight += s;
    out[TensorVector::index_of(m, v.arity())] = c * LaurentPoly::q(weight);
  }
  return out;
}

}  // namespace annular
