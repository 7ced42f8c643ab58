#include "annular/laurent.hpp"

#include <cctype>
#include <limits>

namespace annular {

LaurentPoly::LaurentPoly(long long c) {
  if (c != 0) terms_[0] = c;
}

LaurentPoly::LaurentPoly(const Int& c) {
  if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(Int coeff, int exp) {
  LaurentPoly p;
  if (coeff != 0) p.terms_[exp] = std::move(coeff);
  return p;
}

LaurentPoly LaurentPoly::q(int exp) { return monomial(1, exp); }

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == 1;
}

std::optional<std::pair<Int, int>> LaurentPoly::as_monomial() const {
  if (terms_.size() != 1) return std::nullopt;
  return std::make_pair(terms_.begin()->second, terms_.begin()->first);
}

Int LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Int(0) : it->second;
}

int LaurentPoly::min_exp() const { return terms_.begin()->first; }
int LaurentPoly::max_exp() const { return terms_.rbegin()->first; }

void LaurentPoly::add_term(int exp, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(exp, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) out.add_term(ea + eb, ca * cb);
  terms_.swap(out.terms_);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }

LaurentPoly pow(const LaurentPoly& base, unsigned n) {
  LaurentPoly out(1);
  LaurentPoly sq = base;
  while (n) {
    if (n & 1) out *= sq;
    n >>= 1;
    if (n) sq *= sq;
  }
  return out;
}

std::optional<LaurentPoly> monomial_ratio(const LaurentPoly& a,
                                          const LaurentPoly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return LaurentPoly();
  const auto& la = *a.terms().rbegin();
  const auto& lb = *b.terms().rbegin();
  if (la.second % lb.second != 0) return std::nullopt;
  LaurentPoly m =
      LaurentPoly::monomial(la.second / lb.second, la.first - lb.first);
  if (a == m * b) return m;
  return std::nullopt;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    const bool neg = it->second < 0;
    const Int mag = neg ? Int(-it->second) : it->second;
    if (first) {
      if (neg) out += '-';
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) {
      out += mag.str();
      out += '*';
    }
    out += 'q';
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

ParseError::ParseError(const std::string& msg, size_t at)
    : std::runtime_error(msg + " at position " + std::to_string(at)),
      pos(at) {}

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }

  Int digits() {
    if (done() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw ParseError("expected digits", pos);
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    return Int(s.substr(start, pos - start));
  }

  int exponent() {
    size_t start = pos;
    bool neg = false;
    if (!done() && peek() == '-') {
      neg = true;
      ++pos;
    }
    Int d = digits();
    if (d > std::numeric_limits<int>::max())
      throw ParseError("exponent out of range", start);
    int e = static_cast<int>(d);
    return neg ? -e : e;
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
  Cursor c{text};
  LaurentPoly out;

  c.skip_ws();
  if (c.done()) throw ParseError("empty input", c.pos);

  while (true) {
    int sign = 1;
    c.skip_ws();
    if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
      if (c.peek() == '-') sign = -1;
      ++c.pos;
      c.skip_ws();
    }
    if (c.done()) throw ParseError("expected term", c.pos);

    Int coeff = 1;
    int exp = 0;
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coeff = c.digits();
      saw_coeff = true;
      c.skip_ws();
      if (!c.done() && c.peek() == '*') {
        ++c.pos;
        c.skip_ws();
        if (c.done() || c.peek() != 'q')
          throw ParseError("expected q after '*'", c.pos);
      }
    }
    if (!c.done() && c.peek() == 'q') {
      ++c.pos;
      exp = 1;
      if (!c.done() && c.peek() == '^') {
        ++c.pos;
        exp = c.exponent();
      }
    } else if (!saw_coeff) {
      throw ParseError("expected term", c.pos);
    }
    out.add_term(exp, sign * coeff);
    c.skip_ws();
    if (c.done()) return out;
    if (c.peek() != '+' && c.peek() != '-')
      throw ParseError("unexpected character", c.pos);
  }
}

nlohmann::ordered_json coeffs_json(const LaurentPoly& p) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  static const Int kMax = Int(std::numeric_limits<int64_t>::max());
  static const Int kMin = Int(std::numeric_limits<int64_t>::min());
  for (const auto& [e, c] : p.terms()) {
    nlohmann::ordered_json pair = nlohmann::ordered_json::array();
    pair.push_back(e);
    if (c >= kMin && c <= kMax)
      pair.push_back(static_cast<int64_t>(c));
    else
      pair.push_back(c.str());
    arr.push_back(std::move(pair));
  }
  return arr;
}

}  // namespace annular
