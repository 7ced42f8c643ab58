#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace annular {

using Int = boost::multiprecision::cpp_int;

// Element of Z[q, q^-1].
// Invariant: terms_ never holds a zero coefficient.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long c);
  explicit LaurentPoly(const Int& c);

  static LaurentPoly monomial(Int coeff, int exp);
  static LaurentPoly q(int exp = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  // Single term as (coeff, exp); nullopt when zero or not a monomial.
  std::optional<std::pair<Int, int>> as_monomial() const;

  Int coeff(int exp) const;
  int min_exp() const;  // requires !is_zero()
  int max_exp() const;  // requires !is_zero()

  const std::map<int, Int>& terms() const { return terms_; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }

  // Human-readable form, exponents descending: "2*q^-2 - q^-4".
  std::string str() const;

  // Inverse of str(); accepts extra whitespace between tokens.
  // Throws ParseError with a byte offset on malformed input.
  static LaurentPoly parse(const std::string& text);

 private:
  std::map<int, Int> terms_;
  void add_term(int exp, const Int& c);
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b);

LaurentPoly pow(const LaurentPoly& base, unsigned n);

// m such that a == m * b, when a single-term m exists.
std::optional<LaurentPoly> monomial_ratio(const LaurentPoly& a,
                                          const LaurentPoly& b);

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string& msg, size_t at);
};

// [[exp, coeff], ...], exponents ascending. Coefficients that fit in 64 bits
// are emitted as JSON numbers, anything larger as a decimal string.
nlohmann::ordered_json coeffs_json(const LaurentPoly& p);

}  // namespace annular
