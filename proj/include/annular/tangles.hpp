#pragma once

#include <string>
#include <vector>

#include "annular/laurent.hpp"

namespace annular {

enum class GenKind { Cup, Cap, Cross, Twist, Rot, RotInv, Wind };

// One elementary factor. n is the strand count at the larger boundary,
// i the position, sign the crossing/twist flavor (1 or 2) where it applies.
struct Generator {
  GenKind kind;
  int n = 0;
  int i = 0;
  int sign = 0;

  static Generator cup(int n, int i);    // g_n^i : n-2 -> n
  static Generator cap(int n, int i);    // f_n^i : n -> n-2
  static Generator cross(int n, int i, int sign);  // t_n^i(sign) : n -> n
  static Generator twist(int n, int i, int sign);  // w_n^i(sign) : n -> n
  static Generator rot(int n);                     // r_n
  static Generator rot_inv(int n);                 // r'_n
  static Generator wind(int n, int i);             // s_n^i

  int domain_arity() const;
  int codomain_arity() const;
  std::string str() const;

  friend bool operator==(const Generator& a, const Generator& b) {
    return a.kind == b.kind && a.n == b.n && a.i == b.i && a.sign == b.sign;
  }
};

// Composable word of generators. factors() lists them composition-order:
// the front factor is applied last, the back factor first.
class TangleWord {
 public:
  explicit TangleWord(int arity = 0);  // identity word on `arity` strands
  static TangleWord of(std::vector<Generator> factors);
  static TangleWord single(const Generator& g);

  int domain_arity() const { return domain_; }
  int codomain_arity() const { return codomain_; }
  const std::vector<Generator>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }

  // Whitespace-separated tokens, front factor first:
  // "f(4,1) t(4,2,1) g(4,1)". The identity word prints as "".
  std::string str() const;
  static TangleWord parse(const std::string& text);

  friend bool operator==(const TangleWord& a, const TangleWord& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ &&
           a.factors_ == b.factors_;
  }

 private:
  std::vector<Generator> factors_;
  int domain_;
  int codomain_;
};

// outer after inner; boundary arities must chain.
TangleWord word_compose(const TangleWord& outer, const TangleWord& inner);

// s_n^n * t_n^(n-1)(eps) * ... * t_n^1(eps); just s_1^1 when n = 1.
TangleWord rot_as_word(int n, int eps);

// One checkable relation instance. reading is "literal" when the words
// match the printed relation exactly, "corrected" when a misprint had to
// be repaired to make the sides composable (details in relation_notes).
struct RelationInstance {
  int id;
  nlohmann::ordered_json params;
  std::string reading;
  TangleWord lhs;
  TangleWord rhs;
};

// All arity-valid instances of relations 1..20 with every strand count
// <= n_max. Printed forms that cannot be instantiated as words at all are
// described in relation_notes() instead.
std::vector<RelationInstance> instantiate_relations(int n_max);

struct RelationNote {
  int id;
  std::string note;
};
std::vector<RelationNote> relation_notes();

}  // namespace annular
