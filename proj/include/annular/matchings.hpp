#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "annular/laurent.hpp"
#include "annular/tangles.hpp"

namespace annular {

// Annular crossingless matchings: m strands run from the inner circle to
// the outer circle, n cups join outer points in pairs. Outer points are
// labelled 1..m+2n counterclockwise; the cut ray lies between m+2n and 1.
struct MatchingShape {
  int m = 0;
  int n = 0;
  int outer() const { return m + 2 * n; }
};

// cups is canonical: each pair (lo, hi) with lo < hi, sorted ascending.
// The arc of a cup bounds the unique side free of strand endpoints, so
// the pair set determines the diagram (this needs m >= 1).
struct Matching {
  MatchingShape shape;
  std::vector<std::pair<int, int>> cups;
  std::vector<int> through;

  std::string str() const;
  nlohmann::ordered_json to_json() const;
  static Matching parse(const std::string& text);
  static Matching from_json(const nlohmann::ordered_json& j);

  bool operator==(const Matching& o) const {
    return shape.m == o.shape.m && shape.n == o.shape.n && cups == o.cups;
  }
};

// Checks that the cups are disjoint, in range, and annular-crossingless:
// iterated removal of circularly adjacent cups must eliminate all of them.
// Throws std::invalid_argument otherwise.
Matching matching_validate(MatchingShape shape,
                           std::vector<std::pair<int, int>> cups);
bool matching_is_valid(MatchingShape shape,
                       std::vector<std::pair<int, int>> cups);

// All of Cross(m,n) in lexicographic cup-list order. Built by rotating the
// linearly buildable matchings, not by filtering pair sets, so it can be
// compared against a brute-force filter as an independent oracle.
std::vector<Matching> enumerate_matchings(int m, int n);

// Arcs, transversals, q-signs, and strand endpoints of a matching.
// t_set lists each transversal as an ascending tuple, in lexicographic
// order; sgn runs parallel to t_set with sgn_q(S) = (-q)^{c(S)}, c(S)
// counting arcs met at their maximum. d_set is ascending.
struct MatchingCombinatorics {
  std::vector<std::pair<int, int>> c_set;
  std::vector<std::vector<int>> t_set;
  std::vector<LaurentPoly> sgn;
  std::vector<int> d_set;
};
MatchingCombinatorics combinatorics(const Matching& alpha);

// A matching is good when no cup's arc crosses the cut ray; equivalently
// every cup spans the interval between its endpoints that avoids the cut,
// which is what makes it a composition of linear cup insertions.
bool is_good(const Matching& alpha);

// Relabels every point p to ((p-1+shift) mod (m+2n)) + 1.
Matching rotate(const Matching& alpha, int shift);

struct RotationDecomposition {
  int k = 0;
  Matching beta;
};

// Minimal k >= 0 such that rotating alpha by +k is good; beta is that
// rotation. k = 0 exactly when alpha is already good.
RotationDecomposition decompose(const Matching& alpha);

// Expresses a good matching as a word of cup insertions with domain m and
// codomain m+2n, stripping the leftmost adjacent cup first so the word is
// deterministic. Disjoint insertions commute, so any valid order yields
// the same operator.
TangleWord good_to_word(const Matching& beta);

}  // namespace annular
