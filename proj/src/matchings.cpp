#include "annular/matchings.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <stdexcept>

namespace annular {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

std::string pair_str(const std::pair<int, int>& c) {
  return "[" + std::to_string(c.first) + "," + std::to_string(c.second) + "]";
}

std::string cups_str(const std::vector<std::pair<int, int>>& cups) {
  std::string out = "[";
  for (size_t i = 0; i < cups.size(); ++i) {
    if (i) out += ",";
    out += pair_str(cups[i]);
  }
  return out + "]";
}

void canonicalize(std::vector<std::pair<int, int>>& cups) {
  for (auto& c : cups)
    if (c.first > c.second) std::swap(c.first, c.second);
  std::sort(cups.begin(), cups.end());
}

// Canonicalizes cups, fills through, and returns an error message when the
// pair set is not an annular crossingless matching. The test: repeatedly
// delete cups whose endpoints are circularly adjacent among the surviving
// points. Deleting one adjacent cup never separates another cup's
// endpoints, so a greedy sweep is exhaustive.
std::string check(const MatchingShape& shape,
                  std::vector<std::pair<int, int>>& cups,
                  std::vector<int>& through) {
  if (shape.m < 1) return "need at least one strand (m >= 1)";
  if (shape.n < 0) return "negative cup count";
  if (static_cast<int>(cups.size()) != shape.n)
    return "expected " + std::to_string(shape.n) + " cups, got " +
           std::to_string(cups.size());
  int N = shape.outer();
  std::vector<bool> used(N + 1, false);
  for (const auto& c : cups) {
    for (int p : {c.first, c.second}) {
      if (p < 1 || p > N)
        return "point " + std::to_string(p) + " out of range 1.." +
               std::to_string(N);
      if (used[p]) return "point " + std::to_string(p) + " used twice";
      used[p] = true;
    }
  }
  canonicalize(cups);
  through.clear();
  for (int p = 1; p <= N; ++p)
    if (!used[p]) through.push_back(p);

  std::vector<bool> alive(N + 1, true);
  std::vector<bool> removed(cups.size(), false);
  auto succ = [&](int p) {
    do p = p % N + 1;
    while (!alive[p]);
    return p;
  };
  size_t left = cups.size();
  bool progress = true;
  while (left > 0 && progress) {
    progress = false;
    for (size_t c = 0; c < cups.size(); ++c) {
      if (removed[c]) continue;
      int a = cups[c].first, b = cups[c].second;
      if (succ(a) != b && succ(b) != a) continue;
      alive[a] = alive[b] = false;
      removed[c] = true;
      --left;
      progress = true;
    }
  }
  if (left > 0) {
    for (size_t c = 0; c < cups.size(); ++c)
      if (!removed[c])
        return "cup " + pair_str(cups[c]) +
               " crosses another cup or traps a strand";
  }
  return "";
}

}  // namespace

Matching matching_validate(MatchingShape shape,
                           std::vector<std::pair<int, int>> cups) {
  Matching out;
  out.shape = shape;
  std::string err = check(shape, cups, out.through);
  require(err.empty(), "invalid matching m=" + std::to_string(shape.m) +
                           " n=" + std::to_string(shape.n) +
                           " cups=" + cups_str(cups) + ": " + err);
  out.cups = std::move(cups);
  return out;
}

bool matching_is_valid(MatchingShape shape,
                       std::vector<std::pair<int, int>> cups) {
  std::vector<int> through;
  return check(shape, cups, through).empty();
}

std::string Matching::str() const {
  return "m=" + std::to_string(shape.m) + " n=" + std::to_string(shape.n) +
         " cups=" + cups_str(cups);
}

nlohmann::ordered_json Matching::to_json() const {
  nlohmann::ordered_json j;
  j["m"] = shape.m;
  j["n"] = shape.n;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : cups) arr.push_back({c.first, c.second});
  j["cups"] = std::move(arr);
  return j;
}

Matching Matching::from_json(const nlohmann::ordered_json& j) {
  require(j.contains("m") && j.contains("n") && j.contains("cups"),
          "matching JSON needs keys m, n, cups");
  std::vector<std::pair<int, int>> cups;
  for (const auto& c : j.at("cups")) {
    require(c.is_array() && c.size() == 2, "each cup must be a pair");
    cups.emplace_back(c[0].get<int>(), c[1].get<int>());
  }
  return matching_validate({j.at("m").get<int>(), j.at("n").get<int>()},
                           std::move(cups));
}

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  void expect(const std::string& tok) {
    skip_ws();
    if (s.compare(pos, tok.size(), tok) != 0)
      throw std::invalid_argument("expected '" + tok + "' at position " +
                                  std::to_string(pos) + " in matching text");
    pos += tok.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  int integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start)
      throw std::invalid_argument("expected integer at position " +
                                  std::to_string(pos) + " in matching text");
    return std::stoi(s.substr(start, pos - start));
  }
};

}  // namespace

Matching Matching::parse(const std::string& text) {
  Cursor c{text};
  c.expect("m=");
  int m = c.integer();
  c.expect("n=");
  int n = c.integer();
  c.expect("cups=");
  c.expect("[");
  std::vector<std::pair<int, int>> cups;
  if (!c.peek(']')) {
    for (;;) {
      c.expect("[");
      int a = c.integer();
      c.expect(",");
      int b = c.integer();
      c.expect("]");
      cups.emplace_back(a, b);
      if (!c.peek(',')) break;
      c.expect(",");
    }
  }
  c.expect("]");
  c.skip_ws();
  if (c.pos != text.size())
    throw std::invalid_argument("trailing input at position " +
                                std::to_string(c.pos) + " in matching text");
  return matching_validate({m, n}, std::move(cups));
}

std::vector<Matching> enumerate_matchings(int m, int n) {
  require(m >= 1, "enumeration needs m >= 1");
  require(n >= 0, "enumeration needs n >= 0");
  int N = m + 2 * n;

  // Matchings avoiding the cut are exactly the stack-buildable ones: scan
  // positions left to right, each one either starts a cup, closes the
  // innermost open cup, or (outside every cup) anchors a strand.
  std::vector<std::vector<std::pair<int, int>>> linear;
  std::vector<std::pair<int, int>> cur;
  std::vector<int> open;
  int strands = 0, started = 0;
  std::function<void(int)> scan = [&](int p) {
    if (p > N) {
      if (open.empty()) {
        auto cups = cur;
        std::sort(cups.begin(), cups.end());
        linear.push_back(std::move(cups));
      }
      return;
    }
    if (open.empty() && strands < m) {
      ++strands;
      scan(p + 1);
      --strands;
    }
    if (started < n) {
      ++started;
      open.push_back(p);
      scan(p + 1);
      open.pop_back();
      --started;
    }
    if (!open.empty()) {
      cur.emplace_back(open.back(), p);
      open.pop_back();
      scan(p + 1);
      open.push_back(cur.back().first);
      cur.pop_back();
    }
  };
  scan(1);

  std::set<std::vector<std::pair<int, int>>> seen;
  for (const auto& cups : linear) {
    for (int k = 0; k < N; ++k) {
      std::vector<std::pair<int, int>> shifted;
      shifted.reserve(cups.size());
      for (const auto& c : cups)
        shifted.emplace_back((c.first - 1 + k) % N + 1,
                             (c.second - 1 + k) % N + 1);
      canonicalize(shifted);
      seen.insert(std::move(shifted));
    }
  }
  std::vector<Matching> out;
  out.reserve(seen.size());
  for (const auto& cups : seen) out.push_back(matching_validate({m, n}, cups));
  return out;
}

MatchingCombinatorics combinatorics(const Matching& alpha) {
  MatchingCombinatorics out;
  out.c_set = alpha.cups;
  out.d_set = alpha.through;
  int n = alpha.shape.n;
  std::vector<std::pair<std::vector<int>, LaurentPoly>> ts;
  ts.reserve(size_t(1) << n);
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> S;
    S.reserve(n);
    int c = 0;
    for (int j = 0; j < n; ++j) {
      if (mask >> j & 1) {
        S.push_back(out.c_set[j].second);
        ++c;
      } else {
        S.push_back(out.c_set[j].first);
      }
    }
    std::sort(S.begin(), S.end());
    ts.emplace_back(std::move(S), pow(LaurentPoly::monomial(-1, 1), c));
  }
  std::sort(ts.begin(), ts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [S, sgn] : ts) {
    out.t_set.push_back(std::move(S));
    out.sgn.push_back(std::move(sgn));
  }
  return out;
}

bool is_good(const Matching& alpha) {
  // Valid matchings have exactly one side of each cup free of strand
  // anchors; the cup is drawable without crossing the cut ray iff that
  // side is the one between the endpoints.
  for (const auto& cup : alpha.cups)
    for (int t : alpha.through)
      if (t > cup.first && t < cup.second) return false;
  return true;
}

Matching rotate(const Matching& alpha, int shift) {
  int N = alpha.shape.outer();
  int s = (shift % N + N) % N;
  std::vector<std::pair<int, int>> cups;
  cups.reserve(alpha.cups.size());
  for (const auto& c : alpha.cups)
    cups.emplace_back((c.first - 1 + s) % N + 1, (c.second - 1 + s) % N + 1);
  return matching_validate(alpha.shape, std::move(cups));
}

RotationDecomposition decompose(const Matching& alpha) {
  int N = alpha.shape.outer();
  for (int k = 0; k < N; ++k) {
    Matching beta = rotate(alpha, k);
    if (is_good(beta)) return {k, std::move(beta)};
  }
  throw std::logic_error("no rotation of " + alpha.str() + " is good");
}

TangleWord good_to_word(const Matching& beta) {
  require(is_good(beta), "matching is not good: " + beta.str());
  std::vector<std::pair<int, int>> cups = beta.cups;
  std::vector<Generator> factors;
  int arity = beta.shape.outer();
  while (!cups.empty()) {
    // The minimal-span cup is adjacent, so this always finds one; taking
    // the first keeps the word deterministic (leftmost adjacent cup).
    size_t pick = cups.size();
    for (size_t c = 0; c < cups.size(); ++c) {
      if (cups[c].second == cups[c].first + 1) {
        pick = c;
        break;
      }
    }
    if (pick == cups.size())
      throw std::logic_error("no adjacent cup in " + beta.str());
    int a = cups[pick].first;
    factors.push_back(Generator::cup(arity, a));
    cups.erase(cups.begin() + pick);
    for (auto& c : cups) {
      if (c.first > a) c.first -= 2;
      if (c.second > a) c.second -= 2;
    }
    arity -= 2;
  }
  if (factors.empty()) return TangleWord(beta.shape.m);
  return TangleWord::of(std::move(factors));
}

}  // namespace annular
