#include "annular/tangles.hpp"

#include <cctype>
#include <stdexcept>

namespace annular {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

std::string gen_name(GenKind k) {
  switch (k) {
    case GenKind::Cup: return "g";
    case GenKind::Cap: return "f";
    case GenKind::Cross: return "t";
    case GenKind::Twist: return "w";
    case GenKind::Rot: return "r";
    case GenKind::RotInv: return "rinv";
    case GenKind::Wind: return "s";
  }
  return "?";
}

}  // namespace

Generator Generator::cup(int n, int i) {
  require(n >= 2 && i >= 1 && i <= n - 1,
          "g(" + std::to_string(n) + "," + std::to_string(i) +
              "): position must satisfy 1 <= i <= n-1 with n >= 2");
  return {GenKind::Cup, n, i, 0};
}

Generator Generator::cap(int n, int i) {
  require(n >= 2 && i >= 1 && i <= n - 1,
          "f(" + std::to_string(n) + "," + std::to_string(i) +
              "): position must satisfy 1 <= i <= n-1 with n >= 2");
  return {GenKind::Cap, n, i, 0};
}

Generator Generator::cross(int n, int i, int sign) {
  require(n >= 2 && i >= 1 && i <= n - 1,
          "t(" + std::to_string(n) + "," + std::to_string(i) +
              "): position must satisfy 1 <= i <= n-1 with n >= 2");
  require(sign == 1 || sign == 2, "crossing flavor must be 1 or 2");
  return {GenKind::Cross, n, i, sign};
}

Generator Generator::twist(int n, int i, int sign) {
  require(n >= 1 && i >= 1 && i <= n,
          "w(" + std::to_string(n) + "," + std::to_string(i) +
              "): position must satisfy 1 <= i <= n");
  require(sign == 1 || sign == 2, "twist flavor must be 1 or 2");
  return {GenKind::Twist, n, i, sign};
}

Generator Generator::rot(int n) {
  require(n >= 1, "r(n): n must be >= 1");
  return {GenKind::Rot, n, 0, 0};
}

Generator Generator::rot_inv(int n) {
  require(n >= 1, "rinv(n): n must be >= 1");
  return {GenKind::RotInv, n, 0, 0};
}

Generator Generator::wind(int n, int i) {
  require(n >= 1 && i >= 1 && i <= n,
          "s(" + std::to_string(n) + "," + std::to_string(i) +
              "): position must satisfy 1 <= i <= n");
  return {GenKind::Wind, n, i, 0};
}

int Generator::domain_arity() const {
  return kind == GenKind::Cup ? n - 2 : n;
}

int Generator::codomain_arity() const {
  return kind == GenKind::Cap ? n - 2 : n;
}

std::string Generator::str() const {
  std::string out = gen_name(kind) + "(" + std::to_string(n);
  if (kind != GenKind::Rot && kind != GenKind::RotInv)
    out += "," + std::to_string(i);
  if (kind == GenKind::Cross || kind == GenKind::Twist)
    out += "," + std::to_string(sign);
  return out + ")";
}

TangleWord::TangleWord(int arity) : domain_(arity), codomain_(arity) {
  require(arity >= 0, "word arity must be nonnegative");
}

TangleWord TangleWord::of(std::vector<Generator> factors) {
  require(!factors.empty(), "use TangleWord(arity) for the identity word");
  for (size_t j = 0; j + 1 < factors.size(); ++j)
    require(factors[j].domain_arity() == factors[j + 1].codomain_arity(),
            "factor boundary mismatch at " + factors[j + 1].str() + " -> " +
                factors[j].str() + ": " +
                std::to_string(factors[j + 1].codomain_arity()) + " vs " +
                std::to_string(factors[j].domain_arity()));
  TangleWord w(0);
  w.domain_ = factors.back().domain_arity();
  w.codomain_ = factors.front().codomain_arity();
  w.factors_ = std::move(factors);
  return w;
}

TangleWord TangleWord::single(const Generator& g) { return of({g}); }

std::string TangleWord::str() const {
  std::string out;
  for (const Generator& g : factors_) {
    if (!out.empty()) out += ' ';
    out += g.str();
  }
  return out;
}

TangleWord TangleWord::parse(const std::string& text) {
  std::vector<Generator> factors;
  size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos >= text.size()) break;
    size_t open = text.find('(', pos);
    require(open != std::string::npos,
            "expected '(' after generator name at position " +
                std::to_string(pos));
    std::string name = text.substr(pos, open - pos);
    size_t close = text.find(')', open);
    require(close != std::string::npos,
            "unterminated generator at position " + std::to_string(pos));
    std::vector<int> args;
    size_t a = open + 1;
    while (a < close) {
      size_t comma = text.find(',', a);
      if (comma == std::string::npos || comma > close) comma = close;
      try {
        args.push_back(std::stoi(text.substr(a, comma - a)));
      } catch (const std::exception&) {
        throw std::invalid_argument("expected integer argument at position " +
                                    std::to_string(a));
      }
      a = comma + 1;
    }
    auto want = [&](size_t count) {
      require(args.size() == count,
              name + " takes " + std::to_string(count) +
                  " arguments, got " + std::to_string(args.size()) +
                  " at position " + std::to_string(pos));
    };
    if (name == "g") {
      want(2);
      factors.push_back(Generator::cup(args[0], args[1]));
    } else if (name == "f") {
      want(2);
      factors.push_back(Generator::cap(args[0], args[1]));
    } else if (name == "t") {
      want(3);
      factors.push_back(Generator::cross(args[0], args[1], args[2]));
    } else if (name == "w") {
      want(3);
      factors.push_back(Generator::twist(args[0], args[1], args[2]));
    } else if (name == "r") {
      want(1);
      factors.push_back(Generator::rot(args[0]));
    } else if (name == "rinv") {
      want(1);
      factors.push_back(Generator::rot_inv(args[0]));
    } else if (name == "s") {
      want(2);
      factors.push_back(Generator::wind(args[0], args[1]));
    } else {
      throw std::invalid_argument("unknown generator '" + name +
                                  "' at position " + std::to_string(pos));
    }
    pos = close + 1;
  }
  require(!factors.empty(), "empty tangle word (pass an arity explicitly)");
  return TangleWord::of(std::move(factors));
}

TangleWord word_compose(const TangleWord& outer, const TangleWord& inner) {
  require(outer.domain_arity() == inner.codomain_arity(),
          "word composition mismatch: inner codomain " +
              std::to_string(inner.codomain_arity()) + " vs outer domain " +
              std::to_string(outer.domain_arity()));
  if (outer.empty()) return inner;
  if (inner.empty()) return outer;
  std::vector<Generator> factors = outer.factors();
  factors.insert(factors.end(), inner.factors().begin(),
                 inner.factors().end());
  return TangleWord::of(std::move(factors));
}

TangleWord rot_as_word(int n, int eps) {
  require(n >= 1, "rotation needs n >= 1");
  require(eps == 1 || eps == 2, "rotation chain flavor must be 1 or 2");
  std::vector<Generator> factors{Generator::wind(n, n)};
  for (int i = n - 1; i >= 1; --i)
    factors.push_back(Generator::cross(n, i, eps));
  return TangleWord::of(std::move(factors));
}

namespace {

using nlohmann::ordered_json;

void emit(std::vector<RelationInstance>& out, int id, ordered_json params,
          const std::string& reading, TangleWord lhs, TangleWord rhs) {
  require(lhs.domain_arity() == rhs.domain_arity() &&
              lhs.codomain_arity() == rhs.codomain_arity(),
          "relation " + std::to_string(id) + " sides disagree on arity");
  out.push_back({id, std::move(params), reading, std::move(lhs),
                 std::move(rhs)});
}

TangleWord W(std::vector<Generator> gens) {
  return TangleWord::of(std::move(gens));
}

}  // namespace

std::vector<RelationInstance> instantiate_relations(int n_max) {
  require(n_max >= 2, "relation instantiation needs n_max >= 2");
  std::vector<RelationInstance> out;
  auto G = Generator::cup;
  auto F = Generator::cap;
  auto T = Generator::cross;
  auto Tw = Generator::twist;
  auto R = Generator::rot;
  auto Ri = Generator::rot_inv;

  for (int n = 2; n <= n_max; ++n) {
    // (1) f_n^i g_n^(i+1) = id = f_n^(i+1) g_n^i
    for (int i = 1; i + 1 <= n - 1; ++i) {
      emit(out, 1, {{"n", n}, {"i", i}, {"form", 1}}, "literal",
           W({F(n, i), G(n, i + 1)}), TangleWord(n - 2));
      emit(out, 1, {{"n", n}, {"i", i}, {"form", 2}}, "literal",
           W({F(n, i + 1), G(n, i)}), TangleWord(n - 2));
    }

    // (2) f_n^i t_n^(i±1)(l) g_n^i = w(l); the printed right side carries
    // strand count n, which does not compose; checked against w_(n-2).
    for (int i = 1; i <= n - 1; ++i) {
      for (int dir : {+1, -1}) {
        int ti = i + dir;
        if (ti < 1 || ti > n - 1 || ti == i) continue;
        if (n - 2 < 1) continue;
        int wi = std::min(i, n - 2);
        for (int l : {1, 2}) {
          emit(out, 2, {{"n", n}, {"i", i}, {"dir", dir}, {"l", l}},
               "corrected", W({F(n, i), T(n, ti, l), G(n, i)}),
               W({Tw(n - 2, wi, l)}));
        }
      }
    }

    // (3) t(2) t(1) = id = t(1) t(2)
    for (int i = 1; i <= n - 1; ++i) {
      emit(out, 3, {{"n", n}, {"i", i}, {"form", 1}}, "literal",
           W({T(n, i, 2), T(n, i, 1)}), TangleWord(n));
      emit(out, 3, {{"n", n}, {"i", i}, {"form", 2}}, "literal",
           W({T(n, i, 1), T(n, i, 2)}), TangleWord(n));
    }

    // (4) braid relation
    for (int i = 1; i + 1 <= n - 1; ++i)
      for (int l : {1, 2})
        emit(out, 4, {{"n", n}, {"i", i}, {"l", l}}, "literal",
             W({T(n, i, l), T(n, i + 1, l), T(n, i, l)}),
             W({T(n, i + 1, l), T(n, i, l), T(n, i + 1, l)}));

    // (5) g_(n+2)^(i+k) g_n^i = g_(n+2)^i g_n^(i+k-2), disjoint cups
    if (n + 2 <= n_max)
      for (int i = 1; i <= n - 1; ++i)
        for (int k = 2; i + k - 2 <= n - 1; ++k)
          emit(out, 5, {{"n", n}, {"i", i}, {"k", k}}, "literal",
               W({G(n + 2, i + k), G(n, i)}),
               W({G(n + 2, i), G(n, i + k - 2)}));

    // (6) f_n^(i+k-2) f_(n+2)^i = f_n^i f_(n+2)^(i+k)
    if (n + 2 <= n_max)
      for (int i = 1; i <= n - 1; ++i)
        for (int k = 2; i + k - 2 <= n - 1; ++k)
          emit(out, 6, {{"n", n}, {"i", i}, {"k", k}}, "literal",
               W({F(n, i + k - 2), F(n + 2, i)}),
               W({F(n, i), F(n + 2, i + k)}));

    // (7) cup/cap far commutation, both printed forms
    if (n + 2 <= n_max)
      for (int i = 1; i <= n - 1; ++i)
        for (int k = 2; i + k - 2 <= n - 1; ++k) {
          emit(out, 7, {{"n", n}, {"i", i}, {"k", k}, {"form", 1}}, "literal",
               W({G(n, i + k - 2), F(n, i)}),
               W({F(n + 2, i), G(n + 2, i + k)}));
          emit(out, 7, {{"n", n}, {"i", i}, {"k", k}, {"form", 2}}, "literal",
               W({G(n, i), F(n, i + k - 2)}),
               W({F(n + 2, i + k), G(n + 2, i)}));
        }

    // (8) cups slide across far crossings
    if (n >= 4)
      for (int l : {1, 2}) {
        for (int i = 1; i <= n - 1; ++i)
          for (int k = 2; i + k - 2 <= n - 3; ++k)
            emit(out, 8,
                 {{"n", n}, {"i", i}, {"k", k}, {"l", l}, {"form", 1}},
                 "literal", W({G(n, i), T(n - 2, i + k - 2, l)}),
                 W({T(n, i + k, l), G(n, i)}));
        for (int i = 1; i <= n - 3; ++i)
          for (int k = 2; i + k <= n - 1; ++k)
            emit(out, 8,
                 {{"n", n}, {"i", i}, {"k", k}, {"l", l}, {"form", 2}},
                 "literal", W({G(n, i + k), T(n - 2, i, l)}),
                 W({T(n, i, l), G(n, i + k)}));
      }

    // (9) caps slide across far crossings
    if (n >= 4)
      for (int l : {1, 2}) {
        for (int i = 1; i <= n - 1; ++i)
          for (int k = 2; i + k <= n - 1 && i + k - 2 <= n - 3; ++k)
            emit(out, 9,
                 {{"n", n}, {"i", i}, {"k", k}, {"l", l}, {"form", 1}},
                 "literal", W({F(n, i), T(n, i + k, l)}),
                 W({T(n - 2, i + k - 2, l), F(n, i)}));
        for (int i = 1; i <= n - 3; ++i)
          for (int k = 2; i + k <= n - 1; ++k)
            emit(out, 9,
                 {{"n", n}, {"i", i}, {"k", k}, {"l", l}, {"form", 2}},
                 "literal", W({F(n, i + k), T(n, i, l)}),
                 W({T(n - 2, i, l), F(n, i + k)}));
      }

    // (10) far crossings commute
    for (int i = 1; i <= n - 1; ++i)
      for (int k = 2; i + k <= n - 1; ++k)
        for (int l : {1, 2})
          for (int m = 1; m <= 2; ++m)
            emit(out, 10,
                 {{"n", n}, {"i", i}, {"k", k}, {"l", l}, {"m", m}},
                 "literal", W({T(n, i, l), T(n, i + k, m)}),
                 W({T(n, i + k, m), T(n, i, l)}));

    // (11) crossing slides across an adjacent cup, flavor swapped
    for (int i = 1; i + 1 <= n - 1; ++i) {
      emit(out, 11, {{"n", n}, {"i", i}, {"form", 1}}, "literal",
           W({T(n, i, 1), G(n, i + 1)}), W({T(n, i + 1, 2), G(n, i)}));
      emit(out, 11, {{"n", n}, {"i", i}, {"form", 2}}, "literal",
           W({T(n, i, 2), G(n, i + 1)}), W({T(n, i + 1, 1), G(n, i)}));
    }

    // (12) rotation and its inverse cancel
    emit(out, 12, {{"n", n}, {"form", 1}}, "literal", W({R(n), Ri(n)}),
         TangleWord(n));
    emit(out, 12, {{"n", n}, {"form", 2}}, "literal", W({Ri(n), R(n)}),
         TangleWord(n));

    // (13) rotation conjugates caps
    for (int i = 1; i <= n - 2; ++i)
      emit(out, 13, {{"n", n}, {"i", i}, {"form", 1}}, "literal",
           W({Ri(n - 2), F(n, i), R(n)}), W({F(n, i + 1)}));
    emit(out, 13, {{"n", n}, {"form", 2}}, "literal",
         W({F(n, n - 1), R(n), R(n)}), W({F(n, 1)}));

    // (14) rotation conjugates cups
    for (int i = 1; i <= n - 2; ++i)
      emit(out, 14, {{"n", n}, {"i", i}, {"form", 1}}, "literal",
           W({Ri(n), G(n, i), R(n - 2)}), W({G(n, i + 1)}));
    emit(out, 14, {{"n", n}, {"form", 2}}, "literal",
         W({Ri(n), Ri(n), G(n, n - 1)}), W({G(n, 1)}));

    // (15) rotation conjugates crossings
    for (int l : {1, 2}) {
      for (int i = 1; i <= n - 2; ++i)
        emit(out, 15, {{"n", n}, {"i", i}, {"l", l}, {"form", 1}}, "literal",
             W({Ri(n), T(n, i, l), R(n)}), W({T(n, i + 1, l)}));
      emit(out, 15, {{"n", n}, {"l", l}, {"form", 2}}, "literal",
           W({Ri(n), Ri(n), T(n, n - 1, l), R(n), R(n)}), W({T(n, 1, l)}));
    }

    // (16) twists invert and commute
    for (int i = 1; i <= n; ++i) {
      emit(out, 16, {{"n", n}, {"i", i}, {"form", 1}}, "literal",
           W({Tw(n, i, 1), Tw(n, i, 2)}), TangleWord(n));
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        for (int l : {1, 2})
          for (int k = 1; k <= 2; ++k)
            emit(out, 16,
                 {{"n", n}, {"i", i}, {"j", j}, {"l", l}, {"k", k},
                  {"form", 2}},
                 "literal", W({Tw(n, i, l), Tw(n, j, k)}),
                 W({Tw(n, j, k), Tw(n, i, l)}));
      }
    }

    // (17) twists pass a cup; the second printed equation puts the twist on
    // the small side with strand count n, repaired to n-2.
    for (int k : {1, 2}) {
      for (int i = 1; i <= n - 1; ++i)
        emit(out, 17, {{"n", n}, {"i", i}, {"k", k}, {"form", 1}}, "literal",
             W({Tw(n, i, k), G(n, i)}), W({Tw(n, i + 1, k), G(n, i)}));
      if (n - 2 >= 1)
        for (int j = 1; j <= n - 1; ++j)
          for (int i = 1; i <= n; ++i) {
            if (i == j || i == j + 1) continue;
            int is = i > j + 1 ? i - 2 : i;
            emit(out, 17,
                 {{"n", n}, {"i", i}, {"j", j}, {"k", k}, {"form", 2}},
                 "corrected", W({Tw(n, i, k), G(n, j)}),
                 W({G(n, j), Tw(n - 2, is, k)}));
          }
    }

    // (18) twists pass a cap; the second printed equation has the same
    // small-side strand count slip, repaired the same way.
    for (int k : {1, 2}) {
      for (int i = 1; i <= n - 1; ++i)
        emit(out, 18, {{"n", n}, {"i", i}, {"k", k}, {"form", 1}}, "literal",
             W({F(n, i), Tw(n, i, k)}), W({F(n, i), Tw(n, i + 1, k)}));
      if (n - 2 >= 1)
        for (int j = 1; j <= n - 1; ++j)
          for (int i = 1; i <= n; ++i) {
            if (i == j || i == j + 1) continue;
            int is = i > j + 1 ? i - 2 : i;
            emit(out, 18,
                 {{"n", n}, {"i", i}, {"j", j}, {"k", k}, {"form", 2}},
                 "corrected", W({Tw(n - 2, is, k), F(n, j)}),
                 W({F(n, j), Tw(n, i, k)}));
          }
    }

    // (19) twists pass a crossing
    for (int k : {1, 2})
      for (int l : {1, 2}) {
        for (int i = 1; i <= n - 1; ++i)
          emit(out, 19,
               {{"n", n}, {"i", i}, {"k", k}, {"l", l}, {"form", 1}},
               "literal", W({Tw(n, i, k), T(n, i, l)}),
               W({Tw(n, i + 1, k), T(n, i, l)}));
        for (int j = 1; j <= n - 1; ++j)
          for (int i = 1; i <= n; ++i) {
            if (i == j || i == j + 1) continue;
            emit(out, 19,
                 {{"n", n}, {"i", i}, {"j", j}, {"k", k}, {"l", l},
                  {"form", 2}},
                 "literal", W({Tw(n, i, k), T(n, j, l)}),
                 W({T(n, j, l), Tw(n, i, k)}));
          }
      }

    // (20) remaining twist relations: the printed crossing/cap mix does not
    // compose, repaired to crossings throughout; plus the rotation forms,
    // which are composable as printed.
    for (int k : {1, 2}) {
      for (int l : {1, 2}) {
        for (int i = 1; i <= n - 1; ++i)
          emit(out, 20,
               {{"n", n}, {"i", i}, {"k", k}, {"l", l}, {"form", 1}},
               "corrected", W({T(n, i, l), Tw(n, i, k)}),
               W({T(n, i, l), Tw(n, i + 1, k)}));
        for (int j = 1; j <= n - 1; ++j)
          for (int i = 1; i <= n; ++i) {
            if (i == j || i == j + 1) continue;
            emit(out, 20,
                 {{"n", n}, {"i", i}, {"j", j}, {"k", k}, {"l", l},
                  {"form", 2}},
                 "corrected", W({Tw(n, i, k), T(n, j, l)}),
                 W({T(n, j, l), Tw(n, i, k)}));
          }
      }
      for (int i = 2; i <= n; ++i)
        emit(out, 20, {{"n", n}, {"i", i}, {"k", k}, {"form", 3}}, "literal",
             W({Tw(n, i, k), R(n)}), W({R(n), Tw(n, i - 1, k)}));
      for (int i = 1; i <= n - 1; ++i)
        emit(out, 20, {{"n", n}, {"i", i}, {"k", k}, {"form", 4}}, "literal",
             W({Tw(n, i, k), Ri(n)}), W({Ri(n), Tw(n, i + 1, k)}));
    }
  }
  return out;
}

std::vector<RelationNote> relation_notes() {
  return {
      {2,
       "right side is printed with strand count n but the left side closes "
       "two strands; checked against the twist on n-2 strands with the "
       "position clamped into range (twists act by position-independent "
       "scalars, so the clamp is cosmetic)"},
      {17,
       "first equation's hatted twist is read as the plain twist (the hat "
       "marks framing and is dropped throughout); second equation's right "
       "side needs strand count n-2, with the position carried across the "
       "cup (i stays i left of it, i-2 right of it)"},
      {18,
       "second equation's left side needs strand count n-2; position "
       "carried across the cap as in relation 17"},
      {20,
       "first two printed equations mix crossings with caps and their "
       "sides disagree on boundary arity; checked with crossings "
       "throughout, i.e. the pre- and post-composition analogs of "
       "relation 19. Forms 3 and 4 are the rotation commutations, "
       "composable as printed"},
  };
}

}  // namespace annular
