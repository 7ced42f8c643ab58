// Acceptance gate for the whole artifact. Each criterion prints one
// [PASS]/[FAIL] line with detail lines under it; the exit code is the
// number of failing criteria. Failures here are measured engine results,
// reported as-is (see README, "Documented discrepancies").

#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "annular/cli.hpp"
#include "annular/ktheory.hpp"
#include "annular/matchings.hpp"
#include "annular/rt_rep.hpp"

using namespace annular;
using Clock = std::chrono::steady_clock;

namespace {

double secs(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

LaurentPoly L(const std::string& s) { return LaurentPoly::parse(s); }

int g_failed = 0;

void criterion(int id, bool pass, const std::string& title,
               const std::vector<std::string>& details) {
  std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", id,
              title.c_str());
  for (const auto& d : details) std::printf("       %s\n", d.c_str());
  if (!pass) ++g_failed;
}

std::string join_ids(const std::vector<int>& ids) {
  std::string s;
  for (size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ",";
    s += "(" + std::to_string(ids[i]) + ")";
  }
  return s;
}

// Every way to choose `cups` disjoint unordered pairs from the unused
// points; the filter side of the enumeration cross-check.
void all_pairings(std::vector<int>& pool, int cups,
                  std::vector<std::pair<int, int>>& acc,
                  std::vector<std::vector<std::pair<int, int>>>& out) {
  if (cups == 0) {
    out.push_back(acc);
    return;
  }
  int a = pool.front();
  std::vector<int> rest(pool.begin() + 1, pool.end());
  for (size_t j = 0; j < rest.size(); ++j) {
    std::vector<int> next = rest;
    int b = next[j];
    next.erase(next.begin() + j);
    acc.emplace_back(a, b);
    all_pairings(next, cups - 1, acc, out);
    acc.pop_back();
  }
  // a may also stay unpaired only when enough points remain for the cups;
  // through points are whatever is never paired, so skipping a is allowed
  // whenever the remainder still fits.
  if (static_cast<int>(rest.size()) >= 2 * cups) {
    all_pairings(rest, cups, acc, out);
  }
}

std::string cli(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out, err;
  int c = run_cli(args, out, err);
  if (code) *code = c;
  return out.str();
}

}  // namespace

int main() {
  std::printf("acceptance: exact tangle operators and crossingless classes\n");

  // 1. generator relation suite, n in {2..5}, default conventions
  {
    auto t0 = Clock::now();
    Evaluator ev;
    ConventionLedger ledger = verify_relations(ev, 5);
    double dt = secs(t0);

    std::vector<int> core_pass, core_fail;
    std::map<int, std::string> smallest;
    for (int id = 1; id <= 15; ++id) {
      if (id == 2) continue;
      bool any = false, all = true;
      for (const LedgerEntry& e : ledger.relations) {
        if (e.id != id) continue;
        if (e.params.value("rot_chain_sign", 1) != 1) continue;
        any = true;
        if (!e.holds) {
          all = false;
          if (!smallest.count(id)) smallest[id] = e.counterexample;
        }
      }
      (any && all ? core_pass : core_fail).push_back(id);
    }

    bool rel2 = ev.twist_scalar(1) == L("-q^-1") &&
                ev.twist_scalar(2) == L("-q");
    for (const LedgerEntry& e : ledger.relations)
      if (e.id == 2) rel2 = rel2 && e.holds;

    std::vector<int> high_pass, high_fail;
    for (int id = 16; id <= 20; ++id) {
      bool any_reading = false;
      for (const LedgerEntry& e : ledger.relations)
        if (e.id == id && e.holds) any_reading = true;
      (any_reading ? high_pass : high_fail).push_back(id);
    }

    bool time_ok = dt < 60.0;
    bool pass = core_fail.empty() && rel2 && high_fail.empty() && time_ok;

    std::vector<std::string> det;
    det.push_back("relations " + join_ids(core_pass) +
                  ": every instance holds exactly, strand counts <= 5");
    det.push_back(std::string("relation (2): ") +
                  (rel2 ? "holds; twist scalars -q^-1 / -q" : "FAILS"));
    for (int id : core_fail)
      det.push_back("relation (" + std::to_string(id) +
                    "): FAILS as stated; smallest instance: " + smallest[id]);
    det.push_back("relations " + join_ids(high_pass) +
                  ": at least one reading holds; the ledger records which");
    char buf[96];
    std::snprintf(buf, sizeof(buf), "runtime %.1fs (limit 60s)%s", dt,
                  time_ok ? "" : " EXCEEDED");
    det.push_back(buf);
    criterion(1, pass, "relation suite under default conventions", det);
  }

  // 2. reproduction of the displayed tables and values
  {
    Evaluator ev;
    std::vector<std::string> det;
    bool pass = true;
    auto check = [&](bool ok, const std::string& what) {
      pass = pass && ok;
      det.push_back(what + (ok ? "" : ": FAILS"));
    };

    LinearOperator f = ev.psi_generator(Generator::cap(2, 1));
    check(f.column(0).is_zero() && f.column(3).is_zero() &&
              f.column(1) == TensorVector::scalar(L("-1")) &&
              f.column(2) == TensorVector::scalar(L("q")),
          "cap table: v_00,v_11 -> 0, v_10 -> -1, v_01 -> q");

    LinearOperator g = ev.psi_generator(Generator::cup(2, 1));
    check(g.column(0) == L("q^-1") * TensorVector::basis(2, 1) -
                             TensorVector::basis(2, 2),
          "cup table: 1 -> q^-1 v_10 - v_01");

    LinearOperator t2 = ev.psi_generator(Generator::cross(2, 1, 2));
    check(t2.column(0) == TensorVector::basis(2, 0) &&
              t2.column(3) == TensorVector::basis(2, 3) &&
              t2.column(2) == L("q^-1") * TensorVector::basis(2, 1) &&
              t2.column(1) == L("1 - q^-2") * TensorVector::basis(2, 1) +
                                  L("q^-1") * TensorVector::basis(2, 2),
          "undercrossing table on v_00, v_10, v_01, v_11");

    bool inv_ok = true;
    for (int k = 1; k <= 4; ++k)
      for (int s = 1; s <= k; ++s) {
        std::vector<int> zero(k, 0), unit(k, 0), inv(k, 0);
        unit[s - 1] = 1;
        inv[s - 1] = -1;
        inv_ok = inv_ok &&
                 line_bundle_class({inv}) ==
                     L("2*q^-2") * from_line_bundle({zero}) -
                         L("q^-4") * from_line_bundle({unit});
      }
    check(inv_ok, "inverse line bundle: 2q^-2 [O] - q^-4 [L], k <= 4");

    bool base_ok = true;
    for (int m = 1; m <= 6; ++m) {
      TensorVector want = TensorVector::scalar(L("1"));
      for (int i = 1; i <= m; ++i) {
        TensorVector slot = TensorVector::basis(1, 0);
        slot.add_term(1, LaurentPoly::monomial(-1, -i));
        want = tv_tensor(want, slot);
      }
      base_ok = base_ok && base_class(m) == want;
    }
    check(base_ok, "base class: product of (v_0 - q^-i v_1), m <= 6");

    MatchingCombinatorics mc =
        combinatorics(Matching::parse("m=2 n=2 cups=[[1,2],[3,6]]"));
    std::vector<std::vector<int>> tset{{1, 3}, {1, 6}, {2, 3}, {2, 6}};
    std::vector<LaurentPoly> sg{L("1"), L("-q"), L("-q"), L("q^2")};
    check(mc.t_set == tset && mc.sgn == sg &&
              mc.d_set == std::vector<int>{4, 5},
          "transversals and q-signs of the two-cup example");

    const LinearOperator& r1 = ev.rot_matrix(1);
    check(r1.column(1) == L("q") * TensorVector::basis(1, 0) &&
              r1.column(0) == L("2*q^-2") * TensorVector::basis(1, 0) +
                                  L("-q^-5") * TensorVector::basis(1, 1),
          "rotation columns at one strand (convention-free case)");

    criterion(2, pass, "displayed-value reproduction, exact", det);
  }

  // 3. discrepancy reports from check-lemmas
  {
    Evaluator lit(Conventions{false, 1});
    Evaluator cor(Conventions{true, 1});
    std::vector<std::string> det;
    bool pass = true;
    auto check = [&](bool ok, const std::string& what) {
      pass = pass && ok;
      det.push_back(what + (ok ? "" : ": FAILS"));
    };

    TensorVector lit_img =
        lit.psi_generator(Generator::cross(2, 1, 1)).column(1);
    TensorVector cor_img =
        cor.psi_generator(Generator::cross(2, 1, 1)).column(1);
    check(lit_img == TensorVector::basis(2, 2) &&
              cor_img == L("q") * lit_img,
          "overcrossing entry on v_10: literal v_01, forced q v_01");

    bool diffs_ok = true, guard_ok = true;
    std::string k2;
    for (int k = 2; k <= 6; ++k) {
      auto d = check_rotation_closed_form(cor, k);
      diffs_ok = diffs_ok && !d.empty();
      if (k == 2 && d.size() == 1)
        k2 = TensorVector::label(d[0].input, 2) + ": composed " +
             d[0].composed.str() + ", closed " + d[0].closed.str();
      guard_ok = guard_ok && check_rotation_closed_form(lit, k).empty();
    }
    check(diffs_ok, "closed rotation form differs from the composed chain "
                    "for every k in 2..6");
    check(k2 == "v_10: composed q^3 v_00, closed q^2 v_00",
          "smallest differing entry (k=2): " + k2);
    check(guard_ok, "under the literal table the closed form matches "
                    "exactly, k in 2..6 (regression guard)");

    bool class_ok = true;
    for (int total = 1; total <= 6; ++total)
      for (int n = 0; 2 * n < total; ++n)
        for (const Matching& beta : enumerate_matchings(total - 2 * n, n)) {
          if (!is_good(beta)) continue;
          class_ok = class_ok && !good_class_formula(beta).differing.empty();
        }
    check(class_ok, "literal and corrected class factors differ for every "
                    "good matching, m+2n <= 6");

    GoodClassFormula id1 = good_class_formula(Matching::parse("m=1 n=0 cups=[]"));
    check(id1.literal.coeff(1) == L("-q") &&
              id1.corrected.coeff(1) == L("-q^-1") &&
              id1.corrected == base_class(1),
          "identity matching: literal -q contradicts the base class -q^-1");

    criterion(3, pass, "documented-discrepancy reproduction", det);
  }

  // 4. closed class formula against the operator oracle
  {
    auto t0 = Clock::now();
    Evaluator ev;
    int checked = 0;
    bool pass = true;
    for (int total = 1; total <= 8; ++total)
      for (int n = 0; 2 * n < total; ++n)
        for (const Matching& beta : enumerate_matchings(total - 2 * n, n)) {
          if (!is_good(beta)) continue;
          pass = pass &&
                 good_class_formula(beta).corrected ==
                     good_class_oracle(beta, ev);
          ++checked;
        }
    double dt = secs(t0);
    bool time_ok = dt < 120.0;
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "%d good matchings, m+2n <= 8; runtime %.1fs (limit 120s)%s",
                  checked, dt, time_ok ? "" : " EXCEEDED");
    criterion(4, pass && time_ok, "class formula equals the operator oracle",
              {buf});
  }

  // 5. matrix route equals word route
  {
    Evaluator ev;
    int checked = 0;
    bool pass = true;
    for (int total = 1; total <= 6; ++total)
      for (int n = 0; 2 * n < total; ++n) {
        int m = total - 2 * n;
        for (const Matching& alpha : enumerate_matchings(m, n)) {
          RotationDecomposition d = decompose(alpha);
          TangleWord route = good_to_word(d.beta);
          for (int t = 0; t < d.k; ++t)
            route = word_compose(rot_as_word(total, 1), route);
          TensorVector via_word = ev.psi_word(route).apply(base_class(m));
          pass = pass && via_word == crossingless_class(alpha, ev).class_v;
          ++checked;
        }
      }
    criterion(5, pass, "rotation-matrix route equals the tangle-word route",
              {std::to_string(checked) + " matchings, m+2n <= 6"});
  }

  // 6. enumeration against the brute-force pairing filter
  {
    bool pass = true;
    std::vector<std::string> det;
    for (int total = 1; total <= 8; ++total)
      for (int n = 0; 2 * n < total; ++n) {
        int m = total - 2 * n;
        std::vector<Matching> fast = enumerate_matchings(m, n);
        std::vector<int> pool;
        for (int p = 1; p <= total; ++p) pool.push_back(p);
        std::vector<std::pair<int, int>> acc;
        std::vector<std::vector<std::pair<int, int>>> cand;
        all_pairings(pool, n, acc, cand);
        std::set<std::vector<std::pair<int, int>>> valid;
        for (auto cups : cand) {
          for (auto& c : cups)
            if (c.first > c.second) std::swap(c.first, c.second);
          std::sort(cups.begin(), cups.end());
          if (matching_is_valid({m, n}, cups)) valid.insert(cups);
        }
        std::set<std::vector<std::pair<int, int>>> got;
        for (const Matching& a : fast) got.insert(a.cups);
        pass = pass && got == valid;
      }
    int c11 = static_cast<int>(enumerate_matchings(1, 1).size());
    int c21 = static_cast<int>(enumerate_matchings(2, 1).size());
    pass = pass && c11 == 3 && c21 == 4;
    det.push_back("rotation enumeration equals the pairing filter, m+2n <= 8");
    det.push_back("counts: |Cross(1,1)| = " + std::to_string(c11) +
                  ", |Cross(2,1)| = " + std::to_string(c21));
    criterion(6, pass, "enumeration cross-check", det);
  }

  // 7. closed invariant scalars
  {
    Evaluator ev;
    std::vector<std::string> det;

    TensorVector unknot =
        ev.psi_word(TangleWord::parse("f(2,1) g(2,1)")).column(0);
    bool unknot_ok = unknot == TensorVector::scalar(L("-q - q^-1"));
    det.push_back(std::string("unknot closure: -q - q^-1") +
                  (unknot_ok ? "" : ": FAILS"));

    bool scalars_ok = ev.twist_scalar(1) == L("-q^-1") &&
                      ev.twist_scalar(2) == L("-q");
    bool kink_ok = true;
    for (int l : {1, 2}) {
      TangleWord kink = TangleWord::parse(
          l == 1 ? "f(3,1) t(3,2,1) g(3,1)" : "f(3,1) t(3,2,2) g(3,1)");
      kink_ok = kink_ok &&
                ev.psi_word(kink) ==
                    ev.twist_scalar(l) * LinearOperator::identity(1);
    }
    det.push_back(std::string("one-strand kink closure equals the twist "
                              "scalars -q^-1 / -q") +
                  (scalars_ok && kink_ok ? "" : ": FAILS"));

    TensorVector c1 =
        ev.psi_word(TangleWord::parse("f(2,1) t(2,1,1) g(2,1)")).column(0);
    TensorVector c2 =
        ev.psi_word(TangleWord::parse("f(2,1) t(2,1,2) g(2,1)")).column(0);
    bool closed_ok = c1 == TensorVector::scalar(L("-q^-1")) &&
                     c2 == TensorVector::scalar(L("-q"));
    det.push_back("crossing between the legs of one cup: measured " +
                  c1.str() + " and " + c2.str() +
                  ", stated -q^-1 / -q: FAILS (that closure is not a kink; "
                  "the stated value holds only for the one-strand form "
                  "above)");

    criterion(7, unknot_ok && scalars_ok && kink_ok && closed_ok,
              "invariant scalars of the closures", det);
  }

  // 8. byte-identical enumerate output
  {
    int code1 = 0, code2 = 0;
    std::string a = cli({"enumerate", "2", "2", "--format", "json"}, &code1);
    std::string b = cli({"enumerate", "2", "2", "--format", "json"}, &code2);
    bool pass = code1 == 0 && code2 == 0 && !a.empty() && a == b;
    criterion(8, pass, "determinism of enumerate output",
              {"two runs of `enumerate 2 2 --format json`: " +
               std::string(pass ? "byte-identical" : "DIFFER")});
  }

  std::printf("%d of 8 criteria pass; %d fail\n", 8 - g_failed, g_failed);
  if (g_failed > 0)
    std::printf("failing lines are measured properties of the stated "
                "identities, not build defects; see README\n");
  return g_failed;
}
