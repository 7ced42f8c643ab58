#include "annular/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "annular/ktheory.hpp"
#include "annular/matchings.hpp"
#include "annular/render.hpp"
#include "annular/rt_rep.hpp"

namespace annular {

namespace {

std::string join_tokens(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += ' ';
    s += p;
  }
  return s;
}

void emit(const std::string& text, const std::string& path,
          std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f.good()) throw std::runtime_error("cannot write output path: " + path);
}

std::string in_label(Mask m, int arity) {
  return arity == 0 ? "1" : TensorVector::label(m, arity);
}

std::string operator_text(const LinearOperator& op) {
  if (op.domain_arity() == 0 && op.codomain_arity() == 0)
    return op.column(0).str() + "\n";
  std::string s;
  for (Mask m = 0; m < (Mask{1} << op.domain_arity()); ++m)
    s += in_label(m, op.domain_arity()) + " -> " + op.column(m).str() + "\n";
  return s;
}

std::string operator_csv(const LinearOperator& op) {
  std::vector<std::string> rows;
  for (const auto& [m, image] : op.columns())
    for (const auto& [mask, coeff] : image.terms())
      rows.push_back(in_label(m, op.domain_arity()) + "," +
                     in_label(mask, op.codomain_arity()) + "," + coeff.str());
  std::sort(rows.begin(), rows.end());
  std::string s = "input,output,coeff\n";
  for (const auto& r : rows) s += r + "\n";
  return s;
}

std::string lambda_lines(const ClassResult& r) {
  std::string s;
  for (const auto& [powers, coeff] : r.class_lambda) {
    s += "lambda[";
    for (size_t i = 0; i < powers.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(powers[i]);
    }
    s += "]: " + coeff.str() + "\n";
  }
  return s;
}

std::string class_text(const ClassResult& r, const std::string& basis) {
  std::string s = "matching: " + r.matching.str() + "\n";
  s += "k: " + std::to_string(r.decomposition.k) + "\n";
  s += "beta: " + r.decomposition.beta.str() + "\n";
  if (basis == "lambda")
    s += lambda_lines(r);
  else
    s += "class: " + r.class_v.str() + "\n";
  return s;
}

// Random composable words, split at a random point; functoriality means the
// operator of the whole word equals the composition of the parts.
struct FuzzOutcome {
  int pairs = 0;
  bool ok = true;
  std::string failure;
};

FuzzOutcome fuzz_functoriality(const Evaluator& ev, int count,
                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  FuzzOutcome res;
  res.pairs = count;
  for (int it = 0; it < count; ++it) {
    int len = pick(1, 6);
    std::vector<Generator> app;  // application order, first applied first
    std::vector<int> bnd{pick(0, 3)};
    for (int j = 0; j < len; ++j) {
      int a = bnd.back();
      std::vector<Generator> cands;
      if (a + 2 <= 6)
        for (int i = 1; i <= a + 1; ++i) cands.push_back(Generator::cup(a + 2, i));
      for (int i = 1; i < a; ++i) {
        cands.push_back(Generator::cap(a, i));
        cands.push_back(Generator::cross(a, i, 1));
        cands.push_back(Generator::cross(a, i, 2));
      }
      for (int i = 1; i <= a; ++i) {
        cands.push_back(Generator::twist(a, i, 1));
        cands.push_back(Generator::twist(a, i, 2));
      }
      if (a >= 1) {
        cands.push_back(Generator::rot(a));
        cands.push_back(Generator::rot_inv(a));
        cands.push_back(Generator::wind(a, a));
      }
      Generator g = cands[pick(0, static_cast<int>(cands.size()) - 1)];
      app.push_back(g);
      bnd.push_back(g.codomain_arity());
    }
    auto segment = [&](int lo, int hi) {  // app[lo..hi), identity on bnd[lo]
      if (lo == hi) return TangleWord(bnd[lo]);
      std::vector<Generator> fs(app.begin() + lo, app.begin() + hi);
      std::reverse(fs.begin(), fs.end());
      return TangleWord::of(std::move(fs));
    };
    int split = pick(0, len);
    TangleWord inner = segment(0, split);
    TangleWord outer = segment(split, len);
    TangleWord whole = word_compose(outer, inner);
    LinearOperator lhs = ev.psi_word(whole);
    LinearOperator rhs = op_compose(ev.psi_word(outer), ev.psi_word(inner));
    if (!(lhs == rhs)) {
      res.ok = false;
      res.failure = "psi(" + whole.str() + ") != psi(" + outer.str() +
                    ") o psi(" + inner.str() + ")";
      return res;
    }
  }
  return res;
}

int cmd_check_lemmas(int k_max, const Conventions& conv, std::ostream& out) {
  Evaluator lit(Conventions{false, conv.rot_chain_sign});
  Evaluator cor(Conventions{true, conv.rot_chain_sign});
  Evaluator& ev = conv.t1_corrected ? cor : lit;

  Mask v10 = 1;  // slot 1 high, slot 2 low
  TensorVector lit_img = lit.psi_generator(Generator::cross(2, 1, 1)).column(v10);
  TensorVector cor_img = cor.psi_generator(Generator::cross(2, 1, 1)).column(v10);
  out << "crossing t(2,1,1) column v_10: literal " << lit_img.str()
      << ", forced " << cor_img.str()
      << (lit_img == cor_img ? " (agree)" : " (differ by the factor q)")
      << "\n";

  for (int k = 2; k <= k_max; ++k) {
    auto diffs = check_rotation_closed_form(ev, k);
    if (diffs.empty()) {
      out << "rotation closed form vs composed chain, k=" << k
          << ": exact match\n";
      continue;
    }
    out << "rotation closed form vs composed chain, k=" << k << ": "
        << diffs.size() << (diffs.size() == 1 ? " differing input\n"
                                              : " differing inputs\n");
    for (const auto& d : diffs)
      out << "  " << TensorVector::label(d.input, k) << ": composed "
          << d.composed.str() << ", closed " << d.closed.str() << "\n";
  }

  out << "class formula, literal vs corrected factors (m+2n <= " << k_max
      << "):\n";
  for (int total = 1; total <= k_max; ++total)
    for (int n = 0; 2 * n < total; ++n) {
      int m = total - 2 * n;
      for (const Matching& beta : enumerate_matchings(m, n)) {
        if (!is_good(beta)) continue;
        GoodClassFormula f = good_class_formula(beta);
        if (f.differing.empty()) {
          out << "  " << beta.str() << ": agree\n";
          continue;
        }
        out << "  " << beta.str() << ": " << f.differing.size()
            << (f.differing.size() == 1 ? " differing coefficient\n"
                                        : " differing coefficients\n");
        if (total > 4) continue;  // summary only past 16-dim spaces
        for (Mask mk : f.differing)
          out << "    " << TensorVector::label(mk, total) << ": literal "
              << f.literal.coeff(mk).str() << ", corrected "
              << f.corrected.coeff(mk).str() << "\n";
      }
    }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact Reshetikhin-Turaev operators of framed affine tangles "
               "and K-theory classes of annular crossingless matchings"};
  app.require_subcommand(1);

  struct Common {
    int rot_chain = 1;
    bool literal_t1 = false;
    std::string format = "text";
    std::string out_path;
    Conventions conv() const { return Conventions{!literal_t1, rot_chain}; }
  };
  auto add_conventions = [](CLI::App* sub, Common& c) {
    sub->add_option("--rot-chain", c.rot_chain,
                    "crossing flavor of the rotation word (1 or 2)")
        ->check(CLI::Range(1, 2));
    sub->add_flag("--literal-t1", c.literal_t1,
                  "use the t(1) table without the forced q factor");
  };
  auto add_format = [](CLI::App* sub, Common& c,
                       const std::vector<std::string>& allowed) {
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember(allowed));
    sub->add_option("--out", c.out_path, "write output to this file");
  };

  Common inv_c, cls_c, enum_c, ver_c, lem_c, ren_c;
  std::vector<std::string> inv_word, cls_tokens, ren_tokens;
  int inv_arity = 0;
  std::string cls_basis = "v", enum_basis = "v";
  int enum_m = 0, enum_n = 0, enum_cap = 14;
  int ver_nmax = 4, ver_fuzz = 0;
  std::uint64_t ver_seed = 1;
  int lem_kmax = 6;

  CLI::App* inv = app.add_subcommand(
      "invariant", "operator of a tangle word; (0,0)-words print a scalar");
  inv->add_option("word", inv_word, "tangle word factors, applied right to left");
  inv->add_option("--arity", inv_arity,
                  "strand count of the identity word when no factors are given");
  add_conventions(inv, inv_c);
  add_format(inv, inv_c, {"text", "json", "csv"});

  CLI::App* cls = app.add_subcommand(
      "class", "K-theory class of a crossingless matching");
  cls->add_option("matching", cls_tokens, "matching text, e.g. m=1 n=1 cups=[[2,3]]")
      ->required();
  cls->add_option("--basis", cls_basis, "report in the monomial or line-bundle basis")
      ->check(CLI::IsMember({"v", "lambda"}));
  add_conventions(cls, cls_c);
  add_format(cls, cls_c, {"text", "json", "csv"});

  CLI::App* enm = app.add_subcommand(
      "enumerate", "classes of every matching in Cross(m,n)");
  enm->add_option("m", enum_m, "through strand count")->required();
  enm->add_option("n", enum_n, "outer cup count")->required();
  enm->add_option("--cap", enum_cap, "largest allowed m+2n")
      ->envname("ANNULAR_RT_CAP");
  enm->add_option("--basis", enum_basis, "report in the monomial or line-bundle basis")
      ->check(CLI::IsMember({"v", "lambda"}));
  add_conventions(enm, enum_c);
  add_format(enm, enum_c, {"text", "json", "csv"});

  CLI::App* ver = app.add_subcommand(
      "verify", "check the generator relations and print the ledger");
  ver->add_option("n_max", ver_nmax, "largest strand count to instantiate");
  ver->add_option("--fuzz", ver_fuzz, "also check this many random word splits");
  ver->add_option("--seed", ver_seed, "seed for --fuzz");
  add_conventions(ver, ver_c);
  ver->add_option("--out", ver_c.out_path, "write output to this file");

  CLI::App* lem = app.add_subcommand(
      "check-lemmas", "report the displayed-formula discrepancies");
  lem->add_option("k_max", lem_kmax, "largest strand count to compare");
  add_conventions(lem, lem_c);
  lem->add_option("--out", lem_c.out_path, "write output to this file");

  CLI::App* ren = app.add_subcommand(
      "render", "SVG diagram of a matching or tangle word");
  ren->add_option("input", ren_tokens, "matching or tangle word text")
      ->required();
  ren->add_option("--out", ren_c.out_path, "write the SVG to this file");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("annular-rt");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  argv.reserve(argv_store.size());
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (inv->parsed()) {
      TangleWord word = inv_word.empty() ? TangleWord(inv_arity)
                                         : TangleWord::parse(join_tokens(inv_word));
      LinearOperator op = Evaluator(inv_c.conv()).psi_word(word);
      std::string text;
      if (inv_c.format == "json")
        text = op.to_json().dump(2) + "\n";
      else if (inv_c.format == "csv")
        text = operator_csv(op);
      else
        text = operator_text(op);
      emit(text, inv_c.out_path, out);
      return 0;
    }

    if (cls->parsed()) {
      Matching alpha = Matching::parse(join_tokens(cls_tokens));
      Evaluator ev(cls_c.conv());
      ClassResult r = crossingless_class(alpha, ev);
      std::string text;
      if (cls_c.format == "json")
        text = class_result_json(r).dump(2) + "\n";
      else if (cls_c.format == "csv")
        text = class_result_csv(r);
      else
        text = class_text(r, cls_basis);
      emit(text, cls_c.out_path, out);
      return 0;
    }

    if (enm->parsed()) {
      int total = enum_m + 2 * enum_n;
      if (enum_m < 1 || enum_n < 0) {
        err << "error: need m >= 1 and n >= 0\n";
        return 1;
      }
      if (total > enum_cap) {
        err << "error: m+2n = " << total << " exceeds cap " << enum_cap
            << "; raise with --cap or ANNULAR_RT_CAP\n";
        return 1;
      }
      if (total > 14)
        err << "warning: m+2n = " << total
            << " exceeds the default cap of 14; expect large memory use\n";
      Evaluator ev(enum_c.conv());
      std::string text;
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      bool first = true;
      for (const Matching& alpha : enumerate_matchings(enum_m, enum_n)) {
        ClassResult r = crossingless_class(alpha, ev);
        if (enum_c.format == "json") {
          arr.push_back(class_result_json(r));
        } else if (enum_c.format == "csv") {
          std::string csv = class_result_csv(r);
          text += first ? csv : csv.substr(csv.find('\n') + 1);
        } else {
          if (!first) text += "\n";
          text += class_text(r, enum_basis);
        }
        first = false;
      }
      if (enum_c.format == "json") text = arr.dump(2) + "\n";
      emit(text, enum_c.out_path, out);
      return 0;
    }

    if (ver->parsed()) {
      Evaluator ev(ver_c.conv());
      ConventionLedger ledger = verify_relations(ev, ver_nmax);
      std::string text = ledger.to_json().dump(2) + "\n";
      int code = ledger.status_code();
      if (ver_fuzz > 0) {
        FuzzOutcome fz = fuzz_functoriality(ev, ver_fuzz, ver_seed);
        if (fz.ok) {
          text += "fuzz: " + std::to_string(fz.pairs) +
                  " random word splits functorial (seed " +
                  std::to_string(ver_seed) + ")\n";
        } else {
          text += "fuzz: FAILED (seed " + std::to_string(ver_seed) + "): " +
                  fz.failure + "\n";
          code = 1;
        }
      }
      emit(text, ver_c.out_path, out);
      return code;
    }

    if (lem->parsed()) {
      std::ostringstream buf;
      cmd_check_lemmas(lem_kmax, lem_c.conv(), buf);
      emit(buf.str(), lem_c.out_path, out);
      return 0;
    }

    if (ren->parsed()) {
      std::string input = join_tokens(ren_tokens);
      std::string svg;
      std::string matching_err;
      try {
        svg = matching_svg(Matching::parse(input));
      } catch (const std::exception& me) {
        matching_err = me.what();
      }
      if (svg.empty()) {
        try {
          svg = word_svg(TangleWord::parse(input));
        } catch (const std::exception& we) {
          err << "error: input parses as neither a matching nor a tangle "
                 "word\n  as matching: "
              << matching_err << "\n  as word: " << we.what() << "\n";
          return 1;
        }
      }
      emit(svg, ren_c.out_path, out);
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace annular
