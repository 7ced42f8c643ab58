#include "annular/render.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace annular {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

std::string svg_open(double w, double h) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + fmt(w) +
         " " + fmt(h) +
         "\">\n<style>\n"
         "path, line, circle.ring { stroke: #222; fill: none; "
         "stroke-width: 2; }\n"
         ".under { stroke: #222; fill: none; stroke-width: 2; }\n"
         ".wrap, .cut { stroke-dasharray: 5 4; }\n"
         ".twist { fill: #fff; }\n"
         "text { font: 13px sans-serif; fill: #222; stroke: none; }\n"
         "</style>\n";
}

std::string line(double x1, double y1, double x2, double y2,
                 const std::string& cls) {
  return "<line class=\"" + cls + "\" x1=\"" + fmt(x1) + "\" y1=\"" +
         fmt(y1) + "\" x2=\"" + fmt(x2) + "\" y2=\"" + fmt(y2) + "\"/>\n";
}

std::string quad(double x1, double y1, double cx, double cy, double x2,
                 double y2, const std::string& cls) {
  return "<path class=\"" + cls + "\" d=\"M " + fmt(x1) + " " + fmt(y1) +
         " Q " + fmt(cx) + " " + fmt(cy) + " " + fmt(x2) + " " + fmt(y2) +
         "\"/>\n";
}

std::string text_at(double x, double y, const std::string& body,
                    const std::string& cls) {
  return "<text class=\"" + cls + "\" x=\"" + fmt(x) + "\" y=\"" + fmt(y) +
         "\" text-anchor=\"middle\" dominant-baseline=\"middle\">" + body +
         "</text>\n";
}

}  // namespace

std::string matching_svg(const Matching& alpha) {
  const double C = 250, R = 190, r = 55;
  int N = alpha.shape.outer();
  auto angle = [&](double p) { return kPi / 2 + 2 * kPi * (p - 1) / N; };
  auto px = [&](double p, double rad) { return C + rad * std::cos(angle(p)); };
  auto py = [&](double p, double rad) { return C - rad * std::sin(angle(p)); };

  std::string out = svg_open(500, 500);
  out += "<circle class=\"ring\" cx=\"250.0\" cy=\"250.0\" r=\"" + fmt(R) +
         "\"/>\n";
  out += "<circle class=\"ring\" cx=\"250.0\" cy=\"250.0\" r=\"" + fmt(r) +
         "\"/>\n";
  // Cut ray between labels N and 1.
  out += line(px(0.5, r), py(0.5, r), px(0.5, R), py(0.5, R), "cut");

  for (int d : alpha.through)
    out += line(px(d, r), py(d, r), px(d, R), py(d, R), "strand");

  for (const auto& [a, b] : alpha.cups) {
    bool nonwrap = true;
    for (int t : alpha.through)
      if (t > a && t < b) nonwrap = false;
    // Midpoint of the spanning side, walking counterclockwise.
    double steps = nonwrap ? b - a : N - (b - a);
    double mid = nonwrap ? a + steps / 2 : b + steps / 2;
    double frac = steps / N;
    double ctrl = R * (1 - frac) + (r + 30) * frac;
    out += quad(px(a, R), py(a, R), px(mid, ctrl), py(mid, ctrl), px(b, R),
                py(b, R), "cup");
  }

  for (int p = 1; p <= N; ++p)
    out += text_at(px(p, R + 18), py(p, R + 18), std::to_string(p), "label");
  out += "</svg>\n";
  return out;
}

std::string word_svg(const TangleWord& word) {
  const double SP = 44, BH = 64, MX = 70, MY = 30;
  int max_n = std::max(1, std::max(word.domain_arity(), word.codomain_arity()));
  for (const Generator& g : word.factors()) max_n = std::max(max_n, g.n);
  double W = 2 * MX + (max_n - 1) * SP;
  int bands = word.empty() ? 1 : static_cast<int>(word.factors().size());
  double H = 2 * MY + bands * BH;
  auto x = [&](int i) { return MX + (i - 1) * SP; };

  std::string out = svg_open(W, H);

  if (word.empty()) {
    for (int i = 1; i <= word.domain_arity(); ++i)
      out += line(x(i), H - MY, x(i), MY, "strand");
    out += text_at(MX / 2, H / 2,
                   "id(" + std::to_string(word.domain_arity()) + ")",
                   "band-label");
  }

  // factors() lists the last-applied generator first; stack bottom-up in
  // application order.
  const auto& fs = word.factors();
  for (int band = 0; band < static_cast<int>(fs.size()); ++band) {
    const Generator& g = fs[fs.size() - 1 - band];
    double yb = H - MY - band * BH;       // bottom edge (domain)
    double yt = yb - BH;                  // top edge (codomain)
    double ym = (yb + yt) / 2;
    out += text_at(MX / 2, ym, g.str(), "band-label");
    switch (g.kind) {
      case GenKind::Cup: {
        for (int j = 1; j <= g.n - 2; ++j)
          out += line(x(j), yb, x(j < g.i ? j : j + 2), yt, "strand");
        out += quad(x(g.i), yt, (x(g.i) + x(g.i + 1)) / 2, yt + 0.7 * BH,
                    x(g.i + 1), yt, "cup");
        break;
      }
      case GenKind::Cap: {
        for (int j = 1; j <= g.n; ++j)
          if (j < g.i || j > g.i + 1)
            out += line(x(j), yb, x(j < g.i ? j : j - 2), yt, "strand");
        out += quad(x(g.i), yb, (x(g.i) + x(g.i + 1)) / 2, yb - 0.7 * BH,
                    x(g.i + 1), yb, "cap");
        break;
      }
      case GenKind::Cross: {
        for (int j = 1; j <= g.n; ++j)
          if (j != g.i && j != g.i + 1) out += line(x(j), yb, x(j), yt, "strand");
        double xa = x(g.i), xb = x(g.i + 1);
        bool first_over = g.sign == 1;
        double ox1 = first_over ? xa : xb, ox2 = first_over ? xb : xa;
        double ux1 = first_over ? xb : xa, ux2 = first_over ? xa : xb;
        out += line(ox1, yb, ox2, yt, "over");
        // Under strand leaves a gap at the crossing point.
        double gx = (xa + xb) / 2, gy = ym;
        double dx = (ux2 - ux1) * 0.12, dy = (yt - yb) * 0.12;
        out += line(ux1, yb, gx - dx, gy - dy, "under");
        out += line(gx + dx, gy + dy, ux2, yt, "under");
        break;
      }
      case GenKind::Twist: {
        for (int j = 1; j <= g.n; ++j) out += line(x(j), yb, x(j), yt, "strand");
        out += "<circle class=\"twist\" cx=\"" + fmt(x(g.i)) + "\" cy=\"" +
               fmt(ym) + "\" r=\"8.0\" stroke=\"#222\" stroke-width=\"2\"/>\n";
        out += text_at(x(g.i), ym, g.sign == 1 ? "+" : "-", "twist-label");
        break;
      }
      case GenKind::Rot: {
        for (int j = 1; j <= g.n - 1; ++j)
          out += line(x(j), yb, x(j + 1), yt, "strand");
        out += line(x(g.n), yb, W, ym, "wrap");
        out += line(0, ym, x(1), yt, "wrap");
        break;
      }
      case GenKind::RotInv: {
        for (int j = 2; j <= g.n; ++j)
          out += line(x(j), yb, x(j - 1), yt, "strand");
        out += line(x(1), yb, 0, ym, "wrap");
        out += line(W, ym, x(g.n), yt, "wrap");
        break;
      }
      case GenKind::Wind: {
        for (int j = 1; j <= g.n; ++j)
          if (j != g.i) out += line(x(j), yb, x(j), yt, "strand");
        out += line(x(g.i), yb, W, ym - 6, "wrap");
        out += line(0, ym + 6, x(g.i), yt, "wrap");
        break;
      }
    }
  }

  // Position ticks on the outer boundaries.
  for (int i = 1; i <= word.domain_arity(); ++i)
    out += text_at(x(i), H - MY / 2, std::to_string(i), "pos-label");
  for (int i = 1; i <= word.codomain_arity(); ++i)
    out += text_at(x(i), MY / 2, std::to_string(i), "pos-label");

  out += "</svg>\n";
  return out;
}

}  // namespace annular
