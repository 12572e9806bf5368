// Acceptance gate: one line per criterion, exit status 1 if any selected
// criterion fails. `acceptance --criterion N` runs a single one.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gtf/cli.hpp"
#include "gtf/ptrig.hpp"
#include "gtf/quad_oracle.hpp"
#include "gtf/verify.hpp"

using namespace gtf;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<Outcome()> run;
};

const std::vector<double> kPs = {1.25, 1.5, 2.0, 3.0, 5.0, 10.0};

std::vector<double> x_grid() { return verify::default_grid(verify::Suite::Thm1).x_values; }

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// Zero failed records; reports the worst one otherwise.
Outcome no_failures(const verify::Report& r) {
  std::string detail = std::to_string(r.total) + " checks, " + std::to_string(r.failed) + " failed";
  const verify::CheckRecord* worst = nullptr;
  for (const auto& rec : r.records) {
    if (!rec.pass && (!worst || rec.margin < worst->margin || std::isnan(rec.margin))) worst = &rec;
  }
  if (worst) {
    detail += "; worst " + worst->check_id + " margin " + fmt("%.3g", worst->margin);
    if (worst->params.p) detail += " p=" + fmt("%g", *worst->params.p);
    if (worst->params.q) detail += " q=" + fmt("%g", *worst->params.q);
    if (worst->params.t) detail += " t=" + fmt("%g", *worst->params.t);
    if (worst->params.m) detail += " m=" + fmt("%g", *worst->params.m);
    if (worst->params.r) detail += " r=" + fmt("%g", *worst->params.r);
    if (worst->params.s) detail += " s=" + fmt("%g", *worst->params.s);
    if (!worst->diagnostic.empty()) detail += " (" + worst->diagnostic + ")";
  }
  return {r.failed == 0 && r.total > 0, detail};
}

Outcome suite(verify::Suite s) { return no_failures(verify::run_suite(s, verify::default_grid(s))); }

Outcome classical() {
  const PExponent two(2.0);
  double worst = 0.0;
  std::string where;
  auto track = [&](const char* fn, double x, double got, double ref) {
    const double d = std::abs(got - ref);
    if (d > worst) {
      worst = d;
      where = std::string(fn) + " at " + fmt("%g", x);
    }
  };
  const double half_pi = M_PI / 2;
  for (double x : x_grid()) {
    track("arcsin", x, arc_fn(FnKind::ArcSin, two, x).value, std::asin(x));
    track("arccos", x, arc_fn(FnKind::ArcCos, two, x).value, std::acos(x));
    track("arctan", x, arc_fn(FnKind::ArcTan, two, x).value, std::atan(x));
    track("arsinh", x, arc_fn(FnKind::ArSinh, two, x).value, std::asinh(x));
    track("artanh", x, arc_fn(FnKind::ArTanh, two, x).value, std::atanh(x));
    // forward functions on their domains scaled to the grid
    const double t = x * half_pi;
    track("sin", t, fwd_fn(FnKind::Sin, two, t).value, std::sin(t));
    track("cos", t, fwd_fn(FnKind::Cos, two, t).value, std::cos(t));
    const double b = x * M_PI / 4;  // (0, b_2)
    track("tan", b, fwd_fn(FnKind::Tan, two, b).value, std::tan(b));
    const double c = x * std::asinh(1.0);  // (0, c_2)
    track("sinh", c, fwd_fn(FnKind::Sinh, two, c).value, std::sinh(c));
    const double h = 3 * x;
    track("tanh", h, fwd_fn(FnKind::Tanh, two, h).value, std::tanh(h));
  }
  return {worst <= 1e-12, "max deviation " + fmt("%.3g", worst) + " (" + where + ")"};
}

const FnKind kInverse[] = {FnKind::ArcSin, FnKind::ArcCos, FnKind::ArcTan, FnKind::ArSinh, FnKind::ArTanh};

Outcome cross_validation() {
  const double tol = 1e-11;
  std::size_t rows = 0, bad = 0;
  double worst_excess = -1.0;
  for (FnKind k : kInverse) {
    for (double p : kPs) {
      for (double x : x_grid()) {
        const Evaluation s = arc_fn(k, PExponent(p), x, tol);
        const Evaluation q = quad::arc_integral({k, p, p, x}, tol);
        const double excess = std::abs(s.value - q.value) - (s.abs_err + q.abs_err + 1e-12);
        worst_excess = std::max(worst_excess, excess);
        ++rows;
        if (excess > 0.0) ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(rows) + " rows, " + std::to_string(bad) + " outside budget"};
}

Outcome roundtrip() {
  double worst = 0.0;
  std::string where;
  std::size_t bad = 0;
  for (FnKind arc : kInverse) {
    const FnKind fwd = paired(arc);
    for (double p : kPs) {
      const PExponent pe(p);
      for (double x : x_grid()) {
        const double a = std::abs(fwd_fn(fwd, pe, arc_fn(arc, pe, x).value).value - x);
        const double b = std::abs(arc_fn(arc, pe, fwd_fn(fwd, pe, x).value).value - x);
        for (auto [d, label] : {std::pair{a, "fwd(arc)"}, std::pair{b, "arc(fwd)"}}) {
          if (d > 1e-10) ++bad;
          if (d > worst) {
            worst = d;
            where = std::string(label) + " " + std::string(name(fwd)) + " p=" + fmt("%g", p) +
                    " x=" + fmt("%g", x);
          }
        }
      }
    }
  }
  return {bad == 0, std::to_string(bad) + " above 1e-10; worst " + fmt("%.3g", worst) + " at " + where};
}

Outcome bounds_strict() {
  const auto r = verify::check_bounds_lemma(verify::default_grid(verify::Suite::Bounds));
  std::size_t nonpositive = 0;
  double smallest = INFINITY;
  for (const auto& rec : r.records) {
    if (!(rec.margin > 0.0)) ++nonpositive;
    smallest = std::min(smallest, rec.margin);
  }
  return {nonpositive == 0 && r.failed == 0 && r.total == 10 * 6 * 19,
          std::to_string(r.total) + " one-sided bounds, " + std::to_string(nonpositive) +
              " not strict; smallest margin " + fmt("%.3g", smallest)};
}

Outcome eigen() {
  const auto r = verify::check_eigen_residual(verify::default_grid(verify::Suite::Eigen));
  Outcome o = no_failures(r);
  bool lambda_seen = false;
  double worst_res = 0.0;
  for (const auto& rec : r.records) {
    if (rec.check_id == "eigen.lambda") lambda_seen = true;
    if (rec.check_id == "eigen.residual") worst_res = std::max(worst_res, rec.lhs);
  }
  o.pass = o.pass && lambda_seen;
  o.detail += "; worst relative residual " + fmt("%.3g", worst_res);
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Outcome determinism() {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string a = (dir / "gtf_accept_a.csv").string();
  const std::string b = (dir / "gtf_accept_b.csv").string();
  std::ostringstream out, err;
  const int c1 = cli::run({"check", "--suite", "all", "--out", a}, out, err);
  const int c2 = cli::run({"check", "--suite", "all", "--out", b}, out, err);
  const std::string sa = slurp(a), sb = slurp(b);
  std::remove(a.c_str());
  std::remove(b.c_str());
  const bool ran = (c1 == 0 || c1 == 1) && c1 == c2;
  return {ran && !sa.empty() && sa == sb,
          std::to_string(sa.size()) + " bytes, " + (sa == sb ? "identical" : "different") +
              ", exit codes " + std::to_string(c1) + "/" + std::to_string(c2)};
}

const std::vector<Criterion>& criteria() {
  using verify::Suite;
  static const std::vector<Criterion> all = {
      {1, "p = 2 classical reduction", 1.0, classical},
      {2, "series / quadrature cross-validation", 10.0, cross_validation},
      {3, "roundtrip identities", 5.0, roundtrip},
      {4, "mean inequalities, inverse functions", 60.0, [] { return suite(Suite::Thm1); }},
      {5, "mean inequalities, forward functions", 90.0, [] { return suite(Suite::Thm2); }},
      {6, "bounds lemma, strict", 5.0, bounds_strict},
      {7, "geometric-mean lemma", 5.0, [] { return suite(Suite::Gm); }},
      {8, "monotonicity suites", 60.0, [] { return suite(Suite::Monotone); }},
      {9, "pi_p proposition", 1.0, [] { return suite(Suite::PiProp); }},
      {10, "eigen residual", 10.0, eigen},
      {11, "convexity spot checks", 5.0, [] { return suite(Suite::Convexity); }},
      {12, "determinism of check --suite all", 300.0, determinism},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--criterion N]\n");
      return 2;
    }
  }
  int failed = 0, ran = 0;
  for (const auto& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    ++ran;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = o.pass && dt <= c.limit_s;
    if (!pass) ++failed;
    std::printf("criterion %2d %s  %s: %s [%.2f s, limit %.0f s]\n", c.id, pass ? "PASS" : "FAIL", c.title,
                o.detail.c_str(), dt, c.limit_s);
  }
  if (ran == 0) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }
  return failed == 0 ? 0 : 1;
}
