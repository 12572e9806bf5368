#include "gtf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>

#include "gtf/errors.hpp"
#include "gtf/means.hpp"
#include "gtf/ptrig.hpp"
#include "gtf/quad_oracle.hpp"
#include "gtf/report.hpp"
#include "gtf/verify.hpp"

namespace gtf::cli {

namespace {

using report::number;

std::string h(double v) { return number(v, true); }

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class T>
const T& need(const std::optional<T>& v, const char* flag, const std::string& what) {
  if (!v) throw UsageError(what + " requires " + flag);
  return *v;
}

// ---- eval -------------------------------------------------------------

struct EvalArgs {
  std::string fn;
  std::optional<double> p, q, x, y, t, m;
  std::optional<std::string> family;
  double tol = kDefaultTol;
};

void print_eval(std::ostream& out, const std::string& head, const Evaluation& e) {
  out << head << " value=" << h(e.value) << " abs_err=" << h(e.abs_err)
      << " method=" << to_string(e.method) << '\n';
}

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  if (auto kind = fn_kind_from_name(a.fn)) {
    const double p = need(a.p, "--p", a.fn);
    const double x = need(a.x, "--x", a.fn);
    const PExponent pe(p);
    const Evaluation e = is_inverse(*kind) ? arc_fn(*kind, pe, x, a.tol) : fwd_fn(*kind, pe, x);
    print_eval(out, a.fn + " p=" + h(p) + " x=" + h(x), e);
    return Ok;
  }
  const std::optional<PQKind> pq = a.fn == "arcsin_pq"   ? std::optional(PQKind::ArcSin)
                                   : a.fn == "arccos_pq" ? std::optional(PQKind::ArcCos)
                                   : a.fn == "arsinh_pq" ? std::optional(PQKind::ArSinh)
                                                         : std::nullopt;
  if (pq) {
    const double p = need(a.p, "--p", a.fn);
    const double q = need(a.q, "--q", a.fn);
    const double x = need(a.x, "--x", a.fn);
    const Evaluation e = arc_fn_pq(*pq, {PExponent(p), PExponent(q)}, x, a.tol);
    print_eval(out, a.fn + " p=" + h(p) + " q=" + h(q) + " x=" + h(x), e);
    return Ok;
  }
  if (a.fn == "lemma_fn") {
    const std::string& fam = need(a.family, "--family", a.fn);
    const auto family = lemma_family_from_name(fam);
    if (!family) throw UsageError("unknown lemma family '" + fam + "' (f1..f4, h1..h5)");
    const double m = need(a.m, "--m", a.fn);
    const double p = need(a.p, "--p", a.fn);
    const double x = need(a.x, "--x", a.fn);
    const Evaluation e = lemma_fn_eval(*family, m, PExponent(p), x);
    print_eval(out, "lemma_fn family=" + fam + " m=" + h(m) + " p=" + h(p) + " x=" + h(x), e);
    return Ok;
  }
  if (a.fn == "power_mean") {
    const double t = need(a.t, "--t", a.fn);
    const double x = need(a.x, "--x", a.fn);
    const double y = need(a.y, "--y", a.fn);
    const double v = means::power_mean(means::MeanOrder(t), x, y);
    const double err = 4 * std::numeric_limits<double>::epsilon() * v * (1 + std::abs(std::log(x / y)));
    print_eval(out, "power_mean t=" + h(t) + " x=" + h(x) + " y=" + h(y),
               make_evaluation(v, err, Method::ClosedForm));
    return Ok;
  }
  throw UsageError("unknown function '" + a.fn + "'");
}

// ---- const ------------------------------------------------------------

struct ConstArgs {
  std::string name;
  std::optional<double> p, q;
  std::optional<int> n;
};

int cmd_const(const ConstArgs& a, std::ostream& out) {
  const double p = need(a.p, "--p", a.name);
  const PExponent pe(p);
  double v = 0.0;
  if (a.name == "pi_p") {
    v = pi_p(pe).value;
  } else if (a.name == "a_p") {
    v = constant(Constant::A, pe).value;
  } else if (a.name == "b_p") {
    v = constant(Constant::B, pe).value;
  } else if (a.name == "c_p") {
    v = constant(Constant::C, pe).value;
  } else if (a.name == "n_pq") {
    v = n_pq({pe, PExponent(need(a.q, "--q", a.name))}).value;
  } else if (a.name == "lambda_n") {
    const int n = need(a.n, "--n", a.name);
    if (n < 1) throw UsageError("lambda_n requires --n >= 1");
    v = eigenpair(n, pe).lambda;
  } else {
    throw UsageError("unknown constant '" + a.name + "'");
  }
  out << h(v) << '\n';
  if (a.name == "c_p") {
    out << "note: c_p is taken as arsinh_p(1) = 2^(-1/p) F(1, 1/p; 1+1/p; 1/2); "
           "the form F(1, 1/p; 1+1/p; 1) diverges\n";
  }
  return Ok;
}

// ---- check ------------------------------------------------------------

struct CheckArgs {
  std::string suite;
  std::vector<double> p, q, t, x;
  std::optional<double> margin_tol;
  std::optional<std::string> out_path;
  std::string format = "csv";
  bool serial = false;
};

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<verify::Suite> suites;
  if (a.suite == "all") {
    suites = verify::all_suites();
  } else if (auto s = verify::suite_from_name(a.suite)) {
    suites = {*s};
  } else {
    throw UsageError("unknown suite '" + a.suite + "'");
  }
  std::vector<std::pair<verify::Suite, verify::GridSpec>> plan;
  for (auto s : suites) {
    verify::GridSpec g = verify::default_grid(s);
    if (!a.p.empty()) g.p_values = a.p;
    if (!a.q.empty()) g.q_values = a.q;
    if (!a.t.empty()) g.t_values = a.t;
    if (!a.x.empty()) g.x_values = a.x;
    if (a.margin_tol) g.margin_tol = *a.margin_tol;
    verify::validate(g, s);
    plan.emplace_back(s, std::move(g));
  }
  const auto exec = a.serial ? verify::Execution::Serial : verify::Execution::Parallel;
  std::vector<verify::Report> parts;
  for (const auto& [s, g] : plan) parts.push_back(verify::run_suite(s, g, exec));
  const verify::Report r = verify::merge(std::move(parts));

  auto write = [&](std::ostream& os) {
    if (a.format == "plain") {
      report::write_plain(os, r);
    } else {
      report::write_csv(os, r);
    }
  };
  if (a.out_path) {
    std::ofstream f(*a.out_path, std::ios::binary);
    if (!f) {
      err << "cannot open " << *a.out_path << " for writing\n";
      return Io;
    }
    write(f);
    f.flush();
    if (!f) {
      err << "write to " << *a.out_path << " failed\n";
      return Io;
    }
    out << report::summary(r) << '\n';
  } else {
    write(out);
    err << report::summary(r) << '\n';
  }
  for (const auto& note : r.notes) err << "note: " << note << '\n';
  return r.failed == 0 ? Ok : Failures;
}

// ---- oracle-diff ------------------------------------------------------

struct DiffArgs {
  std::vector<std::string> fn;
  std::vector<double> p, q, x;
  double tol = 1e-11;
  bool pq = false;
};

constexpr double kDiffFloor = 1e-12;

int cmd_oracle_diff(const DiffArgs& a, std::ostream& out) {
  const std::vector<double> ps =
      a.p.empty() ? verify::default_grid(verify::Suite::Thm1).p_values : a.p;
  const std::vector<double> qs = a.q.empty() ? ps : a.q;
  const std::vector<double> xs =
      a.x.empty() ? verify::default_grid(verify::Suite::Thm1).x_values : a.x;
  std::vector<FnKind> kinds;
  if (a.fn.empty()) {
    kinds = {FnKind::ArcSin, FnKind::ArcCos, FnKind::ArcTan, FnKind::ArSinh, FnKind::ArTanh};
  }
  for (const auto& f : a.fn) {
    const auto k = fn_kind_from_name(f);
    if (!k || !is_inverse(*k)) throw UsageError("oracle-diff: '" + f + "' is not an inverse function");
    kinds.push_back(*k);
  }
  for (double p : ps) (void)PExponent(p);
  for (double q : qs) (void)PExponent(q);

  std::size_t rows = 0, outside = 0;
  out << "# kind p q x series quadrature diff budget status\n";
  auto row = [&](const std::string& label, double p, std::optional<double> q, double x,
                 const Evaluation& s, const Evaluation& qd, bool counted) {
    const double diff = std::abs(s.value - qd.value);
    const double budget = s.abs_err + qd.abs_err + kDiffFloor;
    const bool ok = diff <= budget;
    out << label << ' ' << h(p) << ' ' << (q ? h(*q) : "-") << ' ' << h(x) << ' ' << h(s.value)
        << ' ' << h(qd.value) << ' ' << h(diff) << ' ' << h(budget) << ' '
        << (!counted ? "printed" : ok ? "ok" : "FAIL") << '\n';
    if (counted) {
      ++rows;
      if (!ok) ++outside;
    }
  };
  for (FnKind k : kinds) {
    for (double p : ps) {
      for (double x : xs) {
        const Evaluation s = arc_fn(k, PExponent(p), x, a.tol);
        const Evaluation qd = quad::arc_integral({k, p, p, x}, a.tol);
        row(std::string(name(k)), p, std::nullopt, x, s, qd, true);
      }
    }
  }
  if (a.pq) {
    const std::array<std::pair<PQKind, FnKind>, 3> pq_kinds = {{
        {PQKind::ArcSin, FnKind::ArcSin},
        {PQKind::ArcCos, FnKind::ArcCos},
        {PQKind::ArSinh, FnKind::ArSinh},
    }};
    const std::array<const char*, 3> labels = {"arcsin_pq", "arccos_pq", "arsinh_pq"};
    for (std::size_t i = 0; i < pq_kinds.size(); ++i) {
      for (double p : ps) {
        for (double q : qs) {
          for (double x : xs) {
            const PQExponents e{PExponent(p), PExponent(q)};
            const Evaluation s = arc_fn_pq(pq_kinds[i].first, e, x, a.tol);
            const Evaluation qd = quad::arc_integral({pq_kinds[i].second, p, q, x}, a.tol);
            row(labels[i], p, q, x, s, qd, true);
          }
        }
      }
    }
    for (double p : ps) {
      for (double q : qs) {
        for (double x : xs) {
          const Evaluation s = arcsin_pq_printed({PExponent(p), PExponent(q)}, x, a.tol);
          const Evaluation qd = quad::arc_integral({FnKind::ArcSin, p, q, x}, a.tol);
          row("arcsin_pq_printed", p, q, x, s, qd, false);
        }
      }
    }
  }
  out << "rows=" << rows << " within=" << rows - outside << " outside=" << outside << '\n';
  return outside == 0 ? Ok : Failures;
}

template <class T>
CLI::Option* opt(CLI::App* app, const std::string& flag, std::optional<T>& v, const std::string& desc) {
  return app->add_option(flag, v, desc);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized trigonometric functions: evaluation and inequality sweeps", "gtf"};
  app.require_subcommand(1);

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Evaluate one function at a point");
  eval->add_option("--fn", ea.fn,
                   "arcsin_p arccos_p arctan_p arsinh_p artanh_p sin_p cos_p tan_p sinh_p tanh_p "
                   "arcsin_pq arccos_pq arsinh_pq lemma_fn power_mean")
      ->required();
  opt(eval, "--p", ea.p, "Exponent p > 1");
  opt(eval, "--q", ea.q, "Second exponent for the _pq functions");
  opt(eval, "--x", ea.x, "Argument");
  opt(eval, "--y", ea.y, "Second argument of power_mean");
  opt(eval, "--t", ea.t, "Order of power_mean");
  opt(eval, "--m", ea.m, "Exponent m of lemma_fn");
  opt(eval, "--family", ea.family, "lemma_fn family: f1..f4, h1..h5");
  eval->add_option("--tol", ea.tol, "Series tolerance in (0, 1e-3]");

  ConstArgs ca;
  auto* cst = app.add_subcommand("const", "Print a constant");
  cst->add_option("--name", ca.name, "pi_p a_p b_p c_p n_pq lambda_n")->required();
  opt(cst, "--p", ca.p, "Exponent p > 1");
  opt(cst, "--q", ca.q, "Second exponent (n_pq)");
  opt(cst, "--n", ca.n, "Mode number (lambda_n)");

  CheckArgs ka;
  auto* check = app.add_subcommand("check", "Run verification sweeps and write a report");
  check->add_option("--suite", ka.suite, "thm1 thm2 bounds gm monotone pi-prop convexity eigen all")
      ->required();
  check->add_option("--p", ka.p, "p grid (comma separated)")->delimiter(',');
  check->add_option("--q", ka.q, "q grid")->delimiter(',');
  check->add_option("--t", ka.t, "t grid")->delimiter(',');
  check->add_option("--x", ka.x, "x grid in [0.01, 0.99]")->delimiter(',');
  opt(check, "--margin-tol", ka.margin_tol, "Relative margin slack");
  opt(check, "--out", ka.out_path, "Report file (stdout if omitted)");
  check->add_option("--format", ka.format, "csv or plain")->check(CLI::IsMember({"csv", "plain"}));
  check->add_flag("--serial", ka.serial, "Use the serial reference loop");

  DiffArgs da;
  auto* diff = app.add_subcommand("oracle-diff", "Compare series values with quadrature");
  diff->add_option("--fn", da.fn, "Inverse functions (default: all five)")->delimiter(',');
  diff->add_option("--p", da.p, "p grid")->delimiter(',');
  diff->add_option("--q", da.q, "q grid for --pq (default: p grid)")->delimiter(',');
  diff->add_option("--x", da.x, "x grid")->delimiter(',');
  diff->add_option("--tol", da.tol, "Tolerance of both routes");
  diff->add_flag("--pq", da.pq, "Add the two-parameter functions and the printed arcsin_pq series");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return Ok;
    }
    err << "usage error: " << e.what() << '\n';
    return Usage;
  }

  try {
    if (*eval) return cmd_eval(ea, out);
    if (*cst) return cmd_const(ca, out);
    if (*check) return cmd_check(ka, out, err);
    return cmd_oracle_diff(da, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return Usage;
  } catch (const ParameterError& e) {
    err << "usage error: " << e.what() << '\n';
    return Usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return Numeric;
  }
}

}  // namespace gtf::cli
