// Power-mean inequalities for the inverse and forward families, the
// geometric-mean lemma and the pi_p proposition.

#include <array>
#include <cmath>
#include <string>

#include "gtf/means.hpp"
#include "gtf/ptrig.hpp"
#include "sweep.hpp"

namespace gtf::verify {

using detail::Claim;

namespace {

struct Family {
  FnKind kind;
  const char* id;
  Claim claim;
};

constexpr std::array<Family, 4> kThm1 = {{
    {FnKind::ArcSin, "thm1.arcsin", Claim::LessEq},
    {FnKind::ArTanh, "thm1.artanh", Claim::LessEq},
    {FnKind::ArcTan, "thm1.arctan", Claim::GreaterEq},
    {FnKind::ArSinh, "thm1.arsinh", Claim::GreaterEq},
}};

constexpr std::array<Family, 5> kThm2 = {{
    {FnKind::Sin, "thm2.sin", Claim::GreaterEq},
    {FnKind::Cos, "thm2.cos", Claim::LessEq},
    {FnKind::Tan, "thm2.tan", Claim::LessEq},
    {FnKind::Tanh, "thm2.tanh", Claim::GreaterEq},
    {FnKind::Sinh, "thm2.sinh", Claim::LessEq},
}};

struct MeanCell : detail::Cell {
  double p = 0.0;
  double t = 0.0;
};

std::vector<MeanCell> mean_cells(const GridSpec& g, const char* id) {
  std::vector<MeanCell> cells;
  for (double p : g.p_values) {
    for (double t : g.t_values) {
      MeanCell c;
      c.id = id;
      c.params.p = p;
      c.params.t = t;
      c.p = p;
      c.t = t;
      cells.push_back(c);
    }
  }
  return cells;
}

// f(M_t(r, s)) against M_t(f(r), f(s)) for every pair r <= s of the x grid.
template <std::size_t N, class Eval>
void mean_pairs(const MeanCell& cell, const std::array<Family, N>& families, const GridSpec& g,
                Eval eval, std::vector<CheckRecord>& out) {
  const PExponent p(cell.p);
  const means::MeanOrder t(cell.t);
  const auto& xs = g.x_values;
  for (const auto& fam : families) {
    std::vector<double> at(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) at[i] = eval(fam.kind, p, xs[i]);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i; j < xs.size(); ++j) {
        Params prm = cell.params;
        prm.r = xs[i];
        prm.s = xs[j];
        try {
          const double lhs = eval(fam.kind, p, means::power_mean(t, xs[i], xs[j]));
          const double rhs = means::power_mean(t, at[i], at[j]);
          out.push_back(detail::claim(fam.id, prm, lhs, rhs, fam.claim, g.margin_tol));
        } catch (const std::exception& e) {
          out.push_back(detail::failure(fam.id, prm, e.what()));
        }
      }
    }
  }
}

}  // namespace

Report check_theorem1(const GridSpec& grid, Execution exec) {
  validate(grid, Suite::Thm1);
  auto records = detail::sweep(mean_cells(grid, "thm1"), exec,
                               [&](const MeanCell& c, std::vector<CheckRecord>& out) {
                                 mean_pairs(c, kThm1, grid,
                                            [](FnKind k, PExponent p, double x) {
                                              return arc_fn(k, p, x).value;
                                            },
                                            out);
                               });
  return detail::finalize(std::move(records), Suite::Thm1, grid);
}

Report check_theorem2(const GridSpec& grid, Execution exec) {
  validate(grid, Suite::Thm2);
  auto records = detail::sweep(mean_cells(grid, "thm2"), exec,
                               [&](const MeanCell& c, std::vector<CheckRecord>& out) {
                                 mean_pairs(c, kThm2, grid,
                                            [](FnKind k, PExponent p, double x) {
                                              return fwd_fn(k, p, x).value;
                                            },
                                            out);
                               });
  return detail::finalize(std::move(records), Suite::Thm2, grid,
                          {"thm2.sinh: the printed right-hand side pairs sinh_p(r) with arsinh_p(s); "
                           "sinh_p is applied to both arguments here."});
}

Report check_gm_lemma(const GridSpec& grid, Execution exec) {
  validate(grid, Suite::Gm);
  struct GmCell : detail::Cell {
    double p = 0.0;
    std::optional<double> q;
  };
  std::vector<GmCell> cells;
  for (double p : grid.p_values) {
    GmCell c;
    c.id = "gm";
    c.params.p = p;
    c.p = p;
    cells.push_back(c);
  }
  for (double p : grid.p_values) {
    for (double q : grid.q_values) {
      if (p > q) continue;
      GmCell c;
      c.id = "gm.5.pi";
      c.params.p = p;
      c.params.q = q;
      c.p = p;
      c.q = q;
      cells.push_back(c);
    }
  }
  const double tol = grid.margin_tol;
  auto records = detail::sweep(cells, exec, [&](const GmCell& c, std::vector<CheckRecord>& out) {
    const PExponent p(c.p);
    if (c.q) {
      const PExponent q(*c.q);
      const double lhs = pi_p(PExponent(std::sqrt(c.p * *c.q))).value;
      const double rhs = std::sqrt(pi_p(p).value * pi_p(q).value);
      out.push_back(detail::claim("gm.5.pi", c.params, lhs, rhs, Claim::LessEq, tol));
      return;
    }
    // Items 1-2: f(sqrt(rs)) <= sqrt(f(r) f(s)); items 3-4 reversed.
    constexpr std::array<Family, 4> items = {{
        {FnKind::ArcSin, "gm.1.arcsin", Claim::LessEq},
        {FnKind::ArTanh, "gm.2.artanh", Claim::LessEq},
        {FnKind::ArSinh, "gm.3.arsinh", Claim::GreaterEq},
        {FnKind::ArcTan, "gm.4.arctan", Claim::GreaterEq},
    }};
    const auto& xs = grid.x_values;
    for (const auto& item : items) {
      std::vector<double> at(xs.size());
      for (std::size_t i = 0; i < xs.size(); ++i) at[i] = arc_fn(item.kind, p, xs[i]).value;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i; j < xs.size(); ++j) {
          Params prm = c.params;
          prm.r = xs[i];
          prm.s = xs[j];
          const double lhs = arc_fn(item.kind, p, std::sqrt(xs[i] * xs[j])).value;
          const double rhs = std::sqrt(at[i] * at[j]);
          out.push_back(detail::claim(item.id, prm, lhs, rhs, item.claim, tol));
        }
      }
    }
  });
  return detail::finalize(std::move(records), Suite::Gm, grid);
}

Report check_pi_proposition(const GridSpec& grid, Execution exec) {
  validate(grid, Suite::PiProp);
  std::vector<MeanCell> cells;
  for (double p : grid.p_values) {
    for (double q : grid.q_values) {
      if (p > q) continue;
      for (double t : grid.t_values) {
        MeanCell c;
        c.id = "pi_prop";
        c.params.p = p;
        c.params.q = q;
        c.params.t = t;
        c.p = p;
        c.t = t;
        cells.push_back(c);
      }
    }
  }
  auto records = detail::sweep(cells, exec, [&](const MeanCell& c, std::vector<CheckRecord>& out) {
    const means::MeanOrder t(c.t);
    const double q = *c.params.q;
    const double lhs = pi_p(PExponent(means::power_mean(t, c.p, q))).value;
    const double rhs = means::power_mean(t, pi_p(PExponent(c.p)).value, pi_p(PExponent(q)).value);
    out.push_back(detail::claim("pi_prop", c.params, lhs, rhs, Claim::LessEq, grid.margin_tol));
  });
  return detail::finalize(std::move(records), Suite::PiProp, grid);
}

}  // namespace gtf::verify
