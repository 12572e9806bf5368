// Monotonicity of the lemma functions and of g(x)/x, plus convexity spot
// checks by second differences.

#include <algorithm>
#include <array>
#include <functional>
#include <string>

#include "gtf/errors.hpp"
#include "gtf/ptrig.hpp"
#include "sweep.hpp"

namespace gtf::verify {

using detail::Claim;

namespace {

constexpr std::array<double, 5> kFOrders = {-1.0, -0.5, 0.0, 1.0, 2.0};
constexpr std::array<double, 3> kHOrders = {1.0, 2.0, 5.0};
constexpr std::array<double, 3> kPiLemmaS = {0.1, 0.5, 0.9};

// Claimed direction along increasing x.
Claim direction(LemmaFamily f) {
  switch (f) {
    case LemmaFamily::F1:
    case LemmaFamily::F2:
    case LemmaFamily::H3:
    case LemmaFamily::H4:
    case LemmaFamily::H5:
      return Claim::LessEq;
    default:
      return Claim::GreaterEq;
  }
}

struct Ratio {
  FnKind kind;
  const char* id;
  Claim claim;
};

constexpr std::array<Ratio, 5> kRatios = {{
    {FnKind::Sin, "mono.ratio.sin", Claim::GreaterEq},
    {FnKind::Cos, "mono.ratio.cos", Claim::GreaterEq},
    {FnKind::Tan, "mono.ratio.tan", Claim::LessEq},
    {FnKind::Sinh, "mono.ratio.sinh", Claim::LessEq},
    {FnKind::Tanh, "mono.ratio.tanh", Claim::GreaterEq},
}};

struct MonoCell : detail::Cell {
  std::function<double(double)> fn;
  std::vector<double> points;
  Claim claim = Claim::LessEq;
  bool over_p = false;  // consecutive points go to p/q instead of r/s
};

void consecutive(const MonoCell& c, double tol, std::vector<CheckRecord>& out) {
  std::vector<double> v(c.points.size());
  std::vector<std::string> err(c.points.size());
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    try {
      v[i] = c.fn(c.points[i]);
    } catch (const std::exception& e) {
      err[i] = e.what();
    }
  }
  for (std::size_t i = 0; i + 1 < c.points.size(); ++i) {
    Params prm = c.params;
    if (c.over_p) {
      prm.p = c.points[i];
      prm.q = c.points[i + 1];
    } else {
      prm.r = c.points[i];
      prm.s = c.points[i + 1];
    }
    const std::string& e = !err[i].empty() ? err[i] : err[i + 1];
    if (!e.empty()) {
      out.push_back(detail::failure(c.id, prm, e));
    } else {
      out.push_back(detail::claim(c.id, prm, v[i], v[i + 1], c.claim, tol));
    }
  }
}

std::vector<double> sorted_unique(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Report check_monotone(const GridSpec& grid, Execution exec) {
  validate(grid, Suite::Monotone);
  const std::vector<double> xs = detail::uniform_points(kMonotoneStep, 1.0 - kMonotoneStep, kMonotoneStep);
  std::vector<MonoCell> cells;

  auto lemma_cells = [&](LemmaFamily fam, auto orders) {
    for (double m : orders) {
      for (double p : grid.p_values) {
        MonoCell c;
        c.id = "mono." + std::string(name(fam));
        c.params.p = p;
        c.params.m = m;
        c.fn = [fam, m, p](double x) { return lemma_fn(fam, m, PExponent(p), x); };
        c.points = xs;
        c.claim = direction(fam);
        cells.push_back(std::move(c));
      }
    }
  };
  for (auto f : {LemmaFamily::F1, LemmaFamily::F2, LemmaFamily::F3, LemmaFamily::F4}) {
    lemma_cells(f, kFOrders);
  }
  for (auto h : {LemmaFamily::H1, LemmaFamily::H2, LemmaFamily::H3, LemmaFamily::H4, LemmaFamily::H5}) {
    lemma_cells(h, kHOrders);
  }

  for (double s : kPiLemmaS) {
    MonoCell c;
    c.id = "mono.pi_lemma";
    c.params.s = s;
    c.fn = [s](double p) { return pi_lemma_fn(s, PExponent(p)); };
    c.points = sorted_unique(grid.p_values);
    c.claim = Claim::GreaterEq;
    c.over_p = true;
    cells.push_back(std::move(c));
  }

  for (const auto& ratio : kRatios) {
    for (double p : grid.p_values) {
      MonoCell c;
      c.id = ratio.id;
      c.params.p = p;
      const FnKind kind = ratio.kind;
      c.fn = [kind, p](double x) { return fwd_fn(kind, PExponent(p), x).value / x; };
      c.points = xs;
      c.claim = ratio.claim;
      cells.push_back(std::move(c));
    }
  }

  auto records = detail::sweep(cells, exec, [&](const MonoCell& c, std::vector<CheckRecord>& out) {
    consecutive(c, grid.margin_tol, out);
  });
  return detail::finalize(std::move(records), Suite::Monotone, grid,
                          {"monotone: the lemmas hold for every real m in their range; only "
                           "m in {-1, -0.5, 0, 1, 2} (f) and {1, 2, 5} (h) are sampled."});
}

Report check_convexity_lemma(const GridSpec& grid, Execution exec) {
  validate(grid, Suite::Convexity);
  const std::vector<double> xs = detail::uniform_points(kConvexityStep, 1.0 - kConvexityStep, kConvexityStep);
  std::vector<detail::Cell> cells;
  for (double p : grid.p_values) {
    detail::Cell c;
    c.id = "convex";
    c.params.p = p;
    cells.push_back(c);
  }
  auto records = detail::sweep(cells, exec, [&](const detail::Cell& c, std::vector<CheckRecord>& out) {
    const PExponent p(*c.params.p);
    std::vector<double> arc(xs.size()), fwd(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      arc[i] = arc_fn(FnKind::ArcSin, p, xs[i]).value;
      fwd[i] = fwd_fn(FnKind::Sin, p, xs[i]).value;
    }
    // 2 f(x) against f(x - h) + f(x + h): <= for convex, >= for concave.
    for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
      Params prm = c.params;
      prm.x = xs[i];
      out.push_back(detail::claim("convex.arcsin", prm, 2 * arc[i], arc[i - 1] + arc[i + 1],
                                  Claim::LessEq, grid.margin_tol));
      out.push_back(detail::claim("convex.sin", prm, 2 * fwd[i], fwd[i - 1] + fwd[i + 1],
                                  Claim::GreaterEq, grid.margin_tol));
    }
  });
  return detail::finalize(std::move(records), Suite::Convexity, grid);
}

}  // namespace gtf::verify
