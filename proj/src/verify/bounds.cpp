// Two-sided bounds of the inverse functions. Near x = 0 both sides agree
// with the function to high order (margins around 1e-27 at p = 10,
// x = 0.05), so everything is evaluated with 50 digits and only the
// recorded sides are rounded to double.

#include <string>

#include "gtf/precise.hpp"
#include "sweep.hpp"

namespace gtf::verify {

namespace {

using precise::Wide;

struct Sides {
  Wide lower, value, upper;
};

void emit(std::vector<CheckRecord>& out, int item, const Params& prm, const Sides& s, double tol) {
  const std::string id = "bounds." + std::to_string(item);
  out.push_back(detail::claim_with_margin(id + ".lower", prm, static_cast<double>(s.lower),
                                          static_cast<double>(s.value),
                                          static_cast<double>(s.value - s.lower), tol));
  out.push_back(detail::claim_with_margin(id + ".upper", prm, static_cast<double>(s.value),
                                          static_cast<double>(s.upper),
                                          static_cast<double>(s.upper - s.value), tol));
}

}  // namespace

Report check_bounds_lemma(const GridSpec& grid, Execution exec) {
  validate(grid, Suite::Bounds);
  std::vector<detail::Cell> cells;
  for (double p : grid.p_values) {
    for (double x : grid.x_values) {
      detail::Cell c;
      c.id = "bounds";
      c.params.p = p;
      c.params.x = x;
      cells.push_back(c);
    }
  }
  const double tol = grid.margin_tol;
  auto records = detail::sweep(cells, exec, [&](const detail::Cell& c, std::vector<CheckRecord>& out) {
    const Wide p = *c.params.p;
    const Wide x = *c.params.x;
    const Wide xp = pow(x, p);
    const Wide pp1 = p * (1 + p);
    const Wide half_pi = precise::pi_p(p) / 2;

    emit(out, 1, c.params,
         {(1 + xp / pp1) * x, precise::arc_fn(FnKind::ArcSin, p, x), half_pi * x}, tol);

    const Wide y = pow(1 - xp, 1 / p);
    emit(out, 2, c.params,
         {(1 + (1 - xp) / pp1) * y, precise::arc_fn(FnKind::ArcCos, p, x), half_pi * y}, tol);

    const Wide z = pow(xp / (1 + xp), 1 / p);
    emit(out, 3, c.params,
         {(pp1 * (1 + xp) + xp) * x / (pp1 * pow(1 + xp, 1 + 1 / p)),
          precise::arc_fn(FnKind::ArcTan, p, x), pow(Wide(2), 1 / p) * precise::b_p(p) * z},
         tol);

    const Wide l1 = log(1 + xp);
    emit(out, 4, c.params,
         {z * (1 + l1 / (1 + p)), precise::arc_fn(FnKind::ArSinh, p, x), z * (1 + l1 / p)}, tol);

    const Wide l2 = log(1 - xp);
    emit(out, 5, c.params,
         {x * (1 - l2 / (1 + p)), precise::arc_fn(FnKind::ArTanh, p, x), x * (1 - l2 / p)}, tol);
  });
  return detail::finalize(std::move(records), Suite::Bounds, grid);
}

}  // namespace gtf::verify
