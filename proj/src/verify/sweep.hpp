#pragma once

// Grid-cell sweeps. sweep_serial is the reference loop; sweep_parallel
// hands cells to OpenMP threads, each writing to its own slot, and
// concatenates the slots in cell order so both produce the same sequence.

#include <cstddef>
#include <exception>
#include <string>
#include <vector>

#include "gtf/verify.hpp"

namespace gtf::verify::detail {

enum class Claim { LessEq, GreaterEq };

/// Record for "lhs <= rhs" or "lhs >= rhs" with relative slack tol.
CheckRecord claim(std::string id, const Params& params, double lhs, double rhs, Claim c, double tol);

/// As claim(), with the oriented margin supplied by the caller (used when
/// it was computed at higher precision than lhs and rhs).
CheckRecord claim_with_margin(std::string id, const Params& params, double lhs, double rhs,
                              double margin, double tol);

CheckRecord failure(std::string id, const Params& params, std::string diagnostic);

/// A grid cell: the id and parameters used if its evaluation throws.
struct Cell {
  std::string id;
  Params params;
};

template <class C, class Fn>
void eval_cell(const C& cell, Fn& fn, std::vector<CheckRecord>& out) {
  try {
    fn(cell, out);
  } catch (const std::exception& e) {
    out.push_back(failure(cell.id, cell.params, e.what()));
  }
}

template <class C, class Fn>
std::vector<CheckRecord> sweep_serial(const std::vector<C>& cells, Fn fn) {
  std::vector<CheckRecord> out;
  for (const auto& cell : cells) eval_cell(cell, fn, out);
  return out;
}

template <class C, class Fn>
std::vector<CheckRecord> sweep_parallel(const std::vector<C>& cells, Fn fn) {
  std::vector<std::vector<CheckRecord>> slots(cells.size());
  const auto n = static_cast<std::ptrdiff_t>(cells.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    eval_cell(cells[static_cast<std::size_t>(i)], fn, slots[static_cast<std::size_t>(i)]);
  }
  std::vector<CheckRecord> out;
  for (auto& slot : slots) {
    for (auto& rec : slot) out.push_back(std::move(rec));
  }
  return out;
}

template <class C, class Fn>
std::vector<CheckRecord> sweep(const std::vector<C>& cells, Execution exec, Fn fn) {
  return exec == Execution::Serial ? sweep_serial(cells, fn) : sweep_parallel(cells, fn);
}

/// Sorts records canonically and fills the counts.
Report finalize(std::vector<CheckRecord> records, Suite suite, const GridSpec& grid,
                std::vector<std::string> notes = {});

/// Points a, a + step, ..., up to b (inclusive within rounding), each rounded
/// to 12 decimals so that grids are reproducible.
std::vector<double> uniform_points(double a, double b, double step);

}  // namespace gtf::verify::detail
