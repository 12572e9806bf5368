#pragma once

// 50-digit evaluation of the inverse p-functions and constants, sharing the
// series kernels of the double-precision library. Used where an inequality's
// margin sits below double resolution.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "gtf/ptrig.hpp"

namespace gtf::precise {

using Wide = boost::multiprecision::cpp_bin_float_50;

/// Inverse functions only; x is taken inside the same domains as gtf::arc_fn.
Wide arc_fn(FnKind kind, const Wide& p, const Wide& x);
Wide pi_p(const Wide& p);
/// b_p = arctan_p(1).
Wide b_p(const Wide& p);

}  // namespace gtf::precise
