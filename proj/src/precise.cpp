#include "gtf/precise.hpp"

#include <limits>

#include "gtf/detail/arc_kernels.hpp"
#include "gtf/errors.hpp"

namespace gtf::precise {

namespace {

Wide tolerance() { return std::numeric_limits<Wide>::epsilon(); }

}  // namespace

Wide arc_fn(FnKind kind, const Wide& p, const Wide& x) {
  if (x < 0) throw DomainError("precise arc_fn: negative argument");
  switch (kind) {
    case FnKind::ArcSin: {
      if (x > 1) throw DomainError("precise arcsin_p: x > 1");
      const auto pp = detail::power_pair(p, x);
      return detail::arcsin_kernel(p, x, pp.xp, pp.cxp, tolerance()).value;
    }
    case FnKind::ArcCos:
      if (x > 1) throw DomainError("precise arccos_p: x > 1");
      return detail::arccos_kernel(p, x, tolerance()).value;
    case FnKind::ArcTan:
      return detail::arctan_kernel(p, x, tolerance()).value;
    case FnKind::ArSinh:
      return detail::arsinh_kernel(p, x, tolerance()).value;
    case FnKind::ArTanh: {
      if (x >= 1) throw DomainError("precise artanh_p: x >= 1");
      const auto pp = detail::power_pair(p, x);
      return detail::artanh_kernel(p, x, pp.xp, pp.cxp, tolerance()).value;
    }
    default:
      throw ParameterError("precise arc_fn: not an inverse kind");
  }
}

Wide pi_p(const Wide& p) { return detail::pi_p_closed(p); }

Wide b_p(const Wide& p) { return detail::arctan_kernel(p, Wide(1), tolerance()).value; }

}  // namespace gtf::precise
