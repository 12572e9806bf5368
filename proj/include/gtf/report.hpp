#pragma once

#include <iosfwd>
#include <string>

#include "gtf/verify.hpp"

namespace gtf::report {

inline constexpr const char* kCsvHeader = "check_id,p,q,t,r,s,x,m,n,lhs,rhs,margin,pass";

/// One row per record, 17 significant digits, unused columns empty, LF endings.
void write_csv(std::ostream& os, const verify::Report& r);

/// Human-readable listing with 15 significant digits; diagnostics appended.
void write_plain(std::ostream& os, const verify::Report& r);

/// "checks=<total> passed=<n> failed=<m>"
std::string summary(const verify::Report& r);

/// %.17g, or %.15g when human is set.
std::string number(double v, bool human = false);

}  // namespace gtf::report
