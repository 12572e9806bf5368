#include "gtf/report.hpp"

#include <cstdio>
#include <ostream>

namespace gtf::report {

std::string number(double v, bool human) {
  char buf[40];
  std::snprintf(buf, sizeof buf, human ? "%.15g" : "%.17g", v);
  return buf;
}

namespace {

template <class Emit>
void for_each_param(const verify::Params& p, Emit emit) {
  emit("p", p.p);
  emit("q", p.q);
  emit("t", p.t);
  emit("r", p.r);
  emit("s", p.s);
  emit("x", p.x);
  emit("m", p.m);
}

}  // namespace

void write_csv(std::ostream& os, const verify::Report& r) {
  os << kCsvHeader << '\n';
  for (const auto& rec : r.records) {
    os << rec.check_id;
    for_each_param(rec.params, [&](const char*, const std::optional<double>& v) {
      os << ',';
      if (v) os << number(*v);
    });
    os << ',';
    if (rec.params.n) os << *rec.params.n;
    os << ',' << number(rec.lhs) << ',' << number(rec.rhs) << ',' << number(rec.margin) << ','
       << (rec.pass ? "true" : "false") << '\n';
  }
}

void write_plain(std::ostream& os, const verify::Report& r) {
  for (const auto& note : r.notes) os << "# " << note << '\n';
  for (const auto& rec : r.records) {
    os << rec.check_id;
    for_each_param(rec.params, [&](const char* key, const std::optional<double>& v) {
      if (v) os << ' ' << key << '=' << number(*v, true);
    });
    if (rec.params.n) os << " n=" << *rec.params.n;
    os << " lhs=" << number(rec.lhs, true) << " rhs=" << number(rec.rhs, true)
       << " margin=" << number(rec.margin, true) << (rec.pass ? " PASS" : " FAIL");
    if (!rec.diagnostic.empty()) os << " (" << rec.diagnostic << ')';
    os << '\n';
  }
  os << summary(r) << '\n';
}

std::string summary(const verify::Report& r) {
  return "checks=" + std::to_string(r.total) + " passed=" + std::to_string(r.passed) +
         " failed=" + std::to_string(r.failed);
}

}  // namespace gtf::report
