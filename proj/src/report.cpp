#include "chrombound/report.hpp"

#include <json.hpp>
#include <limits>
#include <sstream>

#include "chrombound/errors.hpp"

namespace chrombound {

namespace {

using Json = nlohmann::ordered_json;

// Exact integers: a JSON number when it fits in 64 bits, a decimal string
// otherwise.
Json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

Json poly(const IntPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(big(c));
  return out;
}

template <class T>
Json maybe(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json check_json(const BoundCheck& c) {
  Json per = Json::array();
  for (const auto& p : c.per_x) {
    per.push_back({{"x", p.x}, {"pi", big(p.pi)}, {"bound", big(p.bound)}, {"ordering", to_string(p.ordering)}});
  }
  return {{"graph6", c.graph6}, {"n", c.n},           {"k", c.k},
          {"alpha", c.alpha},   {"pi", poly(c.pi)},   {"bound", poly(c.bound)},
          {"poly_equal", c.poly_equal}, {"tail_ok", c.tail_ok}, {"per_x", per}};
}

std::string to_json(const VerifyReport& r) {
  Json j;
  const auto& p = r.params;
  j["params"] = {{"suite", p.suite}, {"n_min", p.n_min},     {"n_max", p.n_max},
                 {"k", maybe(p.k)},  {"x_set", p.x_set},     {"seed", maybe(p.seed)},
                 {"samples", maybe(p.samples)}};
  j["method"] = r.method;
  j["totals"] = {{"graphs", r.total},
                 {"violations", r.violations.size()},
                 {"equality_cases", r.equality_cases.size()},
                 {"findings", r.findings.size()}};
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json item = {{"graph6", v.graph6}, {"what", v.what}};
    if (v.check) item["check"] = check_json(*v.check);
    violations.push_back(std::move(item));
  }
  j["violations"] = std::move(violations);
  j["equality_cases"] = r.equality_cases;
  j["findings"] = r.findings;
  j["elapsed_ms"] = maybe(r.elapsed_ms);
  if (r.cache) {
    j["cache"] = {{"entries", r.cache->entries},
                  {"hits", r.cache->hits},
                  {"misses", r.cache->misses},
                  {"peak_depth", r.cache->peak_depth}};
  } else {
    j["cache"] = nullptr;
  }
  if (!r.checks.empty()) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(check_json(c));
    j["checks"] = std::move(checks);
  }
  return j.dump(2) + "\n";
}

std::string joined(const IntPoly& p) {
  std::string out;
  for (const auto& c : p.coefficients()) {
    if (!out.empty()) out += ";";
    out += c.str();
  }
  return out;
}

std::string to_csv(const VerifyReport& r) {
  std::ostringstream out;
  out << "graph6,n,k,alpha,pi,bound,poly_equal,tail_ok,violated,per_x\n";
  for (const auto& c : r.checks) {
    std::string per;
    for (const auto& p : c.per_x) {
      if (!per.empty()) per += ";";
      per += std::to_string(p.x) + ":" + p.pi.str() + ":" + p.bound.str() + ":" + to_string(p.ordering);
    }
    // graph6 never contains a comma or a quote, but may contain a backslash.
    out << c.graph6 << ',' << c.n << ',' << c.k << ',' << c.alpha << ',' << joined(c.pi) << ','
        << joined(c.bound) << ',' << c.poly_equal << ',' << c.tail_ok << ',' << c.violated() << ','
        << per << '\n';
  }
  return out.str();
}

}  // namespace

ReportFormat parse_format(std::string_view name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw InvalidArgument("unknown report format '" + std::string(name) + "'");
}

std::string emit_report(const VerifyReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::json:
      return to_json(report);
    case ReportFormat::csv:
      return to_csv(report);
  }
  throw InvalidArgument("unknown report format");
}

void append_report(VerifyReport& into, VerifyReport&& part) {
  if (into.params.suite.empty()) {
    into = std::move(part);
    return;
  }
  into.params.n_min = std::min(into.params.n_min, part.params.n_min);
  into.params.n_max = std::max(into.params.n_max, part.params.n_max);
  into.total += part.total;
  auto move_all = [](auto& dst, auto& src) {
    for (auto& item : src) dst.push_back(std::move(item));
  };
  move_all(into.violations, part.violations);
  move_all(into.equality_cases, part.equality_cases);
  move_all(into.findings, part.findings);
  move_all(into.checks, part.checks);
  if (part.elapsed_ms) into.elapsed_ms = into.elapsed_ms.value_or(0.0) + *part.elapsed_ms;
  if (part.cache) {
    CacheStats c = into.cache.value_or(CacheStats{});
    c += *part.cache;
    into.cache = c;
  }
}

std::string summary_line(const VerifyReport& r) {
  std::ostringstream out;
  out << r.params.suite << ": " << r.total << " checked, " << r.violations.size() << " violation(s), "
      << r.equality_cases.size() << " equality case(s)";
  if (!r.findings.empty()) out << ", " << r.findings.size() << " finding(s)";
  if (r.elapsed_ms) out << ", " << static_cast<long long>(*r.elapsed_ms) << " ms";
  out << (r.ok() ? " [ok]" : " [VIOLATIONS]");
  return out.str();
}

}  // namespace chrombound
