#pragma once

#include <string>
#include <string_view>

#include "chrombound/verifier.hpp"

namespace chrombound {

enum class ReportFormat { json, csv };

// Throws InvalidArgument for anything other than "json" or "csv".
ReportFormat parse_format(std::string_view name);

// JSON: {params, method, totals, violations, equality_cases, findings,
// elapsed_ms, cache} plus `checks` when the report carries them.
// CSV: a header and one row per BoundCheck.
std::string emit_report(const VerifyReport& report, ReportFormat format);

// Folds `part` into `into`, widening the n range; used when one CLI run
// covers several orders.
void append_report(VerifyReport& into, VerifyReport&& part);

std::string summary_line(const VerifyReport& report);

}  // namespace chrombound
