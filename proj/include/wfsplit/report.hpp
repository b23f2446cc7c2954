#pragma once

#include <string>

#include "wfsplit/regularity.hpp"

namespace wfsplit {

// Report text is deterministic: fixed field order, 9 significant digits.

std::string format_sig9(double value);

std::string analyze_report_json(const MeshSummary& summary);
std::string analyze_report_csv(const MeshSummary& summary);

std::string verification_report_json(const VerificationReport& report);
/// One "id status worst_margin" line per check, then the refined summary.
std::string verification_report_text(const VerificationReport& report);

/// Header "eps,c0,observed,c1,slack" plus one row per record.
std::string sweep_csv(const SweepResult& sweep);

/// Header "child_id,parent_id"; parent is the root ancestor.
std::string provenance_csv(const RefinementOutput& out);

}  // namespace wfsplit
