#pragma once

#include "ccdet/chart.hpp"
#include "ccdet/gamma_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ccdet {

enum class Verdict { Constant, NotConstant, ConformalConstant, Inconclusive };

std::string verdict_str(Verdict v);
int verdict_exit_code(Verdict v);

// One piece of evidence: a rule identifier plus a rendered witness.
struct Reason {
  std::string rule;
  std::string witness;
};

struct DetectionReport {
  Verdict verdict = Verdict::Inconclusive;
  std::vector<Reason> reasons;
  std::optional<Chart> chart;
  std::vector<RankReport> rank_data;

  void add_reason(std::string rule, std::string witness);
};

std::string report_text(const DetectionReport& r);
std::string report_json(const DetectionReport& r); // schema: 1

} // namespace ccdet
