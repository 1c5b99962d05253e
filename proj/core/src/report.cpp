#include "ccdet/report.hpp"

#include "ccdet/parse.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace ccdet {

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Constant: return "CONSTANT";
    case Verdict::NotConstant: return "NOT_CONSTANT";
    case Verdict::ConformalConstant: return "CONFORMAL_CONSTANT";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  throw std::logic_error("verdict_str: bad value");
}

int verdict_exit_code(Verdict v) {
  switch (v) {
    case Verdict::Constant:
    case Verdict::ConformalConstant: return 0;
    case Verdict::NotConstant: return 1;
    case Verdict::Inconclusive: return 2;
  }
  throw std::logic_error("verdict_exit_code: bad value");
}

void DetectionReport::add_reason(std::string rule, std::string witness) {
  reasons.push_back({std::move(rule), std::move(witness)});
}

namespace {

std::string point_str(const QVector& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += p[i].str();
  }
  return s + ")";
}

} // namespace

std::string report_text(const DetectionReport& r) {
  std::ostringstream os;
  os << "verdict: " << verdict_str(r.verdict) << "\n";
  for (const auto& reason : r.reasons) os << "reason: " << reason.rule << ": " << reason.witness << "\n";
  for (const auto& rk : r.rank_data)
    os << "rank: point " << point_str(rk.point) << " rank_M " << rk.rank_M << " rank_M_aug "
       << rk.rank_M_aug << (rk.consistent ? " consistent" : " INCONSISTENT") << "\n";
  if (r.chart) os << "chart:\n" << render_chart(*r.chart);
  return os.str();
}

std::string report_json(const DetectionReport& r) {
  nlohmann::json j;
  j["schema"] = 1;
  j["verdict"] = verdict_str(r.verdict);
  j["reasons"] = nlohmann::json::array();
  for (const auto& reason : r.reasons) j["reasons"].push_back({{"rule", reason.rule}, {"witness", reason.witness}});
  j["rank_data"] = nlohmann::json::array();
  for (const auto& rk : r.rank_data) {
    nlohmann::json p = nlohmann::json::array();
    for (const auto& c : rk.point) p.push_back(c.str());
    j["rank_data"].push_back({{"point", p},
                              {"rank_M", rk.rank_M},
                              {"rank_M_aug", rk.rank_M_aug},
                              {"consistent", rk.consistent}});
  }
  if (r.chart)
    j["chart"] = render_chart(*r.chart);
  else
    j["chart"] = nullptr;
  return j.dump(2) + "\n";
}

} // namespace ccdet
