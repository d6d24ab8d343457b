#include "report.hpp"

#include <algorithm>

namespace spinx {

bool CheckReport::all_pass() const noexcept {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

const CheckResult* CheckReport::find(std::string_view id) const noexcept {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

CheckResult& CheckReport::add(std::string id) {
  CheckResult r;
  r.id = std::move(id);
  checks.push_back(std::move(r));
  return checks.back();
}

nlohmann::json to_json(const CheckReport& report) {
  nlohmann::json axioms = nlohmann::json::array();
  for (const auto& c : report.checks) {
    axioms.push_back({{"id", c.id},
                      {"pass", c.pass},
                      {"witness", c.witness},
                      {"max_defect", c.max_defect},
                      {"checked", c.checked}});
  }
  nlohmann::json j = {{"schema", kReportSchema},
                      {"campaign", report.campaign},
                      {"space", report.space ? to_json(*report.space)
                                             : nlohmann::json(nullptr)},
                      {"axioms", std::move(axioms)},
                      {"pass", report.all_pass()},
                      {"seed", report.seed}};
  if (!report.parameters.empty()) j["parameters"] = report.parameters;
  return j;
}

}  // namespace spinx
