#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "normed_spaces.hpp"

namespace spinx {

inline constexpr std::string_view kReportSchema = "spinx-report/1";

struct CheckResult {
  std::string id;
  bool pass = true;
  nlohmann::json witness;  // null when there is nothing to show
  double max_defect = 0.0;
  std::size_t checked = 0;
};

struct CheckReport {
  std::string campaign;
  std::optional<Space> space;
  std::uint64_t seed = 0;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<CheckResult> checks;

  bool all_pass() const noexcept;
  const CheckResult* find(std::string_view id) const noexcept;
  CheckResult& add(std::string id);
};

nlohmann::json to_json(const CheckReport& report);

}  // namespace spinx
