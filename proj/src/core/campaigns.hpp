#pragma once

// Named campaigns with the outcome each one is expected to produce. The CLI
// and the C API both go through run_campaign.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "normed_spaces.hpp"

namespace spinx {

struct CampaignConfig {
  std::uint64_t seed = 42;
  std::size_t samples = 10000;
  std::size_t resolution = 256;
  double tol = 1e-9;
  std::optional<double> p;  // lp2 only; defaults to 4
  std::string csv_path;     // lp2 defect surface
};

struct CampaignResult {
  nlohmann::json report;
  bool expectation_met = false;
};

// Default spaces when none is given: lp:4:2 for axioms, bilinearity and
// probe, lp:4:3 for jordan. lp2, h1 and l42 ignore the space.
CampaignResult run_campaign(std::string_view name, const std::optional<Space>& space,
                            const CampaignConfig& cfg);

// "axioms", "bilinearity", "h1", "jordan", "l42", "lp2", "probe".
const std::vector<std::string>& campaign_names();

// ∥·∥ comes from an inner product: weighted and Hilbert spaces, ℓ_2, and any
// one-dimensional space.
bool is_hilbertian(const Space& space);

}  // namespace spinx
