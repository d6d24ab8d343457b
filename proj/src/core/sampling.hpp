#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include <json.hpp>

#include "parallel.hpp"
#include "report.hpp"

namespace spinx {

struct SampleOutcome {
  bool skipped = false;
  double defect = 0.0;
  double bound = 0.0;
  nlohmann::json witness;
};

// Evaluates sample(i) for i < samples in parallel chunks. The reported
// witness is the lowest-index failure, independent of chunking.
template <class Sample>
void run_samples(CheckResult& r, std::size_t samples, Sample&& sample) {
  struct Partial {
    double max_defect = 0.0;
    std::size_t checked = 0;
    std::size_t first_failure = std::numeric_limits<std::size_t>::max();
    nlohmann::json witness;
  };
  const std::size_t chunks = worker_count();
  std::vector<Partial> partial(chunks);
  for_each_chunk(samples, chunks, [&](std::size_t begin, std::size_t end, std::size_t c) {
    Partial& p = partial[c];
    for (std::size_t i = begin; i < end; ++i) {
      SampleOutcome o = sample(i);
      if (o.skipped) continue;
      ++p.checked;
      p.max_defect = std::max(p.max_defect, o.defect);
      if (o.defect > o.bound && i < p.first_failure) {
        p.first_failure = i;
        p.witness = std::move(o.witness);
      }
    }
  });
  for (auto& p : partial) {
    r.checked += p.checked;
    r.max_defect = std::max(r.max_defect, p.max_defect);
    if (r.pass && p.first_failure != std::numeric_limits<std::size_t>::max()) {
      r.pass = false;
      r.witness = std::move(p.witness);
    }
  }
}

}  // namespace spinx
