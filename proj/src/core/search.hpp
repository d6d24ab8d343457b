#pragma once

// Grid campaigns around Pythagorean orthogonality: the ℓ_p² sweep, the
// monotone step of its proof, the Hilbertian plane of ℓ₄³ and the ℓ₄² zero
// product pair.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "jordan.hpp"
#include "normed_spaces.hpp"
#include "report.hpp"

namespace spinx {

struct GridSpec {
  std::size_t resolution = 256;
  std::vector<double> k_grid = default_k_grid();
  double tol = 1e-9;

  // resolution ≥ 8, k_grid holds ±1.
  void validate() const;
};

enum class Verdict { TrivialOnly, CandidateFound };
const char* to_string(Verdict v) noexcept;

struct SearchCertificate {
  Space space;
  GridSpec grid;
  double min_defect = 0.0;
  Vector u;
  Vector v;
  std::size_t argmin_i = 0;  // angle indices of u and v
  std::size_t argmin_j = 0;
  Verdict verdict = Verdict::TrivialOnly;
};

nlohmann::json to_json(const SearchCertificate& c);

// Point i of the unit sphere of ℓ_p²: (cos θ, sin θ)/∥(cos θ, sin θ)∥_p with
// θ = 2πi/resolution.
Vector lp2_sphere_point(const Space& space, std::size_t i, std::size_t resolution);

// Minimum over all resolution² unit pairs of the worst ⊥₂ defect on the
// k-grid. Ties go to the lexicographically smallest (i, j). When csv_path is
// nonempty the whole defect surface is written there.
SearchCertificate lp2_triviality_campaign(double p, const GridSpec& grid,
                                          const std::string& csv_path = {});

struct MonotoneCheck {
  bool pass = false;
  double min_increment = 0.0;  // smallest f(x_{i+1}) − f(x_i)
  double min_slope = 0.0;      // smallest f′ at interior grid points
};

nlohmann::json to_json(const MonotoneCheck& m);

// f(x) = x² − (1 − x^p)^(2/p) on a uniform grid of [0, 1].
MonotoneCheck f_monotone_check(double p, std::size_t grid_points);

// u = 2^(−1/4)(1, 1, 0), v = 18^(−1/4)(1, −1, 2) in ℓ₄³.
struct VectorPair {
  Vector u;
  Vector v;
};
VectorPair l43_example_pair();

// u = (1, (√3+√5)/2), v = (1, (√3−√5)/2) in ℓ₄².
VectorPair l42_zero_product_pair();

CheckReport h1_plane_campaign(std::size_t samples, std::uint64_t seed, double tol);

// Check ids: "k1_equality", "k_ne_1_gap", "kl_unit_criterion",
// "k_eq_l_criterion". The (k, l) grid is {2^j : j = −8..8}².
CheckReport l42_scaling_campaign(double tol);

}  // namespace spinx
