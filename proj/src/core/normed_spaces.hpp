#pragma once

// Finite-dimensional real normed spaces: ℓ_p^n (1 ≤ p ≤ ∞), Euclidean
// Hilbert spaces, and coordinate spaces carrying a weighted inner product
// <x, y> = xᵀ G y. Everything else in the library is parameterized over Space.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <json.hpp>

#include "errors.hpp"
#include "rng.hpp"
#include "tolerance.hpp"

namespace spinx {

enum class SpaceKind { Lp, Hilbert, Weighted };

// Linear isometry candidate from a weighted space into ℓ_p^m. Stored with the
// descriptor so that compatibility of the two norms can be measured.
struct Embedding {
  Eigen::MatrixXd matrix;  // m × dim
  double p = 2.0;
};

class Space {
 public:
  // p in [1, ∞]; pass std::numeric_limits<double>::infinity() for the max norm.
  static Space lp(double p, std::size_t dim);
  static Space hilbert(std::size_t dim);
  // gram must be symmetric positive definite.
  static Space weighted(Eigen::MatrixXd gram,
                        std::optional<Embedding> embedding = std::nullopt);
  // The plane {(a, b, a + b)} of ℓ_4^3 in (a, b) coordinates, with
  // Gram matrix (1/√2)[[2, 1], [1, 2]] and its embedding into ℓ_4^3.
  static Space h1_plane();

  SpaceKind kind() const noexcept;
  // Exponent of the norm: p for Lp, 2 for Hilbert, 2 for Weighted.
  double p() const noexcept;
  std::size_t dim() const noexcept;
  const Eigen::MatrixXd& gram() const noexcept;
  const std::optional<Embedding>& embedding() const noexcept;
  bool has_inner_product() const noexcept;
  // Shell-friendly form: lp:<p>:<n>, hilbert:<n>, weighted:<n>.
  std::string label() const;

  // Unchecked evaluation; callers guarantee x.size() == dim().
  double norm(std::span<const double> x) const;
  double norm_squared(std::span<const double> x) const;
  double inner(std::span<const double> x, std::span<const double> y) const;

  bool operator==(const Space& other) const noexcept;

 private:
  struct Impl;
  explicit Space(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

nlohmann::json to_json(const Space& space);
Space space_from_json(const nlohmann::json& j);

// Coordinate vector tied to a space. Entries are finite.
class Vector {
 public:
  Vector(Space space, std::vector<double> coords);
  static Vector zero(Space space);
  static Vector basis(Space space, std::size_t i);

  const Space& space() const noexcept { return space_; }
  std::span<const double> coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }

  double norm() const { return space_.norm(coords_); }
  bool is_zero() const noexcept;

  friend Vector operator+(const Vector& a, const Vector& b);
  friend Vector operator-(const Vector& a, const Vector& b);
  friend Vector operator-(const Vector& a);
  friend Vector operator*(double k, const Vector& a);
  friend Vector operator*(const Vector& a, double k) { return k * a; }
  friend Vector operator/(const Vector& a, double k) { return (1.0 / k) * a; }

 private:
  Space space_;
  std::vector<double> coords_;
};

nlohmann::json to_json(const Vector& v);

// Throws SpaceMismatch unless both vectors live in the same space.
void require_same_space(const Space& a, const Space& b);

double norm(const Space& space, const Vector& v);
// Defined for Hilbert, weighted and ℓ_2 spaces; UnsupportedSpace otherwise.
double inner(const Space& space, const Vector& u, const Vector& v);

// ∥u+v∥² + ∥u−v∥² − 2∥u∥² − 2∥v∥². Zero exactly when the norm comes from an
// inner product (for all pairs).
double parallelogram_defect(const Vector& u, const Vector& v);

// {0, ±1} ∪ {±2^j : j = −8..8}, ascending.
std::vector<double> default_k_grid();

// |∥u + k v∥² − ∥u∥² − k²∥v∥²| at a single k.
double perp2_defect_at(const Vector& u, const Vector& v, double k);
// Maximum of perp2_defect_at over the grid.
double perp2_defect(const Vector& u, const Vector& v,
                    std::span<const double> k_grid);

struct Perp2Check {
  bool holds = false;
  double max_defect = 0.0;
  double worst_k = 0.0;
};

// Pythagorean (⊥₂) orthogonality test on a finite k-grid. The grid must hold
// both signs, some |k| ≤ 1 and some |k| ≥ 4.
Perp2Check perp2_check(const Vector& u, const Vector& v,
                       std::span<const double> k_grid, double tol);

// Analytic answer: ℓ_p for 1 < p < ∞, Hilbert and weighted spaces.
bool strict_convexity_verdict(const Space& space);

// Random vectors; components uniform in [−scale, scale].
Vector random_vector(const Space& space, Rng& rng, double scale = 1.0);
Vector random_unit_vector(const Space& space, Rng& rng);

// |∥x∥ − ∥E x∥_p| for a weighted space carrying an embedding.
double embedding_defect(const Space& space, const Vector& x);
Vector embed(const Space& space, const Vector& x);

struct CheckReport;

struct FlatSegment {
  Vector u;
  Vector v;
};

// First unit-sphere pair (same order as strict_convexity_probe) whose
// midpoint has norm ≥ 1 − tol, if any.
std::optional<FlatSegment> find_flat_segment(const Space& space, std::size_t sample_pairs,
                                             std::uint64_t seed, double tol);

// Samples unit-sphere pairs (coordinate-axis pairs first, then random pairs
// with ∥u − v∥ ≥ 1/2) and looks for a midpoint with ∥(u+v)/2∥ ≥ 1 − tol.
// The single check's max_defect is the largest midpoint norm seen.
CheckReport strict_convexity_probe(const Space& space, std::size_t sample_pairs,
                                   std::uint64_t seed, double tol);

}  // namespace spinx
