#pragma once

// V × ℝ ordered by the cone {(v, α) : ∥v∥ ≤ α}, with order unit e = (0, 1),
// order-unit norm ∥v∥ + |α|, and the absolute value that comes with the cone.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include <json.hpp>

#include "normed_spaces.hpp"
#include "report.hpp"
#include "tolerance.hpp"

namespace spinx {

class OrderElement {
 public:
  OrderElement(Vector v, double alpha);

  static OrderElement unit(const Space& space);
  static OrderElement zero(const Space& space);

  const Vector& v() const noexcept { return v_; }
  double alpha() const noexcept { return alpha_; }
  const Space& space() const noexcept { return v_.space(); }

  friend OrderElement operator+(const OrderElement& a, const OrderElement& b) {
    return {a.v_ + b.v_, a.alpha_ + b.alpha_};
  }
  friend OrderElement operator-(const OrderElement& a, const OrderElement& b) {
    return {a.v_ - b.v_, a.alpha_ - b.alpha_};
  }
  friend OrderElement operator-(const OrderElement& a) { return {-a.v_, -a.alpha_}; }
  friend OrderElement operator*(double k, const OrderElement& a) {
    return {k * a.v_, k * a.alpha_};
  }
  friend OrderElement operator*(const OrderElement& a, double k) { return k * a; }

 private:
  Vector v_;
  double alpha_;
};

nlohmann::json to_json(const OrderElement& x);
OrderElement element_from_json(const Space& space, const nlohmann::json& j);

enum class ConeClass { Zero, Positive, Negative, Neither };
const char* to_string(ConeClass c) noexcept;

// ∥v∥ + |α|.
double order_unit_norm(const OrderElement& x);

// Ties ∥v∥ = |α| within tol.bound(∥x∥) count as cone members.
ConeClass cone_classify(const OrderElement& x, Tolerance tol = kDefaultTolerance);
bool in_cone(const OrderElement& x, Tolerance tol = kDefaultTolerance);

// x on the cone, −x on the negative cone, ((α/∥v∥)v, ∥v∥) otherwise.
OrderElement abs(const OrderElement& x, Tolerance tol = kDefaultTolerance);
// (|x| + x)/2 and (|x| − x)/2.
OrderElement pos_part(const OrderElement& x, Tolerance tol = kDefaultTolerance);
OrderElement neg_part(const OrderElement& x, Tolerance tol = kDefaultTolerance);

// y − x in the cone.
bool leq(const OrderElement& x, const OrderElement& y, Tolerance tol = kDefaultTolerance);

// Componentwise equality in order-unit norm, scaled by the larger operand.
bool approx_equal(const OrderElement& a, const OrderElement& b,
                  Tolerance tol = kDefaultTolerance);

// |x − y| = x + y.
bool orthogonal(const OrderElement& x, const OrderElement& y,
                Tolerance tol = kDefaultTolerance);
// Order-unit norm of |x − y| − (x + y).
double orthogonality_defect(const OrderElement& x, const OrderElement& y,
                            Tolerance tol = kDefaultTolerance);

// Member of {0, e} ∪ {(u, ½) : ∥u∥ = ½}.
class OrderProjection {
 public:
  static OrderProjection zero(const Space& space);
  static OrderProjection unit(const Space& space);
  // (d / 2∥d∥, ½). ZeroElement when d = 0.
  static OrderProjection along(const Vector& d);
  static std::optional<OrderProjection> from_element(const OrderElement& x,
                                                    Tolerance tol = kDefaultTolerance);

  const OrderElement& element() const noexcept { return e_; }
  // e − p.
  OrderProjection complement() const;
  bool is_trivial() const noexcept;

 private:
  explicit OrderProjection(OrderElement e) : e_(std::move(e)) {}
  OrderElement e_;
};

bool is_order_projection(const OrderElement& x, Tolerance tol = kDefaultTolerance);

struct OrthogonalStructure {
  OrderProjection p;
  double lambda;
  double mu;
};

// For nonzero x ⊥ y: x = λp and y = μ(e − p) with p = (u/2∥u∥, ½), λ = 2α,
// μ = 2β. Throws ZeroElement or NotOrthogonal.
OrthogonalStructure orthogonal_structure(const OrderElement& x, const OrderElement& y,
                                         Tolerance tol = kDefaultTolerance);

// Smallest order projection p with |x| ≤ ∥x∥ p. Throws ZeroElement for x = 0.
OrderProjection absolute_cover(const OrderElement& x, Tolerance tol = kDefaultTolerance);

// Random draw from the order interval [0, x]: either a multiple t·x or a
// transversal perturbation of one, accepted only if 0 ≤ z ≤ x.
std::optional<OrderElement> sample_sub_element(const OrderElement& x, Rng& rng,
                                               Tolerance tol = kDefaultTolerance);

struct PerpInfCheck {
  bool holds = true;
  double max_defect = 0.0;
  std::size_t pairs = 0;
};

// Absolute ∞-orthogonality: for sampled 0 ≤ x₁ ≤ x, 0 ≤ y₁ ≤ y and every k,
// ∥x₁ + k y₁∥ = max(∥x₁∥, ∥k y₁∥). Throws NotInCone.
PerpInfCheck perp_inf_a_check(const OrderElement& x, const OrderElement& y,
                              std::size_t sub_samples, std::span<const double> k_grid,
                              Tolerance tol = kDefaultTolerance, std::uint64_t seed = 0);

// Randomized check of the five absolutely-ordered-space axioms on V × ℝ.
// Check ids: "abs_fixes_cone", "abs_dominates", "abs_homogeneous",
// "perp_abs_sum", "perp_hereditary". All pass iff V is strictly convex.
CheckReport axiom_suite(const Space& space, std::size_t samples, std::uint64_t seed,
                        double tol);

// Test-and-campaign generators. random_element mixes interior, boundary,
// negative and scalar elements; random_cone_element stays in the cone.
OrderElement random_element(const Space& space, Rng& rng);
OrderElement random_cone_element(const Space& space, Rng& rng);

}  // namespace spinx
