#pragma once

// The product (u, α) ∘ (v, β) = (αv + βu, αβ + ¼(∥u+v∥² − ∥u−v∥²)) on V^(∞),
// its zero products, and the Jordan subalgebras V(u) and V(u, v).

#include <memory>

#include <json.hpp>

#include "order_unit.hpp"

namespace spinx {

OrderElement circ(const OrderElement& x, const OrderElement& y);

struct BilinearityDefect {
  // Order-unit norm of (2u+v,0)∘(v,0) − 2(u,0)∘(v,0) − (v,0)∘(v,0).
  double defect = 0.0;
  // Scalar slot of that residual; the vector slot vanishes identically.
  double scalar_residual = 0.0;
  // ∥u+v∥² + ∥u−v∥² − 2∥u∥² − 2∥v∥², which is twice scalar_residual.
  double parallelogram_defect = 0.0;
};

BilinearityDefect bilinearity_defect(const Vector& u, const Vector& v);

// |x| ⊥ |y| via βu + αv = 0, ∥u∥ = |α|, ∥v∥ = |β|. True whenever either
// element is zero, in agreement with orthogonal(abs(x), abs(y)).
bool abs_orthogonal_check(const OrderElement& x, const OrderElement& y,
                          Tolerance tol = kDefaultTolerance);

// Rank of the 2 × n matrix [u; v] is below 2: σ₂ ≤ 1e−8·σ₁.
bool linearly_dependent(const Vector& u, const Vector& v);

enum class ZeroProductClass { NotZero, ZeroIndependent, ZeroDependentOrthogonal };
const char* to_string(ZeroProductClass c) noexcept;

// Classifies x ∘ y and verifies the side conditions that must accompany a
// zero product. Throws InconsistentWithTheorem when they do not.
ZeroProductClass zero_product_classify(const OrderElement& x, const OrderElement& y,
                                       Tolerance tol = kDefaultTolerance);

// Frames are compared by value, so two frames built from the same vectors
// are interchangeable.
class VuFrame {
 public:
  // u must have norm 1 within tol.
  explicit VuFrame(Vector u, Tolerance tol = kDefaultTolerance);
  const Vector& u() const noexcept { return u_; }
  const Space& space() const noexcept { return u_.space(); }
  bool operator==(const VuFrame& other) const noexcept;

 private:
  Vector u_;
};

// (a·u, b) ∈ V(u).
struct VuElement {
  double a;
  double b;
  VuFrame frame;

  OrderElement element() const;
  friend VuElement operator+(const VuElement& x, const VuElement& y);
  friend VuElement operator-(const VuElement& x, const VuElement& y);
};

double order_unit_norm(const VuElement& x);
nlohmann::json to_json(const VuElement& x);

// ((aδ + bγ), aγ + bδ). Throws MismatchedFrame.
VuElement vu_product(const VuElement& x, const VuElement& y);
// Positive square root in V(u); requires |a| ≤ b. Throws NotPositive.
VuElement vu_sqrt(const VuElement& x, Tolerance tol = kDefaultTolerance);

class VuvFrame {
 public:
  // u, v unit vectors with u ⊥₂ v on the default k-grid. Throws
  // InvalidArgument or NotOrthogonal.
  VuvFrame(Vector u, Vector v, Tolerance tol = kDefaultTolerance);
  const Vector& u() const noexcept { return u_; }
  const Vector& v() const noexcept { return v_; }
  const Space& space() const noexcept { return u_.space(); }
  // The ⊥₂ check made at construction.
  const Perp2Check& certificate() const noexcept { return cert_; }
  bool operator==(const VuvFrame& other) const noexcept;

 private:
  Vector u_;
  Vector v_;
  Perp2Check cert_;
};

// (a1·u + a2·v, b) ∈ V(u, v).
struct VuvElement {
  double a1;
  double a2;
  double b;
  VuvFrame frame;

  OrderElement element() const;
  friend VuvElement operator+(const VuvElement& x, const VuvElement& y);
  friend VuvElement operator-(const VuvElement& x, const VuvElement& y);
};

// Order-unit norm of the embedded element.
double order_unit_norm(const VuvElement& x);
nlohmann::json to_json(const VuvElement& x);

// ((δa1 + bγ1), (δa2 + bγ2), a1γ1 + a2γ2 + bδ). Throws MismatchedFrame.
VuvElement vuv_product(const VuvElement& x, const VuvElement& y);

// ∥x ∘ (y ∘ x²) − (x ∘ y) ∘ x²∥.
template <class T, class Product>
double jordan_identity_defect(const T& x, const T& y, Product&& product) {
  const T x2 = product(x, x);
  return order_unit_norm(product(x, product(y, x2)) - product(product(x, y), x2));
}

// ∥x² ∘ x² − x ∘ (x ∘ x²)∥.
template <class T, class Product>
double power_associativity_defect(const T& x, Product&& product) {
  const T x2 = product(x, x);
  return order_unit_norm(product(x2, x2) - product(x, product(x, x2)));
}

// |∥x²∥ − ∥x∥²|.
template <class T, class Product>
double jb_norm_check(const T& x, Product&& product) {
  const double n = order_unit_norm(x);
  return std::abs(order_unit_norm(product(x, x)) - n * n);
}

}  // namespace spinx
