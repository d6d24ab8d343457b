#pragma once

// Two-point spectral theory of V^(∞): every (v, α) is λ₋(e − p) + λ₊p with
// λ∓ = α ∓ ∥v∥ and p = (v/2∥v∥, ½).

#include <json.hpp>

#include "order_unit.hpp"

namespace spinx {

struct SpectralData {
  double lambda_minus;
  double lambda_plus;
  OrderProjection p;             // (v/2∥v∥, ½), or e when v = 0
  OrderProjection p_complement;  // e − p

  OrderElement reconstruct() const;
};

nlohmann::json to_json(const SpectralData& s);

SpectralData decompose(const OrderElement& x);

// λ ↦ e_λ: 0 below lambda_minus, `middle` on [lambda_minus, lambda_plus),
// e from lambda_plus on. When v = 0 both breakpoints coincide and there is a
// single jump from 0 to e.
struct SpectralFamily {
  double lambda_minus;
  double lambda_plus;
  OrderProjection middle;

  OrderProjection at(double lambda) const;
};

SpectralFamily spectral_family(const OrderElement& x);

// f(λ₋)(e − p) + f(λ₊)p.
template <class F>
OrderElement apply_scalar_function(const OrderElement& x, F&& f) {
  const SpectralData s = decompose(x);
  return f(s.lambda_minus) * s.p_complement.element() + f(s.lambda_plus) * s.p.element();
}

// (2αv, α² + ∥v∥²).
OrderElement square(const OrderElement& x);

// xⁿ from the spectral form, n ≥ 1. Throws InconsistentWithTheorem when the
// binomial expansion disagrees by more than 1e−10 relative.
OrderElement power(const OrderElement& x, int n);
// Binomial form ((Σ C(n,odd k) α^(n−k) ∥v∥^(k−1)) v, Σ C(n,even k) α^(n−k) ∥v∥^k).
OrderElement power_binomial(const OrderElement& x, int n);

// Unique positive square root of a cone element. Throws NotPositive.
OrderElement sqrt_positive(const OrderElement& x, Tolerance tol = kDefaultTolerance);

}  // namespace spinx
