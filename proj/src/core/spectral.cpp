#include "spectral.hpp"

#include <cmath>
#include <string>

namespace spinx {

OrderElement SpectralData::reconstruct() const {
  return lambda_minus * p_complement.element() + lambda_plus * p.element();
}

nlohmann::json to_json(const SpectralData& s) {
  return {{"lambda_minus", s.lambda_minus},
          {"lambda_plus", s.lambda_plus},
          {"p", to_json(s.p.element())}};
}

SpectralData decompose(const OrderElement& x) {
  const double nv = x.v().norm();
  if (nv == 0.0) {
    const OrderProjection e = OrderProjection::unit(x.space());
    return {x.alpha(), x.alpha(), e, e.complement()};
  }
  const OrderProjection p = OrderProjection::along(x.v());
  return {x.alpha() - nv, x.alpha() + nv, p, p.complement()};
}

OrderProjection SpectralFamily::at(double lambda) const {
  if (lambda >= lambda_plus) return OrderProjection::unit(middle.element().space());
  if (lambda >= lambda_minus) return middle;
  return OrderProjection::zero(middle.element().space());
}

SpectralFamily spectral_family(const OrderElement& x) {
  const SpectralData s = decompose(x);
  return {s.lambda_minus, s.lambda_plus, s.p_complement};
}

OrderElement square(const OrderElement& x) {
  const double a = x.alpha();
  const double nv = x.v().norm();
  return {(2.0 * a) * x.v(), a * a + nv * nv};
}

OrderElement power_binomial(const OrderElement& x, int n) {
  if (n < 1) fail(Errc::InvalidArgument, "power exponent must be at least 1");
  const double a = x.alpha();
  const double nv = x.v().norm();
  double vec = 0.0;
  double scalar = 0.0;
  double binom = 1.0;  // C(n, k)
  for (int k = 0; k <= n; ++k) {
    const double term = binom * std::pow(a, n - k);
    if (k % 2 == 0)
      scalar += term * std::pow(nv, k);
    else
      vec += term * std::pow(nv, k - 1);
    binom = binom * (n - k) / (k + 1);
  }
  return {vec * x.v(), scalar};
}

OrderElement power(const OrderElement& x, int n) {
  if (n < 1) fail(Errc::InvalidArgument, "power exponent must be at least 1");
  if (n == 1) return x;
  const OrderElement y = apply_scalar_function(x, [n](double t) { return std::pow(t, n); });
  const OrderElement check = power_binomial(x, n);
  const double scale = std::pow(std::abs(x.alpha()) + x.v().norm(), n);
  if (order_unit_norm(y - check) > 1e-10 * scale + 1e-300)
    fail(Errc::InconsistentWithTheorem,
         "spectral and binomial powers disagree for n = " + std::to_string(n));
  return y;
}

OrderElement sqrt_positive(const OrderElement& x, Tolerance tol) {
  const ConeClass c = cone_classify(x, tol);
  if (c != ConeClass::Positive && c != ConeClass::Zero)
    fail(Errc::NotPositive, "square root needs a positive element");
  const double a = x.alpha();
  const double nv = x.v().norm();
  if (c == ConeClass::Zero || nv == 0.0 || a <= 0.0)
    return {Vector::zero(x.space()), std::sqrt(std::max(a, 0.0))};
  // α − √(α² − ∥v∥²), written without cancellation. Boundary elements within
  // tolerance are clamped onto the cone.
  const double disc = std::sqrt(std::max(0.0, (a - nv) * (a + nv)));
  const double d = nv * nv / (a + disc);
  const double lambda = std::sqrt(d) / (nv * std::sqrt(2.0));
  const double mu = nv / std::sqrt(2.0 * d);
  return {lambda * x.v(), mu};
}

}  // namespace spinx
