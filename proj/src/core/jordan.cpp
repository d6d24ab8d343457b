#include "jordan.hpp"

#include <cmath>

#include <Eigen/SVD>

namespace spinx {

OrderElement circ(const OrderElement& x, const OrderElement& y) {
  require_same_space(x.space(), y.space());
  const Vector& u = x.v();
  const Vector& v = y.v();
  const double a = x.alpha();
  const double b = y.alpha();
  const double s = (u + v).norm();
  const double d = (u - v).norm();
  // Same sum for (x, y) and (y, x): u + v and v + u round identically, and
  // ∥u − v∥ = ∥v − u∥.
  return {a * v + b * u, a * b + 0.25 * (s - d) * (s + d)};
}

BilinearityDefect bilinearity_defect(const Vector& u, const Vector& v) {
  require_same_space(u.space(), v.space());
  const OrderElement U(u, 0.0);
  const OrderElement V(v, 0.0);
  const OrderElement lhs = circ(OrderElement(2.0 * u + v, 0.0), V);
  const OrderElement r = lhs - 2.0 * circ(U, V) - circ(V, V);
  return {order_unit_norm(r), r.alpha(), parallelogram_defect(u, v)};
}

bool abs_orthogonal_check(const OrderElement& x, const OrderElement& y, Tolerance tol) {
  require_same_space(x.space(), y.space());
  if (cone_classify(x, tol) == ConeClass::Zero || cone_classify(y, tol) == ConeClass::Zero)
    return true;
  const double a = x.alpha();
  const double b = y.alpha();
  const double nu = x.v().norm();
  const double nv = y.v().norm();
  const double scale = (nu + std::abs(a)) * (nv + std::abs(b));
  return (b * x.v() + a * y.v()).norm() <= tol.bound(scale) &&
         std::abs(nu - std::abs(a)) <= tol.bound(nu + std::abs(a)) &&
         std::abs(nv - std::abs(b)) <= tol.bound(nv + std::abs(b));
}

namespace {

// σ₁ and σ₂ of the 2 × n matrix with rows u and v.
std::pair<double, double> singular_pair(const Vector& u, const Vector& v) {
  const Eigen::Index n = static_cast<Eigen::Index>(u.size());
  Eigen::MatrixXd m(2, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(0, i) = u[static_cast<std::size_t>(i)];
    m(1, i) = v[static_cast<std::size_t>(i)];
  }
  if (n == 1) return {m.norm(), 0.0};
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  return {s(0), s(1)};
}

}  // namespace

bool linearly_dependent(const Vector& u, const Vector& v) {
  require_same_space(u.space(), v.space());
  const auto [s1, s2] = singular_pair(u, v);
  return s2 <= 1e-8 * s1;
}

const char* to_string(ZeroProductClass c) noexcept {
  switch (c) {
    case ZeroProductClass::NotZero: return "not_zero";
    case ZeroProductClass::ZeroIndependent: return "zero_independent";
    case ZeroProductClass::ZeroDependentOrthogonal: return "zero_dependent_orthogonal";
  }
  return "?";
}

ZeroProductClass zero_product_classify(const OrderElement& x, const OrderElement& y,
                                       Tolerance tol) {
  const double nx = order_unit_norm(x);
  const double ny = order_unit_norm(y);
  const OrderElement z = circ(x, y);
  const double zero_bound = tol.bound(nx * ny);
  if (order_unit_norm(z) > zero_bound) return ZeroProductClass::NotZero;

  const Vector& u = x.v();
  const Vector& v = y.v();
  const auto [s1, s2] = singular_pair(u, v);
  if (s2 > 1e-8 * s1) {
    // αv + βu ≈ 0 with u, v independent forces α, β ≈ 0; the slack grows
    // with the conditioning of {u, v}.
    const double slack = zero_bound * (1.0 + s1 / s2);
    const double a = x.alpha();
    const double b = y.alpha();
    const double s = (u + v).norm();
    const double d = (u - v).norm();
    const bool ok = std::abs(a) * v.norm() <= slack && std::abs(b) * u.norm() <= slack &&
                    std::abs(s - d) * (s + d) <= 4.0 * (slack + std::abs(a * b));
    if (!ok)
      fail(Errc::InconsistentWithTheorem,
           "zero product of independent vectors without α = β = 0 and ∥u+v∥ = ∥u−v∥");
    return ZeroProductClass::ZeroIndependent;
  }
  if (!orthogonal(abs(x, tol), abs(y, tol), tol))
    fail(Errc::InconsistentWithTheorem,
         "zero product of dependent vectors whose absolute values are not orthogonal");
  return ZeroProductClass::ZeroDependentOrthogonal;
}

VuFrame::VuFrame(Vector u, Tolerance tol) : u_(std::move(u)) {
  if (std::abs(u_.norm() - 1.0) > tol.bound(1.0))
    fail(Errc::InvalidArgument, "V(u) needs a unit vector u");
}

bool VuFrame::operator==(const VuFrame& other) const noexcept {
  if (!(u_.space() == other.u_.space())) return false;
  const auto a = u_.coords();
  const auto b = other.u_.coords();
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

OrderElement VuElement::element() const { return {a * frame.u(), b}; }

namespace {

void require_same_frame(bool same) {
  if (!same) fail(Errc::MismatchedFrame, "elements belong to different frames");
}

}  // namespace

VuElement operator+(const VuElement& x, const VuElement& y) {
  require_same_frame(x.frame == y.frame);
  return {x.a + y.a, x.b + y.b, x.frame};
}

VuElement operator-(const VuElement& x, const VuElement& y) {
  require_same_frame(x.frame == y.frame);
  return {x.a - y.a, x.b - y.b, x.frame};
}

double order_unit_norm(const VuElement& x) { return std::abs(x.a) + std::abs(x.b); }

nlohmann::json to_json(const VuElement& x) {
  return {{"a", x.a}, {"b", x.b}, {"u", to_json(x.frame.u())}};
}

VuElement vu_product(const VuElement& x, const VuElement& y) {
  require_same_frame(x.frame == y.frame);
  return {x.a * y.b + x.b * y.a, x.a * y.a + x.b * y.b, x.frame};
}

VuElement vu_sqrt(const VuElement& x, Tolerance tol) {
  const double a = x.a;
  const double b = x.b;
  if (std::abs(a) > b + tol.bound(std::abs(a) + std::abs(b)))
    fail(Errc::NotPositive, "square root in V(u) needs |a| ≤ b");
  if (b <= 0.0) return {0.0, 0.0, x.frame};
  const double disc = std::sqrt(std::max(0.0, (b - a) * (b + a)));
  // (b − √(b² − a²))/2 without cancellation.
  const double lo = a * a / (2.0 * (b + disc));
  const double lambda = std::copysign(std::sqrt(lo), a);
  const double mu = std::sqrt((b + disc) / 2.0);
  return {a == 0.0 ? 0.0 : lambda, mu, x.frame};
}

VuvFrame::VuvFrame(Vector u, Vector v, Tolerance tol) : u_(std::move(u)), v_(std::move(v)) {
  require_same_space(u_.space(), v_.space());
  if (std::abs(u_.norm() - 1.0) > tol.bound(1.0) || std::abs(v_.norm() - 1.0) > tol.bound(1.0))
    fail(Errc::InvalidArgument, "V(u, v) needs unit vectors u and v");
  const auto grid = default_k_grid();
  cert_ = perp2_check(u_, v_, grid, tol.abs);
  if (!cert_.holds) fail(Errc::NotOrthogonal, "V(u, v) needs u ⊥₂ v");
}

bool VuvFrame::operator==(const VuvFrame& other) const noexcept {
  if (!(u_.space() == other.u_.space())) return false;
  const auto eq = [](const Vector& a, const Vector& b) {
    const auto x = a.coords();
    const auto y = b.coords();
    return std::equal(x.begin(), x.end(), y.begin(), y.end());
  };
  return eq(u_, other.u_) && eq(v_, other.v_);
}

OrderElement VuvElement::element() const { return {a1 * frame.u() + a2 * frame.v(), b}; }

VuvElement operator+(const VuvElement& x, const VuvElement& y) {
  require_same_frame(x.frame == y.frame);
  return {x.a1 + y.a1, x.a2 + y.a2, x.b + y.b, x.frame};
}

VuvElement operator-(const VuvElement& x, const VuvElement& y) {
  require_same_frame(x.frame == y.frame);
  return {x.a1 - y.a1, x.a2 - y.a2, x.b - y.b, x.frame};
}

double order_unit_norm(const VuvElement& x) { return order_unit_norm(x.element()); }

nlohmann::json to_json(const VuvElement& x) {
  return {{"a1", x.a1},
          {"a2", x.a2},
          {"b", x.b},
          {"u", to_json(x.frame.u())},
          {"v", to_json(x.frame.v())}};
}

VuvElement vuv_product(const VuvElement& x, const VuvElement& y) {
  require_same_frame(x.frame == y.frame);
  return {y.b * x.a1 + x.b * y.a1, y.b * x.a2 + x.b * y.a2,
          x.a1 * y.a1 + x.a2 * y.a2 + x.b * y.b, x.frame};
}

}  // namespace spinx
