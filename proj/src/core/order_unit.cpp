#include "order_unit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "sampling.hpp"

namespace spinx {

OrderElement::OrderElement(Vector v, double alpha) : v_(std::move(v)), alpha_(alpha) {
  if (!std::isfinite(alpha_)) fail(Errc::InvalidArgument, "alpha must be finite");
}

OrderElement OrderElement::unit(const Space& space) { return {Vector::zero(space), 1.0}; }
OrderElement OrderElement::zero(const Space& space) { return {Vector::zero(space), 0.0}; }

nlohmann::json to_json(const OrderElement& x) {
  return {{"v", to_json(x.v())}, {"alpha", x.alpha()}};
}

OrderElement element_from_json(const Space& space, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("v") || !j.contains("alpha"))
    fail(Errc::Parse, "element must be an object with \"v\" and \"alpha\"");
  const auto& v = j.at("v");
  const auto& a = j.at("alpha");
  if (!v.is_array() || !a.is_number()) fail(Errc::Parse, "element needs numeric \"v\" and \"alpha\"");
  std::vector<double> coords;
  for (const auto& c : v) {
    if (!c.is_number()) fail(Errc::Parse, "element coordinates must be numbers");
    coords.push_back(c.get<double>());
  }
  return {Vector(space, std::move(coords)), a.get<double>()};
}

const char* to_string(ConeClass c) noexcept {
  switch (c) {
    case ConeClass::Zero: return "zero";
    case ConeClass::Positive: return "positive";
    case ConeClass::Negative: return "negative";
    case ConeClass::Neither: return "neither";
  }
  return "?";
}

double order_unit_norm(const OrderElement& x) { return x.v().norm() + std::abs(x.alpha()); }

ConeClass cone_classify(const OrderElement& x, Tolerance tol) {
  const double nv = x.v().norm();
  const double a = x.alpha();
  if (nv <= tol.abs && std::abs(a) <= tol.abs) return ConeClass::Zero;
  const double t = tol.bound(nv + std::abs(a));
  if (nv <= a + t) return ConeClass::Positive;
  if (nv <= -a + t) return ConeClass::Negative;
  return ConeClass::Neither;
}

bool in_cone(const OrderElement& x, Tolerance tol) {
  const ConeClass c = cone_classify(x, tol);
  return c == ConeClass::Positive || c == ConeClass::Zero;
}

OrderElement abs(const OrderElement& x, Tolerance tol) {
  switch (cone_classify(x, tol)) {
    case ConeClass::Zero:
      // All three branches agree at 0; keep the input's tiny residue.
      return x.alpha() >= 0.0 ? x : -x;
    case ConeClass::Positive:
      return x;
    case ConeClass::Negative:
      return -x;
    case ConeClass::Neither: {
      const double nv = x.v().norm();
      return {(x.alpha() / nv) * x.v(), nv};
    }
  }
  return x;
}

OrderElement pos_part(const OrderElement& x, Tolerance tol) { return 0.5 * (abs(x, tol) + x); }
OrderElement neg_part(const OrderElement& x, Tolerance tol) { return 0.5 * (abs(x, tol) - x); }

bool leq(const OrderElement& x, const OrderElement& y, Tolerance tol) {
  require_same_space(x.space(), y.space());
  return in_cone(y - x, tol);
}

bool approx_equal(const OrderElement& a, const OrderElement& b, Tolerance tol) {
  const double scale = std::max(order_unit_norm(a), order_unit_norm(b));
  return order_unit_norm(a - b) <= tol.bound(scale);
}

double orthogonality_defect(const OrderElement& x, const OrderElement& y, Tolerance tol) {
  return order_unit_norm(abs(x - y, tol) - (x + y));
}

bool orthogonal(const OrderElement& x, const OrderElement& y, Tolerance tol) {
  const OrderElement lhs = abs(x - y, tol);
  const OrderElement rhs = x + y;
  return approx_equal(lhs, rhs, tol);
}

OrderProjection OrderProjection::zero(const Space& space) {
  return OrderProjection(OrderElement::zero(space));
}

OrderProjection OrderProjection::unit(const Space& space) {
  return OrderProjection(OrderElement::unit(space));
}

OrderProjection OrderProjection::along(const Vector& d) {
  const double n = d.norm();
  if (n == 0.0) fail(Errc::ZeroElement, "order projection direction is zero");
  return OrderProjection(OrderElement(d / (2.0 * n), 0.5));
}

std::optional<OrderProjection> OrderProjection::from_element(const OrderElement& x,
                                                             Tolerance tol) {
  if (!is_order_projection(x, tol)) return std::nullopt;
  return OrderProjection(x);
}

OrderProjection OrderProjection::complement() const {
  return OrderProjection(OrderElement::unit(e_.space()) - e_);
}

bool OrderProjection::is_trivial() const noexcept { return e_.v().is_zero(); }

bool is_order_projection(const OrderElement& x, Tolerance tol) {
  const double nv = x.v().norm();
  const double a = x.alpha();
  if (nv <= tol.abs && (std::abs(a) <= tol.abs || std::abs(a - 1.0) <= tol.abs)) return true;
  return std::abs(a - 0.5) <= tol.abs && std::abs(nv - 0.5) <= tol.abs;
}

OrthogonalStructure orthogonal_structure(const OrderElement& x, const OrderElement& y,
                                         Tolerance tol) {
  if (cone_classify(x, tol) == ConeClass::Zero || cone_classify(y, tol) == ConeClass::Zero)
    fail(Errc::ZeroElement, "orthogonal structure needs two nonzero elements");
  if (!orthogonal(x, y, tol)) fail(Errc::NotOrthogonal, "elements are not orthogonal");
  return {OrderProjection::along(x.v()), 2.0 * x.alpha(), 2.0 * y.alpha()};
}

OrderProjection absolute_cover(const OrderElement& x, Tolerance tol) {
  if (cone_classify(x, tol) == ConeClass::Zero)
    fail(Errc::ZeroElement, "the zero element has no absolute cover");
  const double nv = x.v().norm();
  const double a = x.alpha();
  const double t = tol.bound(nv + std::abs(a));
  if (nv > t) {
    if (a > 0.0 && std::abs(nv - a) <= t) return OrderProjection::along(x.v());
    if (a < 0.0 && std::abs(nv + a) <= t) return OrderProjection::along(-x.v());
  }
  return OrderProjection::unit(x.space());
}

std::optional<OrderElement> sample_sub_element(const OrderElement& x, Rng& rng,
                                               Tolerance tol) {
  const double t = rng.uniform(0.05, 0.95);
  if (rng.coin()) return t * x;

  const Space& space = x.space();
  const double scale = order_unit_norm(x);
  if (scale == 0.0) return OrderElement::zero(space);
  const double nv = x.v().norm();
  // Perturbations nearly parallel to v would pass the order test within
  // tolerance without being genuine sub-elements; keep them transversal.
  Vector delta = random_unit_vector(space, rng);
  if (nv > 0.0) {
    const Vector dir = x.v() / nv;
    for (int tries = 0; tries < 64; ++tries) {
      if ((delta - dir).norm() >= 0.3 && (delta + dir).norm() >= 0.3) break;
      delta = random_unit_vector(space, rng);
    }
  }
  const double rho = rng.uniform(0.1, 0.4) * scale;
  const Vector w = t * x.v() + rho * delta;
  // Either snap the scalar slot onto the cone boundary or jitter it.
  const double gamma = rng.coin() ? w.norm() : t * x.alpha() + rng.uniform(-rho, rho);
  OrderElement z(w, gamma);
  if (in_cone(z, tol) && leq(z, x, tol)) return z;
  return std::nullopt;
}

PerpInfCheck perp_inf_a_check(const OrderElement& x, const OrderElement& y,
                              std::size_t sub_samples, std::span<const double> k_grid,
                              Tolerance tol, std::uint64_t seed) {
  require_same_space(x.space(), y.space());
  if (!in_cone(x, tol) || !in_cone(y, tol))
    fail(Errc::NotInCone, "absolute infinity-orthogonality needs cone elements");

  std::vector<OrderElement> xs{OrderElement::zero(x.space()), x};
  std::vector<OrderElement> ys{OrderElement::zero(y.space()), y};
  for (double t : {0.25, 0.5, 0.75}) {
    xs.push_back(t * x);
    ys.push_back(t * y);
  }
  for (std::size_t i = 0; i < sub_samples; ++i) {
    Rng rng(seed, 0x9e11, i);
    if (auto z = sample_sub_element(x, rng, tol)) xs.push_back(*z);
    if (auto z = sample_sub_element(y, rng, tol)) ys.push_back(*z);
  }

  PerpInfCheck r;
  const std::size_t n = std::max(xs.size(), ys.size());
  // Pair x-samples with y-samples along the diagonal and with both ends.
  auto check = [&](const OrderElement& a, const OrderElement& b) {
    ++r.pairs;
    const double na = order_unit_norm(a);
    const double nb = order_unit_norm(b);
    for (double k : k_grid) {
      const double lhs = order_unit_norm(a + k * b);
      const double rhs = std::max(na, std::abs(k) * nb);
      const double d = std::abs(lhs - rhs);
      r.max_defect = std::max(r.max_defect, d);
      if (d > tol.bound(rhs)) r.holds = false;
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    const OrderElement& a = xs[i % xs.size()];
    const OrderElement& b = ys[i % ys.size()];
    check(a, b);
    check(a, y);
    check(x, b);
  }
  return r;
}

OrderElement random_element(const Space& space, Rng& rng) {
  const double scale = rng.log_uniform(-1.0, 1.0);
  Vector v = random_vector(space, rng, scale);
  const double nv = v.norm();
  switch (rng.below(6)) {
    case 0: return {v, nv};
    case 1: return {v, -nv};
    case 2: return {Vector::zero(space), rng.uniform(-scale, scale)};
    case 3: return {v, 0.0};
    default: return {v, rng.uniform(-2.0 * nv, 2.0 * nv)};
  }
}

OrderElement random_cone_element(const Space& space, Rng& rng) {
  const double scale = rng.log_uniform(-1.0, 1.0);
  Vector v = random_vector(space, rng, scale);
  const double nv = v.norm();
  switch (rng.below(4)) {
    case 0: return {v, nv};
    case 1: return {Vector::zero(space), rng.uniform(0.0, scale)};
    default: return {v, nv + rng.uniform(0.0, 2.0 * nv)};
  }
}

namespace {

double cone_violation(const OrderElement& x) { return std::max(0.0, x.v().norm() - x.alpha()); }

}  // namespace

CheckReport axiom_suite(const Space& space, std::size_t samples, std::uint64_t seed,
                        double tol_value) {
  if (samples == 0) fail(Errc::InvalidArgument, "samples must be at least 1");
  const Tolerance tol = Tolerance::uniform(tol_value);
  CheckReport report;
  report.campaign = "axioms";
  report.space = space;
  report.seed = seed;
  report.parameters = {{"samples", samples},
                       {"tol", tol_value},
                       {"strictly_convex", strict_convexity_verdict(space)}};

  run_samples(report.add("abs_fixes_cone"), samples, [&](std::size_t i) {
    Rng rng(seed, 1, i);
    const OrderElement x = random_cone_element(space, rng);
    SampleOutcome o;
    o.defect = order_unit_norm(abs(x, tol) - x);
    o.bound = tol.bound(order_unit_norm(x));
    if (o.defect > o.bound) o.witness = {{"x", to_json(x)}};
    return o;
  });

  run_samples(report.add("abs_dominates"), samples, [&](std::size_t i) {
    Rng rng(seed, 2, i);
    const OrderElement x = random_element(space, rng);
    const OrderElement ax = abs(x, tol);
    SampleOutcome o;
    o.defect = std::max(cone_violation(ax + x), cone_violation(ax - x));
    o.bound = tol.bound(order_unit_norm(x));
    if (o.defect > o.bound) o.witness = {{"x", to_json(x)}};
    return o;
  });

  run_samples(report.add("abs_homogeneous"), samples, [&](std::size_t i) {
    Rng rng(seed, 3, i);
    const OrderElement x = random_element(space, rng);
    const double k = i % 7 == 0 ? -1.0 : rng.uniform(-5.0, 5.0);
    SampleOutcome o;
    o.defect = order_unit_norm(abs(k * x, tol) - std::abs(k) * abs(x, tol));
    o.bound = tol.bound(std::abs(k) * order_unit_norm(x));
    if (o.defect > o.bound) o.witness = {{"x", to_json(x)}, {"k", k}};
    return o;
  });

  // Orthogonal triples all have the form α(u₀,1), β(−u₀,1), γ(−u₀,1).
  run_samples(report.add("perp_abs_sum"), samples, [&](std::size_t i) {
    Rng rng(seed, 4, i);
    const Vector u0 = random_unit_vector(space, rng);
    const double a = rng.log_uniform(-1.0, 1.0);
    const double b = rng.log_uniform(-1.0, 1.0);
    const double c = i % 5 == 0 ? b : rng.log_uniform(-1.0, 1.0);
    const OrderElement u(a * u0, a);
    const OrderElement v(-b * u0, b);
    const OrderElement w(-c * u0, c);
    SampleOutcome o;
    if (!orthogonal(u, v, tol) || !orthogonal(u, w, tol)) {
      o.skipped = true;
      return o;
    }
    const OrderElement plus = abs(v + w, tol);
    const OrderElement minus = abs(v - w, tol);
    o.defect = std::max(orthogonality_defect(u, plus, tol), orthogonality_defect(u, minus, tol));
    o.bound = tol.bound(order_unit_norm(u) + order_unit_norm(v) + order_unit_norm(w));
    if (o.defect > o.bound)
      o.witness = {{"u", to_json(u)}, {"v", to_json(v)}, {"w", to_json(w)}};
    return o;
  });

  // Sample 0 is the flat-segment construction: if ∥a∥ = ∥b∥ = ∥(a+b)/2∥ = 1
  // with a ≠ b, then (−w₀,1) ⊥ (w₀,1) and (a/2, ½) ≤ (w₀,1) for w₀ = (a+b)/2,
  // yet (a/2, ½) is not a multiple of (w₀,1).
  const auto flat = find_flat_segment(space, 256, seed, tol_value);
  run_samples(report.add("perp_hereditary"), samples, [&](std::size_t i) {
    SampleOutcome o;
    std::optional<OrderElement> u, v, w;
    if (i == 0 && flat) {
      const Vector w0 = (flat->u + flat->v) / 2.0;
      u.emplace(-w0, 1.0);
      v.emplace(w0, 1.0);
      w.emplace(0.5 * flat->u, 0.5);
    } else {
      Rng rng(seed, 5, i);
      const Vector u0 = random_unit_vector(space, rng);
      const double a = rng.log_uniform(-1.0, 1.0);
      const double b = rng.log_uniform(-1.0, 1.0);
      u.emplace(a * u0, a);
      v.emplace(-b * u0, b);
      w = sample_sub_element(*v, rng, tol);
    }
    if (!w || !orthogonal(*u, *v, tol) || !leq(OrderElement::zero(space), *w, tol) ||
        !leq(*w, *v, tol)) {
      o.skipped = true;
      return o;
    }
    o.defect = orthogonality_defect(*u, *w, tol);
    o.bound = tol.bound(order_unit_norm(*u) + order_unit_norm(*w));
    if (o.defect > o.bound)
      o.witness = {{"u", to_json(*u)}, {"v", to_json(*v)}, {"w", to_json(*w)}};
    return o;
  });

  return report;
}

}  // namespace spinx
