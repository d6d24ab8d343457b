#include "normed_spaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Cholesky>

#include "report.hpp"

namespace spinx {

struct Space::Impl {
  SpaceKind kind;
  double p;
  std::size_t dim;
  Eigen::MatrixXd gram;
  std::optional<Embedding> embedding;
};

namespace {

double lp_norm(std::span<const double> x, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (double c : x) m = std::max(m, std::abs(c));
    return m;
  }
  if (p == 1.0) {
    double s = 0.0;
    for (double c : x) s += std::abs(c);
    return s;
  }
  if (p == 2.0) {
    double s = 0.0;
    for (double c : x) s += c * c;
    return std::sqrt(s);
  }
  // Scale by the largest entry so |c|^p neither overflows nor underflows.
  double m = 0.0;
  for (double c : x) m = std::max(m, std::abs(c));
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (double c : x) s += std::pow(std::abs(c) / m, p);
  return m * std::pow(s, 1.0 / p);
}

double quadratic_form(const Eigen::MatrixXd& g, std::span<const double> x,
                      std::span<const double> y) {
  double s = 0.0;
  const auto n = static_cast<Eigen::Index>(x.size());
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) s += x[i] * g(i, j) * y[j];
  return s;
}

std::string format_p(double p) {
  if (std::isinf(p)) return "inf";
  std::ostringstream os;
  os.precision(17);
  os << p;
  return os.str();
}

}  // namespace

Space Space::lp(double p, std::size_t dim) {
  if (!(p >= 1.0)) fail(Errc::InvalidSpace, "lp space needs p >= 1, got " + format_p(p));
  if (dim == 0) fail(Errc::InvalidSpace, "space dimension must be positive");
  return Space(std::make_shared<const Impl>(Impl{SpaceKind::Lp, p, dim, {}, std::nullopt}));
}

Space Space::hilbert(std::size_t dim) {
  if (dim == 0) fail(Errc::InvalidSpace, "space dimension must be positive");
  return Space(std::make_shared<const Impl>(Impl{SpaceKind::Hilbert, 2.0, dim, {}, std::nullopt}));
}

Space Space::weighted(Eigen::MatrixXd gram, std::optional<Embedding> embedding) {
  if (gram.rows() == 0 || gram.rows() != gram.cols())
    fail(Errc::InvalidSpace, "gram matrix must be square and non-empty");
  if (!gram.allFinite()) fail(Errc::InvalidSpace, "gram matrix has non-finite entries");
  const double scale = gram.cwiseAbs().maxCoeff();
  if ((gram - gram.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    fail(Errc::InvalidSpace, "gram matrix is not symmetric");
  Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() != Eigen::Success)
    fail(Errc::InvalidSpace, "gram matrix is not positive definite");
  if (embedding) {
    if (embedding->matrix.cols() != gram.rows() || embedding->matrix.rows() == 0)
      fail(Errc::InvalidSpace, "embedding matrix must have one column per coordinate");
    if (!(embedding->p >= 1.0)) fail(Errc::InvalidSpace, "embedding target needs p >= 1");
  }
  const auto dim = static_cast<std::size_t>(gram.rows());
  return Space(std::make_shared<const Impl>(
      Impl{SpaceKind::Weighted, 2.0, dim, std::move(gram), std::move(embedding)}));
}

Space Space::h1_plane() {
  // Correctly rounded √2 and 1/√2, matching data/h1_plane.json bit for bit.
  const double s = std::sqrt(2.0);
  const double r = std::sqrt(0.5);
  Eigen::MatrixXd gram(2, 2);
  gram << s, r, r, s;
  Eigen::MatrixXd e(3, 2);
  e << 1.0, 0.0, 0.0, 1.0, 1.0, 1.0;
  return weighted(std::move(gram), Embedding{std::move(e), 4.0});
}

SpaceKind Space::kind() const noexcept { return impl_->kind; }
double Space::p() const noexcept { return impl_->p; }
std::size_t Space::dim() const noexcept { return impl_->dim; }
const Eigen::MatrixXd& Space::gram() const noexcept { return impl_->gram; }
const std::optional<Embedding>& Space::embedding() const noexcept { return impl_->embedding; }

bool Space::has_inner_product() const noexcept {
  return impl_->kind != SpaceKind::Lp || impl_->p == 2.0;
}

std::string Space::label() const {
  switch (impl_->kind) {
    case SpaceKind::Lp:
      return "lp:" + format_p(impl_->p) + ":" + std::to_string(impl_->dim);
    case SpaceKind::Hilbert:
      return "hilbert:" + std::to_string(impl_->dim);
    case SpaceKind::Weighted:
      return "weighted:" + std::to_string(impl_->dim);
  }
  return {};
}

double Space::norm(std::span<const double> x) const {
  if (impl_->kind == SpaceKind::Weighted)
    return std::sqrt(std::max(0.0, quadratic_form(impl_->gram, x, x)));
  return lp_norm(x, impl_->p);
}

double Space::norm_squared(std::span<const double> x) const {
  if (impl_->kind == SpaceKind::Weighted)
    return std::max(0.0, quadratic_form(impl_->gram, x, x));
  if (impl_->p == 2.0) {
    double s = 0.0;
    for (double c : x) s += c * c;
    return s;
  }
  const double n = lp_norm(x, impl_->p);
  return n * n;
}

double Space::inner(std::span<const double> x, std::span<const double> y) const {
  if (!has_inner_product())
    fail(Errc::UnsupportedSpace, "no inner product on " + label());
  if (impl_->kind == SpaceKind::Weighted) return quadratic_form(impl_->gram, x, y);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

bool Space::operator==(const Space& other) const noexcept {
  if (impl_ == other.impl_) return true;
  const Impl& a = *impl_;
  const Impl& b = *other.impl_;
  if (a.kind != b.kind || a.dim != b.dim || a.p != b.p) return false;
  if (a.kind != SpaceKind::Weighted) return true;
  if (a.gram != b.gram) return false;
  if (a.embedding.has_value() != b.embedding.has_value()) return false;
  if (!a.embedding) return true;
  return a.embedding->p == b.embedding->p &&
         a.embedding->matrix.rows() == b.embedding->matrix.rows() &&
         a.embedding->matrix == b.embedding->matrix;
}

namespace {

nlohmann::json p_to_json(double p) {
  if (std::isinf(p)) return "inf";
  return p;
}

double p_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return std::numeric_limits<double>::infinity();
    fail(Errc::Parse, "p must be a number or \"inf\"");
  }
  if (!j.is_number()) fail(Errc::Parse, "p must be a number or \"inf\"");
  return j.get<double>();
}

nlohmann::json matrix_to_json(const Eigen::MatrixXd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) fail(Errc::Parse, "matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array() || j[0].empty()) fail(Errc::Parse, "matrix rows must be non-empty arrays");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      fail(Errc::Parse, "matrix rows must all have the same length");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& x = row[static_cast<std::size_t>(c)];
      if (!x.is_number()) fail(Errc::Parse, "matrix entries must be numbers");
      m(i, c) = x.get<double>();
    }
  }
  return m;
}

std::size_t dim_from_json(const nlohmann::json& j) {
  if (!j.contains("dim")) fail(Errc::Parse, "space descriptor needs \"dim\"");
  const auto& d = j.at("dim");
  if (!d.is_number_integer() || d.get<long long>() <= 0)
    fail(Errc::InvalidSpace, "\"dim\" must be a positive integer");
  return static_cast<std::size_t>(d.get<long long>());
}

}  // namespace

nlohmann::json to_json(const Space& space) {
  switch (space.kind()) {
    case SpaceKind::Lp:
      return {{"kind", "lp"}, {"p", p_to_json(space.p())}, {"dim", space.dim()}};
    case SpaceKind::Hilbert:
      return {{"kind", "hilbert"}, {"dim", space.dim()}};
    case SpaceKind::Weighted: {
      nlohmann::json j = {{"kind", "weighted"},
                          {"dim", space.dim()},
                          {"gram", matrix_to_json(space.gram())}};
      if (const auto& e = space.embedding())
        j["embedding"] = {{"p", p_to_json(e->p)}, {"matrix", matrix_to_json(e->matrix)}};
      return j;
    }
  }
  return nullptr;
}

Space space_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    fail(Errc::Parse, "space descriptor must be an object with a string \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "lp") {
    if (!j.contains("p")) fail(Errc::Parse, "lp descriptor needs \"p\"");
    return Space::lp(p_from_json(j.at("p")), dim_from_json(j));
  }
  if (kind == "hilbert") return Space::hilbert(dim_from_json(j));
  if (kind == "weighted") {
    if (!j.contains("gram")) fail(Errc::Parse, "weighted descriptor needs \"gram\"");
    Eigen::MatrixXd gram = matrix_from_json(j.at("gram"));
    if (j.contains("dim") && dim_from_json(j) != static_cast<std::size_t>(gram.rows()))
      fail(Errc::InvalidSpace, "\"dim\" does not match the gram matrix");
    std::optional<Embedding> emb;
    if (j.contains("embedding")) {
      const auto& e = j.at("embedding");
      if (!e.is_object() || !e.contains("matrix") || !e.contains("p"))
        fail(Errc::Parse, "embedding needs \"p\" and \"matrix\"");
      emb = Embedding{matrix_from_json(e.at("matrix")), p_from_json(e.at("p"))};
    }
    return Space::weighted(std::move(gram), std::move(emb));
  }
  fail(Errc::Parse, "unknown space kind \"" + kind + "\"");
}

Vector::Vector(Space space, std::vector<double> coords)
    : space_(std::move(space)), coords_(std::move(coords)) {
  if (coords_.size() != space_.dim())
    fail(Errc::DimensionMismatch, "vector has " + std::to_string(coords_.size()) +
                                      " coordinates, space " + space_.label() +
                                      " needs " + std::to_string(space_.dim()));
  for (double c : coords_)
    if (!std::isfinite(c)) fail(Errc::InvalidArgument, "vector entries must be finite");
}

Vector Vector::zero(Space space) {
  const std::size_t n = space.dim();
  return Vector(std::move(space), std::vector<double>(n, 0.0));
}

Vector Vector::basis(Space space, std::size_t i) {
  std::vector<double> c(space.dim(), 0.0);
  if (i >= c.size()) fail(Errc::InvalidArgument, "basis index out of range");
  c[i] = 1.0;
  return Vector(std::move(space), std::move(c));
}

bool Vector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](double c) { return c == 0.0; });
}

void require_same_space(const Space& a, const Space& b) {
  if (a.dim() != b.dim())
    fail(Errc::DimensionMismatch, "dimension mismatch: " + a.label() + " vs " + b.label());
  if (!(a == b)) fail(Errc::SpaceMismatch, "space mismatch: " + a.label() + " vs " + b.label());
}

Vector operator+(const Vector& a, const Vector& b) {
  require_same_space(a.space_, b.space_);
  std::vector<double> c(a.coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
  return Vector(a.space_, std::move(c));
}

Vector operator-(const Vector& a, const Vector& b) {
  require_same_space(a.space_, b.space_);
  std::vector<double> c(a.coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords_[i];
  return Vector(a.space_, std::move(c));
}

Vector operator-(const Vector& a) {
  std::vector<double> c(a.coords_);
  for (double& x : c) x = -x;
  return Vector(a.space_, std::move(c));
}

Vector operator*(double k, const Vector& a) {
  std::vector<double> c(a.coords_);
  for (double& x : c) x *= k;
  return Vector(a.space_, std::move(c));
}

nlohmann::json to_json(const Vector& v) {
  return nlohmann::json(std::vector<double>(v.coords().begin(), v.coords().end()));
}

double norm(const Space& space, const Vector& v) {
  require_same_space(space, v.space());
  return space.norm(v.coords());
}

double inner(const Space& space, const Vector& u, const Vector& v) {
  require_same_space(space, u.space());
  require_same_space(space, v.space());
  return space.inner(u.coords(), v.coords());
}

double parallelogram_defect(const Vector& u, const Vector& v) {
  const Space& s = u.space();
  return s.norm_squared((u + v).coords()) + s.norm_squared((u - v).coords()) -
         2.0 * s.norm_squared(u.coords()) - 2.0 * s.norm_squared(v.coords());
}

std::vector<double> default_k_grid() {
  std::vector<double> k{0.0};
  for (int j = -8; j <= 8; ++j) {
    k.push_back(std::ldexp(1.0, j));
    k.push_back(-std::ldexp(1.0, j));
  }
  // ±1 is 2^0; listed once.
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  return k;
}

double perp2_defect_at(const Vector& u, const Vector& v, double k) {
  const Space& s = u.space();
  require_same_space(s, v.space());
  std::vector<double> w(u.coords().begin(), u.coords().end());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] += k * v[i];
  return std::abs(s.norm_squared(w) - s.norm_squared(u.coords()) -
                  k * k * s.norm_squared(v.coords()));
}

double perp2_defect(const Vector& u, const Vector& v, std::span<const double> k_grid) {
  double worst = 0.0;
  for (double k : k_grid) worst = std::max(worst, perp2_defect_at(u, v, k));
  return worst;
}

Perp2Check perp2_check(const Vector& u, const Vector& v, std::span<const double> k_grid,
                       double tol) {
  if (k_grid.empty()) fail(Errc::InvalidArgument, "k-grid is empty");
  const bool has_pos = std::any_of(k_grid.begin(), k_grid.end(), [](double k) { return k > 0; });
  const bool has_neg = std::any_of(k_grid.begin(), k_grid.end(), [](double k) { return k < 0; });
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (double k : k_grid) {
    lo = std::min(lo, std::abs(k));
    hi = std::max(hi, std::abs(k));
  }
  if (!has_pos || !has_neg || lo > 1.0 || hi < 4.0)
    fail(Errc::InvalidArgument,
         "k-grid must contain both signs and span |k| from at most 1 to at least 4");
  Perp2Check r;
  for (double k : k_grid) {
    const double d = perp2_defect_at(u, v, k);
    if (d > r.max_defect) {
      r.max_defect = d;
      r.worst_k = k;
    }
  }
  r.holds = r.max_defect <= tol;
  return r;
}

bool strict_convexity_verdict(const Space& space) {
  if (space.kind() != SpaceKind::Lp) return true;
  const double p = space.p();
  // A one-dimensional space has a two-point unit sphere.
  if (space.dim() == 1) return true;
  return p > 1.0 && std::isfinite(p);
}

Vector random_vector(const Space& space, Rng& rng, double scale) {
  std::vector<double> c(space.dim());
  for (double& x : c) x = rng.uniform(-scale, scale);
  return Vector(space, std::move(c));
}

Vector random_unit_vector(const Space& space, Rng& rng) {
  for (;;) {
    Vector v = random_vector(space, rng);
    const double n = v.norm();
    if (n > 1e-3) return v / n;
  }
}

Vector embed(const Space& space, const Vector& x) {
  require_same_space(space, x.space());
  const auto& e = space.embedding();
  if (!e) fail(Errc::UnsupportedSpace, space.label() + " carries no embedding");
  const Space target = Space::lp(e->p, static_cast<std::size_t>(e->matrix.rows()));
  std::vector<double> y(target.dim(), 0.0);
  for (Eigen::Index i = 0; i < e->matrix.rows(); ++i)
    for (Eigen::Index j = 0; j < e->matrix.cols(); ++j)
      y[static_cast<std::size_t>(i)] += e->matrix(i, j) * x[static_cast<std::size_t>(j)];
  return Vector(target, std::move(y));
}

double embedding_defect(const Space& space, const Vector& x) {
  return std::abs(norm(space, x) - embed(space, x).norm());
}

namespace {

// Visits coordinate-axis pairs, then sample_pairs random unit pairs with
// ∥u − v∥ ≥ 1/2. The visitor returns false to stop.
template <class Visit>
void for_each_probe_pair(const Space& space, std::size_t sample_pairs, std::uint64_t seed,
                         Visit&& visit) {
  const std::size_t n = space.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector a = Vector::basis(space, i);
      const Vector b = Vector::basis(space, j);
      if (!visit(a / a.norm(), b / b.norm())) return;
    }
  }
  for (std::size_t s = 0; s < sample_pairs; ++s) {
    Rng rng(seed, 0x5c0f, s);
    const Vector u = random_unit_vector(space, rng);
    Vector v = random_unit_vector(space, rng);
    while ((u - v).norm() < 0.5) v = random_unit_vector(space, rng);
    if (!visit(u, v)) return;
  }
}

}  // namespace

std::optional<FlatSegment> find_flat_segment(const Space& space, std::size_t sample_pairs,
                                             std::uint64_t seed, double tol) {
  std::optional<FlatSegment> found;
  for_each_probe_pair(space, sample_pairs, seed, [&](const Vector& u, const Vector& v) {
    if (((u + v) / 2.0).norm() >= 1.0 - tol) {
      found = FlatSegment{u, v};
      return false;
    }
    return true;
  });
  return found;
}

CheckReport strict_convexity_probe(const Space& space, std::size_t sample_pairs,
                                   std::uint64_t seed, double tol) {
  if (sample_pairs == 0) fail(Errc::InvalidArgument, "sample_pairs must be at least 1");
  CheckReport report;
  report.campaign = "strict_convexity_probe";
  report.space = space;
  report.seed = seed;
  report.parameters = {{"sample_pairs", sample_pairs},
                       {"tol", tol},
                       {"min_separation", 0.5},
                       {"analytic_verdict", strict_convexity_verdict(space)}};
  CheckResult& r = report.add("midpoint_strictly_inside");
  for_each_probe_pair(space, sample_pairs, seed, [&](const Vector& u, const Vector& v) {
    ++r.checked;
    const double mid = ((u + v) / 2.0).norm();
    r.max_defect = std::max(r.max_defect, mid);
    if (mid >= 1.0 - tol && r.pass) {
      r.pass = false;
      r.witness = {{"u", to_json(u)}, {"v", to_json(v)}, {"midpoint_norm", mid}};
    }
    return true;
  });
  return report;
}

}  // namespace spinx
