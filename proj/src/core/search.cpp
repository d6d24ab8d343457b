#include "search.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>

#include "parallel.hpp"
#include "sampling.hpp"

namespace spinx {

void GridSpec::validate() const {
  if (resolution < 8) fail(Errc::InvalidArgument, "grid resolution must be at least 8");
  const auto has = [&](double k) {
    return std::find(k_grid.begin(), k_grid.end(), k) != k_grid.end();
  };
  if (k_grid.empty() || !has(1.0) || !has(-1.0))
    fail(Errc::InvalidArgument, "k-grid must contain 1 and -1");
  if (!(tol >= 0.0)) fail(Errc::InvalidArgument, "tolerance must be nonnegative");
}

const char* to_string(Verdict v) noexcept {
  return v == Verdict::TrivialOnly ? "TrivialOnly" : "CandidateFound";
}

nlohmann::json to_json(const SearchCertificate& c) {
  return {{"space", to_json(c.space)},
          {"resolution", c.grid.resolution},
          {"k_grid", c.grid.k_grid},
          {"tol", c.grid.tol},
          {"min_defect", c.min_defect},
          {"argmin",
           {{"u", to_json(c.u)}, {"v", to_json(c.v)}, {"i", c.argmin_i}, {"j", c.argmin_j}}},
          {"verdict", to_string(c.verdict)}};
}

Vector lp2_sphere_point(const Space& space, std::size_t i, std::size_t resolution) {
  if (space.dim() != 2) fail(Errc::DimensionMismatch, "sphere sweep needs a 2-dimensional space");
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(resolution);
  const std::array<double, 2> c{std::cos(theta), std::sin(theta)};
  const double n = space.norm(c);
  return Vector(space, {c[0] / n, c[1] / n});
}

SearchCertificate lp2_triviality_campaign(double p, const GridSpec& grid,
                                          const std::string& csv_path) {
  grid.validate();
  if (!(p > 1.0) || !std::isfinite(p))
    fail(Errc::InvalidArgument, "the ℓ_p² sweep needs 1 < p < ∞");
  const Space space = Space::lp(p, 2);
  const std::size_t n = grid.resolution;

  std::vector<std::array<double, 2>> pts(n);
  std::vector<double> sq(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector x = lp2_sphere_point(space, i, n);
    pts[i] = {x[0], x[1]};
    sq[i] = space.norm_squared(pts[i]);
  }

  std::vector<double> surface(csv_path.empty() ? 0 : n * n);
  struct Best {
    double defect = std::numeric_limits<double>::infinity();
    std::size_t i = 0;
    std::size_t j = 0;
  };
  const std::size_t chunks = worker_count();
  std::vector<Best> best(chunks);
  for_each_chunk(n, chunks, [&](std::size_t begin, std::size_t end, std::size_t c) {
    Best& b = best[c];
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double worst = 0.0;
        for (double k : grid.k_grid) {
          const std::array<double, 2> w{pts[i][0] + k * pts[j][0], pts[i][1] + k * pts[j][1]};
          worst = std::max(worst, std::abs(space.norm_squared(w) - sq[i] - k * k * sq[j]));
        }
        if (!surface.empty()) surface[i * n + j] = worst;
        if (worst < b.defect) b = {worst, i, j};
      }
    }
  });
  Best overall;
  for (const Best& b : best)
    if (b.defect < overall.defect) overall = b;

  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) fail(Errc::InvalidArgument, "cannot write " + csv_path);
    out << "i,j,theta_u,theta_v,defect\n";
    char line[128];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const double tu = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
        const double tv = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
        std::snprintf(line, sizeof line, "%zu,%zu,%.17g,%.17g,%.17g\n", i, j, tu, tv,
                      surface[i * n + j]);
        out << line;
      }
  }

  const Vector u(space, {pts[overall.i][0], pts[overall.i][1]});
  const Vector v(space, {pts[overall.j][0], pts[overall.j][1]});
  // Sweep points are unit vectors, so the norm condition on a candidate is
  // automatic.
  const Verdict verdict =
      overall.defect <= grid.tol ? Verdict::CandidateFound : Verdict::TrivialOnly;
  return {space, grid, overall.defect, u, v, overall.i, overall.j, verdict};
}

nlohmann::json to_json(const MonotoneCheck& m) {
  return {{"pass", m.pass}, {"min_increment", m.min_increment}, {"min_slope", m.min_slope}};
}

MonotoneCheck f_monotone_check(double p, std::size_t grid_points) {
  if (!(p > 1.0) || !std::isfinite(p)) fail(Errc::InvalidArgument, "monotone check needs 1 < p < ∞");
  if (grid_points < 100) fail(Errc::InvalidArgument, "monotone check needs at least 100 points");
  const auto f = [p](double x) { return x * x - std::pow(1.0 - std::pow(x, p), 2.0 / p); };
  const auto df = [p](double x) {
    return 2.0 * x + 2.0 * std::pow(x, p - 1.0) * std::pow(1.0 - std::pow(x, p), 2.0 / p - 1.0);
  };
  MonotoneCheck m;
  m.min_increment = std::numeric_limits<double>::infinity();
  m.min_slope = std::numeric_limits<double>::infinity();
  const double h = 1.0 / static_cast<double>(grid_points);
  double prev = f(0.0);
  bool ok = true;
  for (std::size_t i = 1; i <= grid_points; ++i) {
    const double x = i == grid_points ? 1.0 : static_cast<double>(i) * h;
    const double fx = f(x);
    m.min_increment = std::min(m.min_increment, fx - prev);
    if (!(fx > prev)) ok = false;
    prev = fx;
    if (i < grid_points) {
      const double s = df(x);
      m.min_slope = std::min(m.min_slope, s);
      if (!(s > 0.0)) ok = false;
    }
  }
  m.pass = ok;
  return m;
}

VectorPair l43_example_pair() {
  const Space s = Space::lp(4.0, 3);
  const double a = std::pow(2.0, -0.25);
  const double b = std::pow(18.0, -0.25);
  return {Vector(s, {a, a, 0.0}), Vector(s, {b, -b, 2.0 * b})};
}

VectorPair l42_zero_product_pair() {
  const Space s = Space::lp(4.0, 2);
  const double r3 = std::sqrt(3.0);
  const double r5 = std::sqrt(5.0);
  return {Vector(s, {1.0, (r3 + r5) / 2.0}), Vector(s, {1.0, (r3 - r5) / 2.0})};
}

CheckReport h1_plane_campaign(std::size_t samples, std::uint64_t seed, double tol) {
  if (samples == 0) fail(Errc::InvalidArgument, "samples must be at least 1");
  const Space h1 = Space::h1_plane();
  const VectorPair pair = l43_example_pair();
  const Space& l43 = pair.u.space();
  const double strict = 1e-10;
  CheckReport report;
  report.campaign = "h1";
  report.space = h1;
  report.seed = seed;
  report.parameters = {{"samples", samples}, {"tol", tol}};

  run_samples(report.add("norm_compatibility"), samples, [&](std::size_t i) {
    Rng rng(seed, 0x41, i);
    const Vector w(h1, {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
    SampleOutcome o;
    o.defect = embedding_defect(h1, w);
    o.bound = strict * (1.0 + w.norm());
    if (o.defect > o.bound) o.witness = {{"w", to_json(w)}};
    return o;
  });

  {
    CheckResult& r = report.add("example_pair_perp2");
    const auto grid = default_k_grid();
    const Perp2Check c = perp2_check(pair.u, pair.v, grid, tol);
    r.pass = c.holds;
    r.max_defect = c.max_defect;
    r.checked = grid.size();
    r.witness = {{"u", to_json(pair.u)}, {"v", to_json(pair.v)}, {"worst_k", c.worst_k}};
  }

  run_samples(report.add("example_pair_span"), samples, [&](std::size_t i) {
    Rng rng(seed, 0x42, i);
    const double a = rng.uniform(-1.0, 1.0);
    const double b = rng.uniform(-1.0, 1.0);
    const Vector w = a * pair.u + b * pair.v;
    SampleOutcome o;
    o.defect = std::abs(l43.norm_squared(w.coords()) - (a * a + b * b));
    o.bound = strict * (1.0 + a * a + b * b);
    if (o.defect > o.bound) o.witness = {{"a", a}, {"b", b}};
    return o;
  });

  const VuvFrame frame(pair.u, pair.v, Tolerance::uniform(tol));
  const auto draw = [&](Rng& rng) {
    return VuvElement{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                      frame};
  };
  run_samples(report.add("vuv_jordan_identity"), samples, [&](std::size_t i) {
    Rng rng(seed, 0x43, i);
    const VuvElement x = draw(rng);
    const VuvElement y = draw(rng);
    SampleOutcome o;
    o.defect = jordan_identity_defect(x, y, vuv_product);
    o.bound = strict;
    if (o.defect > o.bound) o.witness = {{"x", to_json(x)}, {"y", to_json(y)}};
    return o;
  });
  run_samples(report.add("vuv_jb_norm"), samples, [&](std::size_t i) {
    Rng rng(seed, 0x44, i);
    const VuvElement x = draw(rng);
    SampleOutcome o;
    o.defect = jb_norm_check(x, vuv_product);
    o.bound = strict;
    if (o.defect > o.bound) o.witness = {{"x", to_json(x)}};
    return o;
  });
  return report;
}

CheckReport l42_scaling_campaign(double tol) {
  const VectorPair pair = l42_zero_product_pair();
  const Space& s = pair.u.space();
  const Tolerance t = Tolerance::uniform(tol);
  CheckReport report;
  report.campaign = "l42";
  report.space = s;
  report.parameters = {{"tol", tol}};

  const auto fourth = [&](const Vector& w) {
    double acc = 0.0;
    for (double c : w.coords()) acc += c * c * c * c;
    return acc;
  };

  {
    CheckResult& r = report.add("k1_equality");
    const double plus = fourth(pair.u + pair.v);
    const double minus = fourth(pair.u - pair.v);
    const OrderElement x(pair.u, 0.0);
    const OrderElement y(pair.v, 0.0);
    const ZeroProductClass cls = zero_product_classify(x, y, t);
    r.max_defect = std::max(std::abs(plus - 25.0), std::abs(minus - 25.0));
    r.pass = r.max_defect <= 1e-10 && cls == ZeroProductClass::ZeroIndependent;
    r.checked = 1;
    r.witness = {{"sum_fourth_power", plus},
                 {"difference_fourth_power", minus},
                 {"class", to_string(cls)}};
  }

  std::vector<double> ks;
  for (int j = -8; j <= 8; ++j) ks.push_back(std::ldexp(1.0, j));

  {
    CheckResult& r = report.add("k_ne_1_gap");
    double min_gap = std::numeric_limits<double>::infinity();
    for (double k : ks) {
      if (k == 1.0) continue;
      const double gap = std::abs((pair.u + k * pair.v).norm() - (pair.u - k * pair.v).norm());
      ++r.checked;
      if (gap < min_gap) {
        min_gap = gap;
        r.witness = {{"k", k}, {"min_gap", gap}};
      }
    }
    r.pass = min_gap > 1e-6;
  }

  // Zero-product pattern of k(u,0) ∘ l(v,0) over the grid, compared with a
  // predicted pattern.
  const auto criterion = [&](const std::string& id, auto predicted) {
    CheckResult& r = report.add(id);
    std::size_t mismatches = 0;
    for (double k : ks)
      for (double l : ks) {
        const OrderElement x(k * pair.u, 0.0);
        const OrderElement y(l * pair.v, 0.0);
        const OrderElement z = circ(x, y);
        const double size = order_unit_norm(z);
        const bool zero = size <= t.bound(order_unit_norm(x) * order_unit_norm(y));
        ++r.checked;
        if (zero != predicted(k, l)) {
          if (mismatches == 0)
            r.witness = {{"k", k}, {"l", l}, {"product", to_json(z)}, {"predicted_zero", !zero}};
          ++mismatches;
          r.max_defect = std::max(r.max_defect, size);
        }
      }
    r.pass = mismatches == 0;
    if (!r.pass) r.witness["mismatches"] = mismatches;
  };
  criterion("kl_unit_criterion", [](double k, double l) { return std::abs(k * l) == 1.0; });
  criterion("k_eq_l_criterion", [](double k, double l) { return std::abs(k) == std::abs(l); });
  return report;
}

}  // namespace spinx
