#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <string>

#include <Eigen/QR>
#include <gtest/gtest.h>

#include "oracle.hpp"
#include "search.hpp"

using namespace spinx;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Parse;
}

GridSpec grid(std::size_t resolution, double tol = 1e-9) {
  GridSpec g;
  g.resolution = resolution;
  g.tol = tol;
  return g;
}

}  // namespace

TEST(GridSpec, Validation) {
  EXPECT_NO_THROW(GridSpec{}.validate());
  EXPECT_EQ(code_of([] { grid(4).validate(); }), Errc::InvalidArgument);
  GridSpec g;
  g.k_grid = {0.5, 2.0};
  EXPECT_EQ(code_of([&] { g.validate(); }), Errc::InvalidArgument);
  g = GridSpec{};
  g.tol = -1.0;
  EXPECT_EQ(code_of([&] { g.validate(); }), Errc::InvalidArgument);
}

TEST(Lp2, SpherePointsAreUnit) {
  for (double p : {1.5, 3.0, 4.0}) {
    const Space s = Space::lp(p, 2);
    for (std::size_t i = 0; i < 64; ++i) {
      const Vector x = lp2_sphere_point(s, i, 64);
      EXPECT_NEAR(oracle::lp_norm({x[0], x[1]}, p), 1.0, 1e-14);
      const double th = 2.0 * std::numbers::pi * static_cast<double>(i) / 64.0;
      EXPECT_NEAR(std::atan2(x[1], x[0]), std::remainder(th, 2.0 * std::numbers::pi), 1e-12);
    }
  }
}

TEST(Lp2, RejectsBadExponents) {
  for (double p : {1.0, 0.5, std::numeric_limits<double>::infinity()})
    EXPECT_EQ(code_of([&] { lp2_triviality_campaign(p, grid(16)); }), Errc::InvalidArgument);
}

TEST(Lp2, VerdictsAtModestResolution) {
  for (double p : {1.5, 3.0, 4.0}) {
    const SearchCertificate c = lp2_triviality_campaign(p, grid(64));
    EXPECT_EQ(c.verdict, Verdict::TrivialOnly) << p;
    EXPECT_GT(c.min_defect, 1e-3) << p;
  }
  const SearchCertificate c = lp2_triviality_campaign(2.0, grid(64, 1e-10));
  EXPECT_EQ(c.verdict, Verdict::CandidateFound);
  EXPECT_LE(c.min_defect, 1e-10);
  // The argmin pair is orthogonal in the Euclidean sense.
  EXPECT_NEAR(c.u[0] * c.v[0] + c.u[1] * c.v[1], 0.0, 1e-12);
}

TEST(Lp2, CertificateDefectMatchesPerp2Defect) {
  const SearchCertificate c = lp2_triviality_campaign(3.0, grid(32));
  EXPECT_NEAR(perp2_defect(c.u, c.v, c.grid.k_grid), c.min_defect, 1e-15);
  const nlohmann::json j = to_json(c);
  EXPECT_EQ(j.at("verdict"), "TrivialOnly");
  EXPECT_EQ(j.at("resolution"), 32);
  EXPECT_EQ(j.at("argmin").at("i"), c.argmin_i);
}

TEST(Lp2, FinerNestedGridsNeverRaiseTheMinimum) {
  for (double p : {1.5, 4.0}) {
    const double m64 = lp2_triviality_campaign(p, grid(64)).min_defect;
    const double m128 = lp2_triviality_campaign(p, grid(128)).min_defect;
    const double m256 = lp2_triviality_campaign(p, grid(256)).min_defect;
    EXPECT_LE(m128, m64);
    EXPECT_LE(m256, m128);
  }
}

TEST(Lp2, DeterministicAcrossRuns) {
  const SearchCertificate a = lp2_triviality_campaign(4.0, grid(64));
  const SearchCertificate b = lp2_triviality_campaign(4.0, grid(64));
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
}

TEST(Lp2, WritesDefectSurface) {
  const auto path = std::filesystem::temp_directory_path() / "spinx_lp2_surface.csv";
  const SearchCertificate c = lp2_triviality_campaign(4.0, grid(16), path.string());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "i,j,theta_u,theta_v,defect");
  std::size_t rows = 0;
  double min_seen = std::numeric_limits<double>::infinity();
  while (std::getline(in, line)) {
    ++rows;
    const auto last = line.rfind(',');
    min_seen = std::min(min_seen, std::stod(line.substr(last + 1)));
  }
  EXPECT_EQ(rows, 256u);
  EXPECT_DOUBLE_EQ(min_seen, c.min_defect);
  std::filesystem::remove(path);
}

TEST(Lp2, EuclideanOrthonormalPairsArePythagorean) {
  const Space s = Space::lp(2.0, 2);
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng(51, 0, i);
    Eigen::Matrix2d m;
    m << rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1);
    const Eigen::Matrix2d q = Eigen::HouseholderQR<Eigen::Matrix2d>(m).householderQ();
    const Vector u(s, {q(0, 0), q(1, 0)});
    const Vector v(s, {q(0, 1), q(1, 1)});
    EXPECT_LE(perp2_defect(u, v, default_k_grid()), 1e-10);
  }
}

TEST(FMonotone, PassesAndMatchesFiniteDifferences) {
  for (double p : {1.5, 2.0, 3.0, 4.0, 8.0}) {
    const MonotoneCheck m = f_monotone_check(p, 1000);
    EXPECT_TRUE(m.pass) << p;
    EXPECT_GT(m.min_increment, 0.0);
    const auto f = [p](double x) { return x * x - std::pow(1.0 - std::pow(x, p), 2.0 / p); };
    for (double x : {0.1, 0.3, 0.5, 0.7, 0.9}) EXPECT_GT(oracle::derivative(f, x), 0.0) << p;
  }
  EXPECT_EQ(code_of([] { f_monotone_check(4.0, 10); }), Errc::InvalidArgument);
}

TEST(FMonotone, EuclideanClosedForm) {
  // f(x) = 2x² − 1 on 100 intervals: increments 2(2i+1)h², smallest 2h²,
  // and f′ = 4x is smallest at the first interior point.
  const MonotoneCheck m = f_monotone_check(2.0, 100);
  EXPECT_TRUE(m.pass);
  EXPECT_NEAR(m.min_increment, 2e-4, 1e-12);
  EXPECT_NEAR(m.min_slope, 0.04, 1e-12);
}

TEST(H1Plane, CampaignPasses) {
  const CheckReport r = h1_plane_campaign(1000, 42, 1e-9);
  EXPECT_TRUE(r.all_pass());
  for (const char* id : {"norm_compatibility", "example_pair_perp2", "example_pair_span",
                         "vuv_jordan_identity", "vuv_jb_norm"})
    ASSERT_NE(r.find(id), nullptr) << id;
  EXPECT_LE(r.find("norm_compatibility")->max_defect, 1e-10);
}

TEST(ExamplePair, IsPythagoreanInL43) {
  const VectorPair p = l43_example_pair();
  EXPECT_NEAR(p.u.norm(), 1.0, 1e-15);
  EXPECT_NEAR(p.v.norm(), 1.0, 1e-15);
  EXPECT_LE(perp2_defect(p.u, p.v, default_k_grid()), 1e-9);
  for (double k : {-3.0, -0.7, 0.2, 5.0}) {
    const oracle::Vec s =
        oracle::add({p.u[0], p.u[1], p.u[2]}, {p.v[0], p.v[1], p.v[2]}, k);
    const double n = oracle::lp_norm(s, 4.0);
    EXPECT_NEAR(n * n, 1.0 + k * k, 1e-12 * (1.0 + k * k));
  }
}

TEST(L42, ScalingCampaignOutcome) {
  const CheckReport r = l42_scaling_campaign(1e-9);
  ASSERT_NE(r.find("k1_equality"), nullptr);
  EXPECT_TRUE(r.find("k1_equality")->pass);
  EXPECT_TRUE(r.find("k_ne_1_gap")->pass);
  EXPECT_TRUE(r.find("k_eq_l_criterion")->pass);
  // The |kl| = 1 rule does not describe when the product vanishes; see
  // ZeroProduct.L42ScalingVanishesExactlyWhenScalesMatch.
  EXPECT_FALSE(r.find("kl_unit_criterion")->pass);
  EXPECT_FALSE(r.all_pass());
}

TEST(L42, PairNormsToTheFourth) {
  const VectorPair p = l42_zero_product_pair();
  const double a = std::pow(oracle::lp_norm({p.u[0] + p.v[0], p.u[1] + p.v[1]}, 4.0), 4);
  const double b = std::pow(oracle::lp_norm({p.u[0] - p.v[0], p.u[1] - p.v[1]}, 4.0), 4);
  EXPECT_NEAR(a, 25.0, 1e-10);
  EXPECT_NEAR(b, 25.0, 1e-10);
}
