#include "campaigns.hpp"

#include <cmath>

#include "jordan.hpp"
#include "order_unit.hpp"
#include "report.hpp"
#include "sampling.hpp"
#include "search.hpp"
#include "spectral.hpp"

namespace spinx {

bool is_hilbertian(const Space& space) { return space.has_inner_product() || space.dim() == 1; }

const std::vector<std::string>& campaign_names() {
  static const std::vector<std::string> names{"axioms", "bilinearity", "h1", "jordan",
                                              "l42",    "lp2",         "probe"};
  return names;
}

namespace {

constexpr double kStrict = 1e-10;

nlohmann::json finish(const CheckReport& report, bool met, const std::string& rule) {
  nlohmann::json j = to_json(report);
  j["expectation"] = {{"met", met}, {"rule", rule}};
  return j;
}

CampaignResult axioms(const Space& space, const CampaignConfig& cfg) {
  const CheckReport r = axiom_suite(space, cfg.samples, cfg.seed, cfg.tol);
  const bool met = r.all_pass() == strict_convexity_verdict(space);
  return {finish(r, met, "all axioms hold iff the space is strictly convex"), met};
}

CampaignResult probe(const Space& space, const CampaignConfig& cfg) {
  CheckReport r = strict_convexity_probe(space, cfg.samples, cfg.seed, cfg.tol);
  r.campaign = "probe";
  const bool met = r.all_pass() == strict_convexity_verdict(space);
  return {finish(r, met, "no flat midpoint iff the space is strictly convex"), met};
}

CampaignResult bilinearity(const Space& space, const CampaignConfig& cfg) {
  if (cfg.samples == 0) fail(Errc::InvalidArgument, "samples must be at least 1");
  CheckReport r;
  r.campaign = "bilinearity";
  r.space = space;
  r.seed = cfg.seed;
  r.parameters = {{"samples", cfg.samples}, {"tol", cfg.tol}};
  const bool hilbertian = is_hilbertian(space);

  const auto pair = [&](std::size_t i) {
    if (i == 0 && space.dim() >= 2)
      return std::pair{Vector::basis(space, 0), Vector::basis(space, 1)};
    Rng rng(cfg.seed, 0x61, i);
    Vector u = random_vector(space, rng);
    Vector v = random_vector(space, rng);
    return std::pair{std::move(u), std::move(v)};
  };
  const auto scale = [](const Vector& u, const Vector& v) {
    const double s = u.norm() + v.norm();
    return 1.0 + s * s;
  };

  run_samples(r.add("bilinear"), cfg.samples, [&](std::size_t i) {
    const auto [u, v] = pair(i);
    const BilinearityDefect d = bilinearity_defect(u, v);
    SampleOutcome o;
    o.defect = d.defect;
    o.bound = kStrict * scale(u, v);
    if (o.defect > o.bound)
      o.witness = {{"u", to_json(u)},
                   {"v", to_json(v)},
                   {"scalar_residual", d.scalar_residual},
                   {"parallelogram_defect", d.parallelogram_defect}};
    return o;
  });
  run_samples(r.add("residual_is_half_parallelogram"), cfg.samples, [&](std::size_t i) {
    const auto [u, v] = pair(i);
    const BilinearityDefect d = bilinearity_defect(u, v);
    SampleOutcome o;
    o.defect = std::abs(d.scalar_residual - 0.5 * d.parallelogram_defect);
    o.bound = kStrict * scale(u, v);
    if (o.defect > o.bound) o.witness = {{"u", to_json(u)}, {"v", to_json(v)}};
    return o;
  });

  const CheckResult& b = *r.find("bilinear");
  const bool relation = r.find("residual_is_half_parallelogram")->pass;
  const bool met = relation && (hilbertian ? b.pass : (!b.pass && b.max_defect > 1e-6));
  return {finish(r, met,
                 hilbertian ? "inner-product norm: every defect at most 1e-10"
                            : "non-inner-product norm: some defect above 1e-6"),
          met};
}

CampaignResult lp2(const CampaignConfig& cfg) {
  const double p = cfg.p.value_or(4.0);
  GridSpec grid;
  grid.resolution = cfg.resolution;
  grid.tol = p == 2.0 ? kStrict : cfg.tol;
  const SearchCertificate c = lp2_triviality_campaign(p, grid, cfg.csv_path);
  const MonotoneCheck m = f_monotone_check(p, 10000);
  const bool control = p == 2.0;
  const bool verdict_ok = control ? c.verdict == Verdict::CandidateFound
                                  : c.verdict == Verdict::TrivialOnly && c.min_defect > 0.0;
  const bool met = verdict_ok && m.pass;
  nlohmann::json j = {{"schema", kReportSchema},
                      {"campaign", "lp2"},
                      {"space", to_json(c.space)},
                      {"certificate", to_json(c)},
                      {"f_monotone", to_json(m)},
                      {"pass", met},
                      {"seed", cfg.seed},
                      {"parameters", {{"p", p}, {"resolution", cfg.resolution}, {"tol", grid.tol}}}};
  j["expectation"] = {{"met", met},
                      {"rule", control ? "p = 2: a perpendicular pair with defect at most 1e-10"
                                       : "p != 2: only trivial pairs, f increasing"}};
  return {std::move(j), met};
}

// u = e₁/∥e₁∥ and v from e₂ by Gram–Schmidt in the space's inner product.
std::optional<VuvFrame> hilbert_frame(const Space& space, double tol) {
  if (!space.has_inner_product() || space.dim() < 2) return std::nullopt;
  const Vector e1 = Vector::basis(space, 0);
  const Vector e2 = Vector::basis(space, 1);
  const Vector u = e1 / e1.norm();
  const Vector w = e2 - inner(space, e2, u) * u;
  return VuvFrame(u, w / w.norm(), Tolerance::uniform(tol));
}

CampaignResult jordan(const Space& space, const CampaignConfig& cfg) {
  if (cfg.samples == 0) fail(Errc::InvalidArgument, "samples must be at least 1");
  CheckReport r;
  r.campaign = "jordan";
  r.space = space;
  r.seed = cfg.seed;
  const std::size_t n = cfg.samples;
  const Tolerance tol = Tolerance::uniform(cfg.tol);

  Rng frame_rng(cfg.seed, 0x71, 0);
  const VuFrame vu(random_unit_vector(space, frame_rng), tol);
  const auto vu_draw = [&](Rng& rng) {
    return VuElement{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), vu};
  };
  run_samples(r.add("vu_jordan_identity"), n, [&](std::size_t i) {
    Rng rng(cfg.seed, 0x72, i);
    const VuElement x = vu_draw(rng);
    const VuElement y = vu_draw(rng);
    SampleOutcome o;
    o.defect = jordan_identity_defect(x, y, vu_product);
    o.bound = kStrict;
    if (o.defect > o.bound) o.witness = {{"x", to_json(x)}, {"y", to_json(y)}};
    return o;
  });
  run_samples(r.add("vu_jb_norm"), n, [&](std::size_t i) {
    Rng rng(cfg.seed, 0x73, i);
    const VuElement x = vu_draw(rng);
    SampleOutcome o;
    o.defect = std::max(jb_norm_check(x, vu_product), power_associativity_defect(x, vu_product));
    o.bound = kStrict;
    if (o.defect > o.bound) o.witness = {{"x", to_json(x)}};
    return o;
  });

  std::optional<VuvFrame> frame;
  std::string frame_kind = "none";
  const VectorPair example = l43_example_pair();
  if (space == example.u.space()) {
    frame.emplace(example.u, example.v, tol);
    frame_kind = "example";
  } else if ((frame = hilbert_frame(space, cfg.tol))) {
    frame_kind = "gram_schmidt";
  }
  if (frame) {
    const auto draw = [&](Rng& rng) {
      return VuvElement{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                        *frame};
    };
    run_samples(r.add("vuv_jordan_identity"), n, [&](std::size_t i) {
      Rng rng(cfg.seed, 0x74, i);
      const VuvElement x = draw(rng);
      const VuvElement y = draw(rng);
      SampleOutcome o;
      o.defect = std::max(jordan_identity_defect(x, y, vuv_product),
                          power_associativity_defect(x, vuv_product));
      o.bound = kStrict;
      if (o.defect > o.bound) o.witness = {{"x", to_json(x)}, {"y", to_json(y)}};
      return o;
    });
    run_samples(r.add("vuv_jb_norm"), n, [&](std::size_t i) {
      Rng rng(cfg.seed, 0x75, i);
      const VuvElement x = draw(rng);
      SampleOutcome o;
      o.defect = jb_norm_check(x, vuv_product);
      o.bound = kStrict;
      if (o.defect > o.bound) o.witness = {{"x", to_json(x)}};
      return o;
    });

    // (u,0) ∘ ((v,0) ∘ (v,0)) = (u,0) while ((u,0) ∘ (v,0)) ∘ (v,0) = 0.
    CheckResult& w = r.add("vuv_associativity_witness");
    const VuvElement u{1.0, 0.0, 0.0, *frame};
    const VuvElement v{0.0, 1.0, 0.0, *frame};
    const VuvElement left = vuv_product(u, vuv_product(v, v));
    const VuvElement right = vuv_product(vuv_product(u, v), v);
    const OrderElement left_raw = circ(u.element(), circ(v.element(), v.element()));
    const OrderElement right_raw = circ(circ(u.element(), v.element()), v.element());
    w.max_defect = std::max({order_unit_norm(left - u), order_unit_norm(right),
                             order_unit_norm(left_raw - u.element()), order_unit_norm(right_raw)});
    w.pass = w.max_defect <= kStrict;
    w.checked = 1;
    w.witness = {{"left", to_json(left)}, {"right", to_json(right)}};
  }

  if (is_hilbertian(space)) {
    run_samples(r.add("circ_jordan_identity"), n, [&](std::size_t i) {
      Rng rng(cfg.seed, 0x76, i);
      const auto draw = [&] {
        return OrderElement(random_vector(space, rng), rng.uniform(-1.0, 1.0));
      };
      const OrderElement x = draw();
      const OrderElement y = draw();
      SampleOutcome o;
      o.defect = jordan_identity_defect(x, y, circ);
      o.bound = kStrict * (1.0 + std::pow(order_unit_norm(x), 3) * order_unit_norm(y));
      if (o.defect > o.bound) o.witness = {{"x", to_json(x)}, {"y", to_json(y)}};
      return o;
    });
  }

  r.parameters = {{"samples", n}, {"tol", cfg.tol}, {"vuv_frame", frame_kind}};
  const bool met = r.all_pass();
  return {finish(r, met, "Jordan identity and JB norm hold in every subalgebra checked"), met};
}

CampaignResult h1(const CampaignConfig& cfg) {
  const CheckReport r = h1_plane_campaign(cfg.samples, cfg.seed, cfg.tol);
  const bool met = r.all_pass();
  return {finish(r, met, "Hilbertian plane of l4^3 and its Jordan frame check out"), met};
}

CampaignResult l42(const CampaignConfig& cfg) {
  CheckReport r = l42_scaling_campaign(cfg.tol);
  r.seed = cfg.seed;
  const bool met = r.all_pass();
  return {finish(r, met, "every listed scaling check holds"), met};
}

}  // namespace

CampaignResult run_campaign(std::string_view name, const std::optional<Space>& space,
                            const CampaignConfig& cfg) {
  if (!(cfg.tol > 0.0)) fail(Errc::InvalidArgument, "tolerance must be positive");
  const auto pick = [&](double p, std::size_t dim) { return space ? *space : Space::lp(p, dim); };
  if (name == "axioms") return axioms(pick(4.0, 2), cfg);
  if (name == "probe") return probe(pick(4.0, 2), cfg);
  if (name == "bilinearity") return bilinearity(pick(4.0, 2), cfg);
  if (name == "jordan") return jordan(pick(4.0, 3), cfg);
  if (name == "lp2") return lp2(cfg);
  if (name == "h1") return h1(cfg);
  if (name == "l42") return l42(cfg);
  fail(Errc::InvalidArgument, "unknown campaign \"" + std::string(name) + "\"");
}

}  // namespace spinx
