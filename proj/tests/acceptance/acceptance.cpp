// One line per acceptance criterion; exit status 1 if any is red.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "campaigns.hpp"
#include "jordan.hpp"
#include "literals.hpp"
#include "oracle.hpp"
#include "search.hpp"
#include "spectral.hpp"

using namespace spinx;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

oracle::Vec coords(const Vector& v) { return {v.coords().begin(), v.coords().end()}; }
oracle::Elem to_oracle(const OrderElement& x) { return {coords(x.v()), x.alpha()}; }

double rel(double defect, double scale) { return scale > 0.0 ? defect / scale : defect; }

const std::vector<double> kPs{1.5, 2.0, 3.0, 4.0};
constexpr std::size_t kN = 10000;

void cone_suite(Outcome& out) {
  const auto t0 = Clock::now();
  double worst = 0.0;
  std::size_t checked = 0;
  for (double p : kPs)
    for (std::size_t n : {2u, 3u}) {
      const Space s = Space::lp(p, n);
      for (std::size_t i = 0; i < kN; ++i) {
        Rng rng(1001, n, i);
        const OrderElement x = random_element(s, rng);
        const double k = rng.uniform(-5.0, 5.0);
        const double sc = order_unit_norm(x);
        const OrderElement ax = abs(x);
        const OrderElement pp = pos_part(x);
        const OrderElement np = neg_part(x);
        worst = std::max({worst, rel(order_unit_norm(abs(ax) - ax), sc),
                          rel(order_unit_norm(abs(k * x) - std::abs(k) * ax), std::abs(k) * sc),
                          rel(orthogonality_defect(pp, np), sc),
                          rel(order_unit_norm(pp - np - x), sc),
                          rel(oracle::distance(to_oracle(ax), oracle::abs(to_oracle(x), p), p), sc)});
        ++checked;
      }
    }
  const double t = seconds_since(t0);
  out.require(worst <= 1e-10, "worst relative defect above 1e-10");
  out.require(t < 10.0, "runtime not under 10 s");
  out.detail << (out.pass ? "" : "; ") << checked << " elements, worst relative defect " << worst
             << ", " << t << " s";
}

void axiom_reproduction(Outcome& out) {
  for (const Space& s : {Space::lp(4.0, 2), Space::lp(2.0, 3)}) {
    const CheckReport r = axiom_suite(s, kN, 42, 1e-9);
    out.require(r.checks.size() == 5 && r.all_pass(), s.label() + " does not pass all five");
  }
  const Space l1 = Space::lp(1.0, 2);
  const CheckReport r = axiom_suite(l1, kN, 42, 1e-9);
  const CheckResult* h = r.find("perp_hereditary");
  out.require(h && !h->pass, "no axiom (5) counterexample on lp:1:2");
  if (h && !h->pass) {
    const auto elem = [&](const char* key) {
      return oracle::Elem{h->witness.at(key).at("v").get<oracle::Vec>(),
                          h->witness.at(key).at("alpha").get<double>()};
    };
    const oracle::Elem u = elem("u"), v = elem("v"), w = elem("w");
    const oracle::Elem want_u{{-0.5, -0.5}, 1.0}, want_v{{0.5, 0.5}, 1.0}, want_w{{0.5, 0.0}, 0.5};
    out.require(oracle::distance(u, want_u, 1.0) + oracle::distance(v, want_v, 1.0) +
                        oracle::distance(w, want_w, 1.0) <= 1e-12,
                "witness is not the constructed one");
    // x ⊥ y iff |x − y| = x + y, checked from the formulas.
    const auto perp = [](const oracle::Elem& x, const oracle::Elem& y) {
      const oracle::Elem d{oracle::add(x.v, y.v, -1.0), x.alpha - y.alpha};
      const oracle::Elem s{oracle::add(x.v, y.v), x.alpha + y.alpha};
      return oracle::distance(oracle::abs(d, 1.0), s, 1.0) <= 1e-12;
    };
    const oracle::Elem vw{oracle::add(v.v, w.v, -1.0), v.alpha - w.alpha};
    out.require(perp(u, v), "(−w0,1) not orthogonal to (w0,1)");
    out.require(oracle::lp_norm(w.v, 1.0) <= w.alpha && oracle::lp_norm(vw.v, 1.0) <= vw.alpha,
                "0 ≤ w ≤ v fails");
    out.require(!perp(u, w), "(−w0,1) orthogonal to ((½,0),½)");
  }
  for (const char* t : {"lp:1:2", "lp:1.5:2", "lp:2:3", "lp:3:3", "lp:4:2", "lp:inf:2", "hilbert:3"}) {
    const Space s = parse_space(t);
    out.require(axiom_suite(s, 2000, 42, 1e-9).all_pass() == strict_convexity_verdict(s),
                std::string("verdict disagreement on ") + t);
  }
  if (out.pass) out.detail << "lp:4:2 and lp:2:3 pass 5/5; lp:1:2 witness verified; verdicts agree";
}

void spectral_round_trip(Outcome& out) {
  double recon = 0.0, pw = 0.0, sq = 0.0;
  for (double p : kPs)
    for (std::size_t n : {2u, 3u}) {
      const Space s = Space::lp(p, n);
      for (std::size_t i = 0; i < kN; ++i) {
        Rng rng(2002, n, i);
        const OrderElement x = random_element(s, rng);
        const double sc = order_unit_norm(x);
        recon = std::max(recon, rel(order_unit_norm(decompose(x).reconstruct() - x), sc));
        if (i < 1000)
          for (int m = 1; m <= 8; ++m) {
            const OrderElement y = power(x, m);
            const double scm = std::pow(sc, m);
            pw = std::max(pw, rel(order_unit_norm(y - power_binomial(x, m)), scm));
          }
        OrderElement c = random_cone_element(s, rng);
        if (i % 4 == 0) c = OrderElement(c.v(), c.v().norm());
        const OrderElement r = sqrt_positive(c);
        sq = std::max(sq, rel(order_unit_norm(square(r) - c), order_unit_norm(c)));
      }
    }
  out.require(recon <= 1e-12, "reconstruction above 1e-12");
  out.require(pw <= 1e-10, "power cross-check above 1e-10");
  out.require(sq <= 1e-10, "sqrt round trip above 1e-10");
  out.detail << (out.pass ? "" : "; ") << "reconstruct " << recon << ", power " << pw << ", sqrt "
             << sq;
}

void bilinearity_dichotomy(Outcome& out) {
  double worst = 0.0;
  std::vector<Space> spaces{Space::hilbert(2), Space::hilbert(3), Space::hilbert(4),
                            Space::h1_plane()};
  for (const Space& s : spaces)
    for (std::size_t i = 0; i < 1000; ++i) {
      Rng rng(3003, s.dim(), i);
      worst = std::max(worst, bilinearity_defect(random_vector(s, rng), random_vector(s, rng)).defect);
    }
  out.require(worst <= 1e-10, "Hilbertian defect above 1e-10");

  const Space l4 = Space::lp(4.0, 2);
  const BilinearityDefect d = bilinearity_defect(Vector::basis(l4, 0), Vector::basis(l4, 1));
  // Scalar slot of (u+v)∘(u+v) − u∘u − 2u∘v − v∘v from the defining formula.
  const oracle::Elem u{{1.0, 0.0}, 0.0}, v{{0.0, 1.0}, 0.0}, w{{1.0, 1.0}, 0.0};
  const double derived = oracle::circ(w, w, 4.0).alpha - oracle::circ(u, u, 4.0).alpha -
                         2.0 * oracle::circ(u, v, 4.0).alpha - oracle::circ(v, v, 4.0).alpha;
  out.require(std::abs(std::abs(d.scalar_residual) - std::abs(derived)) <= 1e-9,
              "lp:4:2 witness residual differs from the derived value");
  out.require(std::abs(std::abs(derived) - (2.0 - std::sqrt(2.0))) <= 1e-9,
              "derived residual is not |√2 − 2|");
  out.detail << (out.pass ? "" : "; ") << "Hilbertian worst " << worst << ", lp:4:2 residual "
             << d.scalar_residual;
}

void zero_product(Outcome& out) {
  std::size_t inconsistent = 0;
  for (double p : {1.0, 1.5, 2.0, 3.0, 4.0, std::numeric_limits<double>::infinity()})
    for (std::size_t n : {2u, 3u}) {
      const Space s = Space::lp(p, n);
      for (std::size_t i = 0; i < kN; ++i) {
        Rng rng(4004, n, i);
        OrderElement x = random_element(s, rng);
        OrderElement y = random_element(s, rng);
        if (i % 5 == 0) {
          const OrderProjection q = OrderProjection::along(random_vector(s, rng));
          x = rng.uniform(-3.0, 3.0) * q.element();
          y = rng.uniform(-3.0, 3.0) * q.complement().element();
        }
        try {
          zero_product_classify(x, y);
        } catch (const Error&) {
          ++inconsistent;
        }
      }
    }
  out.require(inconsistent == 0, std::to_string(inconsistent) + " inconsistent pairs");

  const VectorPair pr = l42_zero_product_pair();
  const oracle::Vec u = coords(pr.u), v = coords(pr.v);
  const double plus = std::pow(oracle::lp_norm(oracle::add(u, v), 4.0), 4);
  const double minus = std::pow(oracle::lp_norm(oracle::add(u, v, -1.0), 4.0), 4);
  out.require(std::abs(plus - 25.0) <= 1e-10 && std::abs(minus - 25.0) <= 1e-10,
              "fourth powers are not 25");
  out.require(zero_product_classify(OrderElement(pr.u, 0.0), OrderElement(pr.v, 0.0)) ==
                  ZeroProductClass::ZeroIndependent,
              "pair not ZeroIndependent");

  // (ku,0)∘(lv,0) = 0 exactly when |kl| = 1, on k, l ∈ {2^j : j = −8..8}.
  std::size_t mismatches = 0;
  std::string first;
  for (int a = -8; a <= 8; ++a)
    for (int b = -8; b <= 8; ++b) {
      const double k = std::ldexp(1.0, a), l = std::ldexp(1.0, b);
      const oracle::Elem z = oracle::circ({oracle::scale(u, k), 0.0}, {oracle::scale(v, l), 0.0}, 4.0);
      const bool is_zero = oracle::order_norm(z, 4.0) <= 1e-10 * (1.0 + k * l);
      if (is_zero != (std::abs(k * l) == 1.0)) {
        if (mismatches++ == 0)
          first = "k=" + std::to_string(k) + " l=" + std::to_string(l);
      }
    }
  const CheckReport lib = l42_scaling_campaign(1e-9);
  out.require(mismatches == 0, "|kl| = 1 rule mismatches on " + std::to_string(mismatches) +
                                   "/289 grid points (first " + first + ")");
  out.require(lib.find("kl_unit_criterion")->pass, "library kl_unit_criterion check red");
  if (out.pass) out.detail << "no inconsistencies; pair verified; scaling rule verified";
}

void jordan_structure(Outcome& out) {
  const Space s = Space::lp(4.0, 3);
  Rng frng(5005, 0, 0);
  const VuFrame vu(random_unit_vector(s, frng));
  const VectorPair ex = l43_example_pair();
  const VuvFrame vuv(ex.u, ex.v);
  double jd = 0.0, jb = 0.0, embed = 0.0;
  for (std::size_t i = 0; i < 1000; ++i) {
    Rng rng(5005, 1, i);
    const auto r = [&] { return rng.uniform(-1.0, 1.0); };
    const VuElement a{r(), r(), vu}, b{r(), r(), vu};
    const VuvElement x{r(), r(), r(), vuv}, y{r(), r(), r(), vuv};
    jd = std::max({jd, jordan_identity_defect(a, b, vu_product),
                   jordan_identity_defect(x, y, vuv_product)});
    jb = std::max({jb, jb_norm_check(a, vu_product), jb_norm_check(x, vuv_product)});
    embed = std::max(embed, oracle::distance(to_oracle(vuv_product(x, y).element()),
                                             oracle::circ(to_oracle(x.element()),
                                                          to_oracle(y.element()), 4.0),
                                             4.0));
  }
  out.require(jd <= 1e-10, "Jordan identity defect above 1e-10");
  out.require(jb <= 1e-10, "JB norm defect above 1e-10");
  out.require(embed <= 1e-10, "V(u,v) product disagrees with the ∘ formula");

  const oracle::Elem u{coords(ex.u), 0.0}, v{coords(ex.v), 0.0};
  const oracle::Elem left = oracle::circ(u, oracle::circ(v, v, 4.0), 4.0);
  const oracle::Elem right = oracle::circ(oracle::circ(u, v, 4.0), v, 4.0);
  const oracle::Elem zero{{0.0, 0.0, 0.0}, 0.0};
  out.require(oracle::distance(left, u, 4.0) <= 1e-10, "(u,0)∘((v,0)∘(v,0)) ≠ (u,0)");
  out.require(oracle::distance(right, zero, 4.0) <= 1e-10, "((u,0)∘(v,0))∘(v,0) ≠ 0");
  const VuvElement lu{1, 0, 0, vuv}, lv{0, 1, 0, vuv};
  const VuvElement ll = vuv_product(lu, vuv_product(lv, lv));
  const VuvElement lr = vuv_product(vuv_product(lu, lv), lv);
  out.require(order_unit_norm(ll - lu) <= 1e-10 && order_unit_norm(lr) <= 1e-10,
              "library associativity witness differs");
  out.detail << (out.pass ? "" : "; ") << "Jordan " << jd << ", JB " << jb
             << ", associativity witness reproduced";
}

void l43_example(Outcome& out) {
  const VectorPair ex = l43_example_pair();
  const double lib = perp2_defect(ex.u, ex.v, default_k_grid());
  double orc = 0.0;
  const oracle::Vec u = coords(ex.u), v = coords(ex.v);
  for (double k : default_k_grid()) {
    const double n = oracle::lp_norm(oracle::add(u, v, k), 4.0);
    const double nu = oracle::lp_norm(u, 4.0), nv = oracle::lp_norm(v, 4.0);
    orc = std::max(orc, std::abs(n * n - nu * nu - k * k * nv * nv));
  }
  out.require(lib <= 1e-9 && orc <= 1e-9, "perp2 defect above 1e-9");

  const Space h = Space::h1_plane();
  double compat = 0.0;
  for (std::size_t i = 0; i < 1000; ++i) {
    Rng rng(6006, 0, i);
    const Vector x = random_vector(h, rng);
    const double via_inner = std::sqrt(inner(h, x, x));
    const double via_l4 = oracle::lp_norm({x[0], x[1], x[0] + x[1]}, 4.0);
    compat = std::max({compat, std::abs(via_inner - via_l4), std::abs(x.norm() - via_l4)});
  }
  out.require(compat <= 1e-10, "H1 compatibility above 1e-10");
  out.detail << (out.pass ? "" : "; ") << "perp2 defect " << lib << ", H1 compatibility " << compat;
}

void lp2_triviality(Outcome& out) {
  const auto t0 = Clock::now();
  std::ostringstream d;
  for (double p : {1.5, 3.0, 4.0}) {
    const SearchCertificate c = lp2_triviality_campaign(p, GridSpec{});
    out.require(c.verdict == Verdict::TrivialOnly && c.min_defect > 0.0,
                "p=" + std::to_string(p) + " not TrivialOnly");
    d << "p=" << p << " min " << c.min_defect << ", ";
  }
  GridSpec g;
  g.tol = 1e-10;
  const SearchCertificate c2 = lp2_triviality_campaign(2.0, g);
  out.require(c2.verdict == Verdict::CandidateFound && c2.min_defect <= 1e-10,
              "p=2 control has no candidate");
  d << "p=2 min " << c2.min_defect;
  for (double p : {1.5, 2.0, 3.0, 4.0})
    out.require(f_monotone_check(p, 10000).pass, "f not increasing for p=" + std::to_string(p));
  const double t = seconds_since(t0);
  out.require(t < 60.0, "runtime not under 60 s");
  out.detail << (out.pass ? "" : "; ") << d.str() << ", " << t << " s";
}

std::string run_cli(const std::string& args, int& code) {
  const std::string cmd = "'" SPINX_CLI_PATH "' " + args + " 2>/dev/null";
  std::string out;
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) {
    code = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), n);
  const int status = pclose(f);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

void cli_determinism(Outcome& out) {
  int c1 = 0, c2 = 0;
  const std::string a = run_cli("campaign lp2 --p 4 --seed 42", c1);
  const std::string b = run_cli("campaign lp2 --p 4 --seed 42", c2);
  out.require(c1 == 0 && c2 == 0, "nonzero exit");
  out.require(!a.empty() && a == b, "outputs differ");
  out.detail << (out.pass ? "" : "; ") << a.size() << " bytes, identical";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"cone suite", cone_suite},
      {"absolutely ordered axioms", axiom_reproduction},
      {"spectral round trip", spectral_round_trip},
      {"bilinearity dichotomy", bilinearity_dichotomy},
      {"zero products", zero_product},
      {"Jordan structure", jordan_structure},
      {"lp:4:3 example and H1", l43_example},
      {"lp2 triviality", lp2_triviality},
      {"CLI determinism", cli_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failed;
    std::cout << "criterion " << i + 1 << " [" << criteria[i].first << "]: "
              << (o.pass ? "PASS" : "FAIL") << " - " << o.detail.str() << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
