#include "spinx/spinx.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "campaigns.hpp"
#include "errors.hpp"
#include "jordan.hpp"
#include "literals.hpp"
#include "order_unit.hpp"
#include "spectral.hpp"

struct spinx_space {
  spinx::Space space;
};

struct spinx_element {
  spinx::OrderElement x;
};

namespace {

thread_local std::string last_error;

spinx_status map(spinx::Errc c) {
  using spinx::Errc;
  switch (c) {
    case Errc::InvalidArgument: return SPINX_INVALID_ARGUMENT;
    case Errc::InvalidSpace: return SPINX_INVALID_SPACE;
    case Errc::DimensionMismatch: return SPINX_DIMENSION_MISMATCH;
    case Errc::SpaceMismatch: return SPINX_SPACE_MISMATCH;
    case Errc::UnsupportedSpace: return SPINX_UNSUPPORTED_SPACE;
    case Errc::NotOrthogonal: return SPINX_NOT_ORTHOGONAL;
    case Errc::ZeroElement: return SPINX_ZERO_ELEMENT;
    case Errc::NotPositive: return SPINX_NOT_POSITIVE;
    case Errc::NotInCone: return SPINX_NOT_IN_CONE;
    case Errc::MismatchedFrame: return SPINX_MISMATCHED_FRAME;
    case Errc::InconsistentWithTheorem: return SPINX_INCONSISTENT;
    case Errc::Parse: return SPINX_PARSE;
  }
  return SPINX_INTERNAL;
}

template <class F>
spinx_status guard(F&& f) {
  try {
    last_error.clear();
    f();
    return SPINX_OK;
  } catch (const spinx::Error& e) {
    last_error = e.what();
    return map(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SPINX_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SPINX_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return SPINX_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) spinx::fail(spinx::Errc::InvalidArgument, what);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

spinx_element* wrap(spinx::OrderElement x) { return new spinx_element{std::move(x)}; }

}  // namespace

extern "C" {

const char* spinx_version(void) { return "1.0.0"; }

const char* spinx_status_string(spinx_status status) {
  switch (status) {
    case SPINX_OK: return "ok";
    case SPINX_INVALID_ARGUMENT: return "invalid argument";
    case SPINX_INVALID_SPACE: return "invalid space";
    case SPINX_DIMENSION_MISMATCH: return "dimension mismatch";
    case SPINX_SPACE_MISMATCH: return "space mismatch";
    case SPINX_UNSUPPORTED_SPACE: return "unsupported space";
    case SPINX_NOT_ORTHOGONAL: return "not orthogonal";
    case SPINX_ZERO_ELEMENT: return "zero element";
    case SPINX_NOT_POSITIVE: return "not positive";
    case SPINX_NOT_IN_CONE: return "not in cone";
    case SPINX_MISMATCHED_FRAME: return "mismatched frame";
    case SPINX_INCONSISTENT: return "inconsistent with theorem";
    case SPINX_PARSE: return "parse error";
    case SPINX_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* spinx_last_error(void) { return last_error.c_str(); }

void spinx_string_free(char* s) { std::free(s); }

spinx_status spinx_space_parse(const char* spec, spinx_space** out) {
  return guard([&] {
    require(spec && out, "null argument");
    *out = new spinx_space{spinx::parse_space(spec)};
  });
}

spinx_status spinx_space_from_json(const char* json, spinx_space** out) {
  return guard([&] {
    require(json && out, "null argument");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& e) {
      spinx::fail(spinx::Errc::Parse, e.what());
    }
    *out = new spinx_space{spinx::space_from_json(j)};
  });
}

spinx_status spinx_space_to_json(const spinx_space* space, char** out) {
  return guard([&] {
    require(space && out, "null argument");
    *out = dup(spinx::to_json(space->space).dump());
  });
}

void spinx_space_free(spinx_space* space) { delete space; }

size_t spinx_space_dim(const spinx_space* space) { return space ? space->space.dim() : 0; }

int spinx_space_strictly_convex(const spinx_space* space) {
  if (!space) return -1;
  return spinx::strict_convexity_verdict(space->space) ? 1 : 0;
}

spinx_status spinx_space_norm(const spinx_space* space, const double* coords, size_t n,
                              double* out) {
  return guard([&] {
    require(space && (coords || n == 0) && out, "null argument");
    const spinx::Vector v(space->space, std::vector<double>(coords, coords + n));
    *out = v.norm();
  });
}

spinx_status spinx_element_create(const spinx_space* space, const double* coords, size_t n,
                                  double alpha, spinx_element** out) {
  return guard([&] {
    require(space && (coords || n == 0) && out, "null argument");
    *out = wrap({spinx::Vector(space->space, std::vector<double>(coords, coords + n)), alpha});
  });
}

spinx_status spinx_element_parse(const spinx_space* space, const char* literal,
                                 spinx_element** out) {
  return guard([&] {
    require(space && literal && out, "null argument");
    *out = wrap(spinx::parse_element(space->space, literal));
  });
}

void spinx_element_free(spinx_element* x) { delete x; }

double spinx_element_alpha(const spinx_element* x) { return x ? x->x.alpha() : 0.0; }

size_t spinx_element_coords(const spinx_element* x, double* out, size_t cap) {
  if (!x) return 0;
  const auto c = x->x.v().coords();
  for (size_t i = 0; i < c.size() && i < cap && out; ++i) out[i] = c[i];
  return c.size();
}

spinx_status spinx_element_to_json(const spinx_element* x, char** out) {
  return guard([&] {
    require(x && out, "null argument");
    *out = dup(spinx::to_json(x->x).dump());
  });
}

spinx_status spinx_order_unit_norm(const spinx_element* x, double* out) {
  return guard([&] {
    require(x && out, "null argument");
    *out = spinx::order_unit_norm(x->x);
  });
}

spinx_status spinx_abs(const spinx_element* x, spinx_element** out) {
  return guard([&] {
    require(x && out, "null argument");
    *out = wrap(spinx::abs(x->x));
  });
}

spinx_status spinx_sqrt(const spinx_element* x, spinx_element** out) {
  return guard([&] {
    require(x && out, "null argument");
    *out = wrap(spinx::sqrt_positive(x->x));
  });
}

spinx_status spinx_power(const spinx_element* x, int n, spinx_element** out) {
  return guard([&] {
    require(x && out, "null argument");
    *out = wrap(spinx::power(x->x, n));
  });
}

spinx_status spinx_circ(const spinx_element* x, const spinx_element* y, spinx_element** out) {
  return guard([&] {
    require(x && y && out, "null argument");
    *out = wrap(spinx::circ(x->x, y->x));
  });
}

spinx_status spinx_spectral_json(const spinx_element* x, char** out) {
  return guard([&] {
    require(x && out, "null argument");
    *out = dup(spinx::to_json(spinx::decompose(x->x)).dump());
  });
}

spinx_status spinx_orthogonal(const spinx_element* x, const spinx_element* y, int* out) {
  return guard([&] {
    require(x && y && out, "null argument");
    spinx::require_same_space(x->x.space(), y->x.space());
    *out = spinx::orthogonal(x->x, y->x) ? 1 : 0;
  });
}

spinx_status spinx_zero_product_classify(const spinx_element* x, const spinx_element* y,
                                         spinx_zero_product* out) {
  return guard([&] {
    require(x && y && out, "null argument");
    switch (spinx::zero_product_classify(x->x, y->x)) {
      case spinx::ZeroProductClass::NotZero: *out = SPINX_PRODUCT_NOT_ZERO; break;
      case spinx::ZeroProductClass::ZeroIndependent: *out = SPINX_PRODUCT_ZERO_INDEPENDENT; break;
      case spinx::ZeroProductClass::ZeroDependentOrthogonal:
        *out = SPINX_PRODUCT_ZERO_DEPENDENT_ORTHOGONAL;
        break;
    }
  });
}

void spinx_campaign_config_init(spinx_campaign_config* cfg) {
  if (!cfg) return;
  const spinx::CampaignConfig d;
  cfg->seed = d.seed;
  cfg->samples = d.samples;
  cfg->resolution = d.resolution;
  cfg->tol = d.tol;
  cfg->p = 0.0;
  cfg->csv_path = nullptr;
}

spinx_status spinx_campaign_run(const char* name, const spinx_space* space,
                                const spinx_campaign_config* cfg, char** report_json,
                                int* expectation_met) {
  return guard([&] {
    require(name && report_json, "null argument");
    spinx::CampaignConfig c;
    if (cfg) {
      c.seed = cfg->seed;
      c.samples = cfg->samples;
      c.resolution = cfg->resolution;
      c.tol = cfg->tol;
      if (cfg->p != 0.0) c.p = cfg->p;
      if (cfg->csv_path) c.csv_path = cfg->csv_path;
    }
    std::optional<spinx::Space> s;
    if (space) s = space->space;
    const spinx::CampaignResult r = spinx::run_campaign(name, s, c);
    *report_json = dup(r.report.dump());
    if (expectation_met) *expectation_met = r.expectation_met ? 1 : 0;
  });
}

}  // extern "C"
