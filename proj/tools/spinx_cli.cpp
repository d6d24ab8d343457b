// spinx: command-line front end over libspinx.
//
// Exit codes: 0 expected outcome, 1 finding (expectation violated),
// 2 usage or configuration error, 3 domain error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinx/spinx.h"

namespace {

enum Exit { kExpected = 0, kFinding = 1, kUsage = 2, kDomain = 3 };

int exit_for(spinx_status s) {
  switch (s) {
    case SPINX_OK: return kExpected;
    case SPINX_INVALID_ARGUMENT:
    case SPINX_INVALID_SPACE:
    case SPINX_DIMENSION_MISMATCH:
    case SPINX_SPACE_MISMATCH:
    case SPINX_UNSUPPORTED_SPACE:
    case SPINX_PARSE: return kUsage;
    case SPINX_INCONSISTENT: return kFinding;
    default: return kDomain;
  }
}

struct Failure {
  spinx_status status;
};

void check(spinx_status s) {
  if (s != SPINX_OK) throw Failure{s};
}

using SpacePtr = std::unique_ptr<spinx_space, decltype(&spinx_space_free)>;
using ElementPtr = std::unique_ptr<spinx_element, decltype(&spinx_element_free)>;

SpacePtr parse_space(const std::string& spec) {
  spinx_space* s = nullptr;
  check(spinx_space_parse(spec.c_str(), &s));
  return {s, spinx_space_free};
}

ElementPtr parse_element(const spinx_space* space, const std::string& text) {
  spinx_element* x = nullptr;
  check(spinx_element_parse(space, text.c_str(), &x));
  return {x, spinx_element_free};
}

nlohmann::json take_json(char* s) {
  nlohmann::json j = nlohmann::json::parse(s);
  spinx_string_free(s);
  return j;
}

nlohmann::json element_json(const spinx_element* x) {
  char* s = nullptr;
  check(spinx_element_to_json(x, &s));
  return take_json(s);
}

nlohmann::json space_json(const spinx_space* space) {
  char* s = nullptr;
  check(spinx_space_to_json(space, &s));
  return take_json(s);
}

bool use_color() {
  const char* v = std::getenv("NO_COLOR");
  return v == nullptr || v[0] == '\0';
}

std::string paint(const std::string& text, bool good) {
  if (!use_color()) return text;
  return (good ? "\x1b[32m" : "\x1b[31m") + text + "\x1b[0m";
}

std::string space_label(const nlohmann::json& s) {
  if (!s.is_object()) return "-";
  const std::string kind = s.value("kind", "?");
  const std::string dim = std::to_string(s.value("dim", 0));
  if (kind == "lp") {
    const auto& p = s.at("p");
    std::string ptext = p.is_string() ? p.get<std::string>() : p.dump();
    if (p.is_number() && p.get<double>() == std::floor(p.get<double>()))
      ptext = std::to_string(static_cast<long long>(p.get<double>()));
    return "lp:" + ptext + ":" + dim;
  }
  return kind + ":" + dim;
}

void print_human(const nlohmann::json& r) {
  std::cout << "campaign " << r.value("campaign", "?") << " on "
            << space_label(r.value("space", nlohmann::json())) << "\n";
  if (r.contains("axioms")) {
    for (const auto& a : r.at("axioms")) {
      const bool pass = a.at("pass").get<bool>();
      std::cout << "  " << paint(pass ? "PASS" : "FAIL", pass) << "  " << a.at("id").get<std::string>()
                << "  max_defect=" << a.at("max_defect").dump()
                << "  checked=" << a.at("checked").dump() << "\n";
    }
  }
  if (r.contains("certificate")) {
    const auto& c = r.at("certificate");
    std::cout << "  verdict " << c.at("verdict").get<std::string>()
              << "  min_defect=" << c.at("min_defect").dump()
              << "  resolution=" << c.at("resolution").dump() << "\n";
    const auto& m = r.at("f_monotone");
    std::cout << "  f monotone " << (m.at("pass").get<bool>() ? "yes" : "no")
              << "  min_slope=" << m.at("min_slope").dump() << "\n";
  }
  if (r.contains("expectation")) {
    const bool met = r.at("expectation").at("met").get<bool>();
    std::cout << "expectation " << paint(met ? "met" : "NOT met", met) << ": "
              << r.at("expectation").at("rule").get<std::string>() << "\n";
  }
}

void print_csv(const nlohmann::json& r) {
  std::cout << "id,pass,max_defect,checked\n";
  if (r.contains("axioms"))
    for (const auto& a : r.at("axioms"))
      std::cout << a.at("id").get<std::string>() << "," << (a.at("pass").get<bool>() ? 1 : 0)
                << "," << a.at("max_defect").dump() << "," << a.at("checked").dump() << "\n";
  if (r.contains("certificate")) {
    const auto& c = r.at("certificate");
    std::cout << "lp2_" << c.at("verdict").get<std::string>() << ","
              << (r.at("pass").get<bool>() ? 1 : 0) << "," << c.at("min_defect").dump() << ","
              << (c.at("resolution").get<std::size_t>() * c.at("resolution").get<std::size_t>())
              << "\n";
  }
}

void emit(const nlohmann::json& r, const std::string& format) {
  if (format == "human")
    print_human(r);
  else if (format == "csv")
    print_csv(r);
  else
    std::cout << r.dump(2) << "\n";
}

struct Options {
  std::string space;
  std::string format = "json";
  std::uint64_t seed = 42;
  std::size_t samples = 10000;
  std::size_t resolution = 256;
  double tol = 1e-9;
  std::optional<double> p;
  std::string csv;
};

int run_campaign(const std::string& name, const Options& o) {
  SpacePtr space(nullptr, spinx_space_free);
  if (!o.space.empty()) space = parse_space(o.space);
  spinx_campaign_config cfg;
  spinx_campaign_config_init(&cfg);
  cfg.seed = o.seed;
  cfg.samples = o.samples;
  cfg.resolution = o.resolution;
  cfg.tol = o.tol;
  if (o.p) {
    // 0 means "default" to the library, so reject it here.
    if (*o.p == 0.0) {
      std::cerr << "spinx: --p must be greater than 1\n";
      return kUsage;
    }
    cfg.p = *o.p;
  }
  if (!o.csv.empty()) cfg.csv_path = o.csv.c_str();
  char* json = nullptr;
  int met = 0;
  check(spinx_campaign_run(name.c_str(), space.get(), &cfg, &json, &met));
  emit(take_json(json), o.format);
  return met ? kExpected : kFinding;
}

int run_eval(const std::string& op, const Options& o, const std::vector<std::string>& operands,
             int n) {
  const SpacePtr space = parse_space(o.space);
  std::vector<ElementPtr> xs;
  for (const auto& text : operands) xs.push_back(parse_element(space.get(), text));
  const std::size_t want = op == "circ" ? 2 : 1;
  if (xs.size() != want) {
    std::cerr << "spinx: " << op << " takes " << want << " operand" << (want == 1 ? "" : "s")
              << "\n";
    return kUsage;
  }

  nlohmann::json result;
  spinx_element* out = nullptr;
  if (op == "abs") {
    check(spinx_abs(xs[0].get(), &out));
  } else if (op == "sqrt") {
    check(spinx_sqrt(xs[0].get(), &out));
  } else if (op == "power") {
    check(spinx_power(xs[0].get(), n, &out));
  } else if (op == "circ") {
    check(spinx_circ(xs[0].get(), xs[1].get(), &out));
  } else {
    char* s = nullptr;
    check(spinx_spectral_json(xs[0].get(), &s));
    result = take_json(s);
  }
  if (out) {
    const ElementPtr owned(out, spinx_element_free);
    result = element_json(owned.get());
  }

  nlohmann::json r = {{"schema", "spinx-report/1"},
                      {"command", "eval"},
                      {"op", op},
                      {"space", space_json(space.get())},
                      {"result", result}};
  if (op == "power") r["n"] = n;
  if (o.format == "human") {
    std::cout << op << " = " << result.dump() << "\n";
  } else {
    std::cout << r.dump(2) << "\n";
  }
  return kExpected;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "human", "csv"}));
}

void add_sampling(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "Random seed");
  cmd->add_option("--samples", o.samples, "Sample count")->check(CLI::PositiveNumber);
  cmd->add_option("--tol", o.tol, "Tolerance")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Order-unit spaces over normed spaces: evaluation and verification campaigns"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(spinx_version()));

  Options o;
  std::string op;
  std::string campaign;
  std::vector<std::string> operands;
  int n = 2;

  auto* axioms = app.add_subcommand("axioms", "Check the absolute-value axioms on V x R");
  axioms->add_option("--space", o.space, "lp:<p>:<n>, hilbert:<n> or weighted:<file>")->required();
  add_sampling(axioms, o);
  add_common(axioms, o);

  auto* eval = app.add_subcommand("eval", "Evaluate one operation on element literals");
  eval->add_option("op", op, "abs, sqrt, power, circ or spectral")
      ->required()
      ->check(CLI::IsMember({"abs", "sqrt", "power", "circ", "spectral"}));
  eval->add_option("--space", o.space, "lp:<p>:<n>, hilbert:<n> or weighted:<file>")->required();
  eval->add_option("operands", operands, "Elements as \"[c1,...,cn];alpha\"")->required();
  eval->add_option("--n", n, "Exponent for power")->check(CLI::PositiveNumber);
  add_common(eval, o);

  auto* camp = app.add_subcommand("campaign", "Run a named verification campaign");
  camp->add_option("name", campaign, "bilinearity, lp2, h1, l42, jordan or probe")
      ->required()
      ->check(CLI::IsMember({"bilinearity", "lp2", "h1", "l42", "jordan", "probe"}));
  camp->add_option("--space", o.space, "lp:<p>:<n>, hilbert:<n> or weighted:<file>");
  camp->add_option("--p", o.p, "Exponent for lp2");
  camp->add_option("--resolution", o.resolution, "Angles per parameter for lp2")
      ->check(CLI::PositiveNumber);
  camp->add_option("--csv", o.csv, "Write the lp2 defect surface to this file");
  add_sampling(camp, o);
  add_common(camp, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*axioms) return run_campaign("axioms", o);
    if (*eval) return run_eval(op, o, operands, n);
    return run_campaign(campaign, o);
  } catch (const Failure& f) {
    std::cerr << "spinx: " << spinx_status_string(f.status) << ": " << spinx_last_error() << "\n";
    return exit_for(f.status);
  } catch (const std::exception& e) {
    std::cerr << "spinx: " << e.what() << "\n";
    return kDomain;
  }
}
