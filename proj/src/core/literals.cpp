#include "literals.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <vector>

namespace spinx {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t parse_dim(std::string_view text) {
  text = trim(text);
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    fail(Errc::Parse, "bad dimension \"" + std::string(text) + "\"");
  return n;
}

}  // namespace

double parse_real(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty() || !std::isfinite(x))
    fail(Errc::Parse, "bad number \"" + std::string(text) + "\"");
  return x;
}

Space parse_space(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    fail(Errc::Parse, "space spec must look like lp:<p>:<n>, hilbert:<n> or weighted:<file>");
  const std::string_view kind = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);
  if (kind == "lp") {
    const auto c2 = rest.find(':');
    if (c2 == std::string_view::npos) fail(Errc::Parse, "lp spec needs lp:<p>:<n>");
    const std::string_view ptext = trim(rest.substr(0, c2));
    const double p = ptext == "inf" ? std::numeric_limits<double>::infinity() : parse_real(ptext);
    return Space::lp(p, parse_dim(rest.substr(c2 + 1)));
  }
  if (kind == "hilbert") return Space::hilbert(parse_dim(rest));
  if (kind == "weighted") {
    const std::string path(rest);
    std::ifstream in(path);
    if (!in) fail(Errc::Parse, "cannot read space file " + path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      fail(Errc::Parse, path + ": " + e.what());
    }
    const Space s = space_from_json(j);
    if (s.kind() != SpaceKind::Weighted) fail(Errc::Parse, path + " is not a weighted space");
    return s;
  }
  fail(Errc::Parse, "unknown space kind \"" + std::string(kind) + "\"");
}

OrderElement parse_element(const Space& space, std::string_view text) {
  text = trim(text);
  const auto semi = text.rfind(';');
  if (semi == std::string_view::npos) fail(Errc::Parse, "element literal must be \"[c1,...];alpha\"");
  std::string_view vec = trim(text.substr(0, semi));
  if (vec.size() < 2 || vec.front() != '[' || vec.back() != ']')
    fail(Errc::Parse, "element vector part must be bracketed");
  vec = trim(vec.substr(1, vec.size() - 2));
  std::vector<double> coords;
  while (!vec.empty()) {
    const auto comma = vec.find(',');
    coords.push_back(parse_real(vec.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    vec.remove_prefix(comma + 1);
    if (trim(vec).empty()) fail(Errc::Parse, "trailing comma in element literal");
  }
  if (coords.size() != space.dim())
    fail(Errc::DimensionMismatch, "element has " + std::to_string(coords.size()) +
                                      " coordinates, space " + space.label() + " needs " +
                                      std::to_string(space.dim()));
  return {Vector(space, std::move(coords)), parse_real(text.substr(semi + 1))};
}

}  // namespace spinx
