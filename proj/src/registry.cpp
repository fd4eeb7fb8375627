#include "bajra/registry.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "bajra/error.hpp"
#include "bajra/expr.hpp"
#include "bajra/families.hpp"

namespace bajra {

namespace {

std::vector<std::string> split_commas(std::string_view s) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = s.find(',', start);
    parts.emplace_back(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t");
  const auto last = s.find_last_not_of(" \t");
  return first == std::string::npos ? std::string{} : s.substr(first, last - first + 1);
}

double parse_number(std::string text, std::string_view spec) {
  text = trim(std::move(text));
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (text == "inf" || text == "+inf") return inf;
  if (text == "-inf") return -inf;
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw Error(Errc::ParseError, "bad number \"" + text + "\" in map spec \"" + std::string(spec) + "\"");
  }
  return v;
}

ScalarFn compile(const std::string& text) {
  std::string body = trim(text);
  // bare function names stand for the function applied to x: quasi:ln
  if (body == "ln" || body == "exp") body += "(x)";
  return [e = Expression::parse(body)](double x) { return e(x); };
}

}  // namespace

MapPtr make_map(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view args = colon == spec.npos ? std::string_view{} : spec.substr(colon + 1);
  const std::vector<std::string> parts = split_commas(args);
  const auto arity = [&](std::size_t n) {
    if (colon == spec.npos || parts.size() != n) {
      throw Error(Errc::ParseError, "map \"" + std::string(spec) + "\" expects " +
                                        std::to_string(n) + " argument(s)");
    }
  };

  if (kind == "hyperboloid") {
    if (colon != spec.npos) throw Error(Errc::ParseError, "hyperboloid takes no arguments");
    return hyperboloid_map();
  }
  if (kind == "gini") {
    arity(2);
    return gini_map({parse_number(parts[0], spec), parse_number(parts[1], spec)});
  }
  if (kind == "power") {
    arity(1);
    return power_map(parse_number(parts[0], spec));
  }
  if (kind == "quasi") {
    if (colon == spec.npos || (parts.size() != 1 && parts.size() != 3)) {
      throw Error(Errc::ParseError, "quasi expects <expr> or <expr>,<a>,<b>");
    }
    Interval iv{0.0, std::numeric_limits<double>::infinity()};
    if (parts.size() == 3) iv = {parse_number(parts[1], spec), parse_number(parts[2], spec)};
    return quasi_arithmetic_map(compile(parts[0]), iv, "quasi:" + trim(parts[0]));
  }
  if (kind == "ratio") {
    arity(4);
    const Interval iv{parse_number(parts[2], spec), parse_number(parts[3], spec)};
    return ratio_map(compile(parts[0]), compile(parts[1]), iv, std::string(spec));
  }
  throw Error(Errc::ParseError, "unknown map \"" + std::string(spec) + "\"");
}

}  // namespace bajra
