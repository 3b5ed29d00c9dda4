#include "cxp/io/indices.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "cxp/errors.hpp"

namespace cxp::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_factor(std::string_view token, std::string_view whole) {
  token = trim(token);
  if (token == "tau") return GoldenConstants::tau;
  if (token == "sigma") return GoldenConstants::sigma;
  if (token == "sqrt2") return kSqrt2;
  double value = 0.0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw InvalidIndices("cannot read '" + std::string(token) + "' in '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

double parse_index_expression(std::string_view text) {
  const std::string_view whole = trim(text);
  if (whole.empty()) throw InvalidIndices("empty index");
  double product = 1.0;
  std::string_view rest = whole;
  while (true) {
    const auto star = rest.find('*');
    product *= parse_factor(rest.substr(0, star), whole);
    if (star == std::string_view::npos) break;
    rest.remove_prefix(star + 1);
  }
  return product;
}

WeightIndices parse_indices(std::string_view text, Diagram group, bool sigma_scale) {
  double a[3];
  std::size_t count = 0;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    if (count == 3) throw InvalidIndices("expected three comma-separated indices, got more");
    a[count++] = parse_index_expression(rest.substr(0, comma));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (count != 3) throw InvalidIndices("expected three comma-separated indices, got " + std::to_string(count));
  WeightIndices w{a[0], a[1], a[2], group, sigma_scale && group == Diagram::H3};
  w.validate();
  return w;
}

}  // namespace cxp::io
