#include "cxp/tolerance.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace cxp {

namespace {

double read_epsilon() {
  constexpr double kDefault = 1e-9;
  const char* raw = std::getenv("POLY_EPSILON");
  if (raw == nullptr || *raw == '\0') return kDefault;
  try {
    std::size_t used = 0;
    const double value = std::stod(raw, &used);
    if (used != std::string(raw).size() || !std::isfinite(value) || value <= 0.0) return kDefault;
    return value;
  } catch (const std::exception&) {
    return kDefault;
  }
}

}  // namespace

double epsilon() {
  static const double value = read_epsilon();
  return value;
}

}  // namespace cxp
