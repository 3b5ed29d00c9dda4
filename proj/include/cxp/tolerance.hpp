#pragma once

namespace cxp {

/// Global equality/dedup tolerance. Defaults to 1e-9; the POLY_EPSILON
/// environment variable overrides it. Read once, immutable afterwards.
double epsilon();

}  // namespace cxp
