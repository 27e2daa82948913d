#pragma once

// Seeded generator of absolutely monotonic series whose type-zero
// certificate comes out certified.

#include <cstdint>
#include <string>
#include <vector>

#include "amlt/am_series.hpp"

namespace amlt {

/// Each series is a sum of one to three pieces: a scaled 1F2, a
/// beta^n/(n!)^(1+s) series or a short polynomial, all with rational
/// parameters. Draws that do not certify are discarded. Deterministic in seed.
std::vector<AMSeries> random_certified_series(std::uint64_t seed, std::size_t count);

} // namespace amlt
