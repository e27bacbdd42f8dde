#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "subwords/words.hpp"

namespace subwords {

/// Entry of the generalized Pascal triangle: the word binomial of the two
/// canonical expansions, rows indexed by m, columns by n.
Int triangle_entry(Base base, const Int& m, const Int& n);

/// Number of positive entries on row m; entries vanish beyond the diagonal,
/// and the count equals S_b(m).
Int row_positive_count(Base base, const Int& m);

/// Square grayscale raster of the first `rows` rows, binary portable graymap
/// (P5, 8-bit). Zero entries are white; values 1..cap darken linearly to
/// black; values above cap clip to black. cap = 2 gives the three-tone
/// white/gray/black scheme, cap = 1 a positivity mask.
std::vector<std::uint8_t> render_triangle(Base base, int rows, int cap = 2);

/// Row counts for m = 0..rows-1; the bar-chart profile of the triangle.
std::vector<Int> compressed_profile(Base base, int rows);

/// CSV with header "m,count".
std::string profile_csv(const std::vector<Int>& profile);

}  // namespace subwords
