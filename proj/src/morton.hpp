#pragma once

#include "types.hpp"

namespace meshdist {

/// Z-order index of a cell in a 2^level cube (dims = 2 or 3).
/// Bit planes interleave with x least significant: plane b contributes
/// x_b, y_b (, z_b) at positions b*dims, b*dims+1 (, b*dims+2).
Index morton_encode(const Triple& coords, int level, int dims);

/// Inverse of morton_encode; the unused z component decodes to 0 in 2D.
Triple morton_decode(Index index, int level, int dims);

}  // namespace meshdist
