#pragma once

#include <optional>
#include <string>

#include "types.hpp"

namespace meshdist {

/// Global mesh description: point counts per axis plus physical spacing
/// and origin. Spacing and origin are carried for output metadata only;
/// all distribution arithmetic is purely index based.
struct GridConfig {
  Triple n{1, 1, 1};
  std::array<double, 3> spacing{1.0, 1.0, 1.0};
  std::array<double, 3> origin{0.0, 0.0, 0.0};

  Box domain() const { return Box{{0, 0, 0}, n}; }
};

/// Validates extents >= 1 and spacing > 0.
GridConfig make_grid(Triple n, std::array<double, 3> spacing = {1.0, 1.0, 1.0},
                     std::array<double, 3> origin = {0.0, 0.0, 0.0});

/// One axis of the subgrid size arithmetic: n = quotient*parts + remainder.
///
/// Constructed in two ways that differ in which variable is configured and
/// which is derived: from_parts fixes the part count (remainder < parts),
/// from_quotient fixes the per-subgrid point count (remainder < quotient).
struct AxisSplit {
  Index parts = 1;
  Index quotient = 0;
  Index remainder = 0;
  Index n = 0;

  static AxisSplit from_parts(Index n, Index parts);
  static AxisSplit from_quotient(Index n, Index quotient);
};

/// (quotient, remainder) = (n div parts, n mod parts).  parts >= 1.
std::pair<Index, Index> split_counts(Index n, Index parts);

/// First grid index of subgrid p along one axis: p*quotient + min(p, remainder).
Index subgrid_corner(Index p, Index quotient, Index remainder);

/// Point count of subgrid p along one axis: quotient+1 for p < remainder,
/// else quotient.  The first `remainder` subgrids absorb the leftover points.
Index subgrid_extent(Index p, Index quotient, Index remainder);

/// (parts, remainder) = (n div quotient, n mod quotient) with the quotient
/// fixed and the part count derived.  Requires 1 <= quotient <= n.
std::pair<Index, Index> derive_parts(Index n, Index quotient);

/// Result of the pre-allocation coverage check for one axis.  When the
/// derived remainder exceeds the derived part count, the per-subgrid extents
/// cannot sum back to n and the configuration must be rejected.
struct CoverCheck {
  bool ok = false;
  Index n = 0;
  Index quotient = 0;
  Index parts = 0;
  Index remainder = 0;
  Index extent_sum = 0;  // sum of subgrid extents actually produced

  std::string describe() const;
};

/// Checks that the subgrid extents along one axis tile exactly n points.
/// Returns a report; never throws for in-range inputs.
CoverCheck check_cover(Index n, Index quotient);

enum class Locality { Local, Ghost };

/// A non-overlapping Cartesian block of grid points, the atomic unit of
/// parallelization.  `pvec` locates the subgrid in the subgrid grid,
/// `gid` is its position in the owning layout's global subgrid order.
struct Subgrid {
  Triple pvec{0, 0, 0};
  Triple corner{0, 0, 0};
  Triple extents{0, 0, 0};
  Index gid = 0;
  int owner = 0;
  Locality locality = Locality::Local;

  Box box() const { return Box{corner, corner + extents}; }
};

/// Builds the subgrid at position pvec from per-axis splits.
/// Throws invalid_argument when pvec is outside the part grid.
Subgrid make_subgrid(const Triple& pvec, const std::array<AxisSplit, 3>& splits,
                     int owner, Locality locality);

}  // namespace meshdist
