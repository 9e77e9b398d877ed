#pragma once

#include <memory>
#include <span>
#include <vector>

#include "brick.hpp"
#include "grid.hpp"
#include "stencil.hpp"

namespace meshdist {

/// The distributed-metadata layout: a rank stores subgrids for its own
/// contiguous curve range plus the adjacent foreign ("ghost") quadrants,
/// and nothing else.  setup_ops counts subgrid-metadata visits and stays
/// proportional to |locsubs| + |ghosts|, independent of the machine size.
struct SfcLayout {
  GridConfig grid;
  std::shared_ptr<const BrickLayout> brick;
  std::array<AxisSplit, 3> splits;
  Connectivity connectivity = Connectivity::Full;
  int rank = 0;
  std::vector<Subgrid> locsubs;  // curve order
  std::vector<Subgrid> ghosts;   // curve order, owners != rank
  Index setup_ops = 0;

  Index allsubs_size() const {
    return static_cast<Index>(locsubs.size() + ghosts.size());
  }
  /// Concatenation view over locsubs then ghosts; no other subgrid's
  /// metadata exists on this rank.
  const Subgrid& allsub(Index i) const {
    const auto k = static_cast<size_t>(i);
    return k < locsubs.size() ? locsubs[k] : ghosts[k - locsubs.size()];
  }
};

/// True when class `a` reaches every neighbor class `b` does.
bool connectivity_includes(Connectivity a, Connectivity b);

/// The unique rank r with offsets[r] <= global_idx < offsets[r+1].
int owner_of_quadrant(Index global_idx, std::span<const Index> offsets);

/// All foreign quadrants adjacent (per the connectivity class) to at least
/// one quadrant of `rank`, each listed once, sorted by global curve index.
std::vector<Quadrant> compute_ghost(const BrickLayout& brick, int rank,
                                    Connectivity connectivity);

/// Builds one rank's layout from the per-axis subgrid point counts m.
/// Fails with a configuration error when the extents cannot tile the grid.
SfcLayout build_sfc_layout(const GridConfig& grid, const Triple& m, Index ranks,
                           int rank, Connectivity connectivity);

/// As above but reusing an already constructed brick (one partition array
/// shared between all simulated ranks).
SfcLayout build_sfc_layout(const GridConfig& grid, const Triple& m,
                           std::shared_ptr<const BrickLayout> brick, int rank,
                           Connectivity connectivity);

/// Layouts for every rank of the simulated machine, sharing one brick.
std::vector<SfcLayout> build_all_sfc_layouts(const GridConfig& grid,
                                             const Triple& m, Index ranks,
                                             Connectivity connectivity);

}  // namespace meshdist
