#pragma once

#include <optional>
#include <vector>

#include "grid.hpp"
#include "region.hpp"
#include "stencil.hpp"

namespace meshdist {

/// The baseline distribution: one subgrid per rank, ranks assigned in
/// z-major/x-minor lexicographic order over the part grid, and the metadata
/// of every subgrid in the machine replicated on every rank (`allsubs`).
/// Building it and scanning it are deliberately linear in the machine size;
/// `setup_ops` counts those subgrid-metadata visits.
struct LexLayout {
  GridConfig grid;
  Triple pgrid{1, 1, 1};
  std::array<AxisSplit, 3> splits;
  std::vector<Subgrid> allsubs;  // index == owner rank == gid
  std::vector<Subgrid> locsubs;  // exactly one entry
  int rank = 0;
  Index setup_ops = 0;

  Index allsubs_size() const { return static_cast<Index>(allsubs.size()); }
  const Subgrid& allsub(Index i) const { return allsubs[static_cast<size_t>(i)]; }
};

/// Rank owning the subgrid at pvec: (p_z*P_y + p_y)*P_x + p_x.
/// Bijective over the part grid; throws on out-of-range pvec.
int lex_owner(const Triple& pvec, const Triple& pgrid);

/// Inverse of lex_owner.
Triple lex_pvec(Index rank, const Triple& pgrid);

/// Owner of the subgrid at pvec+offset, or nullopt when the shifted
/// position falls off the part grid (domain boundary).
std::optional<int> lex_neighbor(const Triple& pvec, const Triple& offset,
                                const Triple& pgrid);

/// Builds the layout for one rank.  The pgrid product must equal the
/// simulated machine size; the build loop visits all of it (setup_ops += P).
LexLayout build_lex_layout(const GridConfig& grid, const Triple& pgrid,
                           int rank, Index machine_size);

/// A foreign subgrid coupled to the local one, with the boxes of its points
/// the local subgrid reads under the stencil.
struct NeighborRegion {
  Subgrid neighbor;
  std::vector<Box> boxes;
};

/// Finds the local subgrid's neighbors by scanning every entry of allsubs
/// (setup_ops += P), exactly the linear-cost pass this layout is measured by.
std::vector<NeighborRegion> lex_dependent_region(LexLayout& layout,
                                                 const Stencil& stencil);

}  // namespace meshdist
