#include "sfc_layout.hpp"

#include <algorithm>

namespace meshdist {

bool connectivity_includes(Connectivity a, Connectivity b) {
  return static_cast<int>(a) >= static_cast<int>(b);
}

int owner_of_quadrant(Index global_idx, std::span<const Index> offsets) {
  if (offsets.size() < 2)
    throw Error::invalid_argument("owner_of_quadrant: offsets too short");
  if (global_idx < 0 || global_idx >= offsets.back())
    throw Error::invalid_argument("owner_of_quadrant: index " +
                                  std::to_string(global_idx) + " out of range");
  // Empty ranks repeat an offset value; upper_bound skips them so the
  // returned rank always satisfies offsets[r] <= idx < offsets[r+1].
  auto it = std::upper_bound(offsets.begin(), offsets.end(), global_idx);
  return static_cast<int>(it - offsets.begin()) - 1;
}

std::vector<Quadrant> compute_ghost(const BrickLayout& brick, int rank,
                                    Connectivity connectivity) {
  const auto& offsets = brick.partition.offsets;
  if (rank < 0 || static_cast<Index>(rank) >= brick.num_ranks)
    throw Error::invalid_argument("compute_ghost: rank out of range");

  const Index lo = offsets[static_cast<size_t>(rank)];
  const Index hi = offsets[static_cast<size_t>(rank) + 1];
  const auto& dirs = neighbor_directions(connectivity);

  std::vector<Index> found;
  for (Index idx = lo; idx < hi; ++idx) {
    const Quadrant q = quadrant_from_global(idx, brick);
    for (const Triple& d : dirs) {
      const Triple np = q.pvec + d;
      if (np[0] < 0 || np[0] >= brick.pgrid[0] || np[1] < 0 ||
          np[1] >= brick.pgrid[1] || np[2] < 0 || np[2] >= brick.pgrid[2])
        continue;
      const Index nidx = quadrant_from_pvec(np, brick).global_idx;
      if (nidx >= lo && nidx < hi) continue;  // local, not a ghost
      found.push_back(nidx);
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());

  std::vector<Quadrant> ghosts;
  ghosts.reserve(found.size());
  for (Index idx : found) ghosts.push_back(quadrant_from_global(idx, brick));
  return ghosts;
}

SfcLayout build_sfc_layout(const GridConfig& grid, const Triple& m, Index ranks,
                           int rank, Connectivity connectivity) {
  Triple parts;
  for (int t = 0; t < 3; ++t) {
    if (m[t] < 1 || m[t] > grid.n[t])
      throw Error::config("subgrid points per axis must satisfy 1 <= m <= n, got m=" +
                          to_string(m) + " for grid " + to_string(grid.n));
    CoverCheck cover = check_cover(grid.n[t], m[t]);
    if (!cover.ok)
      throw Error::config("subgrid extents cannot tile axis " +
                          std::string(1, "xyz"[t]) + ": " + cover.describe());
    parts[t] = cover.parts;
  }
  if (ranks < 1) throw Error::config("rank count must be >= 1");
  auto brick = std::make_shared<const BrickLayout>(build_brick(parts, ranks));
  return build_sfc_layout(grid, m, std::move(brick), rank, connectivity);
}

SfcLayout build_sfc_layout(const GridConfig& grid, const Triple& m,
                           std::shared_ptr<const BrickLayout> brick, int rank,
                           Connectivity connectivity) {
  if (rank < 0 || static_cast<Index>(rank) >= brick->num_ranks)
    throw Error::config("rank " + std::to_string(rank) + " out of range for " +
                        std::to_string(brick->num_ranks) + " ranks");
  SfcLayout lay;
  lay.grid = grid;
  lay.connectivity = connectivity;
  lay.rank = rank;
  for (int t = 0; t < 3; ++t)
    lay.splits[t] = AxisSplit::from_quotient(grid.n[t], m[t]);

  const auto& offsets = brick->partition.offsets;
  const Index lo = offsets[static_cast<size_t>(rank)];
  const Index hi = offsets[static_cast<size_t>(rank) + 1];

  // One loop attaches subgrid metadata to the local quadrants and then, in
  // the same manner, to the ghost quadrants; nothing else is allocated.
  lay.locsubs.reserve(static_cast<size_t>(hi - lo));
  for (Index idx = lo; idx < hi; ++idx) {
    const Quadrant q = quadrant_from_global(idx, *brick);
    Subgrid s = make_subgrid(q.pvec, lay.splits, rank, Locality::Local);
    s.gid = idx;
    lay.locsubs.push_back(s);
    ++lay.setup_ops;
  }
  for (const Quadrant& q : compute_ghost(*brick, rank, connectivity)) {
    const int owner = owner_of_quadrant(q.global_idx, offsets);
    Subgrid s = make_subgrid(q.pvec, lay.splits, owner, Locality::Ghost);
    s.gid = q.global_idx;
    lay.ghosts.push_back(s);
    ++lay.setup_ops;
  }
  lay.brick = std::move(brick);
  return lay;
}

std::vector<SfcLayout> build_all_sfc_layouts(const GridConfig& grid,
                                             const Triple& m, Index ranks,
                                             Connectivity connectivity) {
  if (ranks < 1) throw Error::config("rank count must be >= 1");
  std::vector<SfcLayout> layouts;
  layouts.reserve(static_cast<size_t>(ranks));
  layouts.push_back(build_sfc_layout(grid, m, ranks, 0, connectivity));
  std::shared_ptr<const BrickLayout> brick = layouts.front().brick;
  for (Index r = 1; r < ranks; ++r)
    layouts.push_back(
        build_sfc_layout(grid, m, brick, static_cast<int>(r), connectivity));
  return layouts;
}

}  // namespace meshdist
