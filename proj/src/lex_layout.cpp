#include "lex_layout.hpp"

namespace meshdist {

int lex_owner(const Triple& pvec, const Triple& pgrid) {
  for (int t = 0; t < 3; ++t)
    if (pvec[t] < 0 || pvec[t] >= pgrid[t])
      throw Error::invalid_argument("lex_owner: pvec " + to_string(pvec) +
                                    " outside part grid " + to_string(pgrid));
  return static_cast<int>((pvec[2] * pgrid[1] + pvec[1]) * pgrid[0] + pvec[0]);
}

Triple lex_pvec(Index rank, const Triple& pgrid) {
  if (rank < 0 || rank >= product(pgrid))
    throw Error::invalid_argument("lex_pvec: rank out of range");
  return Triple{rank % pgrid[0], (rank / pgrid[0]) % pgrid[1],
                rank / (pgrid[0] * pgrid[1])};
}

std::optional<int> lex_neighbor(const Triple& pvec, const Triple& offset,
                                const Triple& pgrid) {
  lex_owner(pvec, pgrid);  // validate pvec itself
  Triple q = pvec + offset;
  for (int t = 0; t < 3; ++t)
    if (q[t] < 0 || q[t] >= pgrid[t]) return std::nullopt;
  return lex_owner(q, pgrid);
}

LexLayout build_lex_layout(const GridConfig& grid, const Triple& pgrid,
                           int rank, Index machine_size) {
  const Index p = product(pgrid);
  for (int t = 0; t < 3; ++t)
    if (pgrid[t] < 1)
      throw Error::config("part counts must be >= 1 per axis, got " +
                          to_string(pgrid));
  if (p != machine_size)
    throw Error::config("part grid " + to_string(pgrid) + " covers " +
                        std::to_string(p) + " ranks but the machine has " +
                        std::to_string(machine_size) +
                        "; the product of the per-axis part counts must equal "
                        "the rank count");
  if (rank < 0 || rank >= p)
    throw Error::config("rank " + std::to_string(rank) + " out of range for " +
                        std::to_string(p) + " ranks");

  LexLayout lay;
  lay.grid = grid;
  lay.pgrid = pgrid;
  lay.rank = rank;
  for (int t = 0; t < 3; ++t)
    lay.splits[t] = AxisSplit::from_parts(grid.n[t], pgrid[t]);

  // One subgrid per iteration over the whole machine; this linear loop is
  // the cost the setup_ops counter exists to expose.
  lay.allsubs.reserve(static_cast<size_t>(p));
  for (Index r = 0; r < p; ++r) {
    Subgrid s = make_subgrid(lex_pvec(r, pgrid), lay.splits, static_cast<int>(r),
                             r == rank ? Locality::Local : Locality::Ghost);
    s.gid = r;
    lay.allsubs.push_back(s);
    ++lay.setup_ops;
  }
  lay.locsubs.push_back(lay.allsubs[static_cast<size_t>(rank)]);
  return lay;
}

std::vector<NeighborRegion> lex_dependent_region(LexLayout& layout,
                                                 const Stencil& stencil) {
  const Subgrid& local = layout.locsubs.at(0);
  std::vector<NeighborRegion> result;
  for (const Subgrid& other : layout.allsubs) {
    ++layout.setup_ops;
    if (other.owner == layout.rank) continue;
    std::vector<Box> boxes = dependent_region(local.box(), other.box(), stencil);
    if (!boxes.empty()) result.push_back(NeighborRegion{other, std::move(boxes)});
  }
  return result;
}

}  // namespace meshdist
