#include "region.hpp"

#include <algorithm>
#include <tuple>

namespace meshdist {

namespace {

std::vector<Index> axis_cuts(const std::vector<Box>& boxes, int t) {
  std::vector<Index> cuts;
  cuts.reserve(boxes.size() * 2);
  for (const Box& b : boxes) {
    cuts.push_back(b.lo[t]);
    cuts.push_back(b.hi[t]);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

}  // namespace

std::vector<Box> disjoint_union(const std::vector<Box>& input) {
  std::vector<Box> boxes;
  for (const Box& b : input)
    if (!b.empty()) boxes.push_back(b);
  if (boxes.empty()) return {};
  if (boxes.size() == 1) return boxes;

  const std::vector<Index> xs = axis_cuts(boxes, 0);
  const std::vector<Index> ys = axis_cuts(boxes, 1);
  const std::vector<Index> zs = axis_cuts(boxes, 2);
  const size_t nx = xs.size() - 1, ny = ys.size() - 1, nz = zs.size() - 1;

  // Arrangement cells are either fully inside or fully outside every input
  // box, so testing the lower corner decides occupancy for the whole cell.
  std::vector<char> occ(nx * ny * nz, 0);
  auto cell = [&](size_t ix, size_t iy, size_t iz) -> char& {
    return occ[(iz * ny + iy) * nx + ix];
  };
  for (size_t iz = 0; iz < nz; ++iz)
    for (size_t iy = 0; iy < ny; ++iy)
      for (size_t ix = 0; ix < nx; ++ix) {
        Triple corner{xs[ix], ys[iy], zs[iz]};
        for (const Box& b : boxes)
          if (b.contains(corner)) {
            cell(ix, iy, iz) = 1;
            break;
          }
      }

  // Merge occupied cells into maximal x-runs, then stack runs with equal
  // x-range along y, then stack rectangles with equal xy-range along z.
  struct Run {
    size_t x0, x1, y0, y1, z0, z1;  // arrangement cell ranges, half open
  };
  std::vector<Run> runs;
  for (size_t iz = 0; iz < nz; ++iz)
    for (size_t iy = 0; iy < ny; ++iy)
      for (size_t ix = 0; ix < nx;) {
        if (!cell(ix, iy, iz)) {
          ++ix;
          continue;
        }
        size_t start = ix;
        while (ix < nx && cell(ix, iy, iz)) ++ix;
        runs.push_back(Run{start, ix, iy, iy + 1, iz, iz + 1});
      }

  auto merge_along = [&](std::vector<Run>& in, auto same_cross, auto adjacent,
                         auto extend) {
    std::vector<Run> out;
    for (const Run& r : in) {
      if (!out.empty() && same_cross(out.back(), r) && adjacent(out.back(), r))
        extend(out.back(), r);
      else
        out.push_back(r);
    }
    in = std::move(out);
  };

  // Runs were produced in (z, y, x) scan order, so same-x runs in adjacent
  // y rows appear consecutively after a stable re-sort keyed accordingly.
  std::sort(runs.begin(), runs.end(), [](const Run& a, const Run& b) {
    return std::tie(a.z0, a.x0, a.x1, a.y0) < std::tie(b.z0, b.x0, b.x1, b.y0);
  });
  merge_along(
      runs,
      [](const Run& a, const Run& b) {
        return a.z0 == b.z0 && a.x0 == b.x0 && a.x1 == b.x1;
      },
      [](const Run& a, const Run& b) { return a.y1 == b.y0; },
      [](Run& a, const Run& b) { a.y1 = b.y1; });

  std::sort(runs.begin(), runs.end(), [](const Run& a, const Run& b) {
    return std::tie(a.x0, a.x1, a.y0, a.y1, a.z0) <
           std::tie(b.x0, b.x1, b.y0, b.y1, b.z0);
  });
  merge_along(
      runs,
      [](const Run& a, const Run& b) {
        return a.x0 == b.x0 && a.x1 == b.x1 && a.y0 == b.y0 && a.y1 == b.y1;
      },
      [](const Run& a, const Run& b) { return a.z1 == b.z0; },
      [](Run& a, const Run& b) { a.z1 = b.z1; });

  std::vector<Box> result;
  result.reserve(runs.size());
  for (const Run& r : runs)
    result.push_back(Box{{xs[r.x0], ys[r.y0], zs[r.z0]},
                         {xs[r.x1], ys[r.y1], zs[r.z1]}});
  std::sort(result.begin(), result.end(), [](const Box& a, const Box& b) {
    return std::tie(a.lo[2], a.lo[1], a.lo[0], a.hi[2], a.hi[1], a.hi[0]) <
           std::tie(b.lo[2], b.lo[1], b.lo[0], b.hi[2], b.hi[1], b.hi[0]);
  });
  return result;
}

std::vector<Box> dependent_region(const Box& receiver, const Box& provider,
                                  const Stencil& stencil) {
  std::vector<Box> pieces;
  for (const Triple& o : stencil.offsets) {
    Box b = intersect(shifted(receiver, o), provider);
    if (!b.empty()) pieces.push_back(b);
  }
  return disjoint_union(pieces);
}

}  // namespace meshdist
