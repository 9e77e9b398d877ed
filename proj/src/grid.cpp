#include "grid.hpp"

#include <algorithm>

namespace meshdist {

GridConfig make_grid(Triple n, std::array<double, 3> spacing,
                     std::array<double, 3> origin) {
  for (int t = 0; t < 3; ++t) {
    if (n[t] < 1)
      throw Error::invalid_argument("grid extent must be >= 1 per axis, got " +
                                    to_string(n));
    if (!(spacing[t] > 0.0))
      throw Error::invalid_argument("grid spacing must be > 0 per axis");
  }
  return GridConfig{n, spacing, origin};
}

std::pair<Index, Index> split_counts(Index n, Index parts) {
  if (n < 1) throw Error::invalid_argument("split_counts: n must be >= 1");
  if (parts < 1)
    throw Error::invalid_argument("split_counts: parts must be >= 1");
  return {n / parts, n % parts};
}

Index subgrid_corner(Index p, Index quotient, Index remainder) {
  return p * quotient + std::min(p, remainder);
}

Index subgrid_extent(Index p, Index quotient, Index remainder) {
  return p < remainder ? quotient + 1 : quotient;
}

std::pair<Index, Index> derive_parts(Index n, Index quotient) {
  if (n < 1) throw Error::invalid_argument("derive_parts: n must be >= 1");
  if (quotient < 1 || quotient > n)
    throw Error::invalid_argument(
        "derive_parts: quotient must satisfy 1 <= quotient <= n, got quotient=" +
        std::to_string(quotient) + " n=" + std::to_string(n));
  return {n / quotient, n % quotient};
}

AxisSplit AxisSplit::from_parts(Index n, Index parts) {
  auto [q, l] = split_counts(n, parts);
  return AxisSplit{parts, q, l, n};
}

AxisSplit AxisSplit::from_quotient(Index n, Index quotient) {
  auto [p, l] = derive_parts(n, quotient);
  return AxisSplit{p, quotient, l, n};
}

CoverCheck check_cover(Index n, Index quotient) {
  auto [parts, remainder] = derive_parts(n, quotient);
  CoverCheck c;
  c.n = n;
  c.quotient = quotient;
  c.parts = parts;
  c.remainder = remainder;
  // Sum of subgrid_extent over p in [0, parts): only p < remainder get the
  // extra point, and with remainder > parts some leftover points are lost.
  c.extent_sum = quotient * parts + std::min(remainder, parts);
  c.ok = c.extent_sum == n;
  return c;
}

std::string CoverCheck::describe() const {
  if (ok) return "ok";
  return "subgrid extents for (n=" + std::to_string(n) +
         ", quotient=" + std::to_string(quotient) + ") sum to " +
         std::to_string(extent_sum) + " != " + std::to_string(n);
}

Subgrid make_subgrid(const Triple& pvec, const std::array<AxisSplit, 3>& splits,
                     int owner, Locality locality) {
  Subgrid s;
  for (int t = 0; t < 3; ++t) {
    if (pvec[t] < 0 || pvec[t] >= splits[t].parts)
      throw Error::invalid_argument("make_subgrid: pvec " + to_string(pvec) +
                                    " outside part grid");
    s.corner[t] = subgrid_corner(pvec[t], splits[t].quotient, splits[t].remainder);
    s.extents[t] = subgrid_extent(pvec[t], splits[t].quotient, splits[t].remainder);
  }
  s.pvec = pvec;
  s.owner = owner;
  s.locality = locality;
  return s;
}

}  // namespace meshdist
