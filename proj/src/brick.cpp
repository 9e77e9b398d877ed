#include "brick.hpp"

#include <numeric>

namespace meshdist {

PartitionOffsets uniform_partition(Index num_quadrants, Index num_ranks) {
  if (num_quadrants < 1)
    throw Error::invalid_argument("uniform_partition: need at least one quadrant");
  if (num_ranks < 1)
    throw Error::invalid_argument("uniform_partition: need at least one rank");
  PartitionOffsets part;
  part.offsets.resize(static_cast<size_t>(num_ranks) + 1);
  for (Index r = 0; r <= num_ranks; ++r)
    part.offsets[static_cast<size_t>(r)] = r * num_quadrants / num_ranks;
  part.has_empty_ranks = num_ranks > num_quadrants;
  return part;
}

BrickParams brick_params(const Triple& pgrid) {
  for (int t = 0; t < 3; ++t)
    if (pgrid[t] < 1)
      throw Error::invalid_argument("brick_params: part counts must be >= 1");
  const Index common = std::gcd(std::gcd(pgrid[0], pgrid[1]), pgrid[2]);
  BrickParams params;
  while (common % (params.g * 2) == 0) {
    params.g *= 2;
    ++params.level;
  }
  params.trees = {pgrid[0] / params.g, pgrid[1] / params.g, pgrid[2] / params.g};
  return params;
}

BrickLayout build_brick(const Triple& pgrid, Index num_ranks) {
  BrickParams params = brick_params(pgrid);
  BrickLayout brick;
  brick.pgrid = pgrid;
  brick.trees = params.trees;
  brick.level = params.level;
  brick.g = params.g;
  brick.quads_per_tree = params.g * params.g * params.g;
  brick.num_quadrants = product(pgrid);
  brick.num_ranks = num_ranks;
  brick.partition = uniform_partition(brick.num_quadrants, num_ranks);
  return brick;
}

Index tree_rank(const Triple& tree, const Triple& trees) {
  for (int t = 0; t < 3; ++t)
    if (tree[t] < 0 || tree[t] >= trees[t])
      throw Error::invalid_argument("tree_rank: tree " + to_string(tree) +
                                    " outside brick " + to_string(trees));
  return (tree[2] * trees[1] + tree[1]) * trees[0] + tree[0];
}

Index global_sfc_index(const Triple& tree, Index within_tree,
                       const BrickLayout& brick) {
  if (within_tree < 0 || within_tree >= brick.quads_per_tree)
    throw Error::invalid_argument("global_sfc_index: within-tree index " +
                                  std::to_string(within_tree) + " out of range");
  return tree_rank(tree, brick.trees) * brick.quads_per_tree + within_tree;
}

Quadrant quadrant_from_global(Index global_idx, const BrickLayout& brick) {
  if (global_idx < 0 || global_idx >= brick.num_quadrants)
    throw Error::invalid_argument("quadrant_from_global: index " +
                                  std::to_string(global_idx) + " out of range");
  Quadrant q;
  q.global_idx = global_idx;
  const Index tr = global_idx / brick.quads_per_tree;
  q.tree = {tr % brick.trees[0], (tr / brick.trees[0]) % brick.trees[1],
            tr / (brick.trees[0] * brick.trees[1])};
  q.coords = morton_decode(global_idx % brick.quads_per_tree, brick.level, 3);
  q.pvec = quad_to_pvec(q, brick);
  return q;
}

Quadrant quadrant_from_pvec(const Triple& pvec, const BrickLayout& brick) {
  for (int t = 0; t < 3; ++t)
    if (pvec[t] < 0 || pvec[t] >= brick.pgrid[t])
      throw Error::invalid_argument("quadrant_from_pvec: pvec " +
                                    to_string(pvec) + " outside brick");
  Quadrant q;
  q.pvec = pvec;
  q.tree = {pvec[0] / brick.g, pvec[1] / brick.g, pvec[2] / brick.g};
  q.coords = {pvec[0] % brick.g, pvec[1] % brick.g, pvec[2] % brick.g};
  q.global_idx = global_sfc_index(
      q.tree, morton_encode(q.coords, brick.level, 3), brick);
  return q;
}

Triple quad_to_pvec(const Quadrant& quad, const BrickLayout& brick) {
  Triple pvec;
  for (int t = 0; t < 3; ++t) {
    if (quad.coords[t] < 0 || quad.coords[t] >= brick.g)
      throw Error::invalid_argument("quad_to_pvec: within-tree coords " +
                                    to_string(quad.coords) + " out of range");
    pvec[t] = quad.tree[t] * brick.g + quad.coords[t];
    if (pvec[t] < 0 || pvec[t] >= brick.pgrid[t])
      throw Error::invalid_argument("quad_to_pvec: quadrant outside brick");
  }
  return pvec;
}

}  // namespace meshdist
