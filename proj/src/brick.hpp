#pragma once

#include <vector>

#include "morton.hpp"
#include "types.hpp"

namespace meshdist {

/// Quadrant partition of a rank count: offsets[r] = floor(r*K/P), so every
/// rank owns the contiguous curve range [offsets[r], offsets[r+1]) and the
/// per-rank counts differ by at most one.  Ranks may be empty when P > K.
struct PartitionOffsets {
  std::vector<Index> offsets;  // P+1 entries
  bool has_empty_ranks = false;
};

PartitionOffsets uniform_partition(Index num_quadrants, Index num_ranks);

/// A forest-of-octrees brick covering a P_x x P_y x P_z arrangement of
/// subgrid slots: trees tile the arrangement at granularity g = 2^level,
/// every tree refined `level` times, quadrants ordered tree-major (trees
/// enumerated lexicographically, x fastest) with the z-order curve inside
/// each tree.
struct BrickLayout {
  Triple pgrid{1, 1, 1};  // subgrid slots per axis
  Triple trees{1, 1, 1};  // pgrid / g
  int level = 0;
  Index g = 1;               // 2^level, the quadrant multiplier
  Index quads_per_tree = 1;  // g^3
  Index num_quadrants = 0;   // product of pgrid
  Index num_ranks = 0;
  PartitionOffsets partition;
};

struct BrickParams {
  Index g = 1;
  int level = 0;
  Triple trees{1, 1, 1};
};

/// g is the largest power of two dividing gcd(P_x, P_y, P_z); the brick has
/// pgrid/g trees per axis and refining each tree level=log2(g) times yields
/// exactly product(pgrid) quadrants.
BrickParams brick_params(const Triple& pgrid);

BrickLayout build_brick(const Triple& pgrid, Index num_ranks);

/// A leaf of the brick, addressed three ways: by tree + within-tree
/// coordinates, by position on the global curve, and by brick coordinates
/// pvec = tree*g + coords matching the subgrid slot enumeration.
struct Quadrant {
  Triple tree{0, 0, 0};
  Triple coords{0, 0, 0};
  Index global_idx = 0;
  Triple pvec{0, 0, 0};
};

/// Position of a tree in the tree-major enumeration (x fastest).
Index tree_rank(const Triple& tree, const Triple& trees);

/// Global curve index from tree position and within-tree z-order index.
Index global_sfc_index(const Triple& tree, Index within_tree,
                       const BrickLayout& brick);

Quadrant quadrant_from_global(Index global_idx, const BrickLayout& brick);
Quadrant quadrant_from_pvec(const Triple& pvec, const BrickLayout& brick);

/// Brick coordinates of a quadrant: tree position scaled by the quadrant
/// multiplier plus the within-tree coordinates.
Triple quad_to_pvec(const Quadrant& quad, const BrickLayout& brick);

}  // namespace meshdist
