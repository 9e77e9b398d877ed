#pragma once

#include <string>
#include <vector>

#include "types.hpp"

namespace meshdist {

/// Neighbor-adjacency classes, named by how many of the 26 surrounding
/// subgrid slots they reach.
enum class Connectivity { Faces, FacesEdges, Full };

/// Direction triples in {-1,0,1}^3 \ {0} belonging to a connectivity class,
/// in a fixed canonical order (sorted by (z,y,x)).
const std::vector<Triple>& neighbor_directions(Connectivity c);

/// The set of relative offsets one point's update reads.  `reach` is the
/// per-axis maximum absolute offset and fixes the ghost strip width.
struct Stencil {
  std::vector<Triple> offsets;  // canonical order, never contains (0,0,0)
  Triple reach{0, 0, 0};

  /// Builds from an explicit offset set; rejects empty sets and (0,0,0).
  static Stencil from_offsets(std::vector<Triple> offsets);

  static Stencil face7();   // +-1 along each axis
  static Stencil edge19();  // faces plus edge diagonals
  static Stencil box27();   // all 26 surrounding offsets

  static Stencil named(const std::string& name);  // "face7"|"edge19"|"box27"
  std::string name() const;  // canonical name, or "custom" otherwise

  bool operator==(const Stencil&) const = default;
};

/// Ghost strip width per axis; errors on an empty stencil.
Triple ghost_width(const Stencil& stencil);

/// Classifies a stencil: Faces when every offset is axis aligned,
/// FacesEdges when no offset has three nonzero components, Full otherwise.
Connectivity connectivity_of(const Stencil& stencil);

}  // namespace meshdist
