#pragma once

#include <vector>

#include "stencil.hpp"
#include "types.hpp"

namespace meshdist {

/// Rewrites an arbitrary collection of boxes as a disjoint cover of their
/// union.  The decomposition is canonical: coordinate cuts from the inputs
/// define an arrangement whose occupied cells are greedily merged along x,
/// then y, then z, and the result is sorted by lower corner.
std::vector<Box> disjoint_union(const std::vector<Box>& boxes);

/// The points of `provider` that updates inside `receiver` read under the
/// stencil: union over stencil offsets o of (receiver + o) intersected with
/// provider, returned as disjoint boxes in global grid coordinates.
/// Empty when the two boxes are not coupled by the stencil.
std::vector<Box> dependent_region(const Box& receiver, const Box& provider,
                                  const Stencil& stencil);

}  // namespace meshdist
