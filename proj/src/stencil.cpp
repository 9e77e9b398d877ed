#include "stencil.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

namespace meshdist {

namespace {

int nonzero_components(const Triple& d) {
  return (d[0] != 0) + (d[1] != 0) + (d[2] != 0);
}

std::vector<Triple> directions_with_max_components(int max_nonzero) {
  std::vector<Triple> dirs;
  for (Index dz = -1; dz <= 1; ++dz)
    for (Index dy = -1; dy <= 1; ++dy)
      for (Index dx = -1; dx <= 1; ++dx) {
        Triple d{dx, dy, dz};
        int nz = nonzero_components(d);
        if (nz >= 1 && nz <= max_nonzero) dirs.push_back(d);
      }
  return dirs;
}

}  // namespace

const std::vector<Triple>& neighbor_directions(Connectivity c) {
  static const std::vector<Triple> faces = directions_with_max_components(1);
  static const std::vector<Triple> edges = directions_with_max_components(2);
  static const std::vector<Triple> full = directions_with_max_components(3);
  switch (c) {
    case Connectivity::Faces: return faces;
    case Connectivity::FacesEdges: return edges;
    default: return full;
  }
}

Stencil Stencil::from_offsets(std::vector<Triple> offsets) {
  if (offsets.empty())
    throw Error::invalid_argument("stencil must have at least one offset");
  std::sort(offsets.begin(), offsets.end(), [](const Triple& a, const Triple& b) {
    return std::tie(a[2], a[1], a[0]) < std::tie(b[2], b[1], b[0]);
  });
  offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
  Stencil s;
  for (const Triple& o : offsets) {
    if (o == Triple{0, 0, 0})
      throw Error::invalid_argument("stencil offsets must exclude (0,0,0)");
    for (int t = 0; t < 3; ++t)
      s.reach[t] = std::max(s.reach[t], std::abs(o[t]));
  }
  s.offsets = std::move(offsets);
  return s;
}

Stencil Stencil::face7() {
  return from_offsets(directions_with_max_components(1));
}

Stencil Stencil::edge19() {
  return from_offsets(directions_with_max_components(2));
}

Stencil Stencil::box27() {
  return from_offsets(directions_with_max_components(3));
}

Stencil Stencil::named(const std::string& name) {
  if (name == "face7") return face7();
  if (name == "edge19") return edge19();
  if (name == "box27") return box27();
  throw Error::invalid_argument("unknown stencil name '" + name +
                                "' (expected face7, edge19 or box27)");
}

std::string Stencil::name() const {
  if (reach == Triple{1, 1, 1}) {
    if (offsets.size() == 6) return "face7";
    if (offsets.size() == 18 && *this == edge19()) return "edge19";
    if (offsets.size() == 26) return "box27";
  }
  return "custom";
}

Triple ghost_width(const Stencil& stencil) {
  if (stencil.offsets.empty())
    throw Error::invalid_argument("ghost_width: empty stencil");
  return stencil.reach;
}

Connectivity connectivity_of(const Stencil& stencil) {
  int max_nonzero = 0;
  for (const Triple& o : stencil.offsets)
    max_nonzero = std::max(max_nonzero, nonzero_components(o));
  if (max_nonzero <= 1) return Connectivity::Faces;
  if (max_nonzero == 2) return Connectivity::FacesEdges;
  return Connectivity::Full;
}

}  // namespace meshdist
