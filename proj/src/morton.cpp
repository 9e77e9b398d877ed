#include "morton.hpp"

namespace meshdist {

namespace {

void check_level_dims(int level, int dims) {
  if (dims != 2 && dims != 3)
    throw Error::invalid_argument("morton: dims must be 2 or 3");
  if (level < 0 || level * dims > 62)
    throw Error::invalid_argument("morton: level out of range");
}

}  // namespace

Index morton_encode(const Triple& coords, int level, int dims) {
  check_level_dims(level, dims);
  const Index side = Index{1} << level;
  for (int d = 0; d < dims; ++d)
    if (coords[d] < 0 || coords[d] >= side)
      throw Error::invalid_argument("morton_encode: coordinate " +
                                    to_string(coords) + " outside level-" +
                                    std::to_string(level) + " cube");
  if (dims == 2 && coords[2] != 0)
    throw Error::invalid_argument("morton_encode: z must be 0 in 2D");

  Index out = 0;
  for (int b = 0; b < level; ++b)
    for (int d = 0; d < dims; ++d)
      out |= ((coords[d] >> b) & 1) << (b * dims + d);
  return out;
}

Triple morton_decode(Index index, int level, int dims) {
  check_level_dims(level, dims);
  if (index < 0 || index >= (Index{1} << (level * dims)))
    throw Error::invalid_argument("morton_decode: index " +
                                  std::to_string(index) + " outside level-" +
                                  std::to_string(level) + " cube");
  Triple coords{0, 0, 0};
  for (int b = 0; b < level; ++b)
    for (int d = 0; d < dims; ++d)
      coords[d] |= ((index >> (b * dims + d)) & 1) << b;
  return coords;
}

}  // namespace meshdist
