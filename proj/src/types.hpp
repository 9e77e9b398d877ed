#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace meshdist {

/// Grid indices and counts are 64-bit so that configurations with
/// multi-billion-point grids remain describable without overflow.
using Index = std::int64_t;

/// An (x,y,z) triple of indices or counts.
using Triple = std::array<Index, 3>;

inline Triple operator+(const Triple& a, const Triple& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline Triple operator-(const Triple& a, const Triple& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline Index product(const Triple& t) { return t[0] * t[1] * t[2]; }

inline std::string to_string(const Triple& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
         std::to_string(t[2]) + ")";
}

/// Half-open axis-aligned box of grid points: lo <= p < hi componentwise.
struct Box {
  Triple lo{0, 0, 0};
  Triple hi{0, 0, 0};

  bool empty() const {
    return lo[0] >= hi[0] || lo[1] >= hi[1] || lo[2] >= hi[2];
  }
  Index num_points() const {
    return empty() ? 0 : (hi[0] - lo[0]) * (hi[1] - lo[1]) * (hi[2] - lo[2]);
  }
  bool contains(const Triple& p) const {
    return p[0] >= lo[0] && p[0] < hi[0] && p[1] >= lo[1] && p[1] < hi[1] &&
           p[2] >= lo[2] && p[2] < hi[2];
  }
  bool operator==(const Box&) const = default;
};

inline Box intersect(const Box& a, const Box& b) {
  Box r;
  for (int t = 0; t < 3; ++t) {
    r.lo[t] = std::max(a.lo[t], b.lo[t]);
    r.hi[t] = std::min(a.hi[t], b.hi[t]);
    if (r.lo[t] >= r.hi[t]) return Box{};  // canonical empty box
  }
  return r;
}

inline Box shifted(const Box& b, const Triple& d) {
  return Box{b.lo + d, b.hi + d};
}

inline Box inflated(const Box& b, const Triple& margin) {
  return Box{b.lo - margin, b.hi + margin};
}

inline std::string to_string(const Box& b) {
  return to_string(b.lo) + ".." + to_string(b.hi);
}

/// Which distribution scheme a configuration uses.
enum class Mode { Lex, Sfc };

enum class Errc {
  InvalidArgument,  // precondition violated by a caller-supplied value
  Parse,            // malformed configuration text
  Config,           // well-formed but inconsistent configuration
  Internal,         // cross-rank bookkeeping disagrees; indicates a bug
  Unsupported,      // request outside implemented limits (e.g. size guard)
  Io
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

  static Error invalid_argument(const std::string& what) { return {Errc::InvalidArgument, what}; }
  static Error parse(const std::string& what) { return {Errc::Parse, what}; }
  static Error config(const std::string& what) { return {Errc::Config, what}; }
  static Error internal(const std::string& what) { return {Errc::Internal, what}; }
  static Error unsupported(const std::string& what) { return {Errc::Unsupported, what}; }
  static Error io(const std::string& what) { return {Errc::Io, what}; }

 private:
  Errc code_;
};

}  // namespace meshdist
