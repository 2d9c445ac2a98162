#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "reeb/freegroup.hpp"
#include "reeb/graph.hpp"

namespace reeb {

/// Compact surface: orientable genus g (Sigma_{g,h}) or non-orientable
/// genus k >= 1 (S_{k,h}), with h boundary circles.
struct SurfaceDescriptor {
  bool orientable = true;
  std::size_t genus = 0;
  std::size_t boundary = 0;

  bool closed() const { return boundary == 0; }
  bool operator==(const SurfaceDescriptor&) const = default;
};

/// Text form `O:g[,h]` / `N:k[,h]`.
SurfaceDescriptor parse_surface(const std::string& text);
std::string to_string(const SurfaceDescriptor& s);
void validate(const SurfaceDescriptor& s);

struct Presentation {
  std::size_t generators = 0;
  std::vector<Word> relators;
};

/// Closed orientable: [x1,x2][x3,x4]...; closed non-orientable: x1^2...xk^2;
/// with boundary: free, no relators.
Presentation presentation(const SurfaceDescriptor& s);

long euler_characteristic(const SurfaceDescriptor& s);
std::size_t corank(const SurfaceDescriptor& s);
std::size_t reeb_number(const SurfaceDescriptor& s);

/// Orientation character on the presentation generators; closed surfaces only.
std::vector<bool> w1_vector(const SurfaceDescriptor& s);

struct MorseCensus {
  std::size_t k0 = 0;
  std::size_t k1 = 0;
  std::size_t k2 = 0;
};

struct EulerReport {
  std::size_t g = 0;  // chi = 2 - 2g
  std::size_t betti = 0;
  DegreeCensus census;
  long betti_minus_g = 0;
  bool maximal = false;
  std::vector<std::string> identities;
};

/// Checks a Morse census against a Reeb-type graph of a closed surface with
/// even Euler characteristic and relates cycle rank to genus through
/// 2(b1 - g) = D3 - k1. Throws PreconditionError on any inconsistency.
EulerReport check_euler_identity(const SurfaceDescriptor& s, const MorseCensus& census,
                                 const OrientedMultigraph& graph);

}  // namespace reeb
