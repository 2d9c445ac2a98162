#include "reeb/surfaces.hpp"

#include <charconv>

#include "reeb/error.hpp"

namespace reeb {

namespace {

std::size_t parse_count(const std::string& text, const std::string& whole) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("malformed surface descriptor '" + whole + "'");
  }
  return v;
}

}  // namespace

void validate(const SurfaceDescriptor& s) {
  if (!s.orientable && s.genus == 0) {
    throw PreconditionError("non-orientable surface needs genus >= 1");
  }
}

SurfaceDescriptor parse_surface(const std::string& text) {
  if (text.size() < 3 || text[1] != ':' || (text[0] != 'O' && text[0] != 'N')) {
    throw ParseError("malformed surface descriptor '" + text + "'");
  }
  SurfaceDescriptor s;
  s.orientable = text[0] == 'O';
  std::string rest = text.substr(2);
  auto comma = rest.find(',');
  s.genus = parse_count(rest.substr(0, comma), text);
  if (comma != std::string::npos) s.boundary = parse_count(rest.substr(comma + 1), text);
  if (!s.orientable && s.genus == 0) {
    throw ParseError("non-orientable surface needs genus >= 1: '" + text + "'");
  }
  return s;
}

std::string to_string(const SurfaceDescriptor& s) {
  std::string out = (s.orientable ? "O:" : "N:") + std::to_string(s.genus);
  if (s.boundary) out += "," + std::to_string(s.boundary);
  return out;
}

Presentation presentation(const SurfaceDescriptor& s) {
  validate(s);
  Presentation p;
  if (!s.closed()) {
    std::size_t base = s.orientable ? 2 * s.genus : s.genus;
    p.generators = base + s.boundary - 1;
    return p;
  }
  if (s.orientable) {
    p.generators = 2 * s.genus;
    if (s.genus == 0) return p;
    std::vector<int> rel;
    for (int k = 1; k <= static_cast<int>(s.genus); ++k) {
      int x = 2 * k - 1;
      int y = 2 * k;
      rel.insert(rel.end(), {x, y, -x, -y});
    }
    p.relators.emplace_back(p.generators, rel);
  } else {
    p.generators = s.genus;
    std::vector<int> rel;
    for (int k = 1; k <= static_cast<int>(s.genus); ++k) rel.insert(rel.end(), {k, k});
    p.relators.emplace_back(p.generators, rel);
  }
  return p;
}

long euler_characteristic(const SurfaceDescriptor& s) {
  validate(s);
  long g = static_cast<long>(s.genus);
  long h = static_cast<long>(s.boundary);
  return s.orientable ? 2 - 2 * g - h : 2 - g - h;
}

std::size_t corank(const SurfaceDescriptor& s) {
  validate(s);
  if (!s.closed()) return presentation(s).generators;
  return s.orientable ? s.genus : s.genus / 2;
}

std::size_t reeb_number(const SurfaceDescriptor& s) {
  validate(s);
  return s.orientable ? s.genus : s.genus / 2;
}

std::vector<bool> w1_vector(const SurfaceDescriptor& s) {
  validate(s);
  if (!s.closed()) throw PreconditionError("w1 vector is defined here for closed surfaces only");
  return std::vector<bool>(presentation(s).generators, !s.orientable);
}

EulerReport check_euler_identity(const SurfaceDescriptor& s, const MorseCensus& census,
                                 const OrientedMultigraph& graph) {
  validate(s);
  if (!s.closed()) throw PreconditionError("Euler check needs a closed surface");
  long chi = euler_characteristic(s);
  if (chi % 2 != 0) {
    throw PreconditionError("Euler characteristic " + std::to_string(chi) +
                            " is odd; the identity needs chi = 2 - 2g");
  }
  if (max_degree(graph) > 3) throw PreconditionError("graph has a vertex of degree > 3");
  if (graph.vertex_count() == 0 || component_count(graph) != 1) {
    throw PreconditionError("graph must be connected");
  }

  EulerReport r;
  r.g = static_cast<std::size_t>((2 - chi) / 2);
  r.census = degree_census(graph);
  r.betti = cycle_rank(graph);
  const auto& c = r.census;
  long k0 = static_cast<long>(census.k0);
  long k1 = static_cast<long>(census.k1);
  long k2 = static_cast<long>(census.k2);

  if (k0 - k1 + k2 != chi) {
    throw PreconditionError("census violates chi = k0 - k1 + k2 (" + std::to_string(k0 - k1 + k2) +
                            " != " + std::to_string(chi) + ")");
  }
  r.identities.push_back("chi = k0 - k1 + k2");

  std::size_t leaves = c.delta1_in + c.delta1_out;
  if (leaves != census.k0 + census.k2) {
    throw PreconditionError("graph has " + std::to_string(leaves) + " leaves but k0 + k2 = " +
                            std::to_string(census.k0 + census.k2));
  }
  r.identities.push_back("leaves = k0 + k2");

  if (2 * graph.edge_count() != census.k0 + census.k2 + 2 * c.delta2 + 3 * c.delta3) {
    throw PreconditionError("handshake identity 2|E| = k0 + k2 + 2*D2 + 3*D3 fails");
  }
  r.identities.push_back("2|E| = k0 + k2 + 2*D2 + 3*D3");

  if (census.k1 < c.delta2 + c.delta3) {
    throw PreconditionError("k1 is smaller than the number of degree-2 and degree-3 vertices");
  }
  r.identities.push_back("k1 >= D2 + D3");

  r.betti_minus_g = static_cast<long>(r.betti) - static_cast<long>(r.g);
  long rhs = static_cast<long>(c.delta3) - k1;
  if (2 * r.betti_minus_g != rhs) {
    throw std::logic_error("2(b1 - g) = D3 - k1 failed on consistent input");
  }
  r.identities.push_back("2(b1 - g) = D3 - k1");
  r.maximal = census.k1 == c.delta3 && c.delta2 == 0;
  return r;
}

}  // namespace reeb
