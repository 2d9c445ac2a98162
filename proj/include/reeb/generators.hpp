#pragma once

#include <cstdint>
#include <random>

#include "reeb/graph.hpp"
#include "reeb/rewrite.hpp"

namespace reeb {

using Rng = std::mt19937_64;

/// Uniform-ish index in [0, n); deterministic across standard libraries.
std::size_t pick(Rng& rng, std::size_t n);

/// Every slide whose local pattern matches somewhere in g. Vertex pairs
/// joined by more than one edge are skipped.
std::vector<Move> candidate_slides(const OrientedMultigraph& g);

/// Normal-form caterpillar with `splits` outdegree-2 and `merges` indegree-2
/// spine vertices.
OrientedMultigraph caterpillar(std::size_t splits, std::size_t merges);

/// Primitive degree-1/3 tree with at most max_vertices vertices, obtained
/// from a caterpillar by random primitivity-preserving slides and renamed.
OrientedMultigraph random_primitive_tree(Rng& rng, std::size_t max_vertices);

/// Connected good-oriented degree-1/3 graph of cycle rank r, grown from the
/// initial or canonical graph by random births, slides and deaths, renamed.
/// The slot count stays at most max_slots.
OrientedMultigraph random_good_graph(Rng& rng, std::size_t r, std::size_t max_slots);

/// Spanning tree from a random edge order, cotree listed in random order.
SpanningTreeChoice random_spanning_tree(Rng& rng, const OrientedMultigraph& g);

/// Inserts k degree-2 vertices on random edges.
OrientedMultigraph subdivide(Rng& rng, const OrientedMultigraph& g, std::size_t k);

struct Renaming {
  OrientedMultigraph graph;
  std::map<std::string, std::string> vertices;
  std::map<std::string, std::string> edges;
};

/// Replaces all ids by fresh shuffled names with the given prefixes.
Renaming rename_randomly(Rng& rng, const OrientedMultigraph& g, const std::string& vprefix = "v",
                         const std::string& eprefix = "x");

}  // namespace reeb
