#pragma once

// Reference implementations used only by the test suites. They share the
// library's data types but none of its algorithms.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reeb/freegroup.hpp"
#include "reeb/generators.hpp"
#include "reeb/graph.hpp"
#include "reeb/surfaces.hpp"

namespace oracle {

using reeb::OrientedMultigraph;

/// Good orientation via three-colour DFS and a degree scan.
bool good_orientation(const OrientedMultigraph& g);

/// |E| - |V| + components, components by union-find.
std::size_t betti(const OrientedMultigraph& g);

std::size_t leaves(const OrientedMultigraph& g);

/// A degree-1/3 tree whose degree-3 vertices form one directed path on
/// which every outdegree-2 vertex comes before every indegree-2 vertex.
bool spine_normal_form(const OrientedMultigraph& tree);

/// Sign classes as 2^S / |orbit of 0|, the orbit found by BFS over flip
/// masks. Slots are derived directly from the edge list.
std::size_t sign_classes(const OrientedMultigraph& g);

/// Membership oracle for "the words generate F_rank".
///
/// Returns true once every a_k turns up among subgroup elements reachable
/// by short products, false once some permutation action on at most
/// `max_points` points fixes point 0 under every word but moves it under a
/// generator. std::nullopt when neither search settles the question.
std::optional<bool> generates(const std::vector<reeb::Word>& words, std::size_t rank,
                              std::size_t max_points = 5);

/// Vertex map a -> b that is a digraph isomorphism respecting edge
/// multiplicities and sending each pinned edge of a onto its partner in b.
std::optional<std::map<std::string, std::string>> labeled_isomorphism(
    const OrientedMultigraph& a, const OrientedMultigraph& b,
    const std::map<std::string, std::string>& pinned_edges);

/// Solutions lambda in GF(2)^r of lambda . parity(image_k) = w1_k, by trying
/// all 2^r candidates.
std::vector<std::vector<bool>> lambda_solutions(const std::vector<reeb::Word>& images,
                                                const std::vector<bool>& w1);

/// A consistent (surface, census, graph) triple for the Euler identity.
struct EulerTriple {
  reeb::SurfaceDescriptor surface;
  reeb::MorseCensus census;
  OrientedMultigraph graph;
  long expected_betti_minus_g = 0;
  bool expected_maximal = false;
};

EulerTriple euler_triple(reeb::Rng& rng);

}  // namespace oracle
