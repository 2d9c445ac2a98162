#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "reeb/freegroup.hpp"

namespace reeb {

struct Edge {
  std::string id;
  std::string src;
  std::string dst;

  bool operator==(const Edge&) const = default;
};

/// Finite directed multigraph with string-named vertices and edges.
///
/// Parallel edges are allowed. Self-loops can be stored but never pass
/// good-orientation validation. Vertex and edge order is insertion order,
/// which every derived listing (in/out edges, reports) follows.
class OrientedMultigraph {
 public:
  void add_vertex(const std::string& id);
  void add_edge(const std::string& id, const std::string& src, const std::string& dst);
  void remove_edge(const std::string& id);
  /// Only isolated vertices can be removed.
  void remove_vertex(const std::string& id);
  void set_endpoints(const std::string& edge, const std::string& src, const std::string& dst);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(const std::string& id) const { return vindex_.count(id) != 0; }
  bool has_edge(const std::string& id) const { return eindex_.count(id) != 0; }
  const Edge& edge(const std::string& id) const;

  std::vector<std::string> in_edges(const std::string& v) const;
  std::vector<std::string> out_edges(const std::string& v) const;
  std::size_t indegree(const std::string& v) const;
  std::size_t outdegree(const std::string& v) const;
  std::size_t degree(const std::string& v) const { return indegree(v) + outdegree(v); }

  /// Smallest `<prefix><k>` (k = 1, 2, ...) not yet used as a vertex id.
  std::string fresh_vertex_id(const std::string& prefix) const;
  std::string fresh_edge_id(const std::string& prefix) const;

  bool operator==(const OrientedMultigraph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  std::size_t vertex_pos(const std::string& id) const;
  void rebuild_edge_index();

  std::vector<std::string> vertices_;
  std::unordered_map<std::string, std::size_t> vindex_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> eindex_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<std::vector<std::size_t>> out_;
};

struct OrientationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Good orientation, characterized combinatorially: the digraph is acyclic
/// and every vertex of degree >= 2 has both an incoming and an outgoing edge.
OrientationReport validate_good_orientation(const OrientedMultigraph& g);
inline bool has_good_orientation(const OrientedMultigraph& g) {
  return validate_good_orientation(g).ok;
}

std::size_t component_count(const OrientedMultigraph& g);
/// First Betti number |E| - |V| + #components.
std::size_t cycle_rank(const OrientedMultigraph& g);

struct DegreeCensus {
  std::size_t delta1_in = 0;   // degree 1, indegree 0
  std::size_t delta1_out = 0;  // degree 1, outdegree 0
  std::size_t delta2 = 0;
  std::size_t delta3 = 0;
  std::size_t higher = 0;      // degree >= 4
  std::size_t higher_degree_sum = 0;

  bool operator==(const DegreeCensus&) const = default;
};

DegreeCensus degree_census(const OrientedMultigraph& g);

/// At least n_minus source leaves and n_plus sink leaves. Throws
/// PreconditionError if g is not good-oriented.
bool is_admissible(const OrientedMultigraph& g, std::size_t n_minus, std::size_t n_plus);

std::size_t max_degree(const OrientedMultigraph& g);

/// True iff no directed path leads from an indegree-2 vertex to an
/// outdegree-2 vertex. Throws PreconditionError when a degree exceeds 3.
bool is_primitive(const OrientedMultigraph& g);

struct SpanningTreeChoice {
  std::set<std::string> tree_edges;
  std::vector<std::string> cotree_edges;  // e_1 ... e_r

  bool operator==(const SpanningTreeChoice&) const = default;
};

/// Throws PreconditionError if `t` is not a spanning tree of the connected
/// graph `g` with all remaining edges listed once in the cotree.
void validate_tree_choice(const OrientedMultigraph& g, const SpanningTreeChoice& t);

/// BFS tree from the first vertex; cotree edges in declaration order.
SpanningTreeChoice default_spanning_tree(const OrientedMultigraph& g);

struct GraphWithTree {
  OrientedMultigraph graph;
  SpanningTreeChoice tree;
};

/// The initial graph of cycle rank r: spine min -> s1 -> ... -> sr -> mr -> ...
/// -> m1 -> max with nested cotree arcs e_i : s_i -> m_i.
///
/// n_plus extra sink leaves hang off splits b1.. between min and s1, n_minus
/// extra source leaves feed merges t1.. between m1 and max. The result is
/// primitive and in spine normal form after cutting along the cotree.
GraphWithTree initial_graph(std::size_t r, std::size_t n_minus = 0, std::size_t n_plus = 0);

/// Chain of r bigons min -> s1 => m1 -> s2 => ... -> max (eyes el_i, er_i).
GraphWithTree canonical_graph(std::size_t r);

enum class PendantSide { minus, plus };

struct PendantLabel {
  std::size_t index = 0;  // 1-based cotree position
  PendantSide side = PendantSide::minus;

  auto operator<=>(const PendantLabel&) const = default;
};

std::string to_string(const PendantLabel& label);

struct CutTree {
  OrientedMultigraph tree;
  std::map<std::string, PendantLabel> labels;  // leaf vertex -> label
  std::vector<std::string> cotree_ids;         // original e_i ids
};

/// Replaces every cotree edge e_i : u -> v by u -> c_i^- (a new sink leaf)
/// and c_i^+ -> v (a new source leaf).
CutTree cut_along_cotree(const OrientedMultigraph& g, const SpanningTreeChoice& t);

/// Inverse of cut_along_cotree: reconnects each c_i^- / c_i^+ pair into
/// an edge named cotree_ids[i-1].
GraphWithTree glue_pendants(const CutTree& cut);

struct EdgeStep {
  std::string edge;
  bool forward = true;

  bool operator==(const EdgeStep&) const = default;
};
using EdgePath = std::vector<EdgeStep>;

/// Whitespace-separated edge ids; a trailing apostrophe marks a backward step.
EdgePath parse_edge_path(const std::string& text);

/// Reads a_i / a_i^-1 for each forward / backward crossing of cotree edge e_i
/// along a closed path; tree edges contribute nothing.
Word quotient_epimorphism(const OrientedMultigraph& g, const SpanningTreeChoice& t,
                          const EdgePath& loop);

/// Stable 64-bit FNV-1a digest of the canonical text form (hex).
std::string fingerprint(const OrientedMultigraph& g);

/// Searches for a digraph isomorphism from `a` to `b` (vertex map; edges
/// matched by multiplicity). `pinned` forces edges of `a` onto given edges of
/// `b`. Backtracking, intended for small graphs.
std::optional<std::map<std::string, std::string>> find_isomorphism(
    const OrientedMultigraph& a, const OrientedMultigraph& b,
    const std::map<std::string, std::string>& pinned = {});

}  // namespace reeb
