#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "reeb/graph.hpp"
#include "reeb/surfaces.hpp"

namespace reeb {

// Slides are end swaps between two adjacent degree-3 vertices. Each one is
// an involution: applying the same move twice restores the graph.

/// Split over split (`slide5`): w has outdegree 2 with an edge into v, v has
/// outdegree 2. The tail of w's other out-edge and the tail of v's out-edge
/// other than `keep` are exchanged. An empty `keep` selects v's smallest
/// out-edge id.
struct SlideOutOut {
  std::string v, w, keep;
  bool operator==(const SlideOutOut&) const = default;
};
/// Merge over merge (`slide4`): mirror of the split case on indegree-2
/// vertices; heads are exchanged.
struct SlideInIn {
  std::string v, w, keep;
  bool operator==(const SlideInIn&) const = default;
};
/// Merge over split (`slide13`): w has outdegree 2 with an edge into v, v
/// has indegree 2. The tail of w's other out-edge and the tail of v's
/// out-edge are exchanged, which moves the merge v onto w's other branch.
struct SlideInOverOut {
  std::string v, w;
  bool operator==(const SlideInOverOut&) const = default;
};
/// Split over merge (`slide14`): orientation mirror of `slide13`.
struct SlideOutOverIn {
  std::string v, w;
  bool operator==(const SlideOutOverIn&) const = default;
};

enum class LeafDirection { sink, source };

/// Leaf birth: subdivides `edge` by a new degree-3 vertex carrying a new leaf.
struct LeafBirth {
  std::string edge;
  LeafDirection direction = LeafDirection::sink;
  bool operator==(const LeafBirth&) const = default;
};
/// Leaf death: removes leaf `leaf` and its degree-3 neighbor `saddle`,
/// merging the saddle's remaining in-edge and out-edge into the in-edge.
struct LeafDeath {
  std::string saddle, leaf;
  bool operator==(const LeafDeath&) const = default;
};

using Move =
    std::variant<SlideOutOut, SlideInIn, SlideInOverOut, SlideOutOverIn, LeafBirth, LeafDeath>;

/// `slide5 v w [keep]`, `slide4 v w [keep]`, `slide13 v w`, `slide14 v w`,
/// `birth <edge> sink|source`, `death <saddle> <leaf>`.
std::string to_string(const Move& m);
Move parse_move(const std::string& text);

bool is_slide(const Move& m);

/// Throws PreconditionError when the local pattern does not match or when a
/// good-oriented input would lose its good orientation.
OrientedMultigraph apply_move(const OrientedMultigraph& g, const Move& m);

OrientedMultigraph replay(const OrientedMultigraph& g, const std::vector<Move>& moves);

struct ModificationScript {
  std::vector<Move> moves;
  std::string source_fingerprint;
  std::string target_fingerprint;
};

std::string to_text(const std::vector<Move>& moves);
std::vector<Move> parse_moves(const std::string& text);

/// Directed leaf-to-leaf path with the most degree-3 vertices; ties go to the
/// lexicographically smallest vertex id sequence.
std::vector<std::string> heaviest_spine(const OrientedMultigraph& tree);

struct Normalization {
  ModificationScript script;
  OrientedMultigraph result;
  std::vector<std::string> spine;  // source leaf ... sink leaf
};

/// Slides every degree-3 vertex of a primitive degree-1/3 tree onto one
/// directed spine; outdegree-2 vertices then precede indegree-2 vertices.
Normalization normalize_to_initial_tree(const OrientedMultigraph& tree);

enum class PlanVerdict { feasible, infeasible, unsupported };
std::string to_string(PlanVerdict v);

/// Script of slides that turns the cut initial graph into the cut target.
struct RealizationPlan {
  PlanVerdict verdict = PlanVerdict::infeasible;
  std::vector<std::string> reasons;
  std::size_t rank = 0;
  std::size_t n_minus = 0;
  std::size_t n_plus = 0;
  std::vector<Move> moves;
  std::string target_fingerprint;
};

RealizationPlan plan_realization(const OrientedMultigraph& target, const SpanningTreeChoice& t,
                                 std::size_t corank_bound);
RealizationPlan plan_realization(const OrientedMultigraph& target, const SpanningTreeChoice& t,
                                 const SurfaceDescriptor& s);

/// `initial r n- n+`, `cut`, one move per line, `glue`.
std::string script_text(const RealizationPlan& plan);
RealizationPlan parse_plan_script(const std::string& text);

/// Builds the initial graph, cuts it, applies the moves and glues the pendants.
GraphWithTree replay_plan(const RealizationPlan& plan);

/// Replays the plan and checks for an isomorphism onto the target that sends
/// the i-th initial cotree edge to the i-th target cotree edge.
bool verify_plan(const RealizationPlan& plan, const OrientedMultigraph& target,
                 const SpanningTreeChoice& t);

/// Cycle rank of a Reeb graph from component counts of a system and of its
/// complement: a - b + 1. Both counts must be positive.
std::size_t rank_formula(std::size_t system_components, std::size_t complement_components);

}  // namespace reeb
