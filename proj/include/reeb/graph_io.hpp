#pragma once

#include <istream>
#include <string>

#include "reeb/graph.hpp"

namespace reeb {

/// A graph file may omit its tree; `has_tree` records whether one was given.
struct LoadedGraph {
  OrientedMultigraph graph;
  SpanningTreeChoice tree;
  bool has_tree = false;
};

/// Line format: `vertex <id>`, `edge <id> <src> <dst>`, `tree <edge>`,
/// `cotree <edge> <index>`; '#' starts a comment. Edge endpoints not yet
/// declared are added as vertices on first mention. A file with `tree` or
/// `cotree` lines must describe a valid spanning tree; edges mentioned in
/// neither become tree edges when only cotree lines are present.
LoadedGraph parse_graph(std::istream& in);
LoadedGraph parse_graph_text(const std::string& text);
LoadedGraph load_graph_file(const std::string& path);

std::string to_text(const OrientedMultigraph& g, const SpanningTreeChoice* tree = nullptr);
std::string to_dot(const OrientedMultigraph& g);

}  // namespace reeb
