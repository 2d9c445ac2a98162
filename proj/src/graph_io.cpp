#include "reeb/graph_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "reeb/error.hpp"

namespace reeb {

LoadedGraph parse_graph(std::istream& in) {
  LoadedGraph out;
  std::set<std::string> tree_lines;
  std::map<std::size_t, std::string> cotree_lines;
  bool saw_tree = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto where = "line " + std::to_string(lineno) + ": ";
    try {
      if (tok[0] == "vertex" && tok.size() == 2) {
        out.graph.add_vertex(tok[1]);
      } else if (tok[0] == "edge" && tok.size() == 4) {
        for (const auto* v : {&tok[2], &tok[3]}) {
          if (!out.graph.has_vertex(*v)) out.graph.add_vertex(*v);
        }
        out.graph.add_edge(tok[1], tok[2], tok[3]);
      } else if (tok[0] == "tree" && tok.size() == 2) {
        saw_tree = true;
        if (!tree_lines.insert(tok[1]).second) throw ParseError("tree edge listed twice");
      } else if (tok[0] == "cotree" && tok.size() == 3) {
        saw_tree = true;
        std::size_t used = 0;
        long idx = std::stol(tok[2], &used);
        if (used != tok[2].size() || idx < 1) throw ParseError("bad cotree index '" + tok[2] + "'");
        if (!cotree_lines.emplace(static_cast<std::size_t>(idx), tok[1]).second) {
          throw ParseError("cotree index " + tok[2] + " used twice");
        }
      } else {
        throw ParseError("unrecognized declaration '" + tok[0] + "'");
      }
    } catch (const ParseError& e) {
      throw ParseError(where + e.what());
    } catch (const PreconditionError& e) {
      throw ParseError(where + e.what());
    } catch (const std::logic_error&) {
      throw ParseError(where + "malformed number");
    }
  }
  if (saw_tree) {
    std::size_t expect = 1;
    for (const auto& [idx, id] : cotree_lines) {
      if (idx != expect++) throw ParseError("cotree indices must be 1..r without gaps");
      out.tree.cotree_edges.push_back(id);
    }
    if (tree_lines.empty()) {
      std::set<std::string> cot(out.tree.cotree_edges.begin(), out.tree.cotree_edges.end());
      for (const auto& e : out.graph.edges()) {
        if (!cot.count(e.id)) out.tree.tree_edges.insert(e.id);
      }
    } else {
      out.tree.tree_edges = tree_lines;
    }
    try {
      validate_tree_choice(out.graph, out.tree);
    } catch (const PreconditionError& e) {
      throw ParseError(std::string("invalid spanning tree: ") + e.what());
    }
    out.has_tree = true;
  }
  return out;
}

LoadedGraph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

LoadedGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  return parse_graph(in);
}

std::string to_text(const OrientedMultigraph& g, const SpanningTreeChoice* tree) {
  std::ostringstream out;
  for (const auto& v : g.vertices()) out << "vertex " << v << '\n';
  for (const auto& e : g.edges()) out << "edge " << e.id << ' ' << e.src << ' ' << e.dst << '\n';
  if (tree) {
    for (const auto& e : g.edges()) {
      if (tree->tree_edges.count(e.id)) out << "tree " << e.id << '\n';
    }
    for (std::size_t i = 0; i < tree->cotree_edges.size(); ++i) {
      out << "cotree " << tree->cotree_edges[i] << ' ' << i + 1 << '\n';
    }
  }
  return out.str();
}

std::string to_dot(const OrientedMultigraph& g) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (const auto& v : g.vertices()) out << "  \"" << v << "\";\n";
  for (const auto& e : g.edges()) {
    out << "  \"" << e.src << "\" -> \"" << e.dst << "\" [label=\"" << e.id << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace reeb
