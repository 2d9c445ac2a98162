#include "reeb/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "reeb/error.hpp"

namespace reeb {

// ---------------------------------------------------------------------------
// OrientedMultigraph

void OrientedMultigraph::add_vertex(const std::string& id) {
  if (id.empty()) throw PreconditionError("empty vertex id");
  if (has_vertex(id)) throw PreconditionError("duplicate vertex id '" + id + "'");
  vindex_.emplace(id, vertices_.size());
  vertices_.push_back(id);
  in_.emplace_back();
  out_.emplace_back();
}

std::size_t OrientedMultigraph::vertex_pos(const std::string& id) const {
  auto it = vindex_.find(id);
  if (it == vindex_.end()) throw PreconditionError("unknown vertex '" + id + "'");
  return it->second;
}

void OrientedMultigraph::add_edge(const std::string& id, const std::string& src,
                                  const std::string& dst) {
  if (id.empty()) throw PreconditionError("empty edge id");
  if (has_edge(id)) throw PreconditionError("duplicate edge id '" + id + "'");
  std::size_t s = vertex_pos(src);
  std::size_t d = vertex_pos(dst);
  eindex_.emplace(id, edges_.size());
  out_[s].push_back(edges_.size());
  in_[d].push_back(edges_.size());
  edges_.push_back({id, src, dst});
}

void OrientedMultigraph::rebuild_edge_index() {
  eindex_.clear();
  for (auto& l : in_) l.clear();
  for (auto& l : out_) l.clear();
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    eindex_.emplace(edges_[k].id, k);
    out_[vindex_.at(edges_[k].src)].push_back(k);
    in_[vindex_.at(edges_[k].dst)].push_back(k);
  }
}

void OrientedMultigraph::remove_edge(const std::string& id) {
  auto it = eindex_.find(id);
  if (it == eindex_.end()) throw PreconditionError("unknown edge '" + id + "'");
  edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(it->second));
  rebuild_edge_index();
}

void OrientedMultigraph::remove_vertex(const std::string& id) {
  std::size_t p = vertex_pos(id);
  if (!in_[p].empty() || !out_[p].empty()) {
    throw PreconditionError("vertex '" + id + "' still has incident edges");
  }
  vertices_.erase(vertices_.begin() + static_cast<std::ptrdiff_t>(p));
  in_.erase(in_.begin() + static_cast<std::ptrdiff_t>(p));
  out_.erase(out_.begin() + static_cast<std::ptrdiff_t>(p));
  vindex_.clear();
  for (std::size_t k = 0; k < vertices_.size(); ++k) vindex_.emplace(vertices_[k], k);
}

void OrientedMultigraph::set_endpoints(const std::string& edge, const std::string& src,
                                       const std::string& dst) {
  auto it = eindex_.find(edge);
  if (it == eindex_.end()) throw PreconditionError("unknown edge '" + edge + "'");
  vertex_pos(src);
  vertex_pos(dst);
  edges_[it->second].src = src;
  edges_[it->second].dst = dst;
  rebuild_edge_index();
}

const Edge& OrientedMultigraph::edge(const std::string& id) const {
  auto it = eindex_.find(id);
  if (it == eindex_.end()) throw PreconditionError("unknown edge '" + id + "'");
  return edges_[it->second];
}

std::vector<std::string> OrientedMultigraph::in_edges(const std::string& v) const {
  std::vector<std::string> out;
  for (auto k : in_[vertex_pos(v)]) out.push_back(edges_[k].id);
  return out;
}

std::vector<std::string> OrientedMultigraph::out_edges(const std::string& v) const {
  std::vector<std::string> out;
  for (auto k : out_[vertex_pos(v)]) out.push_back(edges_[k].id);
  return out;
}

std::size_t OrientedMultigraph::indegree(const std::string& v) const {
  return in_[vertex_pos(v)].size();
}

std::size_t OrientedMultigraph::outdegree(const std::string& v) const {
  return out_[vertex_pos(v)].size();
}

std::string OrientedMultigraph::fresh_vertex_id(const std::string& prefix) const {
  for (std::size_t k = 1;; ++k) {
    std::string id = prefix + std::to_string(k);
    if (!has_vertex(id)) return id;
  }
}

std::string OrientedMultigraph::fresh_edge_id(const std::string& prefix) const {
  for (std::size_t k = 1;; ++k) {
    std::string id = prefix + std::to_string(k);
    if (!has_edge(id)) return id;
  }
}

// ---------------------------------------------------------------------------
// Orientation, rank, census

OrientationReport validate_good_orientation(const OrientedMultigraph& g) {
  OrientationReport report;
  auto fail = [&](std::string msg) {
    report.ok = false;
    report.violations.push_back(std::move(msg));
  };

  for (const auto& e : g.edges()) {
    if (e.src == e.dst) fail("directed cycle: self-loop " + e.id + " at " + e.src);
  }

  // Kahn's algorithm; whatever survives lies on or downstream of a cycle.
  std::unordered_map<std::string, std::size_t> indeg;
  std::deque<std::string> ready;
  for (const auto& v : g.vertices()) {
    indeg[v] = g.indegree(v);
    if (indeg[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    std::string v = ready.front();
    ready.pop_front();
    ++removed;
    for (const auto& e : g.out_edges(v)) {
      const auto& dst = g.edge(e).dst;
      if (--indeg[dst] == 0) ready.push_back(dst);
    }
  }
  if (removed != g.vertex_count()) {
    // Walk backwards along surviving in-edges until a vertex repeats.
    std::string start;
    for (const auto& v : g.vertices()) {
      if (indeg[v] > 0) {
        start = v;
        break;
      }
    }
    std::vector<std::string> walk{start};
    std::unordered_map<std::string, std::size_t> seen{{start, 0}};
    std::string cur = start;
    for (;;) {
      std::string prev;
      for (const auto& e : g.in_edges(cur)) {
        const auto& src = g.edge(e).src;
        if (indeg[src] > 0) {
          prev = src;
          break;
        }
      }
      auto it = seen.find(prev);
      if (it != seen.end()) {
        std::vector<std::string> cycle(walk.begin() + static_cast<std::ptrdiff_t>(it->second),
                                       walk.end());
        std::reverse(cycle.begin(), cycle.end());
        std::string text;
        for (const auto& v : cycle) text += v + " -> ";
        text += cycle.front();
        bool self_loop_only = cycle.size() == 1;
        if (!self_loop_only) fail("directed cycle: " + text);
        break;
      }
      seen.emplace(prev, walk.size());
      walk.push_back(prev);
      cur = prev;
    }
  }

  for (const auto& v : g.vertices()) {
    std::size_t d = g.degree(v);
    if (d < 2) continue;
    if (g.indegree(v) == 0) {
      fail("vertex " + v + " has degree " + std::to_string(d) + " but indegree 0");
    }
    if (g.outdegree(v) == 0) {
      fail("vertex " + v + " has degree " + std::to_string(d) + " but outdegree 0");
    }
  }
  return report;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

std::unordered_map<std::string, std::size_t> vertex_positions(const OrientedMultigraph& g) {
  std::unordered_map<std::string, std::size_t> pos;
  for (std::size_t k = 0; k < g.vertex_count(); ++k) pos.emplace(g.vertices()[k], k);
  return pos;
}

}  // namespace

std::size_t component_count(const OrientedMultigraph& g) {
  auto pos = vertex_positions(g);
  UnionFind uf(g.vertex_count());
  std::size_t comps = g.vertex_count();
  for (const auto& e : g.edges()) {
    if (uf.unite(pos.at(e.src), pos.at(e.dst))) --comps;
  }
  return comps;
}

std::size_t cycle_rank(const OrientedMultigraph& g) {
  return g.edge_count() + component_count(g) - g.vertex_count();
}

DegreeCensus degree_census(const OrientedMultigraph& g) {
  DegreeCensus c;
  std::size_t degree_sum = 0;
  for (const auto& v : g.vertices()) {
    std::size_t d = g.degree(v);
    degree_sum += d;
    if (d == 1) {
      if (g.indegree(v) == 0) ++c.delta1_in;
      else ++c.delta1_out;
    } else if (d == 2) {
      ++c.delta2;
    } else if (d == 3) {
      ++c.delta3;
    } else if (d >= 4) {
      ++c.higher;
      c.higher_degree_sum += d;
    }
  }
  if (degree_sum != 2 * g.edge_count()) {
    throw std::logic_error("handshake identity violated");
  }
  return c;
}

bool is_admissible(const OrientedMultigraph& g, std::size_t n_minus, std::size_t n_plus) {
  auto report = validate_good_orientation(g);
  if (!report.ok) {
    throw PreconditionError("graph is not good-oriented: " + report.violations.front());
  }
  auto c = degree_census(g);
  return c.delta1_in >= n_minus && c.delta1_out >= n_plus;
}

std::size_t max_degree(const OrientedMultigraph& g) {
  std::size_t m = 0;
  for (const auto& v : g.vertices()) m = std::max(m, g.degree(v));
  return m;
}

bool is_primitive(const OrientedMultigraph& g) {
  if (max_degree(g) > 3) throw PreconditionError("primitivity needs degrees <= 3");
  for (const auto& start : g.vertices()) {
    if (g.indegree(start) != 2) continue;
    std::set<std::string> seen{start};
    std::vector<std::string> stack{start};
    while (!stack.empty()) {
      std::string v = stack.back();
      stack.pop_back();
      if (g.outdegree(v) == 2) return false;
      for (const auto& e : g.out_edges(v)) {
        const auto& w = g.edge(e).dst;
        if (seen.insert(w).second) stack.push_back(w);
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Spanning trees

void validate_tree_choice(const OrientedMultigraph& g, const SpanningTreeChoice& t) {
  std::set<std::string> cotree;
  for (const auto& e : t.cotree_edges) {
    if (!g.has_edge(e)) throw PreconditionError("cotree edge '" + e + "' not in graph");
    if (!cotree.insert(e).second) throw PreconditionError("cotree edge '" + e + "' repeated");
    if (t.tree_edges.count(e)) throw PreconditionError("edge '" + e + "' in tree and cotree");
  }
  for (const auto& e : t.tree_edges) {
    if (!g.has_edge(e)) throw PreconditionError("tree edge '" + e + "' not in graph");
  }
  if (t.tree_edges.size() + cotree.size() != g.edge_count()) {
    throw PreconditionError("tree and cotree do not cover all edges");
  }
  if (g.vertex_count() == 0 || t.tree_edges.size() + 1 != g.vertex_count()) {
    throw PreconditionError("tree edge count must be |V| - 1");
  }
  auto pos = vertex_positions(g);
  UnionFind uf(g.vertex_count());
  for (const auto& id : t.tree_edges) {
    const auto& e = g.edge(id);
    if (!uf.unite(pos.at(e.src), pos.at(e.dst))) {
      throw PreconditionError("tree edges contain a cycle through '" + id + "'");
    }
  }
}

SpanningTreeChoice default_spanning_tree(const OrientedMultigraph& g) {
  if (g.vertex_count() == 0) throw PreconditionError("empty graph has no spanning tree");
  auto pos = vertex_positions(g);
  UnionFind uf(g.vertex_count());
  SpanningTreeChoice t;
  for (const auto& e : g.edges()) {
    if (uf.unite(pos.at(e.src), pos.at(e.dst))) {
      t.tree_edges.insert(e.id);
    } else {
      t.cotree_edges.push_back(e.id);
    }
  }
  if (t.tree_edges.size() + 1 != g.vertex_count()) {
    throw PreconditionError("graph is disconnected");
  }
  return t;
}

GraphWithTree initial_graph(std::size_t r, std::size_t n_minus, std::size_t n_plus) {
  GraphWithTree out;
  auto& g = out.graph;
  std::vector<std::string> spine{"min"};
  for (std::size_t j = 1; j <= n_plus; ++j) spine.push_back("b" + std::to_string(j));
  for (std::size_t i = 1; i <= r; ++i) spine.push_back("s" + std::to_string(i));
  for (std::size_t i = r; i >= 1; --i) spine.push_back("m" + std::to_string(i));
  for (std::size_t j = 1; j <= n_minus; ++j) spine.push_back("t" + std::to_string(j));
  spine.push_back("max");

  for (const auto& v : spine) g.add_vertex(v);
  for (std::size_t j = 1; j <= n_plus; ++j) g.add_vertex("o" + std::to_string(j));
  for (std::size_t j = 1; j <= n_minus; ++j) g.add_vertex("i" + std::to_string(j));

  for (std::size_t k = 0; k + 1 < spine.size(); ++k) {
    std::string id = "f" + std::to_string(k + 1);
    g.add_edge(id, spine[k], spine[k + 1]);
    out.tree.tree_edges.insert(id);
  }
  for (std::size_t i = 1; i <= r; ++i) {
    std::string id = "e" + std::to_string(i);
    g.add_edge(id, "s" + std::to_string(i), "m" + std::to_string(i));
    out.tree.cotree_edges.push_back(id);
  }
  for (std::size_t j = 1; j <= n_plus; ++j) {
    std::string id = "p" + std::to_string(j);
    g.add_edge(id, "b" + std::to_string(j), "o" + std::to_string(j));
    out.tree.tree_edges.insert(id);
  }
  for (std::size_t j = 1; j <= n_minus; ++j) {
    std::string id = "q" + std::to_string(j);
    g.add_edge(id, "i" + std::to_string(j), "t" + std::to_string(j));
    out.tree.tree_edges.insert(id);
  }
  return out;
}

GraphWithTree canonical_graph(std::size_t r) {
  GraphWithTree out;
  auto& g = out.graph;
  g.add_vertex("min");
  for (std::size_t i = 1; i <= r; ++i) {
    g.add_vertex("s" + std::to_string(i));
    g.add_vertex("m" + std::to_string(i));
  }
  g.add_vertex("max");
  std::string below = "min";
  for (std::size_t i = 1; i <= r; ++i) {
    std::string s = "s" + std::to_string(i);
    std::string m = "m" + std::to_string(i);
    std::string f = "f" + std::to_string(i);
    g.add_edge(f, below, s);
    out.tree.tree_edges.insert(f);
    g.add_edge("el" + std::to_string(i), s, m);
    out.tree.tree_edges.insert("el" + std::to_string(i));
    g.add_edge("er" + std::to_string(i), s, m);
    out.tree.cotree_edges.push_back("er" + std::to_string(i));
    below = m;
  }
  std::string f = "f" + std::to_string(r + 1);
  g.add_edge(f, below, "max");
  out.tree.tree_edges.insert(f);
  return out;
}

// ---------------------------------------------------------------------------
// Cutting and gluing

std::string to_string(const PendantLabel& label) {
  return "c" + std::to_string(label.index) + (label.side == PendantSide::minus ? "-" : "+");
}

CutTree cut_along_cotree(const OrientedMultigraph& g, const SpanningTreeChoice& t) {
  validate_tree_choice(g, t);
  CutTree cut;
  cut.tree = g;
  cut.cotree_ids = t.cotree_edges;
  for (std::size_t i = 1; i <= t.cotree_edges.size(); ++i) {
    const std::string& id = t.cotree_edges[i - 1];
    Edge e = cut.tree.edge(id);
    PendantLabel minus{i, PendantSide::minus};
    PendantLabel plus{i, PendantSide::plus};
    std::string cm = to_string(minus);
    std::string cp = to_string(plus);
    if (cut.tree.has_vertex(cm) || cut.tree.has_vertex(cp)) {
      throw PreconditionError("pendant vertex name clash on cotree edge '" + id + "'");
    }
    cut.tree.remove_edge(id);
    cut.tree.add_vertex(cm);
    cut.tree.add_vertex(cp);
    cut.tree.add_edge(id + "-", e.src, cm);
    cut.tree.add_edge(id + "+", cp, e.dst);
    cut.labels.emplace(cm, minus);
    cut.labels.emplace(cp, plus);
  }
  return cut;
}

GraphWithTree glue_pendants(const CutTree& cut) {
  GraphWithTree out;
  out.graph = cut.tree;
  auto& g = out.graph;
  std::map<PendantLabel, std::string> by_label;
  for (const auto& [v, label] : cut.labels) by_label.emplace(label, v);
  for (std::size_t i = 1; i <= cut.cotree_ids.size(); ++i) {
    auto itm = by_label.find({i, PendantSide::minus});
    auto itp = by_label.find({i, PendantSide::plus});
    if (itm == by_label.end() || itp == by_label.end()) {
      throw PreconditionError("missing pendant pair for cotree index " + std::to_string(i));
    }
    const std::string& cm = itm->second;
    const std::string& cp = itp->second;
    if (g.indegree(cm) != 1 || g.outdegree(cm) != 0 || g.outdegree(cp) != 1 ||
        g.indegree(cp) != 0) {
      throw PreconditionError("pendant pair " + std::to_string(i) + " is not a sink/source pair");
    }
    std::string in_edge = g.in_edges(cm).front();
    std::string out_edge = g.out_edges(cp).front();
    std::string tail = g.edge(in_edge).src;
    std::string head = g.edge(out_edge).dst;
    g.remove_edge(in_edge);
    g.remove_edge(out_edge);
    g.remove_vertex(cm);
    g.remove_vertex(cp);
    g.add_edge(cut.cotree_ids[i - 1], tail, head);
    out.tree.cotree_edges.push_back(cut.cotree_ids[i - 1]);
  }
  std::set<std::string> cotree(out.tree.cotree_edges.begin(), out.tree.cotree_edges.end());
  for (const auto& e : g.edges()) {
    if (!cotree.count(e.id)) out.tree.tree_edges.insert(e.id);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quotient map R -> R/T

EdgePath parse_edge_path(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  EdgePath path;
  while (in >> tok) {
    bool forward = true;
    if (tok.back() == '\'') {
      forward = false;
      tok.pop_back();
    }
    if (tok.empty()) throw ParseError("empty edge token in path");
    path.push_back({tok, forward});
  }
  return path;
}

Word quotient_epimorphism(const OrientedMultigraph& g, const SpanningTreeChoice& t,
                          const EdgePath& loop) {
  validate_tree_choice(g, t);
  std::size_t r = t.cotree_edges.size();
  std::unordered_map<std::string, int> cotree_index;
  for (std::size_t i = 0; i < r; ++i) cotree_index.emplace(t.cotree_edges[i], static_cast<int>(i + 1));

  std::vector<int> letters;
  std::string start;
  std::string at;
  for (std::size_t k = 0; k < loop.size(); ++k) {
    const auto& step = loop[k];
    if (!g.has_edge(step.edge)) throw PreconditionError("path uses unknown edge '" + step.edge + "'");
    const auto& e = g.edge(step.edge);
    const std::string& from = step.forward ? e.src : e.dst;
    const std::string& to = step.forward ? e.dst : e.src;
    if (k == 0) {
      start = from;
    } else if (from != at) {
      throw PreconditionError("path step " + std::to_string(k + 1) + " (" + step.edge +
                              ") is not incident to " + at);
    }
    at = to;
    auto it = cotree_index.find(step.edge);
    if (it != cotree_index.end()) letters.push_back(step.forward ? it->second : -it->second);
  }
  if (!loop.empty() && at != start) {
    throw PreconditionError("path is not closed: starts at " + start + ", ends at " + at);
  }
  return Word(r, letters);
}

// ---------------------------------------------------------------------------
// Fingerprint and isomorphism

std::string fingerprint(const OrientedMultigraph& g) {
  std::vector<std::string> vs = g.vertices();
  std::sort(vs.begin(), vs.end());
  std::vector<std::string> es;
  for (const auto& e : g.edges()) es.push_back(e.id + ' ' + e.src + ' ' + e.dst);
  std::sort(es.begin(), es.end());
  std::string text;
  for (const auto& v : vs) text += "vertex " + v + '\n';
  for (const auto& e : es) text += "edge " + e + '\n';

  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

std::optional<std::map<std::string, std::string>> find_isomorphism(
    const OrientedMultigraph& a, const OrientedMultigraph& b,
    const std::map<std::string, std::string>& pinned) {
  const std::size_t n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;

  auto pa = vertex_positions(a);
  auto pb = vertex_positions(b);
  std::vector<std::vector<int>> ca(n, std::vector<int>(n, 0)), cb(n, std::vector<int>(n, 0));
  for (const auto& e : a.edges()) ++ca[pa.at(e.src)][pa.at(e.dst)];
  for (const auto& e : b.edges()) ++cb[pb.at(e.src)][pb.at(e.dst)];

  auto signature = [](const OrientedMultigraph& g, const std::string& v) {
    return std::make_pair(g.indegree(v), g.outdegree(v));
  };
  {
    std::vector<std::pair<std::size_t, std::size_t>> sa, sb;
    for (const auto& v : a.vertices()) sa.push_back(signature(a, v));
    for (const auto& v : b.vertices()) sb.push_back(signature(b, v));
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  std::vector<long> map_ab(n, -1), map_ba(n, -1);
  auto assign_forced = [&](std::size_t u, std::size_t x) {
    if (map_ab[u] == -1 && map_ba[x] == -1) {
      map_ab[u] = static_cast<long>(x);
      map_ba[x] = static_cast<long>(u);
      return true;
    }
    return map_ab[u] == static_cast<long>(x);
  };
  for (const auto& [ea, eb] : pinned) {
    if (!a.has_edge(ea) || !b.has_edge(eb)) return std::nullopt;
    const auto& x = a.edge(ea);
    const auto& y = b.edge(eb);
    if (!assign_forced(pa.at(x.src), pb.at(y.src))) return std::nullopt;
    if (!assign_forced(pa.at(x.dst), pb.at(y.dst))) return std::nullopt;
  }
  std::vector<std::size_t> forced;
  for (std::size_t u = 0; u < n; ++u) {
    if (map_ab[u] != -1) forced.push_back(u);
  }

  // Undirected neighbor lists for ordering and candidate generation.
  auto neighbors = [](const std::vector<std::vector<int>>& c, std::size_t n_) {
    std::vector<std::vector<std::size_t>> nb(n_);
    for (std::size_t u = 0; u < n_; ++u) {
      for (std::size_t v = 0; v < n_; ++v) {
        if (u != v && (c[u][v] || c[v][u])) nb[u].push_back(v);
      }
    }
    return nb;
  };
  auto nba = neighbors(ca, n);
  auto nbb = neighbors(cb, n);

  // BFS order: forced vertices first, then connected expansion.
  std::vector<std::size_t> order;
  std::vector<bool> queued(n, false);
  std::deque<std::size_t> q;
  for (auto u : forced) {
    queued[u] = true;
    q.push_back(u);
  }
  for (std::size_t root = 0; root < n; ++root) {
    if (q.empty() && !queued[root]) {
      queued[root] = true;
      q.push_back(root);
    }
    while (!q.empty()) {
      auto u = q.front();
      q.pop_front();
      order.push_back(u);
      for (auto w : nba[u]) {
        if (!queued[w]) {
          queued[w] = true;
          q.push_back(w);
        }
      }
    }
  }

  auto consistent = [&](std::size_t u, std::size_t x) {
    if (signature(a, a.vertices()[u]) != signature(b, b.vertices()[x])) return false;
    if (ca[u][u] != cb[x][x]) return false;
    for (auto w : nba[u]) {
      if (map_ab[w] == -1) continue;
      auto y = static_cast<std::size_t>(map_ab[w]);
      if (ca[u][w] != cb[x][y] || ca[w][u] != cb[y][x]) return false;
    }
    // Mapped non-neighbors of u must stay non-neighbors of x.
    for (auto y : nbb[x]) {
      if (map_ba[y] == -1) continue;
      auto w = static_cast<std::size_t>(map_ba[y]);
      if (ca[u][w] != cb[x][y] || ca[w][u] != cb[y][x]) return false;
    }
    return true;
  };

  for (auto u : forced) {
    if (!consistent(u, static_cast<std::size_t>(map_ab[u]))) return std::nullopt;
  }

  std::function<bool(std::size_t)> search = [&](std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    std::size_t u = order[depth];
    if (map_ab[u] != -1) return search(depth + 1);
    std::vector<std::size_t> candidates;
    long anchor = -1;
    for (auto w : nba[u]) {
      if (map_ab[w] != -1) {
        anchor = map_ab[w];
        break;
      }
    }
    if (anchor >= 0) {
      candidates = nbb[static_cast<std::size_t>(anchor)];
    } else {
      candidates.resize(n);
      std::iota(candidates.begin(), candidates.end(), 0);
    }
    for (auto x : candidates) {
      if (map_ba[x] != -1 || !consistent(u, x)) continue;
      map_ab[u] = static_cast<long>(x);
      map_ba[x] = static_cast<long>(u);
      if (search(depth + 1)) return true;
      map_ab[u] = -1;
      map_ba[x] = -1;
    }
    return false;
  };
  if (!search(0)) return std::nullopt;

  std::map<std::string, std::string> result;
  for (std::size_t u = 0; u < n; ++u) {
    result.emplace(a.vertices()[u], b.vertices()[static_cast<std::size_t>(map_ab[u])]);
  }
  return result;
}

}  // namespace reeb
