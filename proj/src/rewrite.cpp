#include "reeb/rewrite.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "reeb/error.hpp"

namespace reeb {

namespace {

[[noreturn]] void mismatch(const std::string& move, const std::string& expected) {
  throw PreconditionError(move + ": pattern mismatch, expected " + expected);
}

void require_vertex(const OrientedMultigraph& g, const std::string& v, const std::string& move) {
  if (!g.has_vertex(v)) throw PreconditionError(move + ": unknown vertex '" + v + "'");
}

// Unique edge a -> b, or empty when there is none; throws on parallels.
std::string edge_between(const OrientedMultigraph& g, const std::string& a, const std::string& b) {
  std::string found;
  for (const auto& e : g.out_edges(a)) {
    if (g.edge(e).dst != b) continue;
    if (!found.empty()) throw PreconditionError("parallel edges between " + a + " and " + b);
    found = e;
  }
  return found;
}

std::string other_of(const std::vector<std::string>& pair, const std::string& e) {
  return pair[0] == e ? pair[1] : pair[0];
}

std::string pick_keep(const std::vector<std::string>& candidates, const std::string& keep,
                      const std::string& move) {
  if (keep.empty()) return *std::min_element(candidates.begin(), candidates.end());
  if (std::find(candidates.begin(), candidates.end(), keep) == candidates.end()) {
    throw PreconditionError(move + ": keep edge '" + keep + "' is not a candidate");
  }
  return keep;
}

void swap_tails(OrientedMultigraph& g, const std::string& a, const std::string& b) {
  Edge ea = g.edge(a);
  Edge eb = g.edge(b);
  g.set_endpoints(a, eb.src, ea.dst);
  g.set_endpoints(b, ea.src, eb.dst);
}

void swap_heads(OrientedMultigraph& g, const std::string& a, const std::string& b) {
  Edge ea = g.edge(a);
  Edge eb = g.edge(b);
  g.set_endpoints(a, ea.src, eb.dst);
  g.set_endpoints(b, eb.src, ea.dst);
}

struct Pair {
  std::string v, w;
};

void check_pair(const OrientedMultigraph& g, const Pair& p, const std::string& move) {
  require_vertex(g, p.v, move);
  require_vertex(g, p.w, move);
  if (p.v == p.w) throw PreconditionError(move + ": v and w must differ");
  if (g.degree(p.v) != 3 || g.degree(p.w) != 3) mismatch(move, "v and w of degree 3");
}

OrientedMultigraph slide_out(const OrientedMultigraph& g, const std::string& v, const std::string& w,
                             const std::string& keep, bool over) {
  const std::string name = over ? "slide13" : "slide5";
  check_pair(g, {v, w}, name);
  if (g.outdegree(w) != 2) mismatch(name, "w with outdegree 2");
  std::string shared = edge_between(g, w, v);
  if (shared.empty()) mismatch(name, "an edge w -> v");
  std::string o = other_of(g.out_edges(w), shared);
  OrientedMultigraph out = g;
  if (!over) {
    if (g.outdegree(v) != 2) mismatch(name, "v with outdegree 2");
    auto outs = g.out_edges(v);
    std::string p = other_of(outs, pick_keep(outs, keep, name));
    swap_tails(out, o, p);
  } else {
    if (g.indegree(v) != 2) mismatch(name, "v with indegree 2");
    swap_tails(out, o, g.out_edges(v).front());
  }
  return out;
}

OrientedMultigraph slide_in(const OrientedMultigraph& g, const std::string& v, const std::string& w,
                            const std::string& keep, bool over) {
  const std::string name = over ? "slide14" : "slide4";
  check_pair(g, {v, w}, name);
  if (g.indegree(w) != 2) mismatch(name, "w with indegree 2");
  std::string shared = edge_between(g, v, w);
  if (shared.empty()) mismatch(name, "an edge v -> w");
  std::string o = other_of(g.in_edges(w), shared);
  OrientedMultigraph out = g;
  if (!over) {
    if (g.indegree(v) != 2) mismatch(name, "v with indegree 2");
    auto ins = g.in_edges(v);
    std::string p = other_of(ins, pick_keep(ins, keep, name));
    swap_heads(out, o, p);
  } else {
    if (g.outdegree(v) != 2) mismatch(name, "v with outdegree 2");
    swap_heads(out, o, g.in_edges(v).front());
  }
  return out;
}

OrientedMultigraph leaf_birth(const OrientedMultigraph& g, const LeafBirth& b) {
  if (!g.has_edge(b.edge)) throw PreconditionError("birth: unknown edge '" + b.edge + "'");
  OrientedMultigraph out = g;
  Edge e = g.edge(b.edge);
  std::string n = out.fresh_vertex_id("n");
  out.add_vertex(n);
  std::string l = out.fresh_vertex_id("l");
  out.add_vertex(l);
  out.set_endpoints(e.id, e.src, n);
  out.add_edge(out.fresh_edge_id("g"), n, e.dst);
  std::string h = out.fresh_edge_id("h");
  if (b.direction == LeafDirection::sink) {
    out.add_edge(h, n, l);
  } else {
    out.add_edge(h, l, n);
  }
  return out;
}

OrientedMultigraph leaf_death(const OrientedMultigraph& g, const LeafDeath& d) {
  require_vertex(g, d.saddle, "death");
  require_vertex(g, d.leaf, "death");
  if (g.degree(d.saddle) != 3) mismatch("death", "a saddle of degree 3");
  if (g.degree(d.leaf) != 1) mismatch("death", "a leaf of degree 1");
  std::string leaf_edge;
  std::vector<std::string> ins, outs;
  for (const auto& e : g.in_edges(d.saddle)) {
    if (g.edge(e).src == d.leaf && leaf_edge.empty()) {
      leaf_edge = e;
    } else {
      ins.push_back(e);
    }
  }
  for (const auto& e : g.out_edges(d.saddle)) {
    if (g.edge(e).dst == d.leaf && leaf_edge.empty()) {
      leaf_edge = e;
    } else {
      outs.push_back(e);
    }
  }
  if (leaf_edge.empty()) mismatch("death", "the leaf adjacent to the saddle");
  if (ins.size() != 1 || outs.size() != 1) {
    mismatch("death", "one remaining in-edge and one remaining out-edge at the saddle");
  }
  OrientedMultigraph out = g;
  Edge in = g.edge(ins[0]);
  Edge through = g.edge(outs[0]);
  out.remove_edge(leaf_edge);
  out.remove_edge(through.id);
  out.set_endpoints(in.id, in.src, through.dst);
  out.remove_vertex(d.leaf);
  out.remove_vertex(d.saddle);
  return out;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tok;
  for (std::string t; in >> t;) tok.push_back(t);
  return tok;
}

std::string strip_comment(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  return line;
}

}  // namespace

// ---------------------------------------------------------------------------
// Moves

std::string to_string(const Move& m) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SlideOutOut>) {
          return "slide5 " + x.v + ' ' + x.w + (x.keep.empty() ? "" : ' ' + x.keep);
        } else if constexpr (std::is_same_v<T, SlideInIn>) {
          return "slide4 " + x.v + ' ' + x.w + (x.keep.empty() ? "" : ' ' + x.keep);
        } else if constexpr (std::is_same_v<T, SlideInOverOut>) {
          return "slide13 " + x.v + ' ' + x.w;
        } else if constexpr (std::is_same_v<T, SlideOutOverIn>) {
          return "slide14 " + x.v + ' ' + x.w;
        } else if constexpr (std::is_same_v<T, LeafBirth>) {
          return "birth " + x.edge + (x.direction == LeafDirection::sink ? " sink" : " source");
        } else {
          return "death " + x.saddle + ' ' + x.leaf;
        }
      },
      m);
}

Move parse_move(const std::string& text) {
  auto tok = tokens(text);
  auto bad = [&]() -> ParseError { return ParseError("malformed move '" + text + "'"); };
  if (tok.empty()) throw bad();
  const auto& k = tok[0];
  if ((k == "slide5" || k == "slide4") && (tok.size() == 3 || tok.size() == 4)) {
    std::string keep = tok.size() == 4 ? tok[3] : "";
    if (k == "slide5") return SlideOutOut{tok[1], tok[2], keep};
    return SlideInIn{tok[1], tok[2], keep};
  }
  if (k == "slide13" && tok.size() == 3) return SlideInOverOut{tok[1], tok[2]};
  if (k == "slide14" && tok.size() == 3) return SlideOutOverIn{tok[1], tok[2]};
  if (k == "birth" && tok.size() == 3 && (tok[2] == "sink" || tok[2] == "source")) {
    return LeafBirth{tok[1], tok[2] == "sink" ? LeafDirection::sink : LeafDirection::source};
  }
  if (k == "death" && tok.size() == 3) return LeafDeath{tok[1], tok[2]};
  throw bad();
}

bool is_slide(const Move& m) {
  return !std::holds_alternative<LeafBirth>(m) && !std::holds_alternative<LeafDeath>(m);
}

OrientedMultigraph apply_move(const OrientedMultigraph& g, const Move& m) {
  OrientedMultigraph out = std::visit(
      [&](const auto& x) -> OrientedMultigraph {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SlideOutOut>) {
          return slide_out(g, x.v, x.w, x.keep, false);
        } else if constexpr (std::is_same_v<T, SlideInOverOut>) {
          return slide_out(g, x.v, x.w, "", true);
        } else if constexpr (std::is_same_v<T, SlideInIn>) {
          return slide_in(g, x.v, x.w, x.keep, false);
        } else if constexpr (std::is_same_v<T, SlideOutOverIn>) {
          return slide_in(g, x.v, x.w, "", true);
        } else if constexpr (std::is_same_v<T, LeafBirth>) {
          return leaf_birth(g, x);
        } else {
          return leaf_death(g, x);
        }
      },
      m);
  if (has_good_orientation(g)) {
    auto report = validate_good_orientation(out);
    if (!report.ok) {
      throw PreconditionError(to_string(m) + ": result is not good-oriented (" +
                              report.violations.front() + ")");
    }
  }
  return out;
}

OrientedMultigraph replay(const OrientedMultigraph& g, const std::vector<Move>& moves) {
  OrientedMultigraph cur = g;
  for (const auto& m : moves) cur = apply_move(cur, m);
  return cur;
}

std::string to_text(const std::vector<Move>& moves) {
  std::string out;
  for (const auto& m : moves) out += to_string(m) + '\n';
  return out;
}

std::vector<Move> parse_moves(const std::string& text) {
  std::istringstream in(text);
  std::vector<Move> out;
  for (std::string line; std::getline(in, line);) {
    line = strip_comment(line);
    if (tokens(line).empty()) continue;
    out.push_back(parse_move(line));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Normalization

namespace {

void require_primitive_tree(const OrientedMultigraph& g) {
  auto report = validate_good_orientation(g);
  if (!report.ok) throw PreconditionError("tree is not good-oriented: " + report.violations.front());
  if (g.vertex_count() == 0 || g.edge_count() + 1 != g.vertex_count() || component_count(g) != 1) {
    throw PreconditionError("graph is not a tree");
  }
  for (const auto& v : g.vertices()) {
    std::size_t d = g.degree(v);
    if (d != 1 && d != 3) {
      throw PreconditionError("vertex " + v + " has degree " + std::to_string(d) +
                              "; expected degrees 1 and 3 only");
    }
  }
  if (!is_primitive(g)) throw PreconditionError("tree is not primitive");
}

}  // namespace

std::vector<std::string> heaviest_spine(const OrientedMultigraph& tree) {
  if (!has_good_orientation(tree)) throw PreconditionError("spine search needs an acyclic graph");
  // Reverse topological order via DFS post-order.
  std::map<std::string, std::pair<std::size_t, std::vector<std::string>>> best;
  std::vector<std::string> order;
  std::set<std::string> done;
  for (const auto& root : tree.vertices()) {
    if (done.count(root)) continue;
    std::vector<std::pair<std::string, std::size_t>> stack{{root, 0}};
    done.insert(root);
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      auto outs = tree.out_edges(v);
      if (next < outs.size()) {
        std::string w = tree.edge(outs[next++]).dst;
        if (done.insert(w).second) stack.push_back({w, 0});
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }
  auto better = [](const std::pair<std::size_t, std::vector<std::string>>& a,
                   const std::pair<std::size_t, std::vector<std::string>>& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  };
  for (const auto& v : order) {
    std::size_t weight = tree.degree(v) == 3 ? 1 : 0;
    std::pair<std::size_t, std::vector<std::string>> chosen{weight, {v}};
    bool have = false;
    for (const auto& e : tree.out_edges(v)) {
      const auto& sub = best.at(tree.edge(e).dst);
      std::pair<std::size_t, std::vector<std::string>> cand{weight + sub.first, {v}};
      cand.second.insert(cand.second.end(), sub.second.begin(), sub.second.end());
      if (!have || better(cand, chosen)) {
        chosen = std::move(cand);
        have = true;
      }
    }
    best.emplace(v, std::move(chosen));
  }
  std::pair<std::size_t, std::vector<std::string>> result;
  bool have = false;
  for (const auto& v : tree.vertices()) {
    if (tree.indegree(v) != 0) continue;
    const auto& cand = best.at(v);
    if (!have || better(cand, result)) {
      result = cand;
      have = true;
    }
  }
  return result.second;
}

Normalization normalize_to_initial_tree(const OrientedMultigraph& tree) {
  require_primitive_tree(tree);
  Normalization out;
  out.script.source_fingerprint = fingerprint(tree);
  OrientedMultigraph g = tree;
  std::vector<std::string> tau = heaviest_spine(g);
  auto emit = [&](Move m) {
    g = apply_move(g, m);
    out.script.moves.push_back(std::move(m));
  };
  auto spine_edge = [&](std::size_t i) { return edge_between(g, tau[i], tau[i + 1]); };

  const std::size_t limit = g.vertex_count() * g.vertex_count() + 1;
  for (std::size_t round = 0;; ++round) {
    if (round > limit) throw std::logic_error("normalization did not terminate");
    bool changed = false;
    for (std::size_t i = 1; i + 1 < tau.size() && !changed; ++i) {
      const std::string w = tau[i];
      std::string off;
      bool off_out = false;
      for (const auto& e : g.out_edges(w)) {
        if (g.edge(e).dst != tau[i + 1]) {
          off = e;
          off_out = true;
        }
      }
      for (const auto& e : g.in_edges(w)) {
        if (g.edge(e).src != tau[i - 1]) off = e;
      }
      const std::string v = off_out ? g.edge(off).dst : g.edge(off).src;
      if (g.degree(v) != 3) continue;
      changed = true;
      if (off_out && g.outdegree(v) == 2) {
        auto outs = g.out_edges(v);
        emit(SlideOutOut{v, w, *std::min_element(outs.begin(), outs.end())});
        tau.insert(tau.begin() + static_cast<std::ptrdiff_t>(i + 1), v);
      } else if (off_out) {
        std::size_t cur = i;
        while (cur + 2 < tau.size() && g.outdegree(tau[cur + 1]) == 2) {
          emit(SlideOutOut{tau[cur + 1], tau[cur], spine_edge(cur + 1)});
          ++cur;
        }
        emit(SlideInOverOut{v, tau[cur]});
        tau.insert(tau.begin() + static_cast<std::ptrdiff_t>(cur + 1), v);
      } else if (g.indegree(v) == 2) {
        auto ins = g.in_edges(v);
        emit(SlideInIn{v, w, *std::min_element(ins.begin(), ins.end())});
        tau.insert(tau.begin() + static_cast<std::ptrdiff_t>(i), v);
      } else {
        std::size_t cur = i;
        while (cur >= 2 && g.indegree(tau[cur - 1]) == 2) {
          emit(SlideInIn{tau[cur - 1], tau[cur], spine_edge(cur - 2)});
          --cur;
        }
        emit(SlideOutOverIn{v, tau[cur]});
        tau.insert(tau.begin() + static_cast<std::ptrdiff_t>(cur), v);
      }
    }
    if (!changed) break;
  }
  out.script.target_fingerprint = fingerprint(g);
  out.result = std::move(g);
  out.spine = std::move(tau);
  return out;
}

// ---------------------------------------------------------------------------
// Realization planning

namespace {

// A normal-form caterpillar: spine[1..a] are splits, spine[a+1..a+b] merges.
struct Caterpillar {
  OrientedMultigraph g;
  std::vector<std::string> spine;
  std::size_t a = 0;
  std::size_t b = 0;
  std::vector<Move> moves;

  Caterpillar(OrientedMultigraph graph, std::vector<std::string> sp)
      : g(std::move(graph)), spine(std::move(sp)) {
    for (std::size_t i = 1; i + 1 < spine.size(); ++i) {
      if (g.outdegree(spine[i]) == 2) {
        if (b) throw std::logic_error("spine is not in normal form");
        ++a;
      } else {
        ++b;
      }
    }
  }

  void emit(Move m) {
    g = apply_move(g, m);
    moves.push_back(std::move(m));
  }

  std::string edge(std::size_t i) const { return edge_between(g, spine[i], spine[i + 1]); }

  // Off-spine neighbor of an internal spine vertex.
  std::string pendant(std::size_t i) const {
    for (const auto& e : g.out_edges(spine[i])) {
      const auto& d = g.edge(e).dst;
      if (d != spine[i + 1]) return d;
    }
    for (const auto& e : g.in_edges(spine[i])) {
      const auto& s = g.edge(e).src;
      if (s != spine[i - 1]) return s;
    }
    throw std::logic_error("spine vertex without pendant");
  }

  std::size_t sink_count() const { return a + 1; }
  std::size_t source_count() const { return b + 1; }
  std::string sink(std::size_t pos) const { return pos < a ? pendant(1 + pos) : spine.back(); }
  std::string source(std::size_t pos) const { return pos == 0 ? spine.front() : pendant(a + pos); }

  // Exchanges the sink leaves at positions pos and pos + 1.
  void swap_sinks(std::size_t pos) {
    if (pos + 1 < a) {
      emit(SlideOutOut{spine[pos + 2], spine[pos + 1], edge(pos + 2)});
      return;
    }
    const std::string split = spine[a];
    const std::string leaf = pendant(a);
    if (b == 0) {
      spine.back() = leaf;
      return;
    }
    std::string x = edge(a);
    std::vector<Move> pushes;
    for (std::size_t k = 1; k < b; ++k) {
      const std::string& m = spine[a + k];
      std::string keep = other_of(g.in_edges(m), x);
      pushes.push_back(SlideInIn{m, spine[a + k + 1], keep});
      emit(pushes.back());
    }
    emit(SlideInOverOut{spine[a + b], split});
    for (auto it = pushes.rbegin(); it != pushes.rend(); ++it) emit(*it);
    spine.back() = leaf;
  }

  // Exchanges the source leaves at positions pos and pos + 1.
  void swap_sources(std::size_t pos) {
    if (pos >= 1) {
      emit(SlideInIn{spine[a + pos], spine[a + pos + 1], edge(a + pos - 1)});
      return;
    }
    const std::string merge = spine[a + 1];
    const std::string leaf = pendant(a + 1);
    if (a == 0) {
      spine.front() = leaf;
      return;
    }
    std::string y = edge(a);
    std::vector<Move> pushes;
    for (std::size_t k = a; k >= 2; --k) {
      std::string keep = other_of(g.out_edges(spine[k]), y);
      pushes.push_back(SlideOutOut{spine[k], spine[k - 1], keep});
      emit(pushes.back());
    }
    emit(SlideOutOverIn{spine[1], merge});
    for (auto it = pushes.rbegin(); it != pushes.rend(); ++it) emit(*it);
    spine.front() = leaf;
  }

  // Orders pendant labels: labeled leaves by cotree index, unlabeled last.
  void canonicalize(const std::map<std::string, PendantLabel>& labels) {
    auto key = [&](const std::string& leaf) {
      auto it = labels.find(leaf);
      return it == labels.end() ? std::make_pair(1, std::size_t{0})
                                : std::make_pair(0, it->second.index);
    };
    for (bool swapped = true; swapped;) {
      swapped = false;
      for (std::size_t k = 0; k + 1 < sink_count(); ++k) {
        if (key(sink(k)) > key(sink(k + 1))) {
          swap_sinks(k);
          swapped = true;
        }
      }
    }
    for (bool swapped = true; swapped;) {
      swapped = false;
      for (std::size_t k = 0; k + 1 < source_count(); ++k) {
        if (key(source(k)) > key(source(k + 1))) {
          swap_sources(k);
          swapped = true;
        }
      }
    }
  }
};

struct IdMap {
  std::map<std::string, std::string> vertices;
  std::map<std::string, std::string> edges;

  std::string v(const std::string& id) const { return vertices.at(id); }
  std::string e(const std::string& id) const { return id.empty() ? id : edges.at(id); }

  Move translate(const Move& m) const {
    return std::visit(
        [&](const auto& x) -> Move {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, SlideOutOut> || std::is_same_v<T, SlideInIn>) {
            return T{v(x.v), v(x.w), e(x.keep)};
          } else if constexpr (std::is_same_v<T, SlideInOverOut> ||
                               std::is_same_v<T, SlideOutOverIn>) {
            return T{v(x.v), v(x.w)};
          } else {
            throw std::logic_error("only slides can be translated");
          }
        },
        m);
  }
};

// Position-wise identification of two caterpillars of the same shape.
IdMap match_caterpillars(const Caterpillar& from, const Caterpillar& to,
                         const std::map<std::string, PendantLabel>& from_labels,
                         const std::map<std::string, PendantLabel>& to_labels) {
  if (from.spine.size() != to.spine.size() || from.a != to.a) {
    throw std::logic_error("normal forms differ in shape");
  }
  IdMap map;
  auto pair_leaf = [&](const std::string& x, const std::string& y) {
    auto ix = from_labels.find(x);
    auto iy = to_labels.find(y);
    bool lx = ix != from_labels.end();
    bool ly = iy != to_labels.end();
    if (lx != ly || (lx && !(ix->second == iy->second))) {
      throw std::logic_error("pendant labels do not line up");
    }
    map.vertices.emplace(x, y);
  };
  const std::size_t n = from.spine.size();
  pair_leaf(from.spine.front(), to.spine.front());
  pair_leaf(from.spine.back(), to.spine.back());
  for (std::size_t i = 0; i + 1 < n; ++i) map.edges.emplace(from.edge(i), to.edge(i));
  for (std::size_t i = 1; i + 1 < n; ++i) {
    map.vertices.emplace(from.spine[i], to.spine[i]);
    std::string px = from.pendant(i);
    std::string py = to.pendant(i);
    pair_leaf(px, py);
    std::string ex = edge_between(from.g, from.spine[i], px);
    if (ex.empty()) ex = edge_between(from.g, px, from.spine[i]);
    std::string ey = edge_between(to.g, to.spine[i], py);
    if (ey.empty()) ey = edge_between(to.g, py, to.spine[i]);
    map.edges.emplace(ex, ey);
  }
  for (const auto& e : from.g.edges()) {
    const auto& img = to.g.edge(map.edges.at(e.id));
    if (map.vertices.at(e.src) != img.src || map.vertices.at(e.dst) != img.dst) {
      throw std::logic_error("caterpillar identification is not an isomorphism");
    }
  }
  return map;
}

}  // namespace

std::string to_string(PlanVerdict v) {
  switch (v) {
    case PlanVerdict::feasible:
      return "feasible";
    case PlanVerdict::infeasible:
      return "infeasible";
    case PlanVerdict::unsupported:
      return "unsupported";
  }
  return "unknown";
}

RealizationPlan plan_realization(const OrientedMultigraph& target, const SpanningTreeChoice& t,
                                 std::size_t corank_bound) {
  RealizationPlan plan;
  plan.target_fingerprint = fingerprint(target);
  auto report = validate_good_orientation(target);
  if (!report.ok) {
    plan.verdict = PlanVerdict::infeasible;
    plan.reasons.push_back("no good orientation: " + report.violations.front());
    return plan;
  }
  std::size_t beta = cycle_rank(target);
  if (beta > corank_bound) {
    plan.verdict = PlanVerdict::infeasible;
    plan.reasons.push_back("cycle rank " + std::to_string(beta) + " exceeds corank " +
                           std::to_string(corank_bound));
    return plan;
  }

  plan.verdict = PlanVerdict::unsupported;
  if (target.vertex_count() == 0 || component_count(target) != 1) {
    plan.reasons.push_back("graph is not connected");
  }
  for (const auto& v : target.vertices()) {
    std::size_t d = target.degree(v);
    if (d != 1 && d != 3) {
      plan.reasons.push_back("vertex " + v + " has degree " + std::to_string(d));
    }
  }
  if (!plan.reasons.empty()) return plan;
  validate_tree_choice(target, t);
  CutTree cut_target = cut_along_cotree(target, t);
  if (!is_primitive(cut_target.tree)) {
    plan.reasons.push_back("cut tree is not primitive");
    return plan;
  }

  auto census = degree_census(target);
  plan.verdict = PlanVerdict::feasible;
  plan.rank = beta;
  plan.n_minus = census.delta1_in - 1;
  plan.n_plus = census.delta1_out - 1;

  GraphWithTree initial = initial_graph(plan.rank, plan.n_minus, plan.n_plus);
  CutTree cut_initial = cut_along_cotree(initial.graph, initial.tree);

  Normalization norm_target = normalize_to_initial_tree(cut_target.tree);
  Normalization norm_initial = normalize_to_initial_tree(cut_initial.tree);

  Caterpillar cat_target(norm_target.result, norm_target.spine);
  Caterpillar cat_initial(norm_initial.result, norm_initial.spine);
  cat_target.canonicalize(cut_target.labels);
  cat_initial.canonicalize(cut_initial.labels);

  IdMap to_initial = match_caterpillars(cat_target, cat_initial, cut_target.labels,
                                        cut_initial.labels);

  plan.moves = norm_initial.script.moves;
  plan.moves.insert(plan.moves.end(), cat_initial.moves.begin(), cat_initial.moves.end());
  for (auto it = cat_target.moves.rbegin(); it != cat_target.moves.rend(); ++it) {
    plan.moves.push_back(to_initial.translate(*it));
  }
  const auto& st = norm_target.script.moves;
  for (auto it = st.rbegin(); it != st.rend(); ++it) plan.moves.push_back(to_initial.translate(*it));

  // A slide followed by itself is the identity.
  std::vector<Move> reduced;
  for (auto& m : plan.moves) {
    if (!reduced.empty() && is_slide(m) && reduced.back() == m) {
      reduced.pop_back();
    } else {
      reduced.push_back(std::move(m));
    }
  }
  plan.moves = std::move(reduced);
  return plan;
}

RealizationPlan plan_realization(const OrientedMultigraph& target, const SpanningTreeChoice& t,
                                 const SurfaceDescriptor& s) {
  return plan_realization(target, t, corank(s));
}

std::string script_text(const RealizationPlan& plan) {
  if (plan.verdict != PlanVerdict::feasible) {
    throw PreconditionError("only feasible plans have a script");
  }
  std::ostringstream out;
  out << "initial " << plan.rank << ' ' << plan.n_minus << ' ' << plan.n_plus << '\n';
  out << "cut\n";
  out << to_text(plan.moves);
  out << "glue\n";
  return out.str();
}

RealizationPlan parse_plan_script(const std::string& text) {
  RealizationPlan plan;
  plan.verdict = PlanVerdict::feasible;
  enum { start, header, moves, closed } state = start;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    auto tok = tokens(strip_comment(line));
    if (tok.empty()) continue;
    if (state == start) {
      if (tok.size() != 4 || tok[0] != "initial") throw ParseError("script must start with 'initial r n- n+'");
      try {
        plan.rank = std::stoul(tok[1]);
        plan.n_minus = std::stoul(tok[2]);
        plan.n_plus = std::stoul(tok[3]);
      } catch (const std::logic_error&) {
        throw ParseError("malformed 'initial' line");
      }
      state = header;
    } else if (state == header) {
      if (tok.size() != 1 || tok[0] != "cut") throw ParseError("expected 'cut' after 'initial'");
      state = moves;
    } else if (state == moves) {
      if (tok.size() == 1 && tok[0] == "glue") {
        state = closed;
      } else {
        plan.moves.push_back(parse_move(line));
      }
    } else {
      throw ParseError("text after 'glue'");
    }
  }
  if (state != closed) throw ParseError("script must end with 'glue'");
  return plan;
}

GraphWithTree replay_plan(const RealizationPlan& plan) {
  if (plan.verdict != PlanVerdict::feasible) throw PreconditionError("plan is not feasible");
  GraphWithTree initial = initial_graph(plan.rank, plan.n_minus, plan.n_plus);
  CutTree cut = cut_along_cotree(initial.graph, initial.tree);
  cut.tree = replay(cut.tree, plan.moves);
  return glue_pendants(cut);
}

bool verify_plan(const RealizationPlan& plan, const OrientedMultigraph& target,
                 const SpanningTreeChoice& t) {
  GraphWithTree built = replay_plan(plan);
  if (built.tree.cotree_edges.size() != t.cotree_edges.size()) return false;
  std::map<std::string, std::string> pinned;
  for (std::size_t i = 0; i < t.cotree_edges.size(); ++i) {
    pinned.emplace(built.tree.cotree_edges[i], t.cotree_edges[i]);
  }
  return find_isomorphism(built.graph, target, pinned).has_value();
}

std::size_t rank_formula(std::size_t system_components, std::size_t complement_components) {
  if (system_components < 1 || complement_components < 1) {
    throw PreconditionError("component counts must be at least 1");
  }
  long r = static_cast<long>(system_components) - static_cast<long>(complement_components) + 1;
  if (r < 0) {
    throw PreconditionError("inconsistent counts: rank would be " + std::to_string(r));
  }
  return static_cast<std::size_t>(r);
}

}  // namespace reeb
