#include "reeb/generators.hpp"

#include <algorithm>
#include <numeric>

#include "reeb/error.hpp"

namespace reeb {

std::size_t pick(Rng& rng, std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng() % n); }

std::vector<Move> candidate_slides(const OrientedMultigraph& g) {
  std::vector<Move> out;
  for (const auto& e : g.edges()) {
    const auto& w = e.src;
    const auto& v = e.dst;
    if (w == v || g.degree(w) != 3 || g.degree(v) != 3) continue;
    auto joins = [&](const Edge& x) {
      return (x.src == w && x.dst == v) || (x.src == v && x.dst == w);
    };
    if (std::count_if(g.edges().begin(), g.edges().end(), joins) != 1) continue;
    if (g.outdegree(w) == 2) {
      if (g.outdegree(v) == 2) {
        for (const auto& k : g.out_edges(v)) out.push_back(SlideOutOut{v, w, k});
      } else {
        out.push_back(SlideInOverOut{v, w});
      }
    }
    // e is v' -> w' for the in-patterns with v' = src, w' = dst.
    if (g.indegree(v) == 2) {
      if (g.indegree(w) == 2) {
        for (const auto& k : g.in_edges(w)) out.push_back(SlideInIn{w, v, k});
      } else {
        out.push_back(SlideOutOverIn{w, v});
      }
    }
  }
  return out;
}

OrientedMultigraph caterpillar(std::size_t splits, std::size_t merges) {
  OrientedMultigraph g;
  std::vector<std::string> spine{"b"};
  for (std::size_t k = 1; k <= splits; ++k) spine.push_back("s" + std::to_string(k));
  for (std::size_t k = 1; k <= merges; ++k) spine.push_back("m" + std::to_string(k));
  spine.push_back("t");
  for (const auto& v : spine) g.add_vertex(v);
  for (std::size_t k = 0; k + 1 < spine.size(); ++k) {
    g.add_edge("f" + std::to_string(k + 1), spine[k], spine[k + 1]);
  }
  for (std::size_t k = 1; k <= splits; ++k) {
    g.add_vertex("o" + std::to_string(k));
    g.add_edge("p" + std::to_string(k), "s" + std::to_string(k), "o" + std::to_string(k));
  }
  for (std::size_t k = 1; k <= merges; ++k) {
    g.add_vertex("i" + std::to_string(k));
    g.add_edge("q" + std::to_string(k), "i" + std::to_string(k), "m" + std::to_string(k));
  }
  return g;
}

OrientedMultigraph random_primitive_tree(Rng& rng, std::size_t max_vertices) {
  if (max_vertices < 2) throw PreconditionError("a tree needs at least 2 vertices");
  std::size_t inner = pick(rng, (max_vertices - 2) / 2 + 1);
  std::size_t splits = pick(rng, inner + 1);
  OrientedMultigraph g = caterpillar(splits, inner - splits);
  std::size_t steps = 2 * inner + pick(rng, 4 * inner + 1);
  for (std::size_t k = 0; k < steps; ++k) {
    auto moves = candidate_slides(g);
    if (moves.empty()) break;
    try {
      OrientedMultigraph next = apply_move(g, moves[pick(rng, moves.size())]);
      if (is_primitive(next)) g = std::move(next);
    } catch (const PreconditionError&) {
    }
  }
  return rename_randomly(rng, g).graph;
}

OrientedMultigraph random_good_graph(Rng& rng, std::size_t r, std::size_t max_slots) {
  OrientedMultigraph g;
  if (rng() % 2 == 0) {
    g = canonical_graph(r).graph;
  } else {
    g = initial_graph(r, pick(rng, 2), pick(rng, 2)).graph;
  }
  auto slots = [](const OrientedMultigraph& h) {
    std::size_t n = 0;
    for (const auto& v : h.vertices()) n += h.degree(v) == 3 ? 2 : 0;
    return n;
  };
  std::size_t steps = 5 + pick(rng, 20);
  for (std::size_t k = 0; k < steps; ++k) {
    std::size_t kind = pick(rng, 3);
    try {
      if (kind == 0 && slots(g) + 2 <= max_slots) {
        const auto& e = g.edges()[pick(rng, g.edge_count())];
        g = apply_move(g, LeafBirth{e.id, rng() % 2 ? LeafDirection::sink : LeafDirection::source});
      } else if (kind == 1) {
        auto moves = candidate_slides(g);
        if (!moves.empty()) g = apply_move(g, moves[pick(rng, moves.size())]);
      } else {
        std::vector<LeafDeath> deaths;
        for (const auto& v : g.vertices()) {
          if (g.degree(v) != 1) continue;
          const auto& e = g.indegree(v) ? g.edge(g.in_edges(v)[0]) : g.edge(g.out_edges(v)[0]);
          deaths.push_back({e.src == v ? e.dst : e.src, v});
        }
        if (!deaths.empty()) g = apply_move(g, deaths[pick(rng, deaths.size())]);
      }
    } catch (const PreconditionError&) {
    }
  }
  while (slots(g) > max_slots) {
    bool removed = false;
    for (const auto& v : g.vertices()) {
      if (g.degree(v) != 1) continue;
      const auto& e = g.indegree(v) ? g.edge(g.in_edges(v)[0]) : g.edge(g.out_edges(v)[0]);
      try {
        g = apply_move(g, LeafDeath{e.src == v ? e.dst : e.src, v});
        removed = true;
        break;
      } catch (const PreconditionError&) {
      }
    }
    if (!removed) throw PreconditionError("cannot shrink graph below the slot limit");
  }
  return rename_randomly(rng, g).graph;
}

SpanningTreeChoice random_spanning_tree(Rng& rng, const OrientedMultigraph& g) {
  std::vector<std::size_t> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t k = order.size(); k > 1; --k) std::swap(order[k - 1], order[pick(rng, k)]);
  std::map<std::string, std::string> parent;
  for (const auto& v : g.vertices()) parent[v] = v;
  auto find = [&](std::string v) {
    while (parent[v] != v) v = parent[v];
    return v;
  };
  SpanningTreeChoice t;
  for (auto k : order) {
    const auto& e = g.edges()[k];
    auto a = find(e.src);
    auto b = find(e.dst);
    if (a != b) {
      parent[a] = b;
      t.tree_edges.insert(e.id);
    } else {
      t.cotree_edges.push_back(e.id);
    }
  }
  validate_tree_choice(g, t);
  return t;
}

OrientedMultigraph subdivide(Rng& rng, const OrientedMultigraph& g, std::size_t k) {
  OrientedMultigraph out = g;
  for (std::size_t n = 0; n < k; ++n) {
    Edge e = out.edges()[pick(rng, out.edge_count())];
    std::string mid = out.fresh_vertex_id("d");
    out.add_vertex(mid);
    out.set_endpoints(e.id, e.src, mid);
    out.add_edge(out.fresh_edge_id("y"), mid, e.dst);
  }
  return out;
}

Renaming rename_randomly(Rng& rng, const OrientedMultigraph& g, const std::string& vprefix,
                         const std::string& eprefix) {
  auto shuffled = [&](std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (std::size_t k = n; k > 1; --k) std::swap(p[k - 1], p[pick(rng, k)]);
    return p;
  };
  Renaming r;
  auto pv = shuffled(g.vertex_count());
  auto pe = shuffled(g.edge_count());
  for (std::size_t k = 0; k < g.vertex_count(); ++k) {
    r.vertices.emplace(g.vertices()[k], vprefix + std::to_string(pv[k]));
  }
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    r.edges.emplace(g.edges()[k].id, eprefix + std::to_string(pe[k]));
  }
  for (const auto& v : g.vertices()) r.graph.add_vertex(r.vertices.at(v));
  for (const auto& e : g.edges()) {
    r.graph.add_edge(r.edges.at(e.id), r.vertices.at(e.src), r.vertices.at(e.dst));
  }
  return r;
}

}  // namespace reeb
