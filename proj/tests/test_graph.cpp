#include <doctest.h>

#include "oracles.hpp"
#include "reeb/error.hpp"
#include "reeb/graph.hpp"
#include "reeb/graph_io.hpp"

using namespace reeb;

namespace {

OrientedMultigraph from_text(const std::string& text) { return parse_graph_text(text).graph; }

bool mentions(const std::vector<std::string>& lines, const std::string& needle) {
  for (const auto& l : lines) {
    if (l.find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("good orientation on the initial graph and simple violations") {
  CHECK(validate_good_orientation(initial_graph(2).graph).ok);

  auto cycle = from_text("vertex a\nvertex b\nedge x a b\nedge y b a\n");
  auto rep = validate_good_orientation(cycle);
  CHECK_FALSE(rep.ok);
  CHECK(mentions(rep.violations, "directed cycle"));

  auto valley = from_text("edge x u v\nedge y w v\n");
  rep = validate_good_orientation(valley);
  CHECK_FALSE(rep.ok);
  CHECK(mentions(rep.violations, "vertex v"));

  auto loop = from_text("edge x a b\nedge l b b\nedge y b c\n");
  rep = validate_good_orientation(loop);
  CHECK_FALSE(rep.ok);
  CHECK(mentions(rep.violations, "self-loop"));
}

TEST_CASE("cycle rank") {
  CHECK(cycle_rank(initial_graph(3).graph) == 3);
  CHECK(initial_graph(3).graph.edge_count() == 10);
  CHECK(initial_graph(3).graph.vertex_count() == 8);

  auto tree = from_text("edge a 1 2\nedge b 2 3\nedge c 2 4\nedge d 4 5\nedge e 4 6\nedge f 6 7\n");
  CHECK(tree.vertex_count() == 7);
  CHECK(cycle_rank(tree) == 0);

  auto triangles = from_text(
      "edge a 1 2\nedge b 2 3\nedge c 1 3\n"
      "edge d 4 5\nedge e 5 6\nedge f 4 6\n");
  CHECK(cycle_rank(triangles) == 2);
  CHECK(component_count(triangles) == 2);

  for (std::size_t r = 0; r <= 8; ++r) {
    for (std::size_t a = 0; a <= 4; ++a) {
      for (std::size_t b = 0; b <= 4; ++b) {
        auto g = initial_graph(r, a, b).graph;
        REQUIRE(cycle_rank(g) == r);
        REQUIRE(oracle::betti(g) == r);
        REQUIRE(oracle::good_orientation(g));
      }
    }
  }
}

TEST_CASE("degree census") {
  auto c = degree_census(initial_graph(2).graph);
  CHECK(c == DegreeCensus{1, 1, 0, 4, 0, 0});

  c = degree_census(from_text("edge x u v\n"));
  CHECK(c == DegreeCensus{1, 1, 0, 0, 0, 0});

  c = degree_census(from_text("edge a c l1\nedge b c l2\nedge d c l3\nedge e c l4\n"));
  CHECK(c.higher == 1);
  CHECK(c.higher_degree_sum == 4);
  CHECK(c.delta1_out == 4);
  CHECK(c.delta1_in == 0);
}

TEST_CASE("admissibility") {
  auto g2 = initial_graph(2).graph;
  CHECK(is_admissible(g2, 1, 1));
  CHECK_FALSE(is_admissible(g2, 2, 1));

  auto fig1b = initial_graph(2, 3, 2).graph;
  CHECK(is_admissible(fig1b, 4, 3));
  CHECK_FALSE(is_admissible(fig1b, 5, 3));

  auto g121 = initial_graph(1, 2, 1).graph;
  CHECK(cycle_rank(g121) == 1);
  CHECK(is_admissible(g121, 2, 1));
  auto c = degree_census(g121);
  CHECK(c.delta1_in == 3);
  CHECK(c.delta1_out == 2);

  auto bad = from_text("edge x a b\nedge y b a\n");
  CHECK_THROWS_AS(is_admissible(bad, 0, 0), PreconditionError);
}

TEST_CASE("initial graph shapes") {
  auto g = initial_graph(2);
  CHECK(g.graph.vertex_count() == 6);
  CHECK(g.graph.edge_count() == 7);
  CHECK(g.tree.cotree_edges == std::vector<std::string>{"e1", "e2"});
  CHECK_NOTHROW(validate_tree_choice(g.graph, g.tree));
  CHECK(is_primitive(g.graph));

  auto g0 = initial_graph(0);
  CHECK(g0.graph.vertex_count() == 2);
  CHECK(g0.graph.edge_count() == 1);
  CHECK(cycle_rank(g0.graph) == 0);

  for (std::size_t r = 0; r <= 5; ++r) {
    auto c = canonical_graph(r);
    CHECK(cycle_rank(c.graph) == r);
    CHECK(oracle::good_orientation(c.graph));
    CHECK_NOTHROW(validate_tree_choice(c.graph, c.tree));
  }
}

TEST_CASE("cutting along the cotree") {
  auto g1 = initial_graph(1);
  auto cut = cut_along_cotree(g1.graph, g1.tree);
  CHECK(cut.tree.vertex_count() == 6);
  CHECK(cycle_rank(cut.tree) == 0);
  CHECK(cut.labels.size() == 2);
  std::set<std::string> names;
  for (const auto& [v, l] : cut.labels) names.insert(to_string(l));
  CHECK(names == std::set<std::string>{"c1-", "c1+"});
  for (const auto& [v, l] : cut.labels) {
    if (l.side == PendantSide::minus) {
      CHECK(cut.tree.outdegree(v) == 0);
    } else {
      CHECK(cut.tree.indegree(v) == 0);
    }
  }

  auto g2 = initial_graph(2);
  auto cut2 = cut_along_cotree(g2.graph, g2.tree);
  CHECK(cut2.tree.vertex_count() == 10);
  CHECK(cut2.labels.size() == 4);
  CHECK(has_good_orientation(cut2.tree));

  auto tree = from_text("edge a 1 2\nedge b 2 3\nedge c 2 4\n");
  auto same = cut_along_cotree(tree, default_spanning_tree(tree));
  CHECK(same.tree == tree);
  CHECK(same.labels.empty());

  auto glued = glue_pendants(cut2);
  CHECK(oracle::labeled_isomorphism(glued.graph, g2.graph, {{"e1", "e1"}, {"e2", "e2"}}));
}

TEST_CASE("cutting changes sizes by the cotree size") {
  Rng rng(7);
  for (int k = 0; k < 40; ++k) {
    auto g = random_good_graph(rng, pick(rng, 4), 20);
    auto t = random_spanning_tree(rng, g);
    auto cut = cut_along_cotree(g, t);
    std::size_t r = t.cotree_edges.size();
    CHECK(r == oracle::betti(g));
    CHECK(cut.tree.vertex_count() == g.vertex_count() + 2 * r);
    CHECK(cut.tree.edge_count() == g.edge_count() + r);
    CHECK(oracle::betti(cut.tree) == 0);
    CHECK(oracle::good_orientation(cut.tree));
  }
}

TEST_CASE("quotient epimorphism") {
  auto g = initial_graph(2);
  // Spine: min -f1-> s1 -f2-> s2 -f3-> m2 -f4-> m1 -f5-> max.
  auto word = [&](const std::string& path) {
    return to_string(quotient_epimorphism(g.graph, g.tree, parse_edge_path(path)));
  };
  CHECK(word("f2 f2'") == "");
  CHECK(word("e2 f3'") == "a2");
  CHECK(word("e1 f4' f3' e2 f4 e1'") == "a1 a2 a1'");
  CHECK(word("e1 f4' f3' f2' e1 f4' f3' f2' f2 f3 f4 e1'") == "a1");
  CHECK_THROWS_AS(word("e1 f4'"), PreconditionError);
  CHECK_THROWS_AS(word("e1 f2"), PreconditionError);

  auto u = parse_edge_path("e1 f4' f3' f2'");
  auto v = parse_edge_path("f2 e2 f3' f2'");
  auto uv = u;
  uv.insert(uv.end(), v.begin(), v.end());
  CHECK(quotient_epimorphism(g.graph, g.tree, uv) ==
        quotient_epimorphism(g.graph, g.tree, u) * quotient_epimorphism(g.graph, g.tree, v));
}

TEST_CASE("good orientation forces leaves at extrema") {
  Rng rng(11);
  for (int k = 0; k < 40; ++k) {
    auto g = random_good_graph(rng, pick(rng, 4), 24);
    REQUIRE(has_good_orientation(g) == oracle::good_orientation(g));
    for (const auto& v : g.vertices()) {
      if (g.indegree(v) == 0 || g.outdegree(v) == 0) CHECK(g.degree(v) == 1);
    }
    auto c = degree_census(g);
    CHECK(2 * g.edge_count() ==
          c.delta1_in + c.delta1_out + 2 * c.delta2 + 3 * c.delta3 + c.higher_degree_sum);
  }
}

TEST_CASE("graph text format") {
  auto g = initial_graph(2, 1, 1);
  std::string text = to_text(g.graph, &g.tree);
  auto loaded = parse_graph_text(text);
  CHECK(loaded.has_tree);
  CHECK(loaded.graph == g.graph);
  CHECK(loaded.tree == g.tree);
  CHECK(fingerprint(loaded.graph) == fingerprint(g.graph));
  CHECK(fingerprint(loaded.graph).size() == 16);

  auto partial = parse_graph_text("edge a x y\nedge b x y\ncotree b 1\n");
  CHECK(partial.tree.tree_edges == std::set<std::string>{"a"});

  CHECK_THROWS_AS(parse_graph_text("edge a x\n"), ParseError);
  CHECK_THROWS_AS(parse_graph_text("edge a x y\nedge a y z\n"), std::exception);
  CHECK_THROWS_AS(parse_graph_text("bogus\n"), ParseError);
  CHECK_THROWS_AS(parse_graph_text("edge a x y\nedge b x y\ncotree b 2\n"), std::exception);
  CHECK(to_dot(g.graph).find("digraph") != std::string::npos);
}

TEST_CASE("isomorphism search agrees with the oracle") {
  Rng rng(5);
  for (int k = 0; k < 25; ++k) {
    auto g = random_good_graph(rng, pick(rng, 3), 16);
    auto renamed = rename_randomly(rng, g, "p", "q");
    auto found = find_isomorphism(g, renamed.graph);
    REQUIRE(found.has_value());
    CHECK(oracle::labeled_isomorphism(g, renamed.graph, {}).has_value());
    for (const auto& e : g.edges()) {
      CHECK(renamed.graph.edge(renamed.edges.at(e.id)).src == renamed.vertices.at(e.src));
    }
  }
  auto a = from_text("edge x 1 2\nedge y 2 3\n");
  auto b = from_text("edge x 1 2\nedge y 3 2\n");
  CHECK_FALSE(find_isomorphism(a, b).has_value());
  CHECK_FALSE(oracle::labeled_isomorphism(a, b, {}).has_value());
}
