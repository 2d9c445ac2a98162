#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "reeb/epiclass.hpp"
#include "reeb/error.hpp"
#include "reeb/generators.hpp"
#include "reeb/graph_io.hpp"
#include "reeb/rewrite.hpp"
#include "reeb/signs.hpp"
#include "reeb/surfaces.hpp"

namespace reeb::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Result {
  std::string verdict = "ok";
  Json payload = Json::object();
  std::vector<std::string> warnings;
  std::optional<OrientedMultigraph> graph;  // for --format dot
  int code = 0;
};

struct Options {
  std::string graph;
  std::string surface;
  std::string hom;
  std::string words;
  std::vector<std::string> moves;
  std::string format = "json";
  std::string path;
  std::string signs;
  std::string script;
  std::string census;
  std::string action;
  std::size_t rank = 0;
  std::size_t n_minus = 0;
  std::size_t n_plus = 0;
  std::size_t max_len = 2;
  std::size_t corank = 0;
  std::size_t system = 0;
  std::size_t complement = 0;
  std::size_t count = 20;
  std::uint64_t seed = 0;
  bool canonical = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

struct GraphInput {
  OrientedMultigraph graph;
  SpanningTreeChoice tree;
};

GraphInput load_with_tree(const Options& o, Result& r) {
  LoadedGraph lg = load_graph_file(o.graph);
  if (!lg.has_tree) {
    lg.tree = default_spanning_tree(lg.graph);
    r.warnings.push_back("no tree in graph file; using the default spanning tree");
  }
  return {std::move(lg.graph), std::move(lg.tree)};
}

std::vector<Word> parse_word_list(const std::string& text, std::size_t rank) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (rank == 0) {
    // Infer the rank from the largest generator index.
    for (const auto& p : parts) {
      std::istringstream in(p);
      for (std::string tok; in >> tok;) {
        if (tok.size() >= 2 && tok[0] == 'a') {
          try {
            rank = std::max(rank, static_cast<std::size_t>(std::stoul(tok.substr(1))));
          } catch (const std::logic_error&) {
            throw ParseError("malformed word token '" + tok + "'");
          }
        }
      }
    }
    if (rank == 0) rank = 1;
  }
  std::vector<Word> out;
  for (const auto& p : parts) out.push_back(parse_word(p, rank));
  return out;
}

Json label_json(const LambdaLabel& l) { return to_string(l); }

Json census_json(const DegreeCensus& c) {
  return Json{{"delta1_in", c.delta1_in}, {"delta1_out", c.delta1_out}, {"delta2", c.delta2},
              {"delta3", c.delta3},       {"higher", c.higher}};
}

Json words_json(const std::vector<Word>& ws) {
  Json arr = Json::array();
  for (const auto& w : ws) arr.push_back(to_string(w));
  return arr;
}

Json moves_json(const std::vector<Move>& moves) {
  Json arr = Json::array();
  for (const auto& m : moves) arr.push_back(to_string(m));
  return arr;
}

MorseCensus parse_census(const std::string& text) {
  MorseCensus c;
  char a = 0, b = 0;
  std::istringstream in(text);
  if (!(in >> c.k0 >> a >> c.k1 >> b >> c.k2) || a != ',' || b != ',' || !(in >> std::ws).eof()) {
    throw ParseError("census must be 'k0,k1,k2', got '" + text + "'");
  }
  return c;
}

// ---------------------------------------------------------------------------
// Command handlers

Result cmd_validate(const Options& o) {
  Result r;
  auto g = load_graph_file(o.graph).graph;
  auto rep = validate_good_orientation(g);
  r.payload["ok"] = rep.ok;
  r.payload["violations"] = rep.violations;
  if (!rep.ok) {
    r.verdict = "violations";
    r.code = 2;
  }
  return r;
}

Result cmd_betti(const Options& o) {
  Result r;
  auto g = load_graph_file(o.graph).graph;
  r.payload["cycle_rank"] = cycle_rank(g);
  r.payload["vertices"] = g.vertex_count();
  r.payload["edges"] = g.edge_count();
  r.payload["components"] = component_count(g);
  return r;
}

Result cmd_census(const Options& o, bool admissibility) {
  Result r;
  auto g = load_graph_file(o.graph).graph;
  r.payload = census_json(degree_census(g));
  if (admissibility) r.payload["admissible"] = is_admissible(g, o.n_minus, o.n_plus);
  return r;
}

Result cmd_initial(const Options& o) {
  Result r;
  GraphWithTree gt = o.canonical ? canonical_graph(o.rank) : initial_graph(o.rank, o.n_minus, o.n_plus);
  r.payload["rank"] = o.rank;
  r.payload["vertices"] = gt.graph.vertex_count();
  r.payload["edges"] = gt.graph.edge_count();
  r.payload["cycle_rank"] = cycle_rank(gt.graph);
  r.payload["fingerprint"] = fingerprint(gt.graph);
  r.payload["graph"] = lines_of(to_text(gt.graph, &gt.tree));
  r.graph = gt.graph;
  return r;
}

Result cmd_cut(const Options& o) {
  Result r;
  auto in = load_with_tree(o, r);
  CutTree cut = cut_along_cotree(in.graph, in.tree);
  r.payload["vertices"] = cut.tree.vertex_count();
  r.payload["edges"] = cut.tree.edge_count();
  r.payload["cycle_rank"] = cycle_rank(cut.tree);
  Json labels = Json::object();
  for (const auto& [v, l] : cut.labels) labels[v] = to_string(l);
  r.payload["labels"] = labels;
  r.payload["graph"] = lines_of(to_text(cut.tree));
  r.graph = cut.tree;
  return r;
}

Result cmd_quotient(const Options& o) {
  Result r;
  auto in = load_with_tree(o, r);
  Word w = quotient_epimorphism(in.graph, in.tree, parse_edge_path(o.path));
  r.payload["rank"] = in.tree.cotree_edges.size();
  r.payload["word"] = to_string(w);
  return r;
}

Result cmd_normalize(const Options& o) {
  Result r;
  auto g = load_graph_file(o.graph).graph;
  Normalization n = normalize_to_initial_tree(g);
  r.payload["moves"] = moves_json(n.script.moves);
  r.payload["spine"] = n.spine;
  r.payload["source_fingerprint"] = n.script.source_fingerprint;
  r.payload["target_fingerprint"] = n.script.target_fingerprint;
  r.graph = n.result;
  return r;
}

Result cmd_plan(const Options& o, bool has_surface) {
  Result r;
  auto in = load_with_tree(o, r);
  std::size_t bound = has_surface ? corank(parse_surface(o.surface)) : o.corank;
  RealizationPlan plan = plan_realization(in.graph, in.tree, bound);
  r.verdict = to_string(plan.verdict);
  r.payload["verdict"] = to_string(plan.verdict);
  r.payload["corank_bound"] = bound;
  r.payload["reasons"] = plan.reasons;
  if (plan.verdict == PlanVerdict::feasible) {
    r.payload["rank"] = plan.rank;
    r.payload["n_minus"] = plan.n_minus;
    r.payload["n_plus"] = plan.n_plus;
    r.payload["script"] = lines_of(script_text(plan));
    r.payload["verified"] = verify_plan(plan, in.graph, in.tree);
  }
  if (plan.verdict == PlanVerdict::unsupported) r.code = 2;
  return r;
}

Result cmd_replay(const Options& o) {
  Result r;
  if (o.script.empty() && o.moves.empty()) throw PreconditionError("replay needs --script or --move");
  std::string text = o.script.empty() ? "" : read_file(o.script);
  bool plan_script = false;
  for (const auto& line : lines_of(text)) {
    std::istringstream ls(line.substr(0, line.find('#')));
    std::string first;
    if (ls >> first) {
      plan_script = first == "initial";
      break;
    }
  }
  OrientedMultigraph result;
  if (plan_script) {
    RealizationPlan plan = parse_plan_script(text);
    GraphWithTree built = replay_plan(plan);
    result = built.graph;
    if (!o.graph.empty()) {
      auto in = load_with_tree(o, r);
      r.payload["verified"] = verify_plan(plan, in.graph, in.tree);
    }
    r.payload["graph"] = lines_of(to_text(built.graph, &built.tree));
  } else {
    if (o.graph.empty()) throw PreconditionError("a move list needs --graph");
    std::vector<Move> moves = parse_moves(text);
    for (const auto& m : o.moves) moves.push_back(parse_move(m));
    result = replay(load_graph_file(o.graph).graph, moves);
    r.payload["moves"] = moves_json(moves);
    r.payload["graph"] = lines_of(to_text(result));
  }
  r.payload["good_orientation"] = has_good_orientation(result);
  r.payload["cycle_rank"] = cycle_rank(result);
  r.payload["fingerprint"] = fingerprint(result);
  r.graph = result;
  return r;
}

Result cmd_classify(const Options& o) {
  Result r;
  SurfaceDescriptor s = parse_surface(o.surface);
  auto c = counts(s, o.rank);
  r.payload["surface"] = to_string(s);
  r.payload["rank"] = o.rank;
  r.payload["p"] = c.p;
  r.payload["q"] = c.q;
  Json labels = Json::array();
  std::set<std::string> classes;
  for (const auto& l : reachable_labels(s, o.rank)) {
    labels.push_back(to_string(l));
    classes.insert(equivalence_class(l));
  }
  r.payload["labels"] = labels;
  r.payload["equivalence_classes"] = classes;
  return r;
}

Result cmd_epi_class(const Options& o) {
  Result r;
  Homomorphism h = parse_homomorphism(read_file(o.hom));
  if (!o.surface.empty() && !(parse_surface(o.surface) == h.source)) {
    throw PreconditionError("homomorphism source " + to_string(h.source) + " differs from --surface");
  }
  bool valid = validate(h);
  r.payload["validates"] = valid;
  if (!valid) {
    r.verdict = "not-a-homomorphism";
    r.code = 2;
    return r;
  }
  bool epi = is_epimorphism(h);
  r.payload["epimorphism"] = epi;
  if (!epi) {
    r.verdict = "not-surjective";
    r.code = 2;
    return r;
  }
  LambdaLabel l = lambda_invariant(h);
  r.payload["label"] = label_json(l);
  r.payload["equivalence_class"] = equivalence_class(l);
  return r;
}

Result cmd_epi_enumerate(const Options& o) {
  Result r;
  SurfaceDescriptor s = parse_surface(o.surface);
  Enumeration e = enumerate_epimorphisms(s, o.rank, o.max_len);
  Json labels = Json::array();
  Json witnesses = Json::array();
  for (const auto& [l, h] : e.witnesses) {
    labels.push_back(to_string(l));
    witnesses.push_back(Json{{"label", to_string(l)}, {"homomorphism", to_text(h)}});
  }
  r.payload["labels"] = labels;
  r.payload["witnesses"] = witnesses;
  r.payload["tuples"] = e.tuples;
  r.payload["epimorphisms"] = e.epimorphisms;
  if (o.rank >= 1 && o.rank <= corank(s)) r.payload["q"] = counts(s, o.rank).q;
  return r;
}

Result cmd_reeb_membership(const Options& o) {
  Result r;
  SurfaceDescriptor s = parse_surface(o.surface);
  auto g = load_graph_file(o.graph).graph;
  Homomorphism h = parse_homomorphism(read_file(o.hom));
  r.payload["cycle_rank"] = cycle_rank(g);
  r.payload["member"] = reeb_epi_membership(s, g, h);
  return r;
}

Result cmd_conjugacy(const Options& o) {
  Result r;
  SurfaceDescriptor s = parse_surface(o.surface);
  auto g = load_graph_file(o.graph).graph;
  r.payload["count"] = conjugacy_class_count(s, g);
  return r;
}

Result cmd_nielsen(const Options& o) {
  Result r;
  if (o.moves.size() != 1) throw PreconditionError("nielsen needs exactly one --move");
  if (!o.hom.empty()) {
    Homomorphism h = parse_homomorphism(read_file(o.hom));
    NielsenMove m = parse_nielsen_move(o.moves[0], h.rank);
    Homomorphism out = nielsen_postcompose(m, h);
    r.payload["homomorphism"] = to_text(out);
    r.payload["validates"] = validate(out);
    if (h.source.closed() && validate(h) && is_epimorphism(h)) {
      LambdaLabel before = lambda_invariant(h);
      LambdaLabel after = lambda_invariant(out);
      r.payload["label_before"] = to_string(before);
      r.payload["label_after"] = to_string(after);
      if (!std::holds_alternative<OrientableSurfaceTrivial>(before)) {
        ClassLabel cl = std::holds_alternative<NonorientableComplement>(before)
                            ? ClassLabel{NonorientableComplement{}}
                            : ClassLabel{std::get<OrientableComplement>(before)};
        LambdaLabel moved = widen(h_operation_on_label(h_operation_for(m), cl, h.rank));
        r.payload["transported"] = to_string(moved);
        r.payload["consistent"] = moved == after;
      }
    }
    return r;
  }
  std::size_t rank = o.rank;
  if (rank == 0) {
    // Without --rank, the move's indices count alongside the words' generators.
    std::istringstream in(o.moves[0]);
    std::string tok;
    in >> tok;
    for (std::size_t k; in >> k;) rank = std::max(rank, k);
    rank = std::max(rank, parse_word_list(o.words, 0).front().rank());
  }
  std::vector<Word> words = parse_word_list(o.words, rank);
  NielsenMove m = parse_nielsen_move(o.moves[0], rank);
  std::vector<Word> images;
  for (const auto& w : words) images.push_back(apply_nielsen(m, w));
  r.payload["move"] = to_string(m);
  r.payload["images"] = words_json(images);
  return r;
}

Result cmd_fold(const Options& o) {
  Result r;
  std::vector<Word> words = parse_word_list(o.words, o.rank);
  std::size_t rank = words.front().rank();
  FoldedGraph fg = fold(words, rank);
  Json edges = Json::array();
  for (const auto& e : fg.edges) edges.push_back(Json::array({e.from, e.to, e.generator}));
  r.payload["rank"] = rank;
  r.payload["vertices"] = fg.vertex_count;
  r.payload["edges"] = edges;
  r.payload["generates_whole_group"] = generates_whole_group(words, rank);
  return r;
}

Result cmd_signs(const Options& o) {
  Result r;
  auto g = load_graph_file(o.graph).graph;
  if (o.action == "count") {
    r.payload["slots"] = sign_slots(g).size();
    r.payload["flip_rank"] = flip_rank(g);
    r.payload["cycle_rank"] = cycle_rank(g);
    r.payload["class_count"] = class_count(g);
  } else if (o.action == "canon") {
    SignAssignment a = o.signs.empty() ? all_plus(g) : parse_signs(read_file(o.signs), g);
    r.payload["canonical"] = lines_of(to_text(canonicalize(a, g)));
    r.payload["orientable_configuration"] = is_orientable_configuration(a);
  } else {
    auto reps = enumerate_classes_bruteforce(g);
    Json arr = Json::array();
    for (const auto& a : reps) arr.push_back(lines_of(to_text(a)));
    r.payload["count"] = reps.size();
    r.payload["representatives"] = arr;
  }
  return r;
}

Result cmd_euler(const Options& o) {
  Result r;
  SurfaceDescriptor s = parse_surface(o.surface);
  auto g = load_graph_file(o.graph).graph;
  EulerReport e = check_euler_identity(s, parse_census(o.census), g);
  r.payload["g"] = e.g;
  r.payload["cycle_rank"] = e.betti;
  r.payload["census"] = census_json(e.census);
  r.payload["betti_minus_g"] = e.betti_minus_g;
  r.payload["maximal"] = e.maximal;
  r.payload["identities"] = e.identities;
  return r;
}

Result cmd_rank_formula(const Options& o) {
  Result r;
  r.payload["rank"] = rank_formula(o.system, o.complement);
  return r;
}

// Randomized end-to-end checks of normalization and sign-class counting.
Result cmd_selfcheck(const Options& o) {
  Result r;
  Rng rng(o.seed);
  std::vector<std::string> failures;
  std::size_t trees = 0, graphs = 0;
  for (std::size_t k = 0; k < o.count; ++k) {
    OrientedMultigraph tree = random_primitive_tree(rng, 31);
    Normalization n = normalize_to_initial_tree(tree);
    if (replay(tree, n.script.moves) == n.result && is_primitive(n.result)) {
      ++trees;
    } else {
      failures.push_back("normalization replay mismatch on tree " + fingerprint(tree));
    }
    OrientedMultigraph g = random_good_graph(rng, pick(rng, 4), 20);
    if (class_count(g) == (std::uint64_t{1} << cycle_rank(g)) &&
        enumerate_classes_bruteforce(g).size() == class_count(g)) {
      ++graphs;
    } else {
      failures.push_back("sign class count mismatch on graph " + fingerprint(g));
    }
  }
  r.payload["seed"] = o.seed;
  r.payload["count"] = o.count;
  r.payload["trees_normalized"] = trees;
  r.payload["sign_counts_confirmed"] = graphs;
  r.payload["failures"] = failures;
  if (!failures.empty()) {
    r.verdict = "failures";
    r.code = 2;
  }
  return r;
}

void emit(const std::string& command, const Result& r, const std::string& format,
          std::ostream& out) {
  Json report;
  report["command"] = command;
  report["verdict"] = r.verdict;
  report["payload"] = r.payload;
  report["warnings"] = r.warnings;
  if (format == "text") {
    out << "command: " << command << '\n' << "verdict: " << r.verdict << '\n';
    for (const auto& [k, v] : r.payload.items()) {
      if (v.is_array() && !v.empty() && v.front().is_string()) {
        out << k << ":\n";
        for (const auto& line : v) out << "  " << line.get<std::string>() << '\n';
      } else {
        out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      }
    }
    for (const auto& w : r.warnings) out << "warning: " << w << '\n';
  } else {
    out << report.dump(2) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Reeb graph and surface-group epimorphism toolkit", "reeb_cli"};
  app.require_subcommand(1);
  std::function<Result()> action;
  std::string command;
  std::vector<std::string> graph_commands{"initial", "cut", "normalize", "replay"};

  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--format", o.format, "json, text or dot")
        ->check(CLI::IsMember({"json", "text", "dot"}));
    return sub;
  };
  auto need_graph = [&](CLI::App* sub) { sub->add_option("--graph", o.graph, "graph file")->required(); };

  auto* validate_cmd = add("validate", "check good orientation");
  need_graph(validate_cmd);
  validate_cmd->callback([&] { action = [&] { return cmd_validate(o); }; });

  auto* betti = add("betti", "cycle rank");
  need_graph(betti);
  betti->callback([&] { action = [&] { return cmd_betti(o); }; });

  auto* census = add("census", "degree census and admissibility");
  need_graph(census);
  auto* nm = census->add_option("--n-minus", o.n_minus, "required source leaves");
  auto* np = census->add_option("--n-plus", o.n_plus, "required sink leaves");
  census->callback([&, nm, np] {
    bool adm = nm->count() > 0 || np->count() > 0;
    action = [&, adm] { return cmd_census(o, adm); };
  });

  auto* initial = add("initial", "initial graph with its tree");
  initial->add_option("--rank", o.rank, "cycle rank")->required();
  initial->add_option("--n-minus", o.n_minus, "extra source leaves");
  initial->add_option("--n-plus", o.n_plus, "extra sink leaves");
  initial->add_flag("--canonical", o.canonical, "chain of bigons instead");
  initial->callback([&] { action = [&] { return cmd_initial(o); }; });

  auto* cut = add("cut", "cut along the cotree");
  need_graph(cut);
  cut->callback([&] { action = [&] { return cmd_cut(o); }; });

  auto* quotient = add("quotient", "word of a closed edge path");
  need_graph(quotient);
  quotient->add_option("--path", o.path, "edge ids, trailing ' for backward")->required();
  quotient->callback([&] { action = [&] { return cmd_quotient(o); }; });

  auto* normalize = add("normalize", "slide a primitive tree to spine form");
  need_graph(normalize);
  normalize->callback([&] { action = [&] { return cmd_normalize(o); }; });

  auto* plan = add("plan", "realization script from the initial graph");
  need_graph(plan);
  auto* plan_surface = plan->add_option("--surface", o.surface, "surface descriptor");
  auto* plan_corank = plan->add_option("--corank", o.corank, "explicit corank bound");
  plan_surface->excludes(plan_corank);
  plan->callback([&, plan_surface, plan_corank] {
    if (!plan_surface->count() && !plan_corank->count()) {
      throw CLI::ValidationError("plan needs --surface or --corank");
    }
    bool has_surface = plan_surface->count() > 0;
    action = [&, has_surface] { return cmd_plan(o, has_surface); };
  });

  auto* replay_cmd = add("replay", "replay a move list or realization script");
  replay_cmd->add_option("--graph", o.graph, "graph file");
  replay_cmd->add_option("--script", o.script, "script file");
  replay_cmd->add_option("--move", o.moves, "single move");
  replay_cmd->callback([&] { action = [&] { return cmd_replay(o); }; });

  auto* classify = add("classify", "class counts p and q");
  classify->add_option("--surface", o.surface, "closed surface")->required();
  classify->add_option("--rank", o.rank, "target rank")->required();
  classify->callback([&] { action = [&] { return cmd_classify(o); }; });

  auto* epi = add("epi-class", "lambda invariant of an epimorphism");
  epi->add_option("--hom", o.hom, "homomorphism file")->required();
  epi->add_option("--surface", o.surface, "expected source surface");
  epi->callback([&] { action = [&] { return cmd_epi_class(o); }; });

  auto* enumerate = add("epi-enumerate", "brute-force label census");
  enumerate->add_option("--surface", o.surface, "closed surface")->required();
  enumerate->add_option("--rank", o.rank, "target rank")->required();
  enumerate->add_option("--max-len", o.max_len, "word length bound");
  enumerate->callback([&] { action = [&] { return cmd_epi_enumerate(o); }; });

  auto* member = add("reeb-membership", "Reeb epimorphism membership");
  member->add_option("--surface", o.surface, "closed surface")->required();
  need_graph(member);
  member->add_option("--hom", o.hom, "homomorphism file")->required();
  member->callback([&] { action = [&] { return cmd_reeb_membership(o); }; });

  auto* conj = add("conjugacy-count", "topological conjugacy classes");
  conj->add_option("--surface", o.surface, "closed surface")->required();
  need_graph(conj);
  conj->callback([&] { action = [&] { return cmd_conjugacy(o); }; });

  auto* nielsen = add("nielsen", "apply a Nielsen move");
  nielsen->add_option("--move", o.moves, "perm ... | inv i | rmul i j")->required();
  nielsen->add_option("--words", o.words, "comma separated words");
  nielsen->add_option("--hom", o.hom, "homomorphism file");
  nielsen->add_option("--rank", o.rank, "free group rank");
  nielsen->callback([&] {
    if (o.words.empty() == o.hom.empty()) throw CLI::ValidationError("give exactly one of --words, --hom");
    action = [&] { return cmd_nielsen(o); };
  });

  auto* fold_cmd = add("fold", "Stallings folding of a word tuple");
  fold_cmd->add_option("--words", o.words, "comma separated words")->required();
  fold_cmd->add_option("--rank", o.rank, "free group rank");
  fold_cmd->callback([&] { action = [&] { return cmd_fold(o); }; });

  auto* signs = add("signs", "sign configurations");
  signs->add_option("action", o.action, "count, canon or classes")
      ->required()
      ->check(CLI::IsMember({"count", "canon", "classes"}));
  need_graph(signs);
  signs->add_option("--signs", o.signs, "assignment file");
  signs->callback([&] { action = [&] { return cmd_signs(o); }; });

  auto* euler = add("euler-check", "Euler identity for a Morse census");
  euler->add_option("--surface", o.surface, "closed surface")->required();
  euler->add_option("--census", o.census, "k0,k1,k2")->required();
  need_graph(euler);
  euler->callback([&] { action = [&] { return cmd_euler(o); }; });

  auto* rank = add("rank-formula", "cycle rank from component counts");
  rank->add_option("--system", o.system, "components of the system")->required();
  rank->add_option("--complement", o.complement, "components of the complement")->required();
  rank->callback([&] { action = [&] { return cmd_rank_formula(o); }; });

  auto* self = add("selfcheck", "randomized consistency checks");
  self->add_option("--seed", o.seed, "random seed");
  self->add_option("--count", o.count, "number of samples");
  self->callback([&] { action = [&] { return cmd_selfcheck(o); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  for (const auto* sub : app.get_subcommands()) command = sub->get_name();
  if (command == "signs") command += " " + o.action;

  try {
    Result r = action();
    if (o.format == "dot") {
      if (!r.graph) throw ParseError("--format dot is only available for graph-producing commands");
      out << to_dot(*r.graph);
    } else {
      emit(command, r, o.format, out);
    }
    return r.code;
  } catch (const PreconditionError& e) {
    Result r;
    r.verdict = "precondition-failed";
    r.payload["error"] = e.what();
    emit(command, r, o.format == "dot" ? "json" : o.format, out);
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace reeb::cli
