#include "reeb/freegroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <tuple>
#include <sstream>

#include "reeb/error.hpp"

namespace reeb {

namespace {

void check_letters(const std::vector<int>& letters, std::size_t rank) {
  for (int x : letters) {
    if (x == 0 || static_cast<std::size_t>(std::abs(x)) > rank) {
      throw PreconditionError("generator index " + std::to_string(std::abs(x)) +
                              " out of range for rank " + std::to_string(rank));
    }
  }
}

// Appends `x` to an already reduced sequence.
void push_reduced(std::vector<int>& out, int x) {
  if (!out.empty() && out.back() == -x) {
    out.pop_back();
  } else {
    out.push_back(x);
  }
}

}  // namespace

Word::Word(std::size_t rank, const std::vector<int>& letters) : rank_(rank) {
  check_letters(letters, rank);
  letters_.reserve(letters.size());
  for (int x : letters) push_reduced(letters_, x);
}

Word Word::inverse() const {
  std::vector<int> inv(letters_.rbegin(), letters_.rend());
  for (int& x : inv) x = -x;
  Word w(rank_);
  w.letters_ = std::move(inv);
  return w;
}

std::vector<bool> Word::parity_vector() const {
  std::vector<bool> v(rank_, false);
  for (int x : letters_) {
    auto k = static_cast<std::size_t>(std::abs(x)) - 1;
    v[k] = !v[k];
  }
  return v;
}

Word reduce(const std::vector<int>& letters, std::size_t rank) { return Word(rank, letters); }

Word operator*(const Word& a, const Word& b) {
  if (a.rank() != b.rank()) throw PreconditionError("rank mismatch in word product");
  std::vector<int> out = a.letters();
  for (int x : b.letters()) push_reduced(out, x);
  return Word(a.rank(), out);
}

Word parse_word(const std::string& text, std::size_t rank) {
  std::istringstream in(text);
  std::string tok;
  std::vector<int> letters;
  while (in >> tok) {
    bool inverse = false;
    if (tok.back() == '\'') {
      inverse = true;
      tok.pop_back();
    }
    if (tok.size() < 2 || tok[0] != 'a' ||
        !std::all_of(tok.begin() + 1, tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw ParseError("malformed word token '" + tok + "'");
    }
    long k = std::stol(tok.substr(1));
    if (k < 1 || static_cast<std::size_t>(k) > rank) {
      throw ParseError("generator a" + std::to_string(k) + " out of range for rank " +
                       std::to_string(rank));
    }
    letters.push_back(inverse ? -static_cast<int>(k) : static_cast<int>(k));
  }
  return Word(rank, letters);
}

std::string to_string(const Word& w) {
  std::string out;
  for (int x : w.letters()) {
    if (!out.empty()) out += ' ';
    out += 'a' + std::to_string(std::abs(x));
    if (x < 0) out += '\'';
  }
  return out;
}

void validate(const NielsenMove& m) {
  auto in_range = [&](std::size_t k) { return k >= 1 && k <= m.rank; };
  if (const auto* p = std::get_if<Permute>(&m.op)) {
    if (p->images.size() != m.rank) throw PreconditionError("permutation length != rank");
    std::vector<bool> seen(m.rank + 1, false);
    for (auto k : p->images) {
      if (!in_range(k) || seen[k]) throw PreconditionError("not a permutation of 1..r");
      seen[k] = true;
    }
  } else if (const auto* inv = std::get_if<Invert>(&m.op)) {
    if (!in_range(inv->i)) throw PreconditionError("inversion index out of range");
  } else {
    const auto& rm = std::get<RightMultiply>(m.op);
    if (!in_range(rm.i) || !in_range(rm.j)) throw PreconditionError("index out of range");
    if (rm.i == rm.j) throw PreconditionError("right multiplication needs i != j");
  }
}

std::vector<NielsenMove> inverse_sequence(const NielsenMove& m) {
  validate(m);
  if (const auto* p = std::get_if<Permute>(&m.op)) {
    Permute q{std::vector<std::size_t>(m.rank)};
    for (std::size_t k = 0; k < m.rank; ++k) q.images[p->images[k] - 1] = k + 1;
    return {{m.rank, q}};
  }
  if (std::holds_alternative<Invert>(m.op)) return {m};
  // a_i -> a_i a_j^-1 is inv(j), rmul(i, j), inv(j) applied in turn.
  const auto& rm = std::get<RightMultiply>(m.op);
  NielsenMove flip{m.rank, Invert{rm.j}};
  return {flip, m, flip};
}

namespace {

Word image_of_generator(const NielsenMove& m, std::size_t k) {
  if (const auto* p = std::get_if<Permute>(&m.op)) {
    return Word(m.rank, {static_cast<int>(p->images[k - 1])});
  }
  if (const auto* inv = std::get_if<Invert>(&m.op)) {
    int x = static_cast<int>(k);
    return Word(m.rank, {inv->i == k ? -x : x});
  }
  const auto& rm = std::get<RightMultiply>(m.op);
  if (rm.i == k) return Word(m.rank, {static_cast<int>(rm.i), static_cast<int>(rm.j)});
  return Word(m.rank, {static_cast<int>(k)});
}

}  // namespace

Word apply_nielsen(const NielsenMove& m, const Word& w) {
  validate(m);
  if (w.rank() != m.rank) {
    throw PreconditionError("move rank " + std::to_string(m.rank) + " != word rank " +
                            std::to_string(w.rank()));
  }
  Word out(m.rank);
  for (int x : w.letters()) {
    Word img = image_of_generator(m, static_cast<std::size_t>(std::abs(x)));
    out = out * (x > 0 ? img : img.inverse());
  }
  return out;
}

NielsenMove parse_nielsen_move(const std::string& text, std::size_t rank) {
  std::istringstream in(text);
  std::string kind;
  in >> kind;
  std::vector<std::size_t> args;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      long v = std::stol(tok, &used);
      if (used != tok.size() || v < 0) throw ParseError("bad index");
      args.push_back(static_cast<std::size_t>(v));
    } catch (const std::logic_error&) {
      throw ParseError("malformed Nielsen move argument '" + tok + "'");
    }
  }
  NielsenMove m;
  m.rank = rank;
  if (kind == "perm") {
    m.op = Permute{args};
  } else if (kind == "inv" && args.size() == 1) {
    m.op = Invert{args[0]};
  } else if (kind == "rmul" && args.size() == 2) {
    m.op = RightMultiply{args[0], args[1]};
  } else {
    throw ParseError("malformed Nielsen move '" + text + "'");
  }
  validate(m);
  return m;
}

std::string to_string(const NielsenMove& m) {
  std::ostringstream out;
  if (const auto* p = std::get_if<Permute>(&m.op)) {
    out << "perm";
    for (auto k : p->images) out << ' ' << k;
  } else if (const auto* inv = std::get_if<Invert>(&m.op)) {
    out << "inv " << inv->i;
  } else {
    const auto& rm = std::get<RightMultiply>(m.op);
    out << "rmul " << rm.i << ' ' << rm.j;
  }
  return out.str();
}

bool FoldedGraph::has_foldable_pair() const {
  // key: (vertex, generator, outgoing?)
  std::vector<std::vector<std::size_t>> out_count(vertex_count), in_count(vertex_count);
  std::size_t max_gen = 0;
  for (const auto& e : edges) max_gen = std::max(max_gen, e.generator);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    out_count[v].assign(max_gen + 1, 0);
    in_count[v].assign(max_gen + 1, 0);
  }
  for (const auto& e : edges) {
    if (++out_count[e.from][e.generator] > 1) return true;
    if (++in_count[e.to][e.generator] > 1) return true;
  }
  return false;
}

FoldedGraph fold(const std::vector<Word>& generators, std::size_t rank) {
  // Build the wedge of loops.
  std::size_t n = 1;
  std::vector<FoldedGraph::LabeledEdge> edges;
  for (const auto& w : generators) {
    if (w.rank() != rank) throw PreconditionError("word rank does not match fold rank");
    const auto& ls = w.letters();
    std::size_t prev = 0;
    for (std::size_t k = 0; k < ls.size(); ++k) {
      std::size_t next = (k + 1 == ls.size()) ? 0 : n++;
      auto gen = static_cast<std::size_t>(std::abs(ls[k]));
      if (ls[k] > 0) {
        edges.push_back({prev, next, gen});
      } else {
        edges.push_back({next, prev, gen});
      }
      prev = next;
    }
  }

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };

  // Scan-and-merge until no vertex carries two equally labeled edges in the
  // same direction.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& e : edges) {
      e.from = find(e.from);
      e.to = find(e.to);
    }
    std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
      return std::tie(a.from, a.to, a.generator) < std::tie(b.from, b.to, b.generator);
    });
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> out_seen, in_seen;
    for (const auto& e : edges) {
      auto [oit, onew] = out_seen.emplace(std::make_pair(e.from, e.generator), e.to);
      if (!onew && find(oit->second) != find(e.to)) {
        parent[find(e.to)] = find(oit->second);
        changed = true;
      }
      auto [iit, inew] = in_seen.emplace(std::make_pair(e.to, e.generator), e.from);
      if (!inew && find(iit->second) != find(e.from)) {
        parent[find(e.from)] = find(iit->second);
        changed = true;
      }
    }
  }

  // Compact vertex numbering, basepoint first.
  std::map<std::size_t, std::size_t> renumber;
  renumber[find(0)] = 0;
  for (const auto& e : edges) {
    renumber.emplace(e.from, renumber.size());
    renumber.emplace(e.to, renumber.size());
  }
  FoldedGraph g;
  g.vertex_count = renumber.size();
  for (const auto& e : edges) g.edges.push_back({renumber[e.from], renumber[e.to], e.generator});
  return g;
}

bool generates_whole_group(const std::vector<Word>& generators, std::size_t rank) {
  FoldedGraph g = fold(generators, rank);
  if (g.vertex_count != 1 || g.edges.size() != rank) return false;
  std::vector<bool> seen(rank + 1, false);
  for (const auto& e : g.edges) seen[e.generator] = true;
  return std::count(seen.begin() + 1, seen.end(), true) == static_cast<long>(rank);
}

}  // namespace reeb
