#include "reeb/signs.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "reeb/error.hpp"
#include "reeb/gf2.hpp"

namespace reeb {

namespace {

void require_one_three(const OrientedMultigraph& g) {
  for (const auto& v : g.vertices()) {
    std::size_t d = g.degree(v);
    if (d != 1 && d != 3) {
      throw PreconditionError("vertex " + v + " has degree " + std::to_string(d) +
                              "; sign classes need degrees in {1, 3}");
    }
  }
}

std::vector<Gf2Vector> flip_vectors(const std::vector<SignSlot>& slots,
                                    const std::vector<std::string>& edges) {
  std::vector<Gf2Vector> out;
  for (const auto& e : edges) {
    Gf2Vector v(slots.size());
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (slots[k].in_edge == e || slots[k].out_edge == e) v.set(k);
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::string> edge_ids(const OrientedMultigraph& g) {
  std::vector<std::string> ids;
  for (const auto& e : g.edges()) ids.push_back(e.id);
  return ids;
}

Gf2Vector as_vector(const SignAssignment& a) { return to_gf2(a.minus); }

void check_same_host(const SignAssignment& a, const SignAssignment& b) {
  if (a.host != b.host || a.slots != b.slots) {
    throw PreconditionError("sign assignments live on different host graphs");
  }
}

}  // namespace

std::vector<SignSlot> sign_slots(const OrientedMultigraph& g) {
  if (max_degree(g) > 3) throw PreconditionError("sign slots need degrees <= 3");
  auto report = validate_good_orientation(g);
  if (!report.ok) throw PreconditionError("graph is not good-oriented: " + report.violations.front());
  std::vector<std::string> vs = g.vertices();
  std::sort(vs.begin(), vs.end());
  std::vector<SignSlot> out;
  for (const auto& v : vs) {
    if (g.degree(v) != 3) continue;
    auto ins = g.in_edges(v);
    auto outs = g.out_edges(v);
    std::sort(ins.begin(), ins.end());
    std::sort(outs.begin(), outs.end());
    for (const auto& i : ins) {
      for (const auto& o : outs) out.push_back({v, i, o});
    }
  }
  return out;
}

SignAssignment all_plus(const OrientedMultigraph& g) {
  SignAssignment a;
  a.host = fingerprint(g);
  a.slots = sign_slots(g);
  a.edges = edge_ids(g);
  a.minus.assign(a.slots.size(), false);
  return a;
}

SignAssignment flip(const SignAssignment& a, const std::string& e) {
  if (std::find(a.edges.begin(), a.edges.end(), e) == a.edges.end()) {
    throw PreconditionError("unknown edge '" + e + "'");
  }
  SignAssignment out = a;
  for (std::size_t k = 0; k < out.slots.size(); ++k) {
    if (out.slots[k].in_edge == e || out.slots[k].out_edge == e) out.minus[k] = !out.minus[k];
  }
  return out;
}

bool are_flip_equivalent(const SignAssignment& a, const SignAssignment& b) {
  check_same_host(a, b);
  Gf2Basis basis(a.slots.size());
  for (const auto& v : flip_vectors(a.slots, a.edges)) basis.insert(v);
  return basis.contains(as_vector(a) ^ as_vector(b));
}

bool is_orientable_configuration(const SignAssignment& a) {
  SignAssignment plus = a;
  plus.minus.assign(a.slots.size(), false);
  return are_flip_equivalent(a, plus);
}

std::size_t flip_rank(const OrientedMultigraph& g) {
  auto slots = sign_slots(g);
  return gf2_rank(flip_vectors(slots, edge_ids(g)), slots.size());
}

std::uint64_t class_count(const OrientedMultigraph& g) {
  require_one_three(g);
  std::size_t free_dims = sign_slots(g).size() - flip_rank(g);
  if (free_dims >= 64) throw PreconditionError("class count does not fit in 64 bits");
  return std::uint64_t{1} << free_dims;
}

SignAssignment canonicalize(const SignAssignment& a, const OrientedMultigraph& host) {
  require_one_three(host);
  if (fingerprint(host) != a.host) throw PreconditionError("assignment does not belong to this graph");
  Gf2Basis basis(a.slots.size());
  for (const auto& v : flip_vectors(a.slots, a.edges)) basis.insert(v);
  Gf2Vector r = basis.reduce(as_vector(a));
  SignAssignment out = a;
  for (std::size_t k = 0; k < out.minus.size(); ++k) out.minus[k] = r.test(k);
  return out;
}

std::vector<SignAssignment> enumerate_classes_bruteforce(const OrientedMultigraph& g) {
  SignAssignment base = all_plus(g);
  const std::size_t s = base.slots.size();
  if (s > 20) throw PreconditionError("brute force enumeration limited to 20 slots");

  // Slot k sits at bit s-1-k so numeric order is lexicographic order.
  std::vector<std::uint32_t> gens;
  for (const auto& e : base.edges) {
    std::uint32_t m = 0;
    for (std::size_t k = 0; k < s; ++k) {
      if (base.slots[k].in_edge == e || base.slots[k].out_edge == e) m |= 1u << (s - 1 - k);
    }
    if (m) gens.push_back(m);
  }

  const std::uint32_t total = 1u << s;
  std::vector<bool> seen(total, false);
  std::vector<SignAssignment> reps;
  for (std::uint32_t start = 0; start < total; ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    std::deque<std::uint32_t> q{start};
    while (!q.empty()) {
      auto x = q.front();
      q.pop_front();
      for (auto m : gens) {
        auto y = x ^ m;
        if (!seen[y]) {
          seen[y] = true;
          q.push_back(y);
        }
      }
    }
    SignAssignment rep = base;
    for (std::size_t k = 0; k < s; ++k) rep.minus[k] = (start >> (s - 1 - k)) & 1u;
    reps.push_back(std::move(rep));
  }
  return reps;
}

SignAssignment parse_signs(const std::string& text, const OrientedMultigraph& g) {
  SignAssignment a = all_plus(g);
  std::vector<bool> given(a.slots.size(), false);
  std::istringstream in(text);
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
    if (tok.size() != 5 || tok[0] != "sign" || (tok[4] != "+" && tok[4] != "-")) {
      throw ParseError(where + "expected 'sign <vertex> <in-edge> <out-edge> <+|->'");
    }
    SignSlot slot{tok[1], tok[2], tok[3]};
    auto it = std::find(a.slots.begin(), a.slots.end(), slot);
    if (it == a.slots.end()) throw ParseError(where + "no such sign slot");
    auto k = static_cast<std::size_t>(it - a.slots.begin());
    if (given[k]) throw ParseError(where + "slot assigned twice");
    given[k] = true;
    a.minus[k] = tok[4] == "-";
  }
  return a;
}

std::string to_text(const SignAssignment& a) {
  std::ostringstream out;
  for (std::size_t k = 0; k < a.slots.size(); ++k) {
    const auto& s = a.slots[k];
    out << "sign " << s.vertex << ' ' << s.in_edge << ' ' << s.out_edge << ' '
        << (a.minus[k] ? '-' : '+') << '\n';
  }
  return out.str();
}

}  // namespace reeb
