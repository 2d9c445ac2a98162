#include "reeb/epiclass.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "reeb/error.hpp"
#include "reeb/gf2.hpp"
#include "reeb/signs.hpp"

namespace reeb {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::size_t parse_size(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    long v = std::stol(text, &used);
    if (used != text.size() || v < 0) throw ParseError("");
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw ParseError("malformed " + what + " '" + text + "'");
  }
}

void require_closed(const SurfaceDescriptor& s) {
  validate(s);
  if (!s.closed()) throw PreconditionError("surface " + to_string(s) + " is not closed");
}

bool even_nonorientable(const SurfaceDescriptor& s) { return !s.orientable && s.genus % 2 == 0; }

}  // namespace

Homomorphism make_homomorphism(const SurfaceDescriptor& s, std::size_t rank,
                               std::vector<Word> images) {
  Homomorphism h;
  h.source = s;
  h.presentation = presentation(s);
  h.rank = rank;
  if (images.size() != h.presentation.generators) {
    throw PreconditionError("expected " + std::to_string(h.presentation.generators) +
                            " generator images, got " + std::to_string(images.size()));
  }
  for (const auto& w : images) {
    if (w.rank() != rank) throw PreconditionError("image word rank does not match target rank");
  }
  h.images = std::move(images);
  return h;
}

Homomorphism parse_homomorphism(const std::string& text) {
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), '\n', ';');
  std::istringstream in(normalized);
  std::map<std::string, std::string> fields;
  for (std::string part; std::getline(in, part, ';');) {
    if (auto hash = part.find('#'); hash != std::string::npos) part.erase(hash);
    part = trim(part);
    if (part.empty()) continue;
    auto eq = part.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value, got '" + part + "'");
    std::string key = trim(part.substr(0, eq));
    if (!fields.emplace(key, trim(part.substr(eq + 1))).second) {
      throw ParseError("duplicate key '" + key + "'");
    }
  }
  if (!fields.count("surface") || !fields.count("rank")) {
    throw ParseError("homomorphism needs surface= and rank=");
  }
  SurfaceDescriptor s = parse_surface(fields["surface"]);
  std::size_t rank = parse_size(fields["rank"], "rank");
  std::size_t n = presentation(s).generators;
  std::vector<Word> images;
  for (std::size_t k = 1; k <= n; ++k) {
    auto it = fields.find("x" + std::to_string(k));
    if (it == fields.end()) throw ParseError("missing image for x" + std::to_string(k));
    images.push_back(parse_word(it->second, rank));
    fields.erase(it);
  }
  fields.erase("surface");
  fields.erase("rank");
  if (!fields.empty()) throw ParseError("unexpected key '" + fields.begin()->first + "'");
  return make_homomorphism(s, rank, std::move(images));
}

std::string to_text(const Homomorphism& h) {
  std::ostringstream out;
  out << "surface=" << to_string(h.source) << "; rank=" << h.rank;
  for (std::size_t k = 0; k < h.images.size(); ++k) {
    out << "; x" << k + 1 << '=' << to_string(h.images[k]);
  }
  return out.str();
}

bool validate(const Homomorphism& h) {
  if (h.images.size() != h.presentation.generators) {
    throw PreconditionError("image count does not match the presentation");
  }
  for (const auto& w : h.images) {
    if (w.rank() != h.rank) throw PreconditionError("image word rank does not match target rank");
  }
  for (const auto& rel : h.presentation.relators) {
    Word acc(h.rank);
    for (int x : rel.letters()) {
      const Word& img = h.images[static_cast<std::size_t>(std::abs(x)) - 1];
      acc = acc * (x > 0 ? img : img.inverse());
    }
    if (!acc.empty()) return false;
  }
  return true;
}

bool is_epimorphism(const Homomorphism& h) {
  if (!validate(h)) throw PreconditionError("relators do not map to the identity");
  return generates_whole_group(h.images, h.rank);
}

std::string to_string(const LambdaLabel& label) {
  if (std::holds_alternative<NonorientableComplement>(label)) return "NonorientableComplement";
  if (std::holds_alternative<OrientableSurfaceTrivial>(label)) return "OrientableSurfaceTrivial";
  std::string out = "OrientableComplement{";
  bool first = true;
  for (auto i : std::get<OrientableComplement>(label).indices) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + '}';
}

LambdaLabel widen(const ClassLabel& label) {
  return std::visit([](const auto& v) -> LambdaLabel { return v; }, label);
}

LambdaLabel lambda_invariant(const Homomorphism& h) {
  require_closed(h.source);
  if (!is_epimorphism(h)) throw PreconditionError("homomorphism is not surjective");
  if (h.source.orientable) return OrientableSurfaceTrivial{};
  std::vector<bool> w1 = w1_vector(h.source);
  std::vector<Gf2Vector> rows;
  for (const auto& u : h.images) rows.push_back(to_gf2(u.parity_vector()));
  auto sol = gf2_solve(rows, w1, h.rank);
  if (!sol) return NonorientableComplement{};
  if (!sol->unique) throw std::logic_error("surjective image parities must span GF(2)^r");
  OrientableComplement label;
  for (std::size_t k = 0; k < h.rank; ++k) {
    if (sol->x.test(k)) label.indices.insert(k + 1);
  }
  if (label.indices.empty()) throw std::logic_error("lambda = 0 on a non-orientable source");
  return label;
}

ClassificationCounts counts(const SurfaceDescriptor& s, std::size_t r) {
  require_closed(s);
  std::size_t c = corank(s);
  if (r < 1 || r > c) {
    throw PreconditionError("rank " + std::to_string(r) + " outside 1.." + std::to_string(c));
  }
  if (r >= 64) throw PreconditionError("rank too large for 64-bit counts");
  if (!even_nonorientable(s)) return {1, 1};
  std::uint64_t pow = std::uint64_t{1} << r;
  if (r < c) return {2, pow};
  return {1, pow - 1};
}

Homomorphism nielsen_postcompose(const NielsenMove& m, const Homomorphism& h) {
  if (m.rank != h.rank) throw PreconditionError("move rank does not match homomorphism rank");
  Homomorphism out = h;
  for (auto& w : out.images) w = apply_nielsen(m, w);
  return out;
}

HOperation h_operation_for(const NielsenMove& m) {
  validate(m);
  if (const auto* p = std::get_if<Permute>(&m.op)) return H1{p->images};
  if (const auto* i = std::get_if<Invert>(&m.op)) return H2{i->i};
  const auto& rm = std::get<RightMultiply>(m.op);
  return H3{rm.i, rm.j};
}

ClassLabel h_operation_on_label(const HOperation& op, const ClassLabel& label, std::size_t r) {
  auto in_range = [r](std::size_t k) { return k >= 1 && k <= r; };
  if (const auto* h1 = std::get_if<H1>(&op)) {
    validate(NielsenMove{r, Permute{h1->images}});
  } else if (const auto* h2 = std::get_if<H2>(&op)) {
    if (!in_range(h2->i)) throw PreconditionError("H2 index out of range");
  } else {
    const auto& h3 = std::get<H3>(op);
    if (!in_range(h3.i) || !in_range(h3.j) || h3.i == h3.j) {
      throw PreconditionError("H3 needs distinct indices in 1..r");
    }
  }
  if (std::holds_alternative<NonorientableComplement>(label)) return label;

  const auto& j_set = std::get<OrientableComplement>(label).indices;
  for (auto k : j_set) {
    if (!in_range(k)) throw PreconditionError("label index out of range");
  }
  OrientableComplement out;
  if (const auto* h1 = std::get_if<H1>(&op)) {
    for (auto k : j_set) out.indices.insert(h1->images[k - 1]);
  } else if (std::holds_alternative<H2>(op)) {
    out.indices = j_set;
  } else {
    const auto& h3 = std::get<H3>(op);
    out.indices = j_set;
    if (j_set.count(h3.j)) {
      if (!out.indices.erase(h3.i)) out.indices.insert(h3.i);
    }
  }
  if (out.indices.empty()) throw std::logic_error("H-operation produced an empty index set");
  return out;
}

std::string equivalence_class(const LambdaLabel& label) {
  return std::holds_alternative<NonorientableComplement>(label) ? "E0" : "E1";
}

std::vector<LambdaLabel> reachable_labels(const SurfaceDescriptor& s, std::size_t r) {
  counts(s, r);
  if (s.orientable) return {OrientableSurfaceTrivial{}};
  if (!even_nonorientable(s)) return {NonorientableComplement{}};
  std::vector<LambdaLabel> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
    OrientableComplement label;
    for (std::size_t k = 0; k < r; ++k) {
      if (mask >> k & 1) label.indices.insert(k + 1);
    }
    out.push_back(label);
  }
  if (r < corank(s)) out.push_back(NonorientableComplement{});
  return out;
}

Homomorphism witness_epimorphism(const SurfaceDescriptor& s, std::size_t r,
                                 const LambdaLabel& label) {
  counts(s, r);
  auto labels = reachable_labels(s, r);
  if (std::find(labels.begin(), labels.end(), label) == labels.end()) {
    throw PreconditionError("label " + to_string(label) + " does not occur for " + to_string(s) +
                            " and rank " + std::to_string(r));
  }
  std::size_t n = presentation(s).generators;
  std::vector<Word> images(n, Word(r));
  auto gen = [r](std::vector<int> letters) { return Word(r, letters); };

  if (s.orientable || !std::holds_alternative<OrientableComplement>(label)) {
    // Images a_k on the first letter of each of the first r pairs, identity elsewhere.
    for (std::size_t k = 1; k <= r; ++k) {
      images[2 * k - 2] = gen({static_cast<int>(k)});
      if (!s.orientable) images[2 * k - 1] = gen({-static_cast<int>(k)});
    }
    return make_homomorphism(s, r, std::move(images));
  }

  // Pairs (x_{2k-1}, x_{2k}) -> (u_k, u_k^-1) with every u_k odd under lambda.
  const auto& set = std::get<OrientableComplement>(label).indices;
  int i0 = static_cast<int>(*set.begin());
  for (std::size_t k = 1; k <= n / 2; ++k) {
    Word u = k > r              ? gen({i0})
             : set.count(k) > 0 ? gen({static_cast<int>(k)})
                                : gen({static_cast<int>(k), i0});
    images[2 * k - 2] = u;
    images[2 * k - 1] = u.inverse();
  }
  return make_homomorphism(s, r, std::move(images));
}

std::vector<Word> words_up_to(std::size_t rank, std::size_t max_len) {
  std::vector<Word> out{Word(rank)};
  std::vector<std::vector<int>> layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer) {
      for (int g = 1; g <= static_cast<int>(rank); ++g) {
        for (int x : {g, -g}) {
          if (!w.empty() && w.back() == -x) continue;
          auto v = w;
          v.push_back(x);
          next.push_back(std::move(v));
        }
      }
    }
    std::sort(next.begin(), next.end());
    for (const auto& v : next) out.emplace_back(rank, v);
    layer = std::move(next);
  }
  return out;
}

Enumeration enumerate_epimorphisms(const SurfaceDescriptor& s, std::size_t r,
                                   std::size_t max_word_length, std::uint64_t tuple_limit) {
  require_closed(s);
  if (r < 1) throw PreconditionError("rank must be positive");
  Presentation pres = presentation(s);
  const std::size_t n = pres.generators;
  std::vector<Word> words = words_up_to(r, max_word_length);

  std::uint64_t total = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (total > tuple_limit / words.size()) {
      throw PreconditionError("search space exceeds the tuple limit of " +
                              std::to_string(tuple_limit));
    }
    total *= words.size();
  }

  // Partial relator evaluation: relator letters are consumed as soon as the
  // generator they name has an image.
  struct Partial {
    std::size_t pos = 0;
    Word value;
  };
  Enumeration result;
  std::map<LambdaLabel, std::size_t> index;
  std::vector<std::size_t> choice(n, 0);
  std::vector<Word> images(n, Word(r));

  auto advance = [&](Partial p, const Word& rel, std::size_t known) {
    const auto& ls = rel.letters();
    while (p.pos < ls.size() && static_cast<std::size_t>(std::abs(ls[p.pos])) <= known) {
      const Word& img = images[static_cast<std::size_t>(std::abs(ls[p.pos])) - 1];
      p.value = p.value * (ls[p.pos] > 0 ? img : img.inverse());
      ++p.pos;
    }
    return p;
  };

  std::function<void(std::size_t, const std::vector<Partial>&)> search =
      [&](std::size_t depth, const std::vector<Partial>& partials) {
        if (depth == n) {
          ++result.tuples;
          for (const auto& p : partials) {
            if (!p.value.empty()) return;
          }
          if (!generates_whole_group(images, r)) return;
          ++result.epimorphisms;
          Homomorphism h = make_homomorphism(s, r, images);
          LambdaLabel label = lambda_invariant(h);
          if (index.emplace(label, result.witnesses.size()).second) {
            result.witnesses.emplace_back(label, std::move(h));
          }
          return;
        }
        for (const auto& w : words) {
          images[depth] = w;
          std::vector<Partial> next;
          next.reserve(partials.size());
          for (std::size_t k = 0; k < partials.size(); ++k) {
            next.push_back(advance(partials[k], pres.relators[k], depth + 1));
          }
          search(depth + 1, next);
        }
      };
  std::vector<Partial> start(pres.relators.size(), Partial{0, Word(r)});
  search(0, start);

  std::sort(result.witnesses.begin(), result.witnesses.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return result;
}

bool reeb_epi_membership(const SurfaceDescriptor& s, const OrientedMultigraph& graph,
                         const Homomorphism& h) {
  require_closed(s);
  if (!(h.source == s)) throw PreconditionError("homomorphism source differs from the surface");
  if (max_degree(graph) > 3) throw PreconditionError("graph has a vertex of degree > 3");
  auto report = validate_good_orientation(graph);
  if (!report.ok) throw PreconditionError("graph is not good-oriented: " + report.violations.front());
  std::size_t beta = cycle_rank(graph);
  if (beta != h.rank) {
    throw PreconditionError("graph cycle rank " + std::to_string(beta) +
                            " differs from target rank " + std::to_string(h.rank));
  }
  if (!is_epimorphism(h)) throw PreconditionError("homomorphism is not surjective");
  if (s.orientable) return beta == s.genus;
  if (s.genus % 2 == 1) return true;
  std::size_t g = s.genus / 2;
  if (beta == g) return true;
  return beta < g && std::holds_alternative<NonorientableComplement>(lambda_invariant(h));
}

std::uint64_t conjugacy_class_count(const SurfaceDescriptor& s, const OrientedMultigraph& graph) {
  std::vector<std::string> problems;
  if (s.orientable || s.genus % 2 != 0 || !s.closed()) {
    problems.push_back("surface must be closed non-orientable of even genus, got " + to_string(s));
  }
  auto report = validate_good_orientation(graph);
  if (!report.ok) problems.push_back("graph is not good-oriented: " + report.violations.front());
  for (const auto& v : graph.vertices()) {
    std::size_t d = graph.degree(v);
    if (d != 1 && d != 3) {
      problems.push_back("vertex " + v + " has degree " + std::to_string(d));
    }
  }
  std::size_t g = s.genus / 2;
  std::size_t beta = cycle_rank(graph);
  if (beta != g) {
    problems.push_back("cycle rank " + std::to_string(beta) + " differs from g = " +
                       std::to_string(g));
  }
  if (!problems.empty()) {
    std::string msg;
    for (const auto& p : problems) msg += (msg.empty() ? "" : "; ") + p;
    throw PreconditionError(msg);
  }
  // Sign classes other than the all-plus one.
  std::uint64_t via_signs = class_count(graph) - 1;
  std::uint64_t formula = (std::uint64_t{1} << g) - 1;
  if (via_signs != formula) throw std::logic_error("sign class count disagrees with 2^g - 1");
  return formula;
}

}  // namespace reeb
