#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "reeb/freegroup.hpp"
#include "reeb/graph.hpp"
#include "reeb/surfaces.hpp"

namespace reeb {

/// Homomorphism pi_1(source) -> F_rank given by generator images.
struct Homomorphism {
  SurfaceDescriptor source;
  Presentation presentation;
  std::size_t rank = 0;
  std::vector<Word> images;
};

/// Checks shapes (image count, word ranks); relators are not checked here.
Homomorphism make_homomorphism(const SurfaceDescriptor& s, std::size_t rank,
                               std::vector<Word> images);

/// `surface=<desc>; rank=<r>; x1=<word>; ...` (';' or newline separated).
Homomorphism parse_homomorphism(const std::string& text);
std::string to_text(const Homomorphism& h);

/// Every relator maps to the identity.
bool validate(const Homomorphism& h);
/// Throws PreconditionError when h does not validate.
bool is_epimorphism(const Homomorphism& h);

struct OrientableComplement {
  std::set<std::size_t> indices;
  auto operator<=>(const OrientableComplement&) const = default;
};
struct NonorientableComplement {
  auto operator<=>(const NonorientableComplement&) const = default;
};
struct OrientableSurfaceTrivial {
  auto operator<=>(const OrientableSurfaceTrivial&) const = default;
};

using ClassLabel = std::variant<OrientableComplement, NonorientableComplement>;
using LambdaLabel =
    std::variant<OrientableComplement, NonorientableComplement, OrientableSurfaceTrivial>;

std::string to_string(const LambdaLabel& label);
LambdaLabel widen(const ClassLabel& label);

/// Solves lambda . parity(phi(x)) = w1(x) over GF(2) for a closed source.
LambdaLabel lambda_invariant(const Homomorphism& h);

struct ClassificationCounts {
  std::uint64_t p = 0;  // equivalence classes
  std::uint64_t q = 0;  // strong equivalence classes
  bool operator==(const ClassificationCounts&) const = default;
};

/// Closed surface, 1 <= r <= corank.
ClassificationCounts counts(const SurfaceDescriptor& s, std::size_t r);

Homomorphism nielsen_postcompose(const NielsenMove& m, const Homomorphism& h);

struct H1 {
  std::vector<std::size_t> images;  // sigma(k) at k-1
};
struct H2 {
  std::size_t i = 1;
};
struct H3 {
  std::size_t i = 1;
  std::size_t j = 2;
};
using HOperation = std::variant<H1, H2, H3>;

/// The H-operation whose induced action on F_r is the given Nielsen move.
HOperation h_operation_for(const NielsenMove& m);

/// Transport of the label along the operation: H1 permutes J, H2 fixes it,
/// H3(i, j) replaces J by J xor {i} when j is in J.
ClassLabel h_operation_on_label(const HOperation& op, const ClassLabel& label, std::size_t r);

/// "E0" for a non-orientable complement, "E1" otherwise.
std::string equivalence_class(const LambdaLabel& label);

/// Explicit epimorphism with the requested label (closed source, r <= corank).
/// For orientable or odd non-orientable sources the label argument must be
/// the one forced by the surface.
Homomorphism witness_epimorphism(const SurfaceDescriptor& s, std::size_t r,
                                 const LambdaLabel& label);

/// Every label value that occurs for (s, r).
std::vector<LambdaLabel> reachable_labels(const SurfaceDescriptor& s, std::size_t r);

struct Enumeration {
  std::vector<std::pair<LambdaLabel, Homomorphism>> witnesses;  // first witness per label
  std::uint64_t tuples = 0;
  std::uint64_t epimorphisms = 0;
};

/// All reduced words of length <= max_len, in shortlex order.
std::vector<Word> words_up_to(std::size_t rank, std::size_t max_len);

/// Exhaustive search over image tuples of reduced words of length <=
/// max_word_length. Throws PreconditionError when the tuple count exceeds
/// `tuple_limit`.
Enumeration enumerate_epimorphisms(const SurfaceDescriptor& s, std::size_t r,
                                   std::size_t max_word_length,
                                   std::uint64_t tuple_limit = 50'000'000);

/// Whether h can be the Reeb epimorphism of a simple Morse function on s
/// whose Reeb graph is `graph`.
bool reeb_epi_membership(const SurfaceDescriptor& s, const OrientedMultigraph& graph,
                         const Homomorphism& h);

/// 2^g - 1 for S_{2g} and a degree-1/3 graph of cycle rank g.
std::uint64_t conjugacy_class_count(const SurfaceDescriptor& s, const OrientedMultigraph& graph);

}  // namespace reeb
