#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reeb/graph.hpp"

namespace reeb {

/// (incoming, outgoing) edge pair at a degree-3 vertex.
struct SignSlot {
  std::string vertex;
  std::string in_edge;
  std::string out_edge;

  bool operator==(const SignSlot&) const = default;
};

/// Sorted by vertex id, then in-edge id, then out-edge id. Requires a
/// good orientation and degrees <= 3.
std::vector<SignSlot> sign_slots(const OrientedMultigraph& g);

struct SignAssignment {
  std::string host;                // fingerprint of the host graph
  std::vector<SignSlot> slots;
  std::vector<std::string> edges;  // host edge ids
  std::vector<bool> minus;         // per slot; false is +

  bool operator==(const SignAssignment&) const = default;
};

SignAssignment all_plus(const OrientedMultigraph& g);

/// Negates every slot containing edge e.
SignAssignment flip(const SignAssignment& a, const std::string& e);

/// a - b lies in the GF(2) span of the per-edge flip vectors.
bool are_flip_equivalent(const SignAssignment& a, const SignAssignment& b);

/// Flip-equivalent to the all-plus configuration.
bool is_orientable_configuration(const SignAssignment& a);

/// Rank of the slot x edge incidence matrix over GF(2).
std::size_t flip_rank(const OrientedMultigraph& g);

/// 2^(slots - flip rank); degrees must lie in {1, 3}.
std::uint64_t class_count(const OrientedMultigraph& g);

/// Lexicographically smallest member of the flip orbit (+ before -, slots in
/// their fixed order). Host degrees must lie in {1, 3}.
SignAssignment canonicalize(const SignAssignment& a, const OrientedMultigraph& host);

/// Exhaustive partition of all 2^S assignments by flip reachability; returns
/// the lexicographically smallest member of each class. S <= 20.
std::vector<SignAssignment> enumerate_classes_bruteforce(const OrientedMultigraph& g);

/// `sign <vertex> <in-edge> <out-edge> <+|->`, '#' comments; unlisted slots are +.
SignAssignment parse_signs(const std::string& text, const OrientedMultigraph& g);
std::string to_text(const SignAssignment& a);

}  // namespace reeb
