#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace reeb {

/// Freely reduced element of the free group F_r.
///
/// Letters are signed generator indices: +k stands for a_k, -k for a_k^-1
/// (1 <= k <= rank). Construction always reduces, so two words are equal as
/// group elements iff their letter sequences are equal.
class Word {
 public:
  Word() = default;
  explicit Word(std::size_t rank) : rank_(rank) {}
  /// Reduces `letters`; throws PreconditionError on an index out of range.
  Word(std::size_t rank, const std::vector<int>& letters);

  std::size_t rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  /// Mod-2 exponent sum of each generator, indexed 0..rank-1.
  std::vector<bool> parity_vector() const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  std::size_t rank_ = 0;
  std::vector<int> letters_;
};

/// Free reduction by stack cancellation.
Word reduce(const std::vector<int>& letters, std::size_t rank);
Word operator*(const Word& a, const Word& b);

/// Text form: "a1 a2' a1"; the empty string is the identity.
Word parse_word(const std::string& text, std::size_t rank);
std::string to_string(const Word& w);

/// Generator permutation a_k -> a_{sigma(k)}; `images[k-1]` holds sigma(k).
struct Permute {
  std::vector<std::size_t> images;
  bool operator==(const Permute&) const = default;
};
/// a_i -> a_i^-1.
struct Invert {
  std::size_t i = 1;
  bool operator==(const Invert&) const = default;
};
/// a_i -> a_i a_j, i != j.
struct RightMultiply {
  std::size_t i = 1;
  std::size_t j = 2;
  bool operator==(const RightMultiply&) const = default;
};

/// Elementary Nielsen transformation of F_r.
struct NielsenMove {
  std::size_t rank = 0;
  std::variant<Permute, Invert, RightMultiply> op;

  bool operator==(const NielsenMove&) const = default;
};

/// Throws PreconditionError if the move is malformed for its rank.
void validate(const NielsenMove& m);
/// Elementary moves which, applied in order after `m`, restore every word.
std::vector<NielsenMove> inverse_sequence(const NielsenMove& m);
/// Image of w under the automorphism.
Word apply_nielsen(const NielsenMove& m, const Word& w);

/// "perm 2 1 3", "inv 2", "rmul 1 2".
NielsenMove parse_nielsen_move(const std::string& text, std::size_t rank);
std::string to_string(const NielsenMove& m);

/// Stallings graph of a finitely generated subgroup; vertex 0 is the basepoint.
struct FoldedGraph {
  struct LabeledEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    std::size_t generator = 1;
    bool operator==(const LabeledEdge&) const = default;
  };

  std::size_t vertex_count = 1;
  std::vector<LabeledEdge> edges;

  /// True iff some vertex has two incident edges with the same label and
  /// the same direction.
  bool has_foldable_pair() const;
};

/// Wedge of subdivided loops at the basepoint, folded to a fixpoint.
FoldedGraph fold(const std::vector<Word>& generators, std::size_t rank);

/// True iff the folded graph is the rose with all r petals.
bool generates_whole_group(const std::vector<Word>& generators, std::size_t rank);

}  // namespace reeb
