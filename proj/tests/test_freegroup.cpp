#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "reeb/error.hpp"
#include "reeb/freegroup.hpp"

using namespace reeb;

namespace {

Word w(const std::string& text, std::size_t rank = 2) { return parse_word(text, rank); }

Word random_word(std::mt19937_64& rng, std::size_t rank, std::size_t max_len) {
  std::vector<int> letters(rng() % (max_len + 1));
  for (int& x : letters) {
    x = static_cast<int>(rng() % rank) + 1;
    if (rng() % 2) x = -x;
  }
  return Word(rank, letters);
}

std::vector<NielsenMove> all_moves(std::size_t rank) {
  std::vector<NielsenMove> out;
  std::vector<std::size_t> perm(rank);
  for (std::size_t k = 0; k < rank; ++k) perm[k] = k + 1;
  do out.push_back({rank, Permute{perm}});
  while (std::next_permutation(perm.begin(), perm.end()));
  for (std::size_t i = 1; i <= rank; ++i) {
    out.push_back({rank, Invert{i}});
    for (std::size_t j = 1; j <= rank; ++j) {
      if (i != j) out.push_back({rank, RightMultiply{i, j}});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(w("a1 a1'").empty());
  CHECK(to_string(w("a1 a2 a2' a1")) == "a1 a1");
  CHECK(w("a2' a1 a1' a2").empty());
  CHECK(to_string(reduce({1, 2, -2, -1, 2}, 2)) == "a2");
  CHECK_THROWS_AS(reduce({3}, 2), PreconditionError);
  CHECK_THROWS_AS(parse_word("a3", 2), ParseError);
  CHECK_THROWS_AS(parse_word("b1", 2), ParseError);
  CHECK(parse_word("", 3).empty());
}

TEST_CASE("reduction is idempotent and never lengthens") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    std::vector<int> raw(rng() % 20);
    for (int& x : raw) x = (rng() % 2 ? 1 : -1) * static_cast<int>(rng() % 3 + 1);
    Word once = reduce(raw, 3);
    CHECK(once.length() <= raw.size());
    CHECK(reduce(once.letters(), 3) == once);
    for (std::size_t i = 0; i + 1 < once.length(); ++i) {
      CHECK(once.letters()[i] != -once.letters()[i + 1]);
    }
  }
}

TEST_CASE("Nielsen moves act letterwise") {
  NielsenMove rmul{2, RightMultiply{1, 2}};
  CHECK(to_string(apply_nielsen(rmul, w("a1"))) == "a1 a2");
  CHECK(to_string(apply_nielsen({2, Invert{2}}, w("a2 a1"))) == "a2' a1");
  CHECK(to_string(apply_nielsen(rmul, w("a1'"))) == "a2' a1'");
  CHECK(to_string(apply_nielsen({3, Permute{{2, 3, 1}}}, w("a1 a3'", 3))) == "a2 a1'");
  CHECK_THROWS_AS(apply_nielsen(rmul, w("a1", 3)), PreconditionError);
  CHECK_THROWS_AS(validate(NielsenMove{2, RightMultiply{1, 1}}), PreconditionError);
  CHECK_THROWS_AS(validate(NielsenMove{2, Permute{{1, 1}}}), PreconditionError);
  CHECK_THROWS_AS(validate(NielsenMove{2, Invert{3}}), PreconditionError);
}

TEST_CASE("Nielsen move text form") {
  for (const auto& m : all_moves(3)) {
    CHECK(parse_nielsen_move(to_string(m), 3) == m);
  }
  CHECK_THROWS_AS(parse_nielsen_move("rmul 1", 2), ParseError);
  CHECK_THROWS_AS(parse_nielsen_move("twist 1 2", 2), ParseError);
  CHECK_THROWS_AS(parse_nielsen_move("rmul 2 2", 2), PreconditionError);
}

TEST_CASE("Nielsen moves are invertible homomorphisms") {
  std::mt19937_64 rng(17);
  for (std::size_t rank : {2u, 3u}) {
    for (const auto& m : all_moves(rank)) {
      for (int k = 0; k < 20; ++k) {
        Word u = random_word(rng, rank, 8);
        Word v = random_word(rng, rank, 8);
        CHECK(apply_nielsen(m, u * v) == apply_nielsen(m, u) * apply_nielsen(m, v));
        Word back = apply_nielsen(m, u);
        for (const auto& inv : inverse_sequence(m)) back = apply_nielsen(inv, back);
        CHECK(back == u);
      }
    }
  }
}

TEST_CASE("folding") {
  auto rose1 = fold({w("a1", 1)}, 1);
  CHECK(rose1.vertex_count == 1);
  CHECK(rose1.edges.size() == 1);

  auto rose2 = fold({w("a1"), w("a2")}, 2);
  CHECK(rose2.vertex_count == 1);
  CHECK(rose2.edges.size() == 2);

  auto square = fold({w("a1 a1", 1)}, 1);
  CHECK(square.vertex_count == 2);
  CHECK(square.edges.size() == 2);

  // a1 a2 a1' and a1 a2' a1' share their outer letters.
  auto shared = fold({w("a1 a2 a1'"), w("a1 a2' a1'")}, 2);
  CHECK(shared.vertex_count == 2);
  CHECK(shared.edges.size() == 2);
  CHECK_FALSE(shared.has_foldable_pair());

  CHECK(generates_whole_group({w("a1 a2"), w("a2")}, 2));
  CHECK_FALSE(generates_whole_group({w("a1 a1"), w("a2")}, 2));
  CHECK_FALSE(generates_whole_group({w("a1")}, 2));
  CHECK(generates_whole_group({w("a1 a2 a1'"), w("a1"), w("a2 a2")}, 2));
}

TEST_CASE("folded graphs never keep a foldable pair") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 300; ++k) {
    std::size_t rank = 1 + rng() % 3;
    std::vector<Word> tuple;
    for (std::size_t n = 1 + rng() % 4; n > 0; --n) tuple.push_back(random_word(rng, rank, 8));
    auto g = fold(tuple, rank);
    CHECK_FALSE(g.has_foldable_pair());
    // Exhaustive restatement of the folded condition.
    for (std::size_t a = 0; a < g.edges.size(); ++a) {
      for (std::size_t b = a + 1; b < g.edges.size(); ++b) {
        const auto& x = g.edges[a];
        const auto& y = g.edges[b];
        if (x.generator != y.generator) continue;
        CHECK_FALSE(x.from == y.from);
        CHECK_FALSE(x.to == y.to);
      }
    }
  }
}

TEST_CASE("surjectivity is invariant under Nielsen moves on the tuple") {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 150; ++k) {
    std::vector<Word> tuple;
    for (std::size_t n = 1 + rng() % 3; n > 0; --n) tuple.push_back(random_word(rng, 2, 5));
    bool before = generates_whole_group(tuple, 2);
    for (const auto& m : all_moves(2)) {
      std::vector<Word> image;
      for (const auto& u : tuple) image.push_back(apply_nielsen(m, u));
      CHECK(generates_whole_group(image, 2) == before);
    }
  }
}

TEST_CASE("surjectivity agrees with the search oracle on small cases") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 60; ++k) {
    std::vector<Word> tuple;
    for (std::size_t n = 2 + rng() % 2; n > 0; --n) tuple.push_back(random_word(rng, 2, 4));
    auto expected = oracle::generates(tuple, 2);
    if (expected) CHECK(generates_whole_group(tuple, 2) == *expected);
  }
}
