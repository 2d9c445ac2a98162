#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace reeb {

using Gf2Vector = boost::dynamic_bitset<>;

/// Row space of GF(2) vectors kept in fully reduced echelon form.
///
/// Each basis row owns a pivot (its lowest set index) and every other row is
/// zero at that pivot, so reducing a vector against the basis yields the
/// unique coset representative vanishing on all pivots, which is also the
/// lexicographically smallest one when index 0 is read first.
class Gf2Basis {
 public:
  explicit Gf2Basis(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Gf2Vector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  Gf2Vector reduce(Gf2Vector v) const;
  bool contains(const Gf2Vector& v) const { return reduce(v).none(); }
  /// Returns false when v already lies in the span.
  bool insert(const Gf2Vector& v);

 private:
  std::size_t width_;
  std::vector<Gf2Vector> rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t gf2_rank(const std::vector<Gf2Vector>& rows, std::size_t width);

struct Gf2Solution {
  Gf2Vector x;
  bool unique = false;
};

/// Solves rows[k] . x = rhs[k]; free variables are set to 0.
std::optional<Gf2Solution> gf2_solve(const std::vector<Gf2Vector>& rows,
                                     const std::vector<bool>& rhs, std::size_t width);

Gf2Vector to_gf2(const std::vector<bool>& bits);

}  // namespace reeb
