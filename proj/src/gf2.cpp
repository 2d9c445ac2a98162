#include "reeb/gf2.hpp"

#include "reeb/error.hpp"

namespace reeb {

Gf2Vector Gf2Basis::reduce(Gf2Vector v) const {
  if (v.size() != width_) throw PreconditionError("GF(2) vector width mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (v.test(pivots_[k])) v ^= rows_[k];
  }
  return v;
}

bool Gf2Basis::insert(const Gf2Vector& v) {
  Gf2Vector r = reduce(v);
  auto p = r.find_first();
  if (p == Gf2Vector::npos) return false;
  for (auto& row : rows_) {
    if (row.test(p)) row ^= r;
  }
  auto pos = rows_.begin();
  auto ppos = pivots_.begin();
  while (ppos != pivots_.end() && *ppos < p) {
    ++pos;
    ++ppos;
  }
  rows_.insert(pos, std::move(r));
  pivots_.insert(ppos, p);
  return true;
}

std::size_t gf2_rank(const std::vector<Gf2Vector>& rows, std::size_t width) {
  Gf2Basis b(width);
  for (const auto& r : rows) b.insert(r);
  return b.rank();
}

std::optional<Gf2Solution> gf2_solve(const std::vector<Gf2Vector>& rows,
                                     const std::vector<bool>& rhs, std::size_t width) {
  if (rows.size() != rhs.size()) throw PreconditionError("GF(2) system shape mismatch");
  Gf2Basis aug(width + 1);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k].size() != width) throw PreconditionError("GF(2) vector width mismatch");
    Gf2Vector v = rows[k];
    v.push_back(rhs[k]);
    aug.insert(v);
  }
  Gf2Solution sol{Gf2Vector(width), false};
  for (std::size_t k = 0; k < aug.rank(); ++k) {
    std::size_t p = aug.pivots()[k];
    if (p == width) return std::nullopt;
    sol.x[p] = aug.rows()[k][width];
  }
  sol.unique = aug.rank() == width;
  return sol;
}

Gf2Vector to_gf2(const std::vector<bool>& bits) {
  Gf2Vector v(bits.size());
  for (std::size_t k = 0; k < bits.size(); ++k) v[k] = bits[k];
  return v;
}

}  // namespace reeb
