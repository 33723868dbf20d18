#pragma once

#include "sparse.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace rackbi {

/// Incremental reduced row echelon form over Q.
///
/// Rows are sparse; every stored row has a pivot entry equal to 1 and no other
/// stored row has a nonzero in that pivot column. The pivot of a new row is the
/// entry of smallest bit size, ties broken by column.
class Echelon {
public:
  explicit Echelon(std::size_t width) : width_(width), limit_(width) {}
  /// Only columns below pivot_limit may carry pivots; later columns are bookkeeping tags.
  Echelon(std::size_t width, std::size_t pivot_limit) : width_(width), limit_(pivot_limit) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }

  /// Reduce v against the stored rows.
  QVec reduce(QVec v) const
  {
    // Walk the pivot columns that v touches; reduction never reintroduces a reduced pivot.
    for (auto it = pivots_.begin(); it != pivots_.end(); ++it) {
      Q c = v.get(it->first);
      if (sgn(c) != 0) v.axpy(Q(-c), rows_[it->second]);
    }
    return v;
  }

  bool contains(const QVec& v) const { return reduce(v).empty(); }

  /// Insert a row; returns true when the rank grew.
  bool insert(const QVec& v)
  {
    QVec r = reduce(v);
    std::size_t pcol = 0;
    std::size_t best = 0;
    bool have = false;
    for (const auto& [j, c] : r) {
      if (j >= limit_) break;
      std::size_t b = bit_size(c);
      if (!have || b < best) {
        best = b;
        pcol = j;
        have = true;
      }
    }
    if (!have) return false;
    Q inv = 1 / r.get(pcol);
    r *= inv;
    for (auto& row : rows_) {
      Q c = row.get(pcol);
      if (sgn(c) != 0) row.axpy(Q(-c), r);
    }
    pivots_.emplace(pcol, rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }

  const std::vector<QVec>& rows() const { return rows_; }
  const std::map<std::size_t, std::size_t>& pivots() const { return pivots_; }

  /// Basis of {x : row . x = 0 for every stored row}.
  std::vector<QVec> null_space() const
  {
    std::vector<QVec> out;
    for (std::size_t f = 0; f < width_; ++f) {
      if (pivots_.count(f)) continue;
      QVec v = QVec::basis(f);
      for (const auto& [p, ri] : pivots_) {
        Q c = rows_[ri].get(f);
        if (sgn(c) != 0) v.add(p, -c);
      }
      out.push_back(std::move(v));
    }
    return out;
  }

  /// Coordinates of v in terms of the stored rows, if v lies in their span.
  std::optional<std::vector<Q>> coordinates(const QVec& v) const
  {
    if (!contains(v)) return std::nullopt;
    std::vector<Q> c(rows_.size());
    for (const auto& [p, ri] : pivots_) c[ri] = v.get(p);
    return c;
  }

private:
  std::size_t width_;
  std::size_t limit_;
  std::vector<QVec> rows_;
  std::map<std::size_t, std::size_t> pivots_;
};

/// Echelon form of the rows of m; its null space is ker m.
inline Echelon row_echelon(const LinMap& m)
{
  std::vector<QVec> rows(m.cod());
  for (std::size_t j = 0; j < m.dom(); ++j)
    for (const auto& [i, c] : m.col(j)) rows[i].add(j, c);
  Echelon e(m.dom());
  for (const auto& r : rows) e.insert(r);
  return e;
}

/// Exact basis of ker m.
inline std::vector<QVec> kernel_basis(const LinMap& m) { return row_echelon(m).null_space(); }

inline std::size_t rank(const LinMap& m) { return row_echelon(m).rank(); }

/// Rank of a family of vectors of the given width.
inline std::size_t rank_of(const std::vector<QVec>& vs, std::size_t width)
{
  Echelon e(width);
  for (const auto& v : vs) e.insert(v);
  return e.rank();
}

/// One solution x of m x = b, or nothing.
inline std::optional<QVec> solve(const LinMap& m, const QVec& b)
{
  // Augment with b as an extra column and eliminate.
  std::vector<QVec> rows(m.cod());
  for (std::size_t j = 0; j < m.dom(); ++j)
    for (const auto& [i, c] : m.col(j)) rows[i].add(j, c);
  for (const auto& [i, c] : b) {
    if (i >= m.cod()) throw BasisMismatch("right-hand side outside codomain");
    rows[i].add(m.dom(), c);
  }
  Echelon e(m.dom() + 1, m.dom());
  for (const auto& r : rows)
    if (!e.insert(r) && !e.reduce(r).empty()) return std::nullopt;
  QVec x;
  for (const auto& [p, ri] : e.pivots()) x.add(p, e.rows()[ri].get(m.dom()));
  return x;
}

/// exp(N) = sum N^r / r! for a nilpotent endomorphism N.
inline LinMap exp_nilpotent(const LinMap& N)
{
  if (N.dom() != N.cod()) throw BasisMismatch("exp of a non-square map");
  LinMap result = LinMap::identity(N.dom());
  if (N.is_zero()) return result;
  LinMap power = result;
  for (std::size_t r = 1; r <= N.dom(); ++r) {
    power = N.after(power) * Q(1, static_cast<long>(r));
    if (power.is_zero()) return result;
    result += power;
  }
  throw std::domain_error("exp_nilpotent: map is not nilpotent");
}

/// A subspace with a fixed spanning basis and exact coordinates in that basis.
class Subspace {
public:
  explicit Subspace(std::size_t ambient) : ambient_(ambient), ech_(ambient, ambient) {}
  Subspace(std::size_t ambient, const std::vector<QVec>& gens) : Subspace(ambient)
  {
    for (const auto& g : gens) add(g);
  }

  bool add(const QVec& v)
  {
    if (v.max_index_plus_one() > ambient_) throw BasisMismatch("vector outside ambient space");
    QVec tagged = v;
    tagged.add(ambient_ + basis_.size(), Q(1));
    if (!ech_.insert(tagged)) return false;
    basis_.push_back(v);
    return true;
  }
  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient() const { return ambient_; }
  bool contains(const QVec& v) const { return residue(v).empty(); }
  bool contains(const Subspace& o) const
  {
    for (const auto& v : o.basis_)
      if (!contains(v)) return false;
    return true;
  }
  bool same_as(const Subspace& o) const { return dim() == o.dim() && contains(o); }
  const std::vector<QVec>& basis() const { return basis_; }
  /// Columns carrying the echelon pivots; the remaining columns index a complement.
  std::vector<std::size_t> pivot_columns() const
  {
    std::vector<std::size_t> out;
    for (const auto& [p, r] : ech_.pivots()) out.push_back(p);
    return out;
  }

  /// Part of v left after reducing by the subspace (zero iff v lies in it).
  QVec residue(const QVec& v) const
  {
    QVec r = ech_.reduce(v);
    QVec out;
    for (const auto& [i, c] : r)
      if (i < ambient_) out.add(i, c);
    return out;
  }

  /// Coordinates of v in the stored basis, if v lies in the span.
  std::optional<std::vector<Q>> coordinates(const QVec& v) const
  {
    QVec r = ech_.reduce(v);
    std::vector<Q> c(basis_.size());
    for (const auto& [i, q] : r) {
      if (i < ambient_) return std::nullopt;
      // reduce() leaves minus the combination in the tag columns
      c[i - ambient_] = -q;
    }
    return c;
  }

private:
  std::size_t ambient_;
  Echelon ech_;
  std::vector<QVec> basis_;
};

} // namespace rackbi
