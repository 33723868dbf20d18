#pragma once

#include "coalgebra.hpp"

#include <string>
#include <vector>

namespace rackbi {

/// Finite-dimensional left Leibniz algebra over Q.
///
/// Structure constants follow [e_j, e_k] = sum_i c_ij^k e_i, i.e. c(i,j,k) is the
/// e_i-coefficient of [e_j, e_k]. Construct through check_leibniz.
class LeibnizAlgebra {
public:
  LeibnizAlgebra() = default;

  std::size_t dim() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(std::size_t i) const { return i < labels_.size() ? labels_[i] : "e" + std::to_string(i + 1); }

  /// [e_j, e_k]
  const QVec& bracket(std::size_t j, std::size_t k) const { return br_.at(j * n_ + k); }
  QVec bracket(const QVec& x, const QVec& y) const
  {
    QVec r;
    for (const auto& [j, a] : x)
      for (const auto& [k, b] : y) r.axpy(a * b, bracket(j, k));
    return r;
  }
  /// e^i([e_j, e_k])
  Q c(std::size_t i, std::size_t j, std::size_t k) const { return bracket(j, k).get(i); }

  /// ad_x as a linear map h -> h.
  LinMap ad(const QVec& x) const
  {
    LinMap m(n_, n_);
    for (std::size_t k = 0; k < n_; ++k) m.set_col(k, bracket(x, QVec::basis(k)));
    return m;
  }

  bool is_abelian() const
  {
    for (const auto& b : br_)
      if (!b.empty()) return false;
    return true;
  }
  bool is_lie() const
  {
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if (bracket(j, k) != -bracket(k, j)) return false;
    return true;
  }
  friend bool operator==(const LeibnizAlgebra& a, const LeibnizAlgebra& b) { return a.n_ == b.n_ && a.br_ == b.br_; }

  std::string show(const QVec& v) const
  {
    std::vector<std::string> l(n_);
    for (std::size_t i = 0; i < n_; ++i) l[i] = label(i);
    return to_string(v, l);
  }

private:
  friend LeibnizAlgebra make_leibniz_unchecked(std::size_t, std::vector<QVec>, std::vector<std::string>);
  std::size_t n_ = 0;
  std::vector<QVec> br_;
  std::vector<std::string> labels_;
};

/// Raw constructor; callers must validate (check_leibniz does).
inline LeibnizAlgebra make_leibniz_unchecked(std::size_t n, std::vector<QVec> brackets,
                                             std::vector<std::string> labels = {})
{
  if (brackets.size() != n * n) throw BasisMismatch("bracket table must have dim*dim entries");
  for (const auto& b : brackets)
    if (b.max_index_plus_one() > n) throw BasisMismatch("bracket value outside the algebra");
  LeibnizAlgebra h;
  h.n_ = n;
  h.br_ = std::move(brackets);
  h.labels_ = std::move(labels);
  return h;
}

/// Evaluate the left Leibniz identity on every basis triple.
inline CheckResult leibniz_identity_check(const LeibnizAlgebra& h)
{
  Checker chk("leibniz identity");
  std::size_t n = h.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        QVec ex = QVec::basis(x), ey = QVec::basis(y), ez = QVec::basis(z);
        QVec lhs = h.bracket(ex, h.bracket(y, z));
        QVec rhs = h.bracket(h.bracket(x, y), ez) + h.bracket(ey, h.bracket(x, z));
        chk.expect(lhs == rhs, {x, y, z}, [&] { return std::pair{h.show(lhs), h.show(rhs)}; });
      }
  return chk.result();
}

/// Validate structure constants; throws LeibnizViolation at the first bad triple.
inline LeibnizAlgebra check_leibniz(std::size_t n, std::vector<QVec> brackets, std::vector<std::string> labels = {})
{
  LeibnizAlgebra h = make_leibniz_unchecked(n, std::move(brackets), std::move(labels));
  CheckResult r = leibniz_identity_check(h);
  if (!r.passed) throw LeibnizViolation(r.witness[0], r.witness[1], r.witness[2], r.lhs, r.rhs);
  return h;
}

/// Two-sided ideal of a Leibniz algebra, kept as an echelonized span.
struct LeibnizIdeal {
  std::vector<QVec> generators;
  Subspace span;

  bool is_two_sided_ideal(const LeibnizAlgebra& h) const
  {
    for (const auto& v : span.basis())
      for (std::size_t k = 0; k < h.dim(); ++k) {
        if (!span.contains(h.bracket(v, QVec::basis(k)))) return false;
        if (!span.contains(h.bracket(QVec::basis(k), v))) return false;
      }
    return true;
  }
};

inline LeibnizIdeal make_ideal(std::size_t n, std::vector<QVec> gens)
{
  Subspace s(n, gens);
  return LeibnizIdeal{std::move(gens), std::move(s)};
}

/// Q(h): span of the squares [x,x], via [e_i,e_i] and [e_i,e_j]+[e_j,e_i].
inline LeibnizIdeal squares_ideal(const LeibnizAlgebra& h)
{
  std::vector<QVec> gens;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    gens.push_back(h.bracket(i, i));
    for (std::size_t j = i + 1; j < h.dim(); ++j) gens.push_back(h.bracket(i, j) + h.bracket(j, i));
  }
  return make_ideal(h.dim(), std::move(gens));
}

/// z(h) = {x : [x,y] = 0 for all y}.
inline LeibnizIdeal left_center(const LeibnizAlgebra& h)
{
  std::size_t n = h.dim();
  LinMap m(n, n * n);
  for (std::size_t j = 0; j < n; ++j) {
    QVec col;
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& [i, c] : h.bracket(j, k)) col.add(k * n + i, c);
    m.set_col(j, col);
  }
  return make_ideal(n, kernel_basis(m));
}

/// The Lie algebra g = h/z with projection p and a lift of the quotient basis.
struct QuotientLie {
  LeibnizAlgebra parent;
  LeibnizIdeal ideal;
  LeibnizAlgebra lie;
  LinMap p;                      ///< h -> g
  std::vector<std::size_t> lift; ///< g-basis f_a is the image of e_{lift[a]}

  std::size_t dim() const { return lie.dim(); }
  /// A preimage of the quotient basis vector a.
  QVec lift_vector(std::size_t a) const { return QVec::basis(lift.at(a)); }
};

inline QuotientLie quotient_lie(const LeibnizAlgebra& h, const LeibnizIdeal& z)
{
  std::size_t n = h.dim();
  LeibnizIdeal sq = squares_ideal(h);
  LeibnizIdeal zc = left_center(h);
  if (!z.span.contains(sq.span)) throw IdealSandwichViolation("ideal does not contain the squares Q(h)");
  if (!zc.span.contains(z.span)) throw IdealSandwichViolation("ideal is not inside the left center z(h)");

  auto piv = z.span.pivot_columns();
  std::vector<bool> is_piv(n, false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<std::size_t> lift;
  std::vector<std::size_t> pos(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (!is_piv[i]) {
      pos[i] = lift.size();
      lift.push_back(i);
    }
  std::size_t m = lift.size();
  auto project = [&](const QVec& v) {
    QVec r;
    for (const auto& [i, c] : z.span.residue(v)) r.add(pos[i], c);
    return r;
  };
  LinMap p(n, m);
  for (std::size_t i = 0; i < n; ++i) p.set_col(i, project(QVec::basis(i)));

  std::vector<QVec> br(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) br[a * m + b] = project(h.bracket(lift[a], lift[b]));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) labels.push_back("p(" + h.label(lift[a]) + ")");
  LeibnizAlgebra g = check_leibniz(m, std::move(br), std::move(labels));
  if (!g.is_lie()) throw AxiomViolation("quotient antisymmetry", {}, "non-antisymmetric", "antisymmetric");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      QVec lhs = p(h.bracket(i, j));
      QVec rhs = g.bracket(p.col(i), p.col(j));
      if (lhs != rhs) throw AxiomViolation("projection is a morphism", {i, j}, g.show(lhs), g.show(rhs));
    }
  return QuotientLie{h, z, std::move(g), std::move(p), std::move(lift)};
}

/// True when f: h -> k preserves brackets on basis pairs.
inline bool is_leibniz_morphism(const LinMap& f, const LeibnizAlgebra& h, const LeibnizAlgebra& k)
{
  if (f.dom() != h.dim() || f.cod() != k.dim()) return false;
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < h.dim(); ++j)
      if (f(h.bracket(i, j)) != k.bracket(f.col(i), f.col(j))) return false;
  return true;
}

/// The map p(x) -> ad_x from h/z(h) into End(h) is well defined, injective and a Lie morphism.
inline bool center_quotient_is_adjoint_image(const LeibnizAlgebra& h)
{
  QuotientLie q = quotient_lie(h, left_center(h));
  std::size_t n = h.dim();
  auto flat = [&](const LinMap& m) {
    QVec v;
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& [i, c] : m.col(k)) v.add(k * n + i, c);
    return v;
  };
  // well defined: ad vanishes on the ideal
  for (const auto& z : q.ideal.span.basis())
    if (!h.ad(z).is_zero()) return false;
  std::vector<QVec> images;
  for (std::size_t a = 0; a < q.dim(); ++a) images.push_back(flat(h.ad(q.lift_vector(a))));
  if (rank_of(images, n * n) != q.dim()) return false;
  for (std::size_t a = 0; a < q.dim(); ++a)
    for (std::size_t b = 0; b < q.dim(); ++b) {
      LinMap A = h.ad(q.lift_vector(a)), B = h.ad(q.lift_vector(b));
      LinMap comm = A.after(B) - B.after(A);
      QVec br = h.bracket(q.lift_vector(a), q.lift_vector(b));
      if (flat(comm) != flat(h.ad(br))) return false;
    }
  return true;
}

} // namespace rackbi
