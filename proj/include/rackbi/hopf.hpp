#pragma once

#include "coalgebra.hpp"
#include "finite.hpp"

#include <string>
#include <vector>

namespace rackbi {

/// True when the basis tuple stays within the filtration cap (cap < 0: no cap).
inline bool within_cap(const Coalgebra& C, int cap, std::initializer_list<std::size_t> idx)
{
  if (cap < 0) return true;
  int d = 0;
  for (auto i : idx) d += C.degree_of(i);
  return d <= cap;
}

inline bool within_cap(const Coalgebra& C, int cap, const std::vector<std::size_t>& idx)
{
  if (cap < 0) return true;
  int d = 0;
  for (auto i : idx) d += C.degree_of(i);
  return d <= cap;
}

/// Bialgebra with an antipode on a coalgebra carrier. Products of basis pairs past
/// `cap` are absent from `mult` (see Bilinear). Used for Hopf, right Hopf and left Hopf
/// structures alike; the check functions state which axioms are meant.
struct HopfData {
  Coalgebra coalg;
  Bilinear mult;
  LinMap antipode;
  int cap = -1;

  std::size_t dim() const { return coalg.dim; }
  const QVec& one() const { return coalg.unit; }
  QVec mul(const QVec& a, const QVec& b) const { return mult(a, b); }
  bool within(std::initializer_list<std::size_t> idx) const { return within_cap(coalg, cap, idx); }
  std::string show(const QVec& v) const { return coalg.show(v); }
};

/// K[G] with group-like basis.
inline HopfData group_algebra(const FiniteGroup& G)
{
  HopfData H;
  std::size_t n = G.size();
  H.coalg.dim = n;
  for (std::size_t g = 0; g < n; ++g) {
    H.coalg.delta.push_back(QVec::basis(g * n + g));
    H.coalg.eps.push_back(1);
    H.coalg.labels.push_back(G.label(g));
    H.coalg.degree.push_back(0);
  }
  H.coalg.unit = QVec::basis(G.identity());
  H.mult = Bilinear(n, n, n);
  H.antipode = LinMap(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    H.antipode.set_col(a, QVec::basis(G.inv(a)));
    for (std::size_t b = 0; b < n; ++b) H.mult.set(a, b, QVec::basis(G.mul(a, b)));
  }
  return H;
}

/// Sum over Delta(a) of f(a1) (x) g(a2) applied through a callback.
template <typename F>
QVec sum_coproduct(const Coalgebra& C, std::size_t a, const F& f)
{
  QVec r;
  for (const auto& [idx, c] : C.delta[a]) r.axpy(c, f(idx / C.dim, idx % C.dim));
  return r;
}

/// Iterated coproduct Delta^(2)(a) as a list of (coefficient, a1, a2, a3).
struct Triple {
  Q c;
  std::size_t a1, a2, a3;
};
inline std::vector<Triple> coproduct3(const Coalgebra& C, std::size_t a)
{
  std::vector<Triple> out;
  for (const auto& [idx, c] : C.delta[a])
    for (const auto& [idx2, c2] : C.delta[idx % C.dim]) out.push_back({c * c2, idx / C.dim, idx2 / C.dim, idx2 % C.dim});
  return out;
}

/// ad_h(u) = sum h1 u S(h2) on basis elements.
inline QVec adjoint(const HopfData& H, std::size_t h, const QVec& u)
{
  return sum_coproduct(H.coalg, h, [&](std::size_t h1, std::size_t h2) {
    return H.mul(H.mul(QVec::basis(h1), u), H.antipode.col(h2));
  });
}
inline QVec adjoint(const HopfData& H, const QVec& h, const QVec& u)
{
  QVec r;
  for (const auto& [i, c] : h) r.axpy(c, adjoint(H, i, u));
  return r;
}

/// Bialgebra compatibilities shared by Hopf and one-sided Hopf structures.
inline Report check_bialgebra(const HopfData& H, bool left_unit, bool right_unit)
{
  const Coalgebra& C = H.coalg;
  std::size_t n = C.dim;
  Report rep = check_coalgebra(C, true);
  Checker assoc("associativity"), lu("left unit"), ru("right unit"), dmult("coproduct multiplicative"),
      emult("counit multiplicative");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!H.within({a, b})) continue;
      QVec ab = H.mult.at(a, b);
      QVec lhs = C.coproduct(ab);
      QVec rhs;
      for (const auto& [i, x] : C.delta[a])
        for (const auto& [j, y] : C.delta[b])
          rhs.axpy(x * y, tensor(H.mult.at(i / n, j / n), H.mult.at(i % n, j % n), n));
      dmult.expect(lhs == rhs, {a, b}, [&] { return std::pair{show_pair(C, lhs), show_pair(C, rhs)}; });
      Q el = C.counit(ab), er = C.eps[a] * C.eps[b];
      emult.expect(el == er, {a, b}, [&] { return std::pair{pretty(el), pretty(er)}; });
      for (std::size_t c = 0; c < n; ++c) {
        if (!H.within({a, b, c})) continue;
        QVec l = H.mul(ab, QVec::basis(c));
        QVec r = H.mul(QVec::basis(a), H.mult.at(b, c));
        assoc.expect_eq(l, r, {a, b, c}, C.labels);
      }
    }
  for (std::size_t a = 0; a < n; ++a) {
    if (left_unit) lu.expect_eq(H.mul(H.one(), QVec::basis(a)), QVec::basis(a), {a}, C.labels);
    if (right_unit) ru.expect_eq(H.mul(QVec::basis(a), H.one()), QVec::basis(a), {a}, C.labels);
  }
  rep.checks.push_back(assoc.result());
  rep.checks.push_back(dmult.result());
  rep.checks.push_back(emult.result());
  if (left_unit) rep.checks.push_back(lu.result());
  if (right_unit) rep.checks.push_back(ru.result());
  return rep;
}

/// sum f(a1) g(a2) for basis element a, via the given product.
inline QVec convolve_at(const HopfData& H, const LinMap& f, const LinMap& g, std::size_t a)
{
  return sum_coproduct(H.coalg, a, [&](std::size_t i, std::size_t j) { return H.mul(f.col(i), g.col(j)); });
}

/// Two-sided Hopf algebra: bialgebra axioms, id*S = 1eps = S*id, S anti-multiplicative.
inline Report check_hopf(const HopfData& H)
{
  Report rep = check_bialgebra(H, true, true);
  const Coalgebra& C = H.coalg;
  std::size_t n = C.dim;
  LinMap id = LinMap::identity(n);
  Checker right("id*S = 1eps"), left("S*id = 1eps"), anti("antipode anti-multiplicative");
  for (std::size_t a = 0; a < n; ++a) {
    QVec e = H.one() * C.eps[a];
    right.expect_eq(convolve_at(H, id, H.antipode, a), e, {a}, C.labels);
    left.expect_eq(convolve_at(H, H.antipode, id, a), e, {a}, C.labels);
    for (std::size_t b = 0; b < n; ++b) {
      if (!H.within({a, b})) continue;
      QVec l = H.antipode(H.mult.at(a, b));
      QVec r = H.mul(H.antipode.col(b), H.antipode.col(a));
      anti.expect_eq(l, r, {a, b}, C.labels);
    }
  }
  rep.checks.push_back(right.result());
  rep.checks.push_back(left.result());
  rep.checks.push_back(anti.result());
  return rep;
}

} // namespace rackbi
