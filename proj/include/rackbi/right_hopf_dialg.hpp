#pragma once

#include "rack_bialg.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <memory>
#include <string>
#include <vector>

namespace rackbi {

/// Largest filtration degree in the support of v.
inline int vec_degree(const std::vector<int>& degree, const QVec& v)
{
  int d = 0;
  if (degree.empty()) return 0;
  for (const auto& [i, c] : v) d = std::max(d, degree.at(i));
  return d;
}

inline Bilinear opposite(const Bilinear& m)
{
  if (m.left != m.right) throw BasisMismatch("opposite product needs a square table");
  Bilinear o(m.left, m.right, m.out);
  o.cap = m.cap;
  for (std::size_t a = 0; a < m.left; ++a)
    for (std::size_t b = 0; b < m.right; ++b)
      if (m.defined(b, a)) o.set(a, b, m.at(b, a));
  return o;
}

/// Same coalgebra and antipode, product a.b := b.a. Left Hopf algebras become right Hopf ones.
inline HopfData opposite(const HopfData& H)
{
  HopfData o = H;
  o.mult = opposite(H.mult);
  return o;
}

inline Report prefixed(Report r, const std::string& p)
{
  for (auto& c : r.checks) c.name = p + c.name;
  return r;
}

/// Intersection of two spans inside a space of dimension n.
inline std::vector<QVec> intersect(const std::vector<QVec>& U, const std::vector<QVec>& V, std::size_t n)
{
  std::vector<QVec> cols;
  for (const auto& u : U) cols.push_back(u);
  for (const auto& v : V) cols.push_back(-v);
  LinMap m(n, cols);
  std::vector<QVec> out;
  for (const auto& k : kernel_basis(m)) {
    QVec x;
    for (const auto& [i, c] : k)
      if (i < U.size()) x.axpy(c, U[i]);
    if (!x.empty()) out.push_back(x);
  }
  return echelon_basis(out, n);
}

// ---------------------------------------------------------------------------
// Right Hopf algebras

/// Left-unital cocommutative bialgebra with a right antipode, plus the elementary antipode identities.
inline Report right_hopf_report(const HopfData& H)
{
  Report rep = check_bialgebra(H, true, false);
  const Coalgebra& C = H.coalg;
  std::size_t n = C.dim;
  LinMap id = LinMap::identity(n);
  const LinMap& S = H.antipode;
  LinMap SS = S.after(S);
  LinMap SSS = S.after(SS);
  LinMap e = unit_counit(C, H.one(), n);
  rep.append(prefixed(coalgebra_morphism_report(S, C, C), "antipode "));
  Checker ra("right antipode: id*S = 1eps"), l1("S*(SoS) = 1eps"), l2("SoS = id*1eps"), l3("S*1eps = S"),
      l4("SoSoS = S"), l5("sum S(a1)a2 1 = eps(a)1"), anti("antipode anti-multiplicative");
  for (std::size_t a = 0; a < n; ++a) {
    QVec ea = H.one() * C.eps[a];
    ra.expect_eq(convolve_at(H, id, S, a), ea, {a}, C.labels);
    l1.expect_eq(convolve_at(H, S, SS, a), ea, {a}, C.labels);
    l2.expect_eq(SS.col(a), convolve_at(H, id, e, a), {a}, C.labels);
    l3.expect_eq(convolve_at(H, S, e, a), S.col(a), {a}, C.labels);
    l4.expect_eq(SSS.col(a), S.col(a), {a}, C.labels);
    l5.expect_eq(H.mul(convolve_at(H, S, id, a), H.one()), ea, {a}, C.labels);
    for (std::size_t b = 0; b < n; ++b) {
      if (!H.within({a, b})) continue;
      anti.expect_eq(S(H.mult.at(a, b)), H.mul(S.col(b), S.col(a)), {a, b}, C.labels);
    }
  }
  for (auto* c : {&ra, &l1, &l2, &l3, &l4, &l5, &anti}) rep.checks.push_back(c->result());
  return rep;
}

/// (A, -|, S) with a |- replaced by the opposite product is a right Hopf algebra exactly when
/// (A, -|, S) is a left Hopf algebra.
inline Report left_hopf_report(const HopfData& H) { return prefixed(right_hopf_report(opposite(H)), "opposite: "); }

/// Group-like right Hopf algebra K[G x E] with (g,x)(h,y) = (gh,y) and unit (e, base).
inline HopfData right_group_hopf(const FiniteGroup& G, const PointedSet& E)
{
  std::size_t m = E.size();
  if (m == 0 || E.base >= m) throw std::invalid_argument("pointed set needs a base point");
  std::size_t n = G.size() * m;
  auto idx = [m](std::size_t g, std::size_t x) { return g * m + x; };
  HopfData H;
  H.coalg.dim = n;
  for (std::size_t g = 0; g < G.size(); ++g)
    for (std::size_t x = 0; x < m; ++x) {
      std::size_t i = idx(g, x);
      H.coalg.delta.push_back(QVec::basis(i * n + i));
      H.coalg.eps.push_back(1);
      H.coalg.labels.push_back("(" + G.label(g) + "," + E.elements[x] + ")");
      H.coalg.degree.push_back(0);
    }
  H.coalg.unit = QVec::basis(idx(G.identity(), E.base));
  H.mult = Bilinear(n, n, n);
  H.antipode = LinMap(n, n);
  for (std::size_t g = 0; g < G.size(); ++g)
    for (std::size_t x = 0; x < m; ++x) {
      H.antipode.set_col(idx(g, x), QVec::basis(idx(G.inv(g), E.base)));
      for (std::size_t h = 0; h < G.size(); ++h)
        for (std::size_t y = 0; y < m; ++y) H.mult.set(idx(g, x), idx(h, y), QVec::basis(idx(G.mul(g, h), y)));
    }
  return H;
}

/// A coalgebra with mu(a,b) = eps(a)b and S = 1eps.
inline HopfData left_trivial_right_hopf(const Coalgebra& C)
{
  std::size_t n = C.dim;
  HopfData H;
  H.coalg = C;
  H.mult = Bilinear(n, n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) H.mult.set(a, b, QVec::basis(b) * C.eps[a]);
  H.antipode = unit_counit(C, C.unit, n);
  return H;
}

/// Kernel of x -> sum x1 x2 - x.
inline std::vector<QVec> generalized_idempotents(const HopfData& H)
{
  std::size_t n = H.dim();
  LinMap m(n, n);
  for (std::size_t a = 0; a < n; ++a)
    m.set_col(a, sum_coproduct(H.coalg, a, [&](std::size_t i, std::size_t j) { return H.mult.at(i, j); }) -
                     QVec::basis(a));
  return echelon_basis(kernel_basis(m), n);
}

/// Sum over the three coproduct legs of x, arranged by `order`, of (l 1) (x) (S(m) r).
inline LinMap suschkewitsch_map(const HopfData& H, std::array<int, 3> order = {0, 1, 2})
{
  std::size_t n = H.dim();
  LinMap psi(n, n * n);
  for (std::size_t x = 0; x < n; ++x) {
    QVec acc;
    for (const auto& t : coproduct3(H.coalg, x)) {
      std::array<std::size_t, 3> legs{t.a1, t.a2, t.a3};
      QVec left = H.mul(QVec::basis(legs[order[0]]), H.one());
      QVec right = H.mul(H.antipode.col(legs[order[1]]), QVec::basis(legs[order[2]]));
      acc.axpy(t.c, tensor(left, right, n));
    }
    psi.set_col(x, acc);
  }
  return psi;
}

/// H = H1 (x) E_H with H1 = H.1 and E_H the image of S*id. The full kernel of
/// x -> sum x1 x2 - x can be larger (c = (123) + (132) in K[S3]).
/// psi maps into the pair basis of H (x) H; its inverse is the product.
struct Suschkewitsch {
  std::vector<QVec> h1;
  std::vector<QVec> idem;
  LinMap psi;
  Report report;
};

inline Suschkewitsch suschkewitsch(const HopfData& H, bool throw_on_failure = true)
{
  const Coalgebra& C = H.coalg;
  std::size_t n = C.dim;
  const LinMap& S = H.antipode;
  LinMap id = LinMap::identity(n);
  Suschkewitsch out;
  std::vector<QVec> img;
  for (std::size_t a = 0; a < n; ++a) img.push_back(H.mul(QVec::basis(a), H.one()));
  out.h1 = echelon_basis(img, n);
  std::vector<QVec> iota;
  for (std::size_t a = 0; a < n; ++a) iota.push_back(convolve_at(H, S, id, a));
  out.idem = echelon_basis(iota, n);
  out.psi = suschkewitsch_map(H);
  Subspace H1(n, out.h1), E(n, out.idem);
  auto deg = [&](const QVec& v) { return vec_degree(C.degree, v); };
  auto fits = [&](int d) { return H.cap < 0 || d <= H.cap; };

  Checker h1closed("H.1 closed under product"), h1unit("1 is a unit on H.1"), h1S("S preserves H.1"),
      h1anti("H.1 left antipode: S*id = 1eps");
  h1unit.expect(H1.contains(H.one()), {}, [&] { return std::pair{H.show(H.one()), std::string("in H.1")}; });
  for (std::size_t i = 0; i < out.h1.size(); ++i) {
    const QVec& a = out.h1[i];
    h1unit.expect_eq(H.mul(a, H.one()), a, {i}, C.labels);
    QVec sa = S(a);
    h1S.expect(H1.contains(sa), {i}, [&] { return std::pair{H.show(sa), std::string("in H.1")}; });
    QVec conv;
    for (const auto& [k, c] : a) conv.axpy(c, convolve_at(H, S, id, k));
    h1anti.expect_eq(conv, H.one() * C.counit(a), {i}, C.labels);
    for (std::size_t j = 0; j < out.h1.size(); ++j) {
      if (!fits(deg(a) + deg(out.h1[j]))) continue;
      QVec p = H.mul(a, out.h1[j]);
      h1closed.expect(H1.contains(p), {i, j}, [&] { return std::pair{H.show(p), std::string("in H.1")}; });
    }
  }

  std::vector<QVec> ee;
  for (const auto& u : out.idem)
    for (const auto& v : out.idem) ee.push_back(tensor(u, v, n));
  Subspace EE(n * n, ee);
  std::vector<QVec> he;
  for (const auto& u : out.h1)
    for (const auto& v : out.idem) he.push_back(tensor(u, v, n));
  Subspace HE(n * n, he);

  Checker esub("E_H subcoalgebra"), eltriv("E_H product left-trivial"), eS("S on E_H is 1eps"),
      eform("c = sum S(c1)c2 on E_H"), eunit("E_H generalized left units"), eimg("E_H generalized idempotents");
  for (std::size_t i = 0; i < out.idem.size(); ++i) {
    const QVec& c = out.idem[i];
    QVec dc = C.coproduct(c);
    esub.expect(EE.contains(dc), {i}, [&] { return std::pair{show_pair(C, dc), std::string("in E (x) E")}; });
    eS.expect_eq(S(c), H.one() * C.counit(c), {i}, C.labels);
    eimg.expect_eq(H.mult.on_pairs(dc), c, {i}, C.labels);
    QVec sc;
    for (const auto& [k, x] : c) sc.axpy(x, convolve_at(H, S, id, k));
    eform.expect_eq(sc, c, {i}, C.labels);
    for (std::size_t y = 0; y < n; ++y) {
      if (!fits(deg(c) + C.degree_of(y))) continue;
      eunit.expect_eq(H.mul(c, QVec::basis(y)), QVec::basis(y) * C.counit(c), {i, y}, C.labels);
    }
    for (std::size_t j = 0; j < out.idem.size(); ++j) {
      if (!fits(deg(c) + deg(out.idem[j]))) continue;
      eltriv.expect_eq(H.mul(c, out.idem[j]), out.idem[j] * C.counit(c), {i, j}, C.labels);
    }
  }

  Checker lands("Psi lands in H.1 (x) E_H"), left_inv("Psi^-1 o Psi = id"), right_inv("Psi o Psi^-1 = id"),
      mult("Psi multiplicative"), anti("Psi intertwines antipodes"), order("Psi independent of coproduct leg order");
  Bilinear pair_mult(n * n, n * n, n * n);
  auto factor_product = [&](const QVec& s, const QVec& t) {
    QVec r;
    for (const auto& [p, x] : s)
      for (const auto& [q, y] : t)
        r.axpy(x * y, tensor(H.mult.at(p / n, q / n), H.mult.at(p % n, q % n), n));
    return r;
  };
  for (std::size_t x = 0; x < n; ++x) {
    const QVec& px = out.psi.col(x);
    lands.expect(HE.contains(px), {x}, [&] { return std::pair{show_pair(C, px), std::string("in H.1 (x) E_H")}; });
    left_inv.expect_eq(H.mult.on_pairs(px), QVec::basis(x), {x}, C.labels);
    QVec sl = out.psi(S.col(x)), sr = apply_pair(S, S, px);
    anti.expect(sl == sr, {x}, [&] { return std::pair{show_pair(C, sl), show_pair(C, sr)}; });
    for (std::size_t y = 0; y < n; ++y) {
      if (!H.within({x, y})) continue;
      QVec l = out.psi(H.mult.at(x, y)), r = factor_product(px, out.psi.col(y));
      mult.expect(l == r, {x, y}, [&] { return std::pair{show_pair(C, l), show_pair(C, r)}; });
    }
  }
  std::array<int, 3> perm{0, 1, 2};
  while (std::next_permutation(perm.begin(), perm.end())) {
    LinMap other = suschkewitsch_map(H, perm);
    for (std::size_t x = 0; x < n; ++x)
      order.expect(other.col(x) == out.psi.col(x), {x, std::size_t(perm[0]), std::size_t(perm[1]), std::size_t(perm[2])},
                   [&] { return std::pair{show_pair(C, other.col(x)), show_pair(C, out.psi.col(x))}; });
  }
  for (std::size_t i = 0; i < out.h1.size(); ++i)
    for (std::size_t j = 0; j < out.idem.size(); ++j) {
      if (!fits(deg(out.h1[i]) + deg(out.idem[j]))) continue;
      QVec t = tensor(out.h1[i], out.idem[j], n);
      QVec back = out.psi(H.mul(out.h1[i], out.idem[j]));
      right_inv.expect(back == t, {i, j}, [&] { return std::pair{show_pair(C, back), show_pair(C, t)}; });
    }
  for (auto* c : {&h1closed, &h1unit, &h1S, &h1anti, &esub, &eltriv, &eS, &eform, &eunit, &eimg, &lands, &left_inv,
                  &right_inv, &mult, &anti, &order})
    out.report.checks.push_back(c->result());
  if (throw_on_failure)
    for (const auto& c : out.report.checks)
      if (!c.passed) throw DecompositionFailure(c.name, c.witness, c.lhs, c.rhs);
  return out;
}

// ---------------------------------------------------------------------------
// Dialgebras

/// Two products on a space with a distinguished element; `cap` >= 0 restricts to basis tuples
/// of total degree <= cap.
struct Dialgebra {
  std::size_t dim = 0;
  Bilinear vdash, dashv;
  QVec unit;
  std::vector<std::string> labels;
  std::vector<int> degree;
  int cap = -1;

  QVec left(const QVec& a, const QVec& b) const { return vdash(a, b); }
  QVec right(const QVec& a, const QVec& b) const { return dashv(a, b); }
  int degree_of(std::size_t i) const { return degree.empty() ? 0 : degree.at(i); }
  bool within(std::initializer_list<std::size_t> idx) const
  {
    if (cap < 0) return true;
    int d = 0;
    for (auto i : idx) d += degree_of(i);
    return d <= cap;
  }
  bool fits(const QVec& a, const QVec& b) const
  {
    return cap < 0 || vec_degree(degree, a) + vec_degree(degree, b) <= cap;
  }
  std::string show(const QVec& v) const { return to_string(v, labels); }
  /// [a,b] = a |- b - b -| a
  QVec bracket(const QVec& a, const QVec& b) const { return vdash(a, b) - dashv(b, a); }
};

/// A dialgebra whose carrier is a cocommutative coalgebra, with antipode S.
struct HopfDialgebra : Dialgebra {
  Coalgebra carrier;
  LinMap antipode;

  HopfData right_hopf() const { return HopfData{carrier, vdash, antipode, cap}; }
  HopfData left_hopf() const { return HopfData{carrier, dashv, antipode, cap}; }
};

inline HopfDialgebra make_hopf_dialgebra(const Coalgebra& C, Bilinear vdash, Bilinear dashv, LinMap S, int cap)
{
  HopfDialgebra d;
  d.dim = C.dim;
  d.vdash = std::move(vdash);
  d.dashv = std::move(dashv);
  d.vdash.cap = d.dashv.cap = cap;
  d.unit = C.unit;
  d.labels = C.labels;
  d.degree = C.degree;
  d.cap = cap;
  d.carrier = C;
  d.antipode = std::move(S);
  return d;
}

/// A Hopf algebra with |- = -| = its product.
inline HopfDialgebra hopf_as_dialgebra(const HopfData& H)
{
  return make_hopf_dialgebra(H.coalg, H.mult, H.mult, H.antipode, H.cap);
}

/// Associativity of both products, the three mixed identities, bar-unit and balance.
inline Report dialgebra_report(const Dialgebra& d)
{
  std::size_t n = d.dim;
  Checker av("|- associative"), ad("-| associative"), m1("(a|-b)|-c = (a-|b)|-c"), m2("a-|(b-|c) = a-|(b|-c)"),
      m3("(a|-b)-|c = a|-(b-|c)"), bl("bar-unit: 1|-a = a"), br("bar-unit: a-|1 = a"), bal("balanced: a|-1 = 1-|a");
  for (std::size_t a = 0; a < n; ++a) {
    QVec ea = QVec::basis(a);
    bl.expect_eq(d.left(d.unit, ea), ea, {a}, d.labels);
    br.expect_eq(d.right(ea, d.unit), ea, {a}, d.labels);
    bal.expect_eq(d.left(ea, d.unit), d.right(d.unit, ea), {a}, d.labels);
    for (std::size_t b = 0; b < n; ++b) {
      if (!d.within({a, b})) continue;
      const QVec& ab_v = d.vdash.at(a, b);
      const QVec& ab_d = d.dashv.at(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        if (!d.within({a, b, c})) continue;
        QVec ec = QVec::basis(c);
        const QVec& bc_v = d.vdash.at(b, c);
        const QVec& bc_d = d.dashv.at(b, c);
        QVec vv = d.left(ab_v, ec), dv = d.left(ab_d, ec);
        QVec a_vv = d.left(ea, bc_v), a_dd = d.right(ea, bc_d), a_dv = d.right(ea, bc_v);
        av.expect_eq(vv, a_vv, {a, b, c}, d.labels);
        ad.expect_eq(d.right(ab_d, ec), a_dd, {a, b, c}, d.labels);
        m1.expect_eq(vv, dv, {a, b, c}, d.labels);
        m2.expect_eq(a_dd, a_dv, {a, b, c}, d.labels);
        m3.expect_eq(d.right(ab_v, ec), d.left(ea, bc_d), {a, b, c}, d.labels);
      }
    }
  }
  Report rep;
  for (auto* c : {&av, &ad, &m1, &m2, &m3, &bl, &br, &bal}) rep.checks.push_back(c->result());
  return rep;
}

/// Dialgebra axioms, (A,|-,S) right Hopf, (A,-|,S) left Hopf.
inline Report hopf_dialgebra_report(const HopfDialgebra& d)
{
  Report rep = dialgebra_report(d);
  rep.append(prefixed(right_hopf_report(d.right_hopf()), "|-: "));
  rep.append(prefixed(left_hopf_report(d.left_hopf()), "-|: "));
  return rep;
}

inline HopfDialgebra certify(HopfDialgebra d)
{
  hopf_dialgebra_report(d).raise_first();
  return d;
}

/// Primitives with the bracket a |- b - b -| a, on the echelon basis of the primitive space.
inline LeibnizAlgebra dialgebra_leibniz(const HopfDialgebra& d)
{
  auto prim = echelon_basis(primitives(d.carrier), d.dim);
  Subspace P(d.dim, prim);
  std::size_t m = prim.size();
  std::vector<QVec> br(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      QVec v = d.bracket(prim[i], prim[j]);
      auto c = P.coordinates(v);
      if (!c) throw AxiomViolation("primitives closed under the bracket", {i, j}, d.show(v), "a primitive");
      QVec coords;
      for (std::size_t t = 0; t < m; ++t) coords.add(t, (*c)[t]);
      br[i * m + j] = coords;
    }
  std::vector<std::string> labels;
  for (const auto& p : prim) labels.push_back(d.show(p));
  return check_leibniz(m, br, labels);
}

/// a |> b = sum (a1 |- b) -| S(a2).
inline RackBialgebra hopf_dialgebra_rack(const HopfDialgebra& d)
{
  std::size_t n = d.dim;
  RackBialgebra rb{d.carrier, Bilinear(n, n, n), d.cap};
  rb.mu.cap = d.cap;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!d.within({a, b})) continue;
      rb.mu.set(a, b, sum_coproduct(d.carrier, a, [&](std::size_t a1, std::size_t a2) {
                  return d.right(d.vdash.at(a1, b), d.antipode.col(a2));
                }));
    }
  return certify(rb);
}

/// |> is a module action for both products and acts by algebra maps on both.
inline Report module_dialgebra_report(const HopfDialgebra& d, const RackBialgebra& rb)
{
  std::size_t n = d.dim;
  const Coalgebra& C = d.carrier;
  Checker mv("a|>(b|>c) = (a|-b)|>c"), md("a|>(b|>c) = (a-|b)|>c"), av("a|>(b|-c) = sum (a1|>b)|-(a2|>c)"),
      ad("a|>(b-|c) = sum (a1|>b)-|(a2|>c)");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (!d.within({a, b, c})) continue;
        QVec ec = QVec::basis(c);
        QVec lhs = rb.op(QVec::basis(a), rb.op(b, c));
        mv.expect_eq(lhs, rb.op(d.vdash.at(a, b), ec), {a, b, c}, d.labels);
        md.expect_eq(lhs, rb.op(d.dashv.at(a, b), ec), {a, b, c}, d.labels);
        QVec rv = sum_coproduct(C, a, [&](std::size_t a1, std::size_t a2) {
          return d.left(rb.op(a1, b), rb.op(a2, c));
        });
        QVec rd = sum_coproduct(C, a, [&](std::size_t a1, std::size_t a2) {
          return d.right(rb.op(a1, b), rb.op(a2, c));
        });
        av.expect_eq(rb.op(QVec::basis(a), d.vdash.at(b, c)), rv, {a, b, c}, d.labels);
        ad.expect_eq(rb.op(QVec::basis(a), d.dashv.at(b, c)), rd, {a, b, c}, d.labels);
      }
  Report rep;
  for (auto* ch : {&mv, &md, &av, &ad}) rep.checks.push_back(ch->result());
  return rep;
}

/// B (x) B over a unital algebra B with Phi = product, b.(b1 (x) b2).b' = bb1 (x) b2b'.
inline Dialgebra tensor_square_dialgebra(const HopfData& B)
{
  std::size_t m = B.dim(), n = m * m;
  Dialgebra d;
  d.dim = n;
  d.vdash = Bilinear(n, n, n);
  d.dashv = Bilinear(n, n, n);
  d.unit = tensor(B.one(), B.one(), m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) d.labels.push_back(B.coalg.label(i) + "(x)" + B.coalg.label(j));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const QVec& phx = B.mult.at(x / m, x % m);
      const QVec& phy = B.mult.at(y / m, y % m);
      d.vdash.set(x, y, tensor(B.mul(phx, QVec::basis(y / m)), QVec::basis(y % m), m));
      d.dashv.set(x, y, tensor(QVec::basis(x / m), B.mul(QVec::basis(x % m), phy), m));
    }
  return d;
}

// ---------------------------------------------------------------------------
// B (x) H

/// Coalgebra spanned by a subset of basis elements; the subset must be closed under coproduct.
inline Coalgebra restrict_coalgebra(const Coalgebra& C, const std::vector<std::size_t>& keep,
                                    std::vector<std::size_t>& pos)
{
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  pos.assign(C.dim, none);
  for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = i;
  Coalgebra R;
  R.dim = keep.size();
  for (auto k : keep) {
    QVec d;
    for (const auto& [idx, c] : C.delta[k]) {
      std::size_t p = pos[idx / C.dim], q = pos[idx % C.dim];
      if (p == none || q == none) throw BasisMismatch("basis subset is not a subcoalgebra");
      d.add(p * R.dim + q, c);
    }
    R.delta.push_back(d);
    R.eps.push_back(C.eps[k]);
    R.labels.push_back(C.label(k));
    R.degree.push_back(C.degree_of(k));
  }
  for (const auto& [i, c] : C.unit) {
    if (pos[i] == none) throw BasisMismatch("unit outside basis subset");
    R.unit.add(pos[i], c);
  }
  return R;
}

/// The Hopf dialgebra B (x) H of an augmented rack bialgebra, on basis pairs of degree <= cap.
struct AugmentedDialgebra {
  HopfDialgebra d;
  std::size_t nb = 0, nh = 0;
  std::vector<std::size_t> pos; ///< (b*nh + u) -> carrier index, or max for dropped pairs
  LinMap phi;                   ///< Phi(b (x) h) = Phi_B(b) h into H

  QVec embed(const QVec& b, const QVec& u) const
  {
    QVec r;
    for (const auto& [i, x] : b)
      for (const auto& [j, y] : u) {
        std::size_t p = pos.at(i * nh + j);
        if (p == std::numeric_limits<std::size_t>::max()) throw DegreeCapExceeded(d.cap + 1, d.cap);
        r.add(p, x * y);
      }
    return r;
  }
};

inline AugmentedDialgebra dialgebra_from_augmented(const AugmentedRackBialgebra& A)
{
  const Coalgebra& B = A.B;
  const HopfData& H = A.H;
  std::size_t nb = B.dim, nh = H.dim();
  int cap = A.cap;
  Coalgebra full = tensor_coalgebra(B, H.coalg);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < full.dim; ++i)
    if (cap < 0 || full.degree_of(i) <= cap) keep.push_back(i);
  AugmentedDialgebra out;
  out.nb = nb;
  out.nh = nh;
  Coalgebra C = restrict_coalgebra(full, keep, out.pos);
  std::size_t n = C.dim;
  auto reindex = [&](const QVec& v) {
    QVec r;
    for (const auto& [i, c] : v) {
      std::size_t p = out.pos[i];
      if (p == std::numeric_limits<std::size_t>::max()) throw DegreeCapExceeded(cap + 1, cap);
      r.add(p, c);
    }
    return r;
  };
  // Phi(b (x) u) as an element of H
  std::vector<QVec> phi(n);
  out.phi = LinMap(n, nh);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t b = keep[x] / nh, u = keep[x] % nh;
    phi[x] = H.mul(A.phi.col(b), QVec::basis(u));
    out.phi.set_col(x, phi[x]);
  }
  // h'.(b (x) u) = sum (h'1.b) (x) (h'2 u)
  auto act_left = [&](const QVec& w, std::size_t y) {
    std::size_t b = keep[y] / nh, u = keep[y] % nh;
    QVec r;
    for (const auto& [i, c] : w)
      for (const auto& [idx, c2] : H.coalg.delta[i])
        r.axpy(c * c2, tensor(A.ell.at(idx / nh).col(b), H.mul(QVec::basis(idx % nh), QVec::basis(u)), nh));
    return reindex(r);
  };
  auto act_right = [&](std::size_t x, const QVec& w) {
    std::size_t b = keep[x] / nh, u = keep[x] % nh;
    return reindex(tensor(QVec::basis(b), H.mul(QVec::basis(u), w), nh));
  };
  Bilinear vdash(n, n, n), dashv(n, n, n);
  LinMap S(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    S.set_col(x, reindex(tensor(B.unit, H.antipode(phi[x]), nh)));
    for (std::size_t y = 0; y < n; ++y) {
      if (cap >= 0 && C.degree_of(x) + C.degree_of(y) > cap) continue;
      vdash.set(x, y, act_left(phi[x], y));
      dashv.set(x, y, act_right(x, phi[y]));
    }
  }
  out.d = make_hopf_dialgebra(C, std::move(vdash), std::move(dashv), std::move(S), cap);
  return out;
}

/// The bracket on Prim(B) + Prim(H) inside B (x) H, and the left-central ideal {x - Phi_B(x)}.
inline Report augmented_bracket_report(const AugmentedRackBialgebra& A, const AugmentedDialgebra& D)
{
  const HopfDialgebra& d = D.d;
  auto pb = echelon_basis(primitives(A.B), A.B.dim);
  auto ph = echelon_basis(primitives(A.H.coalg), A.H.dim());
  QVec oneB = A.B.unit, oneH = A.H.one();
  Checker bb("[x,y] = (Phi_B(x).y) (x) 1"), bh("[x,eta] = 1 (x) [Phi_B(x),eta]"), hb("[xi,y] = (xi.y) (x) 1"),
      hh("[xi,eta] = 1 (x) [xi,eta]"), central("x - Phi_B(x) left central"), ideal("x - Phi_B(x) two-sided ideal");
  auto comm = [&](const QVec& u, const QVec& v) { return A.H.mul(u, v) - A.H.mul(v, u); };
  std::vector<QVec> prim, ideal_gens;
  for (const auto& x : pb) prim.push_back(D.embed(x, oneH));
  for (const auto& xi : ph) prim.push_back(D.embed(oneB, xi));
  for (const auto& x : pb) ideal_gens.push_back(D.embed(x, oneH) - D.embed(oneB, A.phi(x)));
  Subspace I(d.dim, ideal_gens);
  for (std::size_t i = 0; i < pb.size(); ++i) {
    QVec x = D.embed(pb[i], oneH);
    for (std::size_t j = 0; j < pb.size(); ++j)
      bb.expect_eq(d.bracket(x, D.embed(pb[j], oneH)), D.embed(A.act(A.phi(pb[i]), pb[j]), oneH), {i, j}, d.labels);
    for (std::size_t j = 0; j < ph.size(); ++j)
      bh.expect_eq(d.bracket(x, D.embed(oneB, ph[j])), D.embed(oneB, comm(A.phi(pb[i]), ph[j])), {i, j}, d.labels);
  }
  for (std::size_t i = 0; i < ph.size(); ++i) {
    QVec xi = D.embed(oneB, ph[i]);
    for (std::size_t j = 0; j < pb.size(); ++j)
      hb.expect_eq(d.bracket(xi, D.embed(pb[j], oneH)), D.embed(A.act(ph[i], pb[j]), oneH), {i, j}, d.labels);
    for (std::size_t j = 0; j < ph.size(); ++j)
      hh.expect_eq(d.bracket(xi, D.embed(oneB, ph[j])), D.embed(oneB, comm(ph[i], ph[j])), {i, j}, d.labels);
  }
  for (std::size_t i = 0; i < ideal_gens.size(); ++i)
    for (std::size_t j = 0; j < prim.size(); ++j) {
      central.expect_eq(d.bracket(ideal_gens[i], prim[j]), QVec{}, {i, j}, d.labels);
      QVec r = d.bracket(prim[j], ideal_gens[i]);
      ideal.expect(I.contains(r), {j, i}, [&] { return std::pair{d.show(r), std::string("in the ideal")}; });
    }
  Report rep;
  for (auto* c : {&bb, &bh, &hb, &hh, &central, &ideal}) rep.checks.push_back(c->result());
  return rep;
}

/// Span of sum b1 (x) S_H(Phi_B(b2)) over the basis of B.
inline std::vector<QVec> augmented_idempotents(const AugmentedRackBialgebra& A, const AugmentedDialgebra& D)
{
  std::vector<QVec> out;
  LinMap SP = A.H.antipode.after(A.phi);
  for (std::size_t b = 0; b < A.B.dim; ++b) {
    if (D.d.cap >= 0 && A.B.degree_of(b) > D.d.cap) continue;
    QVec v;
    for (const auto& [idx, c] : A.B.delta[b]) v.axpy(c, D.embed(QVec::basis(idx / A.B.dim), SP.col(idx % A.B.dim)));
    out.push_back(v);
  }
  return echelon_basis(out, D.d.dim);
}

// ---------------------------------------------------------------------------
// Structure of a Hopf dialgebra

/// A = E_A (x) H_A for the left Hopf algebra (A,-|,S): E_A the -|-generalized idempotents,
/// H_A = 1 -| A, psi(a) = sum (a1 -| S(a2)) (x) (1 -| a3) on the pair basis.
struct StructureDecomposition {
  std::vector<QVec> idem;
  std::vector<QVec> hopf;
  LinMap psi;
  Report report;
};

inline StructureDecomposition structure_decomposition(const HopfDialgebra& d, bool throw_on_failure = true)
{
  std::size_t n = d.dim;
  const Coalgebra& C = d.carrier;
  Suschkewitsch s = suschkewitsch(opposite(d.left_hopf()), false);
  StructureDecomposition out;
  out.idem = s.idem;
  out.hopf = s.h1;
  out.psi = flip_map(n, n).after(s.psi);
  out.report = prefixed(s.report, "-| ");
  RackBialgebra rb = hopf_dialgebra_rack(d);
  Subspace E(n, out.idem), HA(n, out.hopf);
  auto act = [&](const QVec& h, const QVec& c) { return rb.op(h, c); };
  auto show2 = [&](const QVec& t) { return show_pair(C, t); };

  Checker tv("transferred |-"), td("transferred -|"), ts("transferred antipode"), stable("H_A action preserves E_A");
  for (std::size_t i = 0; i < out.idem.size(); ++i)
    for (std::size_t j = 0; j < out.hopf.size(); ++j) {
      const QVec &c = out.idem[i], &h = out.hopf[j];
      if (!d.fits(c, h)) continue;
      QVec x = d.right(c, h);
      QVec l = out.psi(d.antipode(x)), r = tensor(d.unit, d.antipode(h), n) * C.counit(c);
      ts.expect(l == r, {i, j}, [&] { return std::pair{show2(l), show2(r)}; });
      if (d.fits(h, c)) {
        QVec hc = act(h, c);
        stable.expect(E.contains(hc), {j, i}, [&] { return std::pair{d.show(hc), std::string("in E_A")}; });
      }
      for (std::size_t k = 0; k < out.idem.size(); ++k)
        for (std::size_t m = 0; m < out.hopf.size(); ++m) {
          const QVec &c2 = out.idem[k], &h2 = out.hopf[m];
          if (!d.fits(c2, h2) || !d.fits(x, d.right(c2, h2)) || !d.fits(h, c2) || !d.fits(h, h2)) continue;
          QVec y = d.right(c2, h2);
          QVec lv = out.psi(d.left(x, y));
          QVec rv;
          QVec dh = C.coproduct(h);
          for (const auto& [idx, coef] : dh)
            rv.axpy(coef, tensor(act(QVec::basis(idx / n), c2), d.right(QVec::basis(idx % n), h2), n));
          rv = rv * C.counit(c);
          tv.expect(lv == rv, {i, j, k, m}, [&] { return std::pair{show2(lv), show2(rv)}; });
          QVec ld = out.psi(d.right(x, y)), rd = tensor(c, d.right(h, h2), n) * C.counit(c2);
          td.expect(ld == rd, {i, j, k, m}, [&] { return std::pair{show2(ld), show2(rd)}; });
        }
    }

  Checker pv("1-|(a|-b) = (1-|a)-|(1-|b)"), pd("1-|(a-|b) = (1-|a)-|(1-|b)"), pi("1-|(1-|a) = 1-|a"),
      ponto("1-|A = H_A");
  std::vector<QVec> image;
  for (std::size_t a = 0; a < n; ++a) {
    QVec pa = d.right(d.unit, QVec::basis(a));
    image.push_back(pa);
    pi.expect_eq(d.right(d.unit, pa), pa, {a}, d.labels);
    for (std::size_t b = 0; b < n; ++b) {
      if (!d.within({a, b})) continue;
      QVec pb = d.right(d.unit, QVec::basis(b));
      QVec prod = d.right(pa, pb);
      pv.expect_eq(d.right(d.unit, d.vdash.at(a, b)), prod, {a, b}, d.labels);
      pd.expect_eq(d.right(d.unit, d.dashv.at(a, b)), prod, {a, b}, d.labels);
    }
  }
  Subspace Im(n, image);
  ponto.expect(Im.same_as(HA), {}, [&] {
    return std::pair{"dim " + std::to_string(Im.dim()), "dim " + std::to_string(HA.dim())};
  });

  // Covez splitting on primitives
  auto prim = echelon_basis(primitives(C), n);
  auto pe = intersect(prim, out.idem, n);
  auto ph = intersect(prim, out.hopf, n);
  Checker split("Prim(A) = Prim(E_A) + Prim(H_A)"), covez("Covez splitting");
  split.expect(pe.size() + ph.size() == prim.size(), {}, [&] {
    return std::pair{std::to_string(pe.size()) + " + " + std::to_string(ph.size()), std::to_string(prim.size())};
  });
  std::vector<std::pair<QVec, bool>> gens;
  for (const auto& z : pe) gens.push_back({z, false});
  for (const auto& xi : ph) gens.push_back({xi, true});
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const auto& [u, uh] = gens[i];
      const auto& [v, vh] = gens[j];
      if (!d.fits(u, v)) continue;
      QVec expect;
      if (uh) expect = vh ? d.bracket(u, v) : act(u, v);
      QVec got = d.bracket(u, v);
      covez.expect_eq(got, expect, {i, j}, d.labels);
      if (uh && vh)
        covez.expect(HA.contains(got), {i, j}, [&] { return std::pair{d.show(got), std::string("in H_A")}; });
      if (uh && !vh)
        covez.expect(E.contains(got), {i, j}, [&] { return std::pair{d.show(got), std::string("in E_A")}; });
    }
  for (auto* c : {&tv, &td, &ts, &stable, &pv, &pd, &pi, &ponto, &split, &covez}) out.report.checks.push_back(c->result());
  if (throw_on_failure)
    for (const auto& c : out.report.checks)
      if (!c.passed) throw DecompositionFailure(c.name, c.witness, c.lhs, c.rhs);
  return out;
}

// ---------------------------------------------------------------------------
// Universal dialgebra

/// Ud~(h) = UAR(h) (x) U(h/Q(h)) with UAR(h) = K1 + h, up to total degree cap.
struct UniversalDialgebra {
  LeibnizAlgebra h;
  std::shared_ptr<const LeibnizEnvelope> env;
  AugmentedRackBialgebra augmented;
  AugmentedDialgebra tensor;

  const HopfDialgebra& dialgebra() const { return tensor.d; }
  /// x (x) 1 for x in h.
  QVec generator(std::size_t i) const { return tensor.embed(QVec::basis(env->sym().var(i)), env->enveloping().one()); }
  /// 1 (x) u for a PBW basis element u.
  QVec bar_part(std::size_t u) const { return tensor.embed(QVec::basis(env->sym().one()), QVec::basis(u)); }
  /// Indices of basis elements x (x) u with x in h.
  std::vector<std::size_t> ud_part() const
  {
    std::vector<std::size_t> out;
    const auto& S = env->sym();
    for (std::size_t i = 0; i < h.dim(); ++i)
      for (std::size_t u = 0; u < tensor.nh; ++u) {
        std::size_t p = tensor.pos[S.var(i) * tensor.nh + u];
        if (p != std::numeric_limits<std::size_t>::max()) out.push_back(p);
      }
    return out;
  }
};

inline UniversalDialgebra universal_dialgebra(const LeibnizAlgebra& h, unsigned cap)
{
  if (cap < 1) throw DegreeCapExceeded(1, static_cast<int>(cap));
  UniversalDialgebra u{h, std::make_shared<const LeibnizEnvelope>(h, squares_ideal(h), 1, cap), {}, {}};
  u.augmented = augmented_from_envelope(*u.env);
  u.tensor = dialgebra_from_augmented(u.augmented);
  return u;
}

/// f(a |- b) = f(a) |- f(b), f(a -| b) = f(a) -| f(b), f(1) = 1 on the basis of the source.
inline Report dialgebra_morphism_report(const LinMap& f, const Dialgebra& src, const Dialgebra& dst)
{
  Checker v("morphism: |-"), dd("morphism: -|"), u("morphism: bar-unit");
  u.expect_eq(f(src.unit), dst.unit, {}, dst.labels);
  for (std::size_t a = 0; a < src.dim; ++a)
    for (std::size_t b = 0; b < src.dim; ++b) {
      if (!src.within({a, b})) continue;
      v.expect_eq(f(src.vdash.at(a, b)), dst.left(f.col(a), f.col(b)), {a, b}, dst.labels);
      dd.expect_eq(f(src.dashv.at(a, b)), dst.right(f.col(a), f.col(b)), {a, b}, dst.labels);
    }
  return Report{{v.result(), dd.result(), u.result()}};
}

/// The extension of a Leibniz morphism phi: h -> A^- (columns = images of the basis of h) to
/// Ud~(h) -> A: 1 (x) v -> U(phibar)(v), x (x) v -> phi(x) -| U(phibar)(v), where
/// phibar(p(x)) = 1 -| phi(x) and U(phibar) multiplies letters with -|.
inline LinMap induced_morphism(const UniversalDialgebra& U, const Dialgebra& A, const LinMap& phi)
{
  const LeibnizAlgebra& h = U.h;
  if (phi.dom() != h.dim() || phi.cod() != A.dim) throw BasisMismatch("phi shape");
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < h.dim(); ++j) {
      QVec l = phi(h.bracket(i, j));
      QVec r = A.bracket(phi.col(i), phi.col(j));
      if (l != r) throw AxiomViolation("phi is a Leibniz morphism", {i, j}, A.show(l), A.show(r));
    }
  const QuotientLie& q = U.env->quotient();
  for (std::size_t k = 0; k < q.ideal.span.dim(); ++k) {
    QVec z = A.right(A.unit, phi(q.ideal.span.basis()[k]));
    if (!z.empty()) throw AxiomViolation("1 -| phi vanishes on Q(h)", {k}, A.show(z), "0");
  }
  std::vector<QVec> bar(q.dim());
  for (std::size_t a = 0; a < q.dim(); ++a) bar[a] = A.right(A.unit, phi(q.lift_vector(a)));
  const EnvelopingAlgebra& Uh = U.env->enveloping();
  std::vector<QVec> Ubar(Uh.dim());
  for (std::size_t u = 0; u < Uh.dim(); ++u) {
    QVec r = A.unit;
    for (auto letter : Uh.word(u)) r = A.right(r, bar[letter]);
    Ubar[u] = r;
  }
  const AugmentedDialgebra& T = U.tensor;
  const SymCoalgebra& S = U.env->sym();
  LinMap out(T.d.dim, A.dim);
  std::vector<QVec> head(T.nb);
  head[S.one()] = A.unit;
  for (std::size_t i = 0; i < h.dim(); ++i) head[S.var(i)] = phi.col(i);
  for (std::size_t b = 0; b < T.nb; ++b)
    for (std::size_t u = 0; u < T.nh; ++u) {
      std::size_t p = T.pos[b * T.nh + u];
      if (p == std::numeric_limits<std::size_t>::max()) continue;
      out.set_col(p, b == S.one() ? Ubar[u] : A.right(head[b], Ubar[u]));
    }
  return out;
}

/// Smallest subspace containing `gens` and closed under |- and -| (products past the cap skipped).
inline Subspace generated_subdialgebra(const Dialgebra& d, const std::vector<QVec>& gens)
{
  Subspace S(d.dim);
  std::vector<QVec> todo;
  for (const auto& g : gens)
    if (S.add(g)) todo.push_back(g);
  while (!todo.empty()) {
    std::vector<QVec> next;
    std::vector<QVec> current = S.basis();
    for (const auto& a : todo)
      for (const auto& b : current) {
        if (d.fits(a, b))
          for (const QVec& p : {d.left(a, b), d.right(a, b)})
            if (S.add(p)) next.push_back(p);
        if (d.fits(b, a))
          for (const QVec& p : {d.left(b, a), d.right(b, a)})
            if (S.add(p)) next.push_back(p);
      }
    todo = std::move(next);
  }
  return S;
}

} // namespace rackbi
