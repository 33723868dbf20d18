#pragma once

#include "enveloping.hpp"
#include "finite.hpp"
#include "hopf.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace rackbi {

/// Coalgebra with a product a |> b = mu(a,b). `cap` >= 0 restricts checks and products
/// to basis tuples of total degree <= cap.
struct RackBialgebra {
  Coalgebra carrier;
  Bilinear mu;
  int cap = -1;
  bool certified = false;

  std::size_t dim() const { return carrier.dim; }
  QVec op(const QVec& a, const QVec& b) const { return mu(a, b); }
  QVec op(std::size_t a, std::size_t b) const { return mu.at(a, b); }
  bool within(std::initializer_list<std::size_t> idx) const { return within_cap(carrier, cap, idx); }
  std::string show(const QVec& v) const { return carrier.show(v); }
};

/// The product axioms; each named check keeps its own witness.
inline Report rack_bialgebra_report(const RackBialgebra& rb)
{
  const Coalgebra& C = rb.carrier;
  std::size_t n = C.dim;
  Report rep = check_coalgebra(C, false);
  Checker morph("mu coalgebra morphism"), counit("mu counit"), unit("mu unit"), lu("left unit"), ru("right unit"),
      sd("self-distributivity");

  QVec u2 = rb.mu(C.unit, C.unit);
  unit.expect_eq(u2, C.unit, {}, C.labels);
  for (std::size_t a = 0; a < n; ++a) {
    if (rb.within({a})) {
      lu.expect_eq(rb.mu(C.unit, QVec::basis(a)), QVec::basis(a), {a}, C.labels);
      ru.expect_eq(rb.mu(QVec::basis(a), C.unit), C.unit * C.eps[a], {a}, C.labels);
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (!rb.within({a, b})) continue;
      const QVec& ab = rb.op(a, b);
      QVec lhs = C.coproduct(ab);
      QVec rhs;
      for (const auto& [i, x] : C.delta[a])
        for (const auto& [j, y] : C.delta[b]) rhs.axpy(x * y, tensor(rb.op(i / n, j / n), rb.op(i % n, j % n), n));
      morph.expect(lhs == rhs, {a, b}, [&] { return std::pair{show_pair(C, lhs), show_pair(C, rhs)}; });
      Q el = C.counit(ab), er = C.eps[a] * C.eps[b];
      counit.expect(el == er, {a, b}, [&] { return std::pair{pretty(el), pretty(er)}; });
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (!rb.within({a, b, c})) continue;
        QVec lhs = rb.mu(QVec::basis(a), rb.op(b, c));
        QVec rhs;
        for (const auto& [idx, x] : C.delta[a]) rhs.axpy(x, rb.mu(rb.op(idx / n, b), rb.op(idx % n, c)));
        sd.expect_eq(lhs, rhs, {a, b, c}, C.labels);
      }
  for (auto* chk : {&morph, &counit, &unit, &lu, &ru, &sd}) rep.checks.push_back(chk->result());
  return rep;
}

/// Exhaustive axiom check on basis elements; throws AxiomViolation on the first failure.
inline RackBialgebra certify(RackBialgebra rb)
{
  rack_bialgebra_report(rb).raise_first();
  rb.certified = true;
  return rb;
}

/// a |> b = eps(a) b.
inline RackBialgebra trivial_rack_bialgebra(const Coalgebra& C)
{
  RackBialgebra rb{C, Bilinear(C.dim, C.dim, C.dim)};
  for (std::size_t a = 0; a < C.dim; ++a)
    for (std::size_t b = 0; b < C.dim; ++b) rb.mu.set(a, b, QVec::basis(b) * C.eps[a]);
  return certify(rb);
}

/// Set-like coalgebra K[X] on a finite set with base point.
inline Coalgebra setlike_coalgebra(const std::vector<std::string>& labels, std::size_t base)
{
  Coalgebra C;
  std::size_t n = labels.size();
  C.dim = n;
  for (std::size_t x = 0; x < n; ++x) {
    C.delta.push_back(QVec::basis(x * n + x));
    C.eps.push_back(1);
    C.degree.push_back(0);
  }
  C.labels = labels;
  C.unit = QVec::basis(base);
  return C;
}

/// K[X] for a finite pointed rack.
inline RackBialgebra rack_group_algebra(const FiniteRack& X)
{
  std::size_t n = X.size();
  RackBialgebra rb{setlike_coalgebra(X.labels(), X.unit()), Bilinear(n, n, n)};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) rb.mu.set(x, y, QVec::basis(X.op(x, y)));
  return certify(rb);
}

/// UR(h) = K1 + h with mu((l1+x),(l'1+x')) = l l' 1 + l x' + [x,x'].
inline RackBialgebra ur(const LeibnizAlgebra& h)
{
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < h.dim(); ++i) labels.push_back(h.label(i));
  SymCoalgebra S(h.dim(), 1, labels);
  std::size_t n = S.dim();
  RackBialgebra rb{S.coalgebra(), Bilinear(n, n, n)};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      QVec v;
      if (a == S.one()) v = QVec::basis(b);
      else if (b != S.one()) v = S.embed(h.bracket(a - 1, b - 1));
      rb.mu.set(a, b, v);
    }
  return certify(rb);
}

/// h |> h' = ad_h(h') on a (possibly capped) cocommutative Hopf algebra.
inline RackBialgebra hopf_adjoint(const HopfData& H)
{
  std::size_t n = H.dim();
  RackBialgebra rb{H.coalg, Bilinear(n, n, n), H.cap};
  rb.mu.cap = H.cap;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (H.within({a, b})) rb.mu.set(a, b, adjoint(H, a, QVec::basis(b)));
  return certify(rb);
}

/// Delta f = (f (x) f) Delta, eps f = eps, f(1) = 1 on the basis.
inline Report coalgebra_morphism_report(const LinMap& f, const Coalgebra& A, const Coalgebra& B)
{
  Checker d("coalgebra morphism: coproduct"), e("coalgebra morphism: counit"), u("coalgebra morphism: unit");
  for (std::size_t a = 0; a < A.dim; ++a) {
    QVec l = B.coproduct(f.col(a));
    QVec r = apply_pair(f, f, A.delta[a]);
    d.expect(l == r, {a}, [&] { return std::pair{show_pair(B, l), show_pair(B, r)}; });
    Q el = B.counit(f.col(a));
    e.expect(el == A.eps[a], {a}, [&] { return std::pair{pretty(el), pretty(A.eps[a])}; });
  }
  u.expect_eq(f(A.unit), B.unit, {}, B.labels);
  return Report{{d.result(), e.result(), u.result()}};
}

/// mu_f(a,b) = f(a) |> b for a coalgebra endomorphism f with f(a |> b) = a |> f(b).
inline RackBialgebra gauge(const RackBialgebra& rb, const LinMap& f)
{
  std::size_t n = rb.dim();
  if (f.dom() != n || f.cod() != n) throw BasisMismatch("gauge map shape");
  Report pre = coalgebra_morphism_report(f, rb.carrier, rb.carrier);
  for (const auto& c : pre.checks)
    if (!c.passed) throw GaugeEquivarianceViolation(c.name, c.witness, c.lhs, c.rhs);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!rb.within({a, b})) continue;
      QVec l = f(rb.op(a, b));
      QVec r = rb.mu(QVec::basis(a), f.col(b));
      if (l != r) throw GaugeEquivarianceViolation("gauge equivariance", {a, b}, rb.show(l), rb.show(r));
    }
  RackBialgebra g{rb.carrier, Bilinear(n, n, n), rb.cap};
  g.mu.cap = rb.cap;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (rb.within({a, b})) g.mu.set(a, b, rb.mu(f.col(a), QVec::basis(b)));
  return certify(g);
}

/// Rack bialgebra whose product factors through a Hopf algebra:
/// a |> b = Phi(a).b, with l[u] the action of the Hopf basis element u on B.
struct AugmentedRackBialgebra {
  Coalgebra B;
  HopfData H;
  LinMap phi;
  std::vector<LinMap> ell;
  int cap = -1; ///< bound on deg(u) + deg(b) for checks involving H products

  QVec act(const QVec& u, const QVec& b) const
  {
    QVec r;
    for (const auto& [i, c] : u) r.axpy(c, ell.at(i)(b));
    return r;
  }
  bool within(std::size_t u, std::size_t b) const
  {
    if (cap < 0) return true;
    return H.coalg.degree_of(u) + B.degree_of(b) <= cap;
  }

  /// The induced product a |> b = Phi(a).b.
  RackBialgebra induced() const
  {
    std::size_t n = B.dim;
    RackBialgebra rb{B, Bilinear(n, n, n)};
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) rb.mu.set(a, b, act(phi.col(a), QVec::basis(b)));
    return rb;
  }
};

/// Augmentation axioms: module-coalgebra action, h.1 = eps(h)1, Phi a coalgebra map
/// intertwining the action with ad.
inline Report augmented_report(const AugmentedRackBialgebra& A)
{
  const Coalgebra& B = A.B;
  const Coalgebra& HC = A.H.coalg;
  std::size_t nb = B.dim, nh = HC.dim;
  Report rep = coalgebra_morphism_report(A.phi, B, HC);
  Checker fixes1("h.1 = eps(h)1"), modl("module action"), modc("module coalgebra"), inter("Phi intertwines action and ad");
  for (std::size_t u = 0; u < nh; ++u) {
    fixes1.expect_eq(A.ell[u](B.unit), B.unit * HC.eps[u], {u}, B.labels);
    for (std::size_t b = 0; b < nb; ++b) {
      QVec lhs = B.coproduct(A.ell[u].col(b));
      QVec rhs;
      for (const auto& [ui, c] : HC.delta[u]) rhs.axpy(c, apply_pair(A.ell[ui / nh], A.ell[ui % nh], B.delta[b]));
      modc.expect(lhs == rhs, {u, b}, [&] { return std::pair{show_pair(B, lhs), show_pair(B, rhs)}; });
      if (A.within(u, b)) {
        QVec l = A.phi(A.ell[u].col(b));
        QVec r = adjoint(A.H, u, A.phi.col(b));
        inter.expect_eq(l, r, {u, b}, HC.labels);
      }
      for (std::size_t v = 0; v < nh; ++v) {
        if (!A.H.within({u, v})) continue;
        if (A.cap >= 0 && HC.degree_of(u) + HC.degree_of(v) > A.cap) continue;
        QVec l = A.act(A.H.mult.at(u, v), QVec::basis(b));
        QVec r = A.ell[u](A.ell[v].col(b));
        modl.expect_eq(l, r, {u, v, b}, B.labels);
      }
    }
  }
  for (auto* c : {&fixes1, &modl, &modc, &inter}) rep.checks.push_back(c->result());
  return rep;
}

/// K[X] -> K[G] for an augmented finite rack.
inline AugmentedRackBialgebra augmented_rack_algebra(const AugmentedRack& R)
{
  R.validate();
  AugmentedRackBialgebra A;
  A.B = setlike_coalgebra(R.elements, R.base);
  A.H = group_algebra(R.group);
  std::size_t n = R.elements.size(), ng = R.group.size();
  A.phi = LinMap(n, ng);
  for (std::size_t x = 0; x < n; ++x) A.phi.set_col(x, QVec::basis(R.p[x]));
  for (std::size_t g = 0; g < ng; ++g) {
    LinMap m(n, n);
    for (std::size_t x = 0; x < n; ++x) m.set_col(x, QVec::basis(R.action[g][x]));
    A.ell.push_back(std::move(m));
  }
  return A;
}

enum class IdealChoice { squares, left_center };

inline LeibnizIdeal choose_ideal(const LeibnizAlgebra& h, IdealChoice z)
{
  return z == IdealChoice::squares ? squares_ideal(h) : left_center(h);
}

/// S(h)_(k) over U(h/z) with Phi = omega o S(p); checks involving U products use cap k.
inline AugmentedRackBialgebra augmented_from_envelope(const LeibnizEnvelope& env)
{
  AugmentedRackBialgebra A;
  A.B = env.sym().coalgebra();
  A.H = env.enveloping().hopf();
  A.phi = env.phi();
  A.ell = env.ell();
  A.cap = static_cast<int>(env.enveloping().cap());
  return A;
}

inline AugmentedRackBialgebra uar_augmented(const LeibnizAlgebra& h, unsigned k,
                                            IdealChoice z = IdealChoice::squares)
{
  LeibnizEnvelope env(h, choose_ideal(h, z), k, k);
  return augmented_from_envelope(env);
}

/// UAR^infinity(h)_(k): S(h)_(k) with a |> b = Phi(a).b.
inline RackBialgebra uar_infinity(const LeibnizAlgebra& h, unsigned k, IdealChoice z = IdealChoice::squares)
{
  return certify(uar_augmented(h, k, z).induced());
}

/// The same product from the symmetrized formula
/// (x1...xk) |> b = 1/k! sum_s ad^s_{x_s(1)} ... ad^s_{x_s(k)} (b), no quotient involved.
inline Bilinear uar_explicit_product(const LeibnizAlgebra& h, unsigned k)
{
  SymCoalgebra S(h.dim(), k);
  std::size_t n = S.dim();
  std::vector<LinMap> ads;
  for (std::size_t i = 0; i < h.dim(); ++i) ads.push_back(S.derivation(h.ad(QVec::basis(i))));
  Bilinear mu(n, n, n);
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::size_t> w;
    const Exponents& e = S.monomial(a);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned r = 0; r < e[i]; ++r) w.push_back(i);
    LinMap acc = LinMap::zero(n, n);
    std::size_t count = 0;
    do {
      LinMap m = LinMap::identity(n);
      for (auto i : w) m = m.after(ads[i]);
      acc += m;
      ++count;
    } while (std::next_permutation(w.begin(), w.end()));
    acc *= Q(1, static_cast<long>(count));
    for (std::size_t b = 0; b < n; ++b) mu.set(a, b, acc.col(b));
  }
  return mu;
}

/// Rows of the reduced echelon form of a spanning family, ordered by pivot column.
inline std::vector<QVec> echelon_basis(const std::vector<QVec>& vs, std::size_t width)
{
  Echelon e(width);
  for (const auto& v : vs) e.insert(v);
  std::vector<QVec> out;
  for (const auto& [p, r] : e.pivots()) out.push_back(e.rows()[r]);
  return out;
}

/// The Leibniz algebra of primitives with [x,y] = x |> y.
inline LeibnizAlgebra primitives_leibniz(const RackBialgebra& rb)
{
  auto prim = echelon_basis(primitives(rb.carrier), rb.dim());
  Subspace P(rb.dim(), prim);
  std::size_t m = prim.size();
  std::vector<QVec> br(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      QVec v = rb.op(prim[i], prim[j]);
      auto c = P.coordinates(v);
      if (!c) throw AxiomViolation("primitives closed under |>", {i, j}, rb.show(v), "a primitive");
      QVec coords;
      for (std::size_t t = 0; t < m; ++t) coords.add(t, (*c)[t]);
      br[i * m + j] = coords;
    }
  std::vector<std::string> labels;
  for (const auto& p : prim) labels.push_back(rb.show(p));
  return check_leibniz(m, br, labels);
}

/// Coefficients of det(xI - A) from x^0 up to x^n (Faddeev-LeVerrier).
inline std::vector<Q> characteristic_polynomial(const LinMap& A)
{
  std::size_t n = A.dom();
  auto M = LinMap::zero(n, n);
  std::vector<Q> c(n + 1);
  c[n] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    M = A.after(M) + LinMap::identity(n) * c[n - k + 1];
    LinMap AM = A.after(M);
    Q tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += AM.col(i).get(i);
    c[n - k] = -tr / static_cast<long>(k);
  }
  return c;
}

/// All rational roots of a polynomial given by coefficients (low to high).
inline std::vector<Q> rational_roots(std::vector<Q> poly)
{
  std::vector<Q> roots;
  while (!poly.empty() && is_zero(poly.back())) poly.pop_back();
  if (poly.size() <= 1) return roots;
  std::size_t shift = 0;
  while (is_zero(poly[shift])) ++shift;
  if (shift) roots.push_back(0);
  poly.erase(poly.begin(), poly.begin() + static_cast<long>(shift));
  if (poly.size() <= 1) return roots;
  mpz_class l = 1;
  for (const auto& q : poly) l = lcm(l, mpz_class(q.get_den()));
  std::vector<mpz_class> a;
  for (const auto& q : poly) a.push_back(mpz_class(q * Q(l)));
  auto divisors = [](mpz_class v) {
    v = abs(v);
    if (v > mpz_class(1000000000)) throw BudgetExceeded("rational root search", v.get_ui(), 1000000000);
    std::vector<mpz_class> d;
    for (mpz_class i = 1; i * i <= v; ++i)
      if (v % i == 0) {
        d.push_back(i);
        if (i * i != v) d.push_back(v / i);
      }
    return d;
  };
  auto eval = [&](const Q& x) {
    Q r = 0;
    for (std::size_t i = a.size(); i-- > 0;) r = r * x + Q(a[i]);
    return r;
  };
  for (const auto& p : divisors(a.front()))
    for (const auto& q : divisors(a.back()))
      for (int s : {1, -1}) {
        Q x{mpz_class(p * s), q};
        x.canonicalize();
        if (is_zero(eval(x)) && std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
      }
  return roots;
}

/// Set-like elements found by the search below, with the induced operation.
struct SetLikes {
  std::vector<QVec> elements;
  std::vector<std::vector<std::size_t>> table;
  std::size_t unit = 0;
  std::vector<std::string> labels;

  std::size_t size() const { return elements.size(); }
  FiniteRack rack() const { return FiniteRack(table, unit, labels); }
};

inline bool is_set_like(const Coalgebra& C, const QVec& a)
{
  return C.counit(a) == 1 && C.coproduct(a) == tensor(a, a, C.dim);
}

/// Set-like elements among: basis vectors, and (dim <= joint_limit) every joint eigenvector
/// of the maps R_j = (id (x) e^j) Delta with rational eigenvalues. A set-like a satisfies
/// R_j a = a_j a, so its coordinates are a joint eigenvalue tuple.
inline SetLikes set_likes(const RackBialgebra& rb, std::size_t joint_limit = 6)
{
  const Coalgebra& C = rb.carrier;
  std::size_t n = C.dim;
  SetLikes out;
  auto add = [&](const QVec& a) {
    if (!is_set_like(C, a)) return;
    if (std::find(out.elements.begin(), out.elements.end(), a) != out.elements.end()) return;
    out.elements.push_back(a);
  };
  for (std::size_t i = 0; i < n; ++i) add(QVec::basis(i));
  if (n <= joint_limit) {
    std::vector<LinMap> R(n, LinMap(n, n));
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<QVec> cols(n);
      for (const auto& [idx, c] : C.delta[b]) cols[idx % n].add(idx / n, c);
      for (std::size_t j = 0; j < n; ++j) R[j].set_col(b, cols[j]);
    }
    struct Piece {
      std::vector<QVec> basis;
      QVec lambda;
    };
    std::vector<Piece> pieces{{{}, {}}};
    for (std::size_t i = 0; i < n; ++i) pieces[0].basis.push_back(QVec::basis(i));
    for (std::size_t j = 0; j < n && !pieces.empty(); ++j) {
      auto eig = rational_roots(characteristic_polynomial(R[j]));
      std::vector<Piece> next;
      for (const auto& P : pieces)
        for (const auto& lam : eig) {
          LinMap restricted(P.basis.size(), n);
          for (std::size_t t = 0; t < P.basis.size(); ++t) restricted.set_col(t, R[j](P.basis[t]) - P.basis[t] * lam);
          auto ker = kernel_basis(restricted);
          if (ker.empty()) continue;
          Piece q{{}, P.lambda};
          q.lambda.add(j, lam);
          for (const auto& k : ker) {
            QVec v;
            for (const auto& [t, c] : k) v.axpy(c, P.basis[t]);
            q.basis.push_back(v);
          }
          next.push_back(std::move(q));
        }
      pieces = std::move(next);
    }
    for (const auto& P : pieces) add(P.lambda);
  }
  std::size_t m = out.elements.size();
  auto find = [&](const QVec& v) -> std::size_t {
    for (std::size_t i = 0; i < m; ++i)
      if (out.elements[i] == v) return i;
    throw AxiomViolation("set-likes closed under |>", {}, rb.show(v), "a set-like element");
  };
  out.unit = find(C.unit);
  out.table.assign(m, std::vector<std::size_t>(m));
  for (std::size_t i = 0; i < m; ++i) {
    out.labels.push_back(rb.show(out.elements[i]));
    for (std::size_t j = 0; j < m; ++j) out.table[i][j] = find(rb.op(out.elements[i], out.elements[j]));
  }
  return out;
}

inline bool is_rack_morphism(const FiniteRack& X, const FiniteRack& Y, const std::vector<std::size_t>& f)
{
  if (f.size() != X.size() || f[X.unit()] != Y.unit()) return false;
  for (std::size_t x = 0; x < X.size(); ++x)
    for (std::size_t y = 0; y < X.size(); ++y)
      if (f[X.op(x, y)] != Y.op(f[x], f[y])) return false;
  return true;
}

/// Coalgebra morphism with F(a |> b) = F(a) |> F(b).
inline bool is_rack_bialgebra_morphism(const LinMap& F, const RackBialgebra& A, const RackBialgebra& B)
{
  if (!coalgebra_morphism_report(F, A.carrier, B.carrier).all_passed()) return false;
  for (std::size_t a = 0; a < A.dim(); ++a)
    for (std::size_t b = 0; b < A.dim(); ++b)
      if (F(A.op(a, b)) != B.op(F.col(a), F.col(b))) return false;
  return true;
}

/// R(a (x) b) = sum b1 (x) (b2 |> a).
inline LinMap yang_baxter_operator(const RackBialgebra& rb)
{
  std::size_t n = rb.dim();
  LinMap R(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      QVec v;
      for (const auto& [idx, c] : rb.carrier.delta[b]) v.axpy(c, tensor(QVec::basis(idx / n), rb.op(idx % n, a), n));
      R.set_col(a * n + b, v);
    }
  return R;
}

/// Apply a map on V (x) V to the factors (pos, pos+1) of a vector in V^(x)3.
inline QVec apply_on_pair(const LinMap& R, const QVec& t, std::size_t pos, std::size_t n)
{
  QVec r;
  for (const auto& [idx, c] : t) {
    auto f = decode(idx, 3, n);
    QVec img = R.col(f[pos] * n + f[pos + 1]);
    for (const auto& [p, x] : img) {
      auto g = f;
      g[pos] = p / n;
      g[pos + 1] = p % n;
      r.add(encode(g, n), c * x);
    }
  }
  return r;
}

/// (R(x)id)(id(x)R)(R(x)id) = (id(x)R)(R(x)id)(id(x)R) on all basis triples.
inline CheckResult yang_baxter_check(const RackBialgebra& rb)
{
  std::size_t n = rb.dim();
  LinMap R = yang_baxter_operator(rb);
  Checker chk("yang-baxter");
  for (std::size_t t = 0; t < n * n * n; ++t) {
    QVec v = QVec::basis(t);
    QVec l = apply_on_pair(R, apply_on_pair(R, apply_on_pair(R, v, 0, n), 1, n), 0, n);
    QVec r = apply_on_pair(R, apply_on_pair(R, apply_on_pair(R, v, 1, n), 0, n), 1, n);
    auto w = decode(t, 3, n);
    chk.expect(l == r, w, [&] { return std::pair{to_string(l), to_string(r)}; });
  }
  return chk.result();
}

/// sum (h.b)_(-1) (x) (h.b)_(0) = sum h1 b_(-1) S(h3) (x) h2.b_(0), with rho = (Phi (x) id) Delta.
inline CheckResult yetter_drinfeld_check(const AugmentedRackBialgebra& A)
{
  const Coalgebra& B = A.B;
  const HopfData& H = A.H;
  std::size_t nb = B.dim, nh = H.dim();
  auto rho = [&](const QVec& b) {
    QVec r;
    for (const auto& [idx, c] : B.coproduct(b)) r.axpy(c, tensor(A.phi.col(idx / nb), QVec::basis(idx % nb), nb));
    return r;
  };
  Checker chk("yetter-drinfeld");
  for (std::size_t u = 0; u < nh; ++u)
    for (std::size_t b = 0; b < nb; ++b) {
      if (!A.within(u, b)) continue;
      QVec lhs = rho(A.ell[u].col(b));
      QVec rhs;
      for (const auto& t : coproduct3(H.coalg, u))
        for (const auto& [idx, c] : B.delta[b]) {
          QVec left = H.mul(H.mul(QVec::basis(t.a1), A.phi.col(idx / nb)), H.antipode.col(t.a3));
          rhs.axpy(t.c * c, tensor(left, A.ell[t.a2].col(idx % nb), nb));
        }
      chk.expect(lhs == rhs, {u, b}, [&] { return std::pair{to_string(lhs), to_string(rhs)}; });
    }
  return chk.result();
}

/// Each filtration piece B_(r) is stable under left |>-multiplication.
inline CheckResult filtration_stability_check(const RackBialgebra& rb)
{
  auto filt = coalgebra_filtration(rb.carrier, rb.dim() + 1);
  Checker chk("filtration stable under |>");
  for (std::size_t r = 0; r < filt.size(); ++r)
    for (const auto& v : filt[r].basis())
      for (std::size_t a = 0; a < rb.dim(); ++a) {
        QVec w = rb.mu(QVec::basis(a), v);
        chk.expect(filt[r].contains(w), {r, a}, [&] { return std::pair{rb.show(w), std::string("inside B_(r)")}; });
      }
  return chk.result();
}

} // namespace rackbi
