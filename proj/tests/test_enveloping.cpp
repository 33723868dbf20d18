#include "fixtures.hpp"

#include <rackbi/enveloping.hpp>

#include <gtest/gtest.h>

#include <random>
#include <thread>

using namespace rackbi;

namespace {

/// sl2 with basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f.
LeibnizAlgebra sl2()
{
  std::vector<QVec> br(9);
  auto set = [&](std::size_t j, std::size_t k, QVec v) {
    br[j * 3 + k] = v;
    br[k * 3 + j] = -v;
  };
  set(0, 1, QVec::basis(2));
  set(2, 0, QVec::basis(0, Q(2)));
  set(2, 1, QVec::basis(1, Q(-2)));
  return check_leibniz(3, br, {"e", "f", "h"});
}

} // namespace

TEST(Straighten, Examples)
{
  EnvelopingAlgebra U(fixtures::lie_2d(), 3);
  std::size_t x = U.gen(0), y = U.gen(1);
  EXPECT_EQ(U.straighten({0, 1}), QVec::basis(U.pbw().index_of({1, 1})));
  // yx = xy - y
  EXPECT_EQ(U.straighten({1, 0}), QVec::basis(U.pbw().index_of({1, 1})) - QVec::basis(y));
  EXPECT_EQ(U.mul(y, x), U.straighten({1, 0}));
  EXPECT_THROW(U.straighten({1, 0, 1, 0}), DegreeCapExceeded);

  EnvelopingAlgebra A(fixtures::abelian(3), 3);
  EXPECT_EQ(A.straighten({2, 0, 1}), QVec::basis(A.pbw().index_of({1, 1, 1})));
  EXPECT_EQ(A.straighten({2, 2, 0}), QVec::basis(A.pbw().index_of({1, 0, 2})));
}

TEST(Straighten, ConfluentAcrossStrategies)
{
  EnvelopingAlgebra U(sl2(), 5);
  std::mt19937 rng(31);
  std::uniform_int_distribution<std::size_t> letter(0, 2), len(0, 5);
  for (int t = 0; t < 200; ++t) {
    EnvelopingAlgebra::Word w(len(rng));
    for (auto& c : w) c = letter(rng);
    EXPECT_EQ(U.straighten(w), U.straighten_rightmost(w));
  }
}

TEST(Straighten, ConcurrentCallersAgree)
{
  EnvelopingAlgebra U(sl2(), 4);
  EnvelopingAlgebra fresh(sl2(), 4);
  std::vector<EnvelopingAlgebra::Word> words;
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> letter(0, 2);
  for (int t = 0; t < 60; ++t) words.push_back({letter(rng), letter(rng), letter(rng), letter(rng)});
  std::vector<std::thread> threads;
  std::vector<std::vector<QVec>> out(4);
  for (int k = 0; k < 4; ++k)
    threads.emplace_back([&, k] {
      for (const auto& w : words) out[k].push_back(U.straighten(w));
    });
  for (auto& th : threads) th.join();
  for (int k = 0; k < 4; ++k)
    for (std::size_t i = 0; i < words.size(); ++i) EXPECT_EQ(out[k][i], fresh.straighten_rightmost(words[i]));
}

TEST(Enveloping, HopfAxioms)
{
  for (auto g : {fixtures::lie_2d(), fixtures::abelian(3), sl2()}) {
    EnvelopingAlgebra U(g, g.dim() == 3 ? 4 : 5);
    Report r = check_hopf(U.hopf());
    EXPECT_TRUE(r.all_passed()) << (r.failed().empty() ? "" : r.failed()[0]);
  }
}

TEST(Enveloping, PrimitivesAreG)
{
  EnvelopingAlgebra U(sl2(), 4);
  auto prim = primitives(U.coalgebra());
  ASSERT_EQ(prim.size(), 3u);
  Subspace P(U.dim(), prim);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(P.contains(QVec::basis(U.gen(i))));
}

TEST(Antipode, ExamplesAndConvolutionInverse)
{
  EnvelopingAlgebra U(fixtures::lie_2d(), 4);
  EXPECT_EQ(U.antipode(U.pbw().one()), U.one());
  EXPECT_EQ(U.antipode(U.gen(1)), -QVec::basis(U.gen(1)));
  QVec w = U.symmetrize({1, 1});
  EXPECT_EQ(U.hopf().antipode(w), w);

  const HopfData& H = U.hopf();
  LinMap series = convolution_inverse(H.coalg, LinMap::identity(U.dim()), H.mult, U.one());
  EXPECT_EQ(series, H.antipode);
}

TEST(Symmetrize, Examples)
{
  EnvelopingAlgebra U(fixtures::lie_2d(), 3);
  EXPECT_EQ(U.symmetrize({0, 0}), U.one());
  EXPECT_EQ(U.symmetrize({1, 0}), QVec::basis(U.gen(0)));
  // omega(x.y) = xy - y/2
  EXPECT_EQ(U.symmetrize({1, 1}), QVec::basis(U.pbw().index_of({1, 1})) - QVec::basis(U.gen(1), Q(1, 2)));
  EnvelopingAlgebra A(fixtures::abelian(2), 3);
  for (std::size_t b = 0; b < A.dim(); ++b) EXPECT_EQ(A.symmetrize(A.pbw().monomial(b)), QVec::basis(b));
}

TEST(Symmetrize, CoalgebraIsomorphismAndEquivariance)
{
  LeibnizAlgebra g = sl2();
  EnvelopingAlgebra U(g, 4);
  SymCoalgebra Sg(3, 4);
  LinMap om = U.omega(Sg);
  EXPECT_EQ(rank(om), Sg.dim());
  const Coalgebra &A = Sg.coalgebra(), &B = U.coalgebra();
  for (std::size_t b = 0; b < Sg.dim(); ++b) {
    EXPECT_EQ(B.coproduct(om.col(b)), apply_pair(om, om, A.delta[b]));
    EXPECT_EQ(B.counit(om.col(b)), A.eps[b]);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    LinMap act = Sg.derivation(g.ad(QVec::basis(i)));
    for (std::size_t b = 0; b < Sg.dim(); ++b)
      if (Sg.degree(b) < 4) EXPECT_EQ(om(act.col(b)), U.adjoint(QVec::basis(U.gen(i)), om.col(b)));
  }
}

TEST(Adjoint, Examples)
{
  EnvelopingAlgebra U(sl2(), 4);
  for (std::size_t b = 0; b < U.dim(); ++b) {
    if (U.pbw().degree(b) > 3) continue;
    EXPECT_EQ(U.adjoint(U.one(), QVec::basis(b)), QVec::basis(b));
  }
  LeibnizAlgebra g = sl2();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      QVec br = U.adjoint(QVec::basis(U.gen(i)), QVec::basis(U.gen(j)));
      EXPECT_EQ(br, U.pbw().embed(g.bracket(i, j)));
    }
  // module action: ad_{uv} = ad_u ad_v
  for (std::size_t u = 0; u < U.dim(); ++u)
    for (std::size_t v = 0; v < U.dim(); ++v)
      for (std::size_t w = 0; w < U.dim(); ++w) {
        if (U.pbw().degree(u) + U.pbw().degree(v) + U.pbw().degree(w) > 4) continue;
        EXPECT_EQ(U.adjoint(U.mul(u, v), QVec::basis(w)),
                  U.adjoint(QVec::basis(u), U.adjoint(QVec::basis(v), QVec::basis(w))));
      }
  EnvelopingAlgebra A(fixtures::abelian(2), 3);
  for (std::size_t h = 0; h < A.dim(); ++h)
    for (std::size_t u = 0; u < A.dim(); ++u)
      if (A.pbw().degree(h) + A.pbw().degree(u) <= 3)
        EXPECT_EQ(A.adjoint(QVec::basis(h), QVec::basis(u)), QVec::basis(u) * A.coalgebra().eps[h]);
}

TEST(ModuleAction, Examples)
{
  LeibnizAlgebra h = fixtures::square_2d();
  LeibnizEnvelope env(h, squares_ideal(h), 3, 3);
  const auto& S = env.sym();
  const auto& U = env.enveloping();
  ASSERT_EQ(env.quotient().dim(), 1u);
  QVec xi = QVec::basis(U.gen(0));
  EXPECT_TRUE(env.act(xi, QVec::basis(S.one())).empty());
  EXPECT_EQ(env.act(xi, QVec::basis(S.var(0))), QVec::basis(S.var(1)));
  EXPECT_EQ(env.act(xi, QVec::basis(S.index_of({2, 0}))), QVec::basis(S.index_of({1, 1}), Q(2)));
}

TEST(ModuleAction, ModuleCoalgebraAxioms)
{
  for (const auto& [name, h] : fixtures::leibniz_corpus()) {
    if (h.dim() > 3) continue;
    unsigned k = 3;
    LeibnizEnvelope env(h, squares_ideal(h), k, k);
    const auto& S = env.sym();
    const auto& U = env.enveloping();
    const Coalgebra& CS = S.coalgebra();
    const Coalgebra& CU = U.coalgebra();
    for (std::size_t u = 0; u < U.dim(); ++u) {
      EXPECT_EQ(env.ell(u).col(S.one()), QVec::basis(S.one()) * CU.eps[u]) << name;
      for (std::size_t v = 0; v < U.dim(); ++v) {
        if (U.pbw().degree(u) + U.pbw().degree(v) > k) continue;
        EXPECT_EQ(env.act(U.mul(u, v), QVec::basis(S.one())), env.ell(u).after(env.ell(v)).col(S.one()));
        for (std::size_t a = 0; a < S.dim(); ++a)
          EXPECT_EQ(env.act(U.mul(u, v), QVec::basis(a)), env.ell(u)(env.ell(v).col(a))) << name;
      }
      for (std::size_t a = 0; a < S.dim(); ++a) {
        QVec lhs = CS.coproduct(env.ell(u).col(a));
        QVec rhs;
        for (const auto& [ui, c] : CU.delta[u])
          rhs.axpy(c, apply_pair(env.ell(ui / CU.dim), env.ell(ui % CU.dim), CS.delta[a]));
        EXPECT_EQ(lhs, rhs) << name;
      }
    }
  }
}

TEST(Phi, ExamplesAndEquivariance)
{
  LeibnizAlgebra h = fixtures::square_2d();
  LeibnizEnvelope env(h, squares_ideal(h), 3, 3);
  const auto& S = env.sym();
  const auto& U = env.enveloping();
  EXPECT_EQ(env.phi(QVec::basis(S.one())), U.one());
  EXPECT_EQ(env.phi(QVec::basis(S.var(0))), QVec::basis(U.gen(0)));
  EXPECT_TRUE(env.phi(QVec::basis(S.var(1))).empty());

  for (const auto& [name, hh] : fixtures::leibniz_corpus()) {
    unsigned k = 3;
    LeibnizEnvelope e(hh, left_center(hh), k, k);
    const auto& SS = e.sym();
    const auto& UU = e.enveloping();
    const LinMap& P = e.phi();
    for (std::size_t a = 0; a < SS.dim(); ++a) {
      EXPECT_EQ(UU.coalgebra().coproduct(P.col(a)), apply_pair(P, P, SS.coalgebra().delta[a])) << name;
      EXPECT_EQ(UU.coalgebra().counit(P.col(a)), SS.coalgebra().eps[a]) << name;
      for (std::size_t u = 0; u < UU.dim(); ++u) {
        if (UU.pbw().degree(u) + SS.degree(a) > k) continue;
        EXPECT_EQ(P(e.ell(u).col(a)), UU.adjoint(QVec::basis(u), P.col(a))) << name;
      }
    }
  }
}
