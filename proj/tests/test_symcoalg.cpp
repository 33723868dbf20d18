#include "oracles.hpp"

#include <rackbi/symcoalg.hpp>

#include <gtest/gtest.h>

using namespace rackbi;

TEST(SymCoalgebra, Dimensions)
{
  for (std::size_t n = 0; n <= 4; ++n)
    for (unsigned k = 0; k <= 4; ++k) {
      SymCoalgebra S(n, k);
      EXPECT_EQ(Q(S.dim()), binomial(static_cast<unsigned>(n + k), k)) << n << " " << k;
    }
}

TEST(SymCoalgebra, CoproductExamples)
{
  SymCoalgebra S(2, 2);
  const Coalgebra& C = S.coalgebra();
  std::size_t one = S.one(), e1 = S.var(0);
  EXPECT_EQ(C.delta[one], QVec::basis(C.pair(one, one)));
  EXPECT_EQ(C.delta[e1], QVec::basis(C.pair(e1, one)) + QVec::basis(C.pair(one, e1)));
  std::size_t e11 = S.index_of({2, 0});
  QVec expect = QVec::basis(C.pair(e11, one)) + QVec::basis(C.pair(e1, e1), Q(2)) + QVec::basis(C.pair(one, e11));
  EXPECT_EQ(C.delta[e11], expect);
  EXPECT_EQ(S.label(e11), "e1^2");
}

TEST(SymCoalgebra, CoproductTermCount)
{
  SymCoalgebra S(3, 4);
  for (std::size_t b = 0; b < S.dim(); ++b) {
    std::size_t terms = 1;
    for (auto m : S.monomial(b)) terms *= m + 1;
    EXPECT_EQ(S.coalgebra().delta[b].nnz(), terms);
  }
}

TEST(SymCoalgebra, AxiomsUpToFour)
{
  for (std::size_t n = 0; n <= 4; ++n)
    for (unsigned k = 0; k <= 4; ++k) {
      SymCoalgebra S(n, k);
      Report r = check_coalgebra(S.coalgebra(), true);
      EXPECT_TRUE(r.all_passed()) << n << " " << k;
    }
}

TEST(SymCoalgebra, Primitives)
{
  EXPECT_TRUE(primitives(SymCoalgebra(2, 0).coalgebra()).empty());
  for (std::size_t n = 1; n <= 3; ++n)
    for (unsigned k = 1; k <= 4; ++k) {
      SymCoalgebra S(n, k);
      auto prim = primitives(S.coalgebra());
      ASSERT_EQ(prim.size(), n);
      Subspace P(S.dim(), prim);
      for (std::size_t i = 0; i < n; ++i) EXPECT_TRUE(P.contains(QVec::basis(S.var(i))));
    }
}

TEST(SymCoalgebra, FiltrationOrder)
{
  SymCoalgebra S(2, 3);
  const Coalgebra& C = S.coalgebra();
  EXPECT_EQ(filtration_order(C, QVec::basis(S.one())), 0u);
  EXPECT_EQ(filtration_order(C, QVec::basis(S.var(0))), 1u);
  EXPECT_EQ(filtration_order(C, QVec::basis(S.index_of({1, 1}))), 2u);
  for (std::size_t b = 0; b < S.dim(); ++b) EXPECT_EQ(filtration_order(C, QVec::basis(b)), S.degree(b));
  auto filt = coalgebra_filtration(C, 10);
  EXPECT_EQ(filt.back().dim(), S.dim());
}

TEST(SymCoalgebra, ProductAndDerivation)
{
  SymCoalgebra S(2, 3);
  EXPECT_EQ(S.product(S.var(0), S.var(1)), QVec::basis(S.index_of({1, 1})));
  EXPECT_THROW(S.product(S.index_of({2, 0}), S.index_of({0, 2})), DegreeCapExceeded);
  // D(e1) = e2, D(e2) = 0: D(e1^2) = 2 e1.e2
  LinMap D(2, 2);
  D.set_col(0, QVec::basis(1));
  LinMap Dext = S.derivation(D);
  EXPECT_EQ(Dext.col(S.index_of({2, 0})), QVec::basis(S.index_of({1, 1}), Q(2)));
  EXPECT_TRUE(Dext.col(S.one()).empty());
}

TEST(SymCoalgebra, FunctorIsCoalgebraMap)
{
  std::mt19937 rng(8);
  SymCoalgebra S(2, 3), T(3, 3);
  LinMap f = LinMap::from_dense(oracle::random_dense(rng, 3, 2), 2);
  LinMap Sf = S.functor(f, T);
  const Coalgebra &A = S.coalgebra(), &B = T.coalgebra();
  for (std::size_t b = 0; b < S.dim(); ++b) {
    EXPECT_EQ(B.coproduct(Sf.col(b)), apply_pair(Sf, Sf, A.delta[b]));
    EXPECT_EQ(B.counit(Sf.col(b)), A.eps[b]);
  }
}

namespace {

/// Commutative polynomial product on S(V)_(k) with products past k dropped.
Bilinear truncated_product(const SymCoalgebra& S)
{
  Bilinear m(S.dim(), S.dim(), S.dim());
  for (std::size_t a = 0; a < S.dim(); ++a)
    for (std::size_t b = 0; b < S.dim(); ++b) {
      Exponents e = S.monomial(a);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += S.monomial(b)[i];
      m.set(a, b, S.has(e) ? QVec::basis(S.index_of(e)) : QVec());
    }
  return m;
}

LinMap random_map(std::mt19937& rng, std::size_t dom, std::size_t cod)
{
  return LinMap::from_dense(oracle::random_dense(rng, cod, dom, 0.6), dom);
}

} // namespace

TEST(Convolution, UnitAndAssociativity)
{
  std::mt19937 rng(21);
  SymCoalgebra S(2, 3);
  const Coalgebra& C = S.coalgebra();
  Bilinear mult = truncated_product(S);
  LinMap e = unit_counit(C, QVec::basis(S.one()), S.dim());
  for (int t = 0; t < 5; ++t) {
    LinMap f = random_map(rng, S.dim(), S.dim()), g = random_map(rng, S.dim(), S.dim()),
           h = random_map(rng, S.dim(), S.dim());
    EXPECT_EQ(convolution(C, e, g, mult), g);
    EXPECT_EQ(convolution(C, g, e, mult), g);
    EXPECT_EQ(convolution(C, convolution(C, f, g, mult), h, mult),
              convolution(C, f, convolution(C, g, h, mult), mult));
  }
}

TEST(Convolution, GeometricInverseAndNilpotency)
{
  std::mt19937 rng(22);
  for (unsigned k = 1; k <= 3; ++k) {
    SymCoalgebra S(2, k);
    const Coalgebra& C = S.coalgebra();
    Bilinear mult = truncated_product(S);
    QVec one = QVec::basis(S.one());
    LinMap e = unit_counit(C, one, S.dim());
    for (int t = 0; t < 3; ++t) {
      LinMap psi = random_map(rng, S.dim(), S.dim());
      psi.set_col(S.one(), one);
      LinMap inv = convolution_inverse(C, psi, mult, one);
      EXPECT_EQ(convolution(C, psi, inv, mult), e);
      EXPECT_EQ(convolution(C, inv, psi, mult), e);

      // maps killing 1 are convolution-nilpotent of order k+1
      LinMap phi = e - psi;
      LinMap power = e;
      for (unsigned r = 1; r <= k + 1; ++r) power = convolution(C, power, phi, mult);
      EXPECT_TRUE(power.is_zero());
    }
  }
}

TEST(Convolution, NonConnectedHasNoSeriesInverse)
{
  // two set-like points, psi = 0: the geometric series never stops
  Coalgebra C;
  C.dim = 2;
  C.delta = {QVec::basis(0), QVec::basis(3)};
  C.eps = {1, 1};
  C.unit = QVec::basis(0);
  Bilinear mult(1, 1, 1);
  mult.set(0, 0, QVec::basis(0));
  LinMap psi(2, 1);
  psi.set_col(0, QVec::basis(0));
  EXPECT_THROW(convolution_inverse(C, psi, mult, QVec::basis(0)), std::domain_error);
}

TEST(TensorCoalgebra, Axioms)
{
  SymCoalgebra A(1, 2), B(2, 2);
  Coalgebra T = tensor_coalgebra(A.coalgebra(), B.coalgebra());
  EXPECT_EQ(T.dim, A.dim() * B.dim());
  EXPECT_TRUE(check_coalgebra(T, true).all_passed());
  EXPECT_EQ(primitives(T).size(), 3u);
}
