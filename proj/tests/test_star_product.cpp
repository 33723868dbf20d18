#include "fixtures.hpp"

#include <rackbi/star_product.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace rackbi;

namespace {

Exponents ex(std::initializer_list<unsigned> e) { return Exponents(e); }

PolyFunction random_poly(std::size_t n, std::size_t N, unsigned D, unsigned deg, std::mt19937& rng)
{
  std::uniform_int_distribution<int> coef(-3, 3), var(0, static_cast<int>(n) - 1), d(0, static_cast<int>(deg));
  PolyFunction f(n, N, D);
  for (int t = 0; t < 4; ++t) {
    Exponents e(n, 0);
    for (int k = d(rng); k > 0; --k) ++e[var(rng)];
    Series s(N);
    for (std::size_t r = 0; r < N; ++r) s[r] = coef(rng);
    f.add(e, s);
  }
  return f;
}

QVec random_vec(std::size_t n, std::mt19937& rng)
{
  std::uniform_int_distribution<int> coef(-2, 2);
  QVec v;
  for (std::size_t i = 0; i < n; ++i) v.add(i, Q(coef(rng)));
  return v;
}

} // namespace

TEST(AdTilde, Examples)
{
  LeibnizAlgebra ab = fixtures::abelian(3);
  PolyFunction f = PolyFunction::variable(3, 3, 4, 0) * PolyFunction::variable(3, 3, 4, 2);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(ad_tilde(ab, i, f).empty());

  LeibnizAlgebra g = fixtures::lie_2d();
  EXPECT_EQ(ad_tilde(g, 0, PolyFunction::variable(2, 3, 4, 1)), PolyFunction::variable(2, 3, 4, 1));
  EXPECT_TRUE(ad_tilde(g, 0, PolyFunction::variable(2, 3, 4, 0)).empty());
  EXPECT_EQ(ad_tilde(g, 1, PolyFunction::variable(2, 3, 4, 0)), PolyFunction::variable(2, 3, 4, 1) * Q(-1));
}

TEST(AdTilde, Derivation)
{
  std::mt19937 rng(17);
  for (const auto& [name, h] : fixtures::leibniz_corpus()) {
    std::size_t n = h.dim();
    for (int t = 0; t < 10; ++t) {
      PolyFunction f = random_poly(n, 3, 6, 3, rng), g = random_poly(n, 3, 6, 3, rng);
      for (std::size_t i = 0; i < n; ++i)
        EXPECT_EQ(ad_tilde(h, i, f * g), ad_tilde(h, i, f) * g + f * ad_tilde(h, i, g)) << name;
    }
  }
}

TEST(Star, Examples)
{
  std::mt19937 rng(3);
  LeibnizAlgebra g = fixtures::lie_2d();
  PolyFunction c = PolyFunction::constant(2, 4, 3, Q(5));
  PolyFunction p = random_poly(2, 4, 3, 3, rng);
  EXPECT_EQ(star(g, c, p), p * Q(5));

  PolyFunction a1 = PolyFunction::variable(2, 4, 3, 0), a2 = PolyFunction::variable(2, 4, 3, 1);
  EXPECT_EQ(star(g, a1, a2), a2.shifted(1));

  for (const auto& [name, h] : fixtures::leibniz_corpus()) {
    std::size_t n = h.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        PolyFunction l = star(h, PolyFunction::variable(n, 3, 3, i), PolyFunction::variable(n, 3, 3, j));
        PolyFunction r = hat(series_vec(h.bracket(i, j), n, 3), 3).shifted(1);
        EXPECT_EQ(l, r) << name;
      }
  }
}

TEST(Star, OnlyDegreeManyOrdersContribute)
{
  LeibnizAlgebra h = fixtures::non_lie_3d();
  SymCoalgebra S(3, 3);
  for (std::size_t a = 0; a < S.dim(); ++a)
    for (std::size_t b = 0; b < S.dim(); ++b) {
      PolyFunction p = star(h, hat(S, QVec::basis(a), 5, 3), hat(S, QVec::basis(b), 5, 3));
      for (std::size_t r = 0; r < 5; ++r)
        if (r != S.degree(a)) EXPECT_TRUE(p.order_coefficients(r).empty());
    }
}

TEST(StarExp, AbelianIsTrivial)
{
  LeibnizAlgebra h = fixtures::abelian(2);
  QVec x = QVec::basis(0, Q(3)) + QVec::basis(1, Q(-1)), y = QVec::basis(1, Q(2));
  StarExp s = star_exp(h, x, y, 5);
  EXPECT_TRUE(s.check.passed);
  EXPECT_EQ(s.lhs, ExpFunction{series_vec(y, 2, 5)}.expand(4));
}

TEST(StarExp, Lie2ExponentialOfE2)
{
  LeibnizAlgebra h = fixtures::lie_2d();
  std::size_t N = 6;
  StarExp s = star_exp(h, QVec::basis(0), QVec::basis(1), N);
  EXPECT_TRUE(s.check.passed) << s.check.lhs << " vs " << s.check.rhs;
  // e^{h ad_e1}(e2) = e^h e2, so the right side is sum_m (e^h)^m alpha_2^m / m!
  Series eh = series_exp(Series::monomial(N, 1));
  EXPECT_EQ(s.rack[1], eh);
  EXPECT_TRUE(s.rack[0].is_zero());
  PolyFunction expect(2, N, N - 1);
  Series power(N, 1);
  for (unsigned m = 0; m < N; ++m) {
    expect.add(ex({0, m}), power * (1 / factorial(m)));
    power = power * eh;
  }
  EXPECT_EQ(s.rhs, expect);
  EXPECT_EQ(s.lhs, expect);
}

TEST(StarExp, DiagonalAcrossCorpus)
{
  std::mt19937 rng(11);
  for (const auto& [name, h] : fixtures::leibniz_corpus()) {
    for (int t = 0; t < 3; ++t) {
      QVec x = random_vec(h.dim(), rng);
      StarExp s = star_exp(h, x, x, 5);
      EXPECT_TRUE(s.check.passed) << name << " order " << (s.check.witness.empty() ? 0 : s.check.witness[0]);
    }
  }
}

TEST(SelfDist, Examples)
{
  std::mt19937 rng(23);
  LeibnizAlgebra sq = fixtures::square_2d();
  for (int t = 0; t < 5; ++t) {
    QVec x = random_vec(2, rng), y = random_vec(2, rng), z = random_vec(2, rng);
    Report r = star_rack_selfdist_check(sq, x, y, z, 5);
    EXPECT_TRUE(r.all_passed()) << (r.failed().empty() ? "" : r.failed()[0]);
  }
  // z = 0: everything collapses to the zero vector
  Report r0 = star_rack_selfdist_check(sq, QVec::basis(0), QVec::basis(1), QVec{}, 4);
  EXPECT_TRUE(r0.all_passed());
  EXPECT_EQ(rack_exp(sq, series_vec(QVec::basis(0), 2, 4), series_vec(QVec{}, 2, 4)), series_vec(QVec{}, 2, 4));
}

TEST(SelfDist, NonLeibnizFailsAtSecondOrder)
{
  std::vector<QVec> br(4);
  br[0 * 2 + 1] = QVec::basis(0);
  br[1 * 2 + 0] = QVec::basis(0);
  LeibnizAlgebra bad = make_leibniz_unchecked(2, br);
  ASSERT_FALSE(leibniz_identity_check(bad).passed);
  Report r = star_rack_selfdist_check(bad, QVec::basis(0), QVec::basis(1), QVec::basis(1), 4);
  const CheckResult* c = r.find("x |>> (y |>> z) = (x |>> y) |>> (x |>> z)");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->passed);
  EXPECT_EQ(c->witness, std::vector<std::size_t>{2});
}

TEST(Lemmas, HatAgainstUarInfinity)
{
  for (const auto& [name, h] : fixtures::leibniz_corpus())
    for (unsigned k = 1; k <= 3; ++k) {
      Report r = star_lemmas_report(h, k);
      EXPECT_TRUE(r.all_passed()) << name << " k=" << k << " " << (r.failed().empty() ? "" : r.failed()[0]);
    }
}

TEST(StarOrders, TrivialAtZeroAndAdjointAtOne)
{
  LeibnizAlgebra h = fixtures::square_2d();
  SymCoalgebra S(2, 2);
  auto mu = star_product_orders(h, 2, 3);
  const Coalgebra& C = S.coalgebra();
  for (std::size_t a = 0; a < S.dim(); ++a)
    for (std::size_t b = 0; b < S.dim(); ++b) EXPECT_EQ(mu[0].at(a, b), QVec::basis(b) * C.eps[a]);
  LinMap ad1 = S.derivation(h.ad(QVec::basis(0)));
  for (std::size_t b = 0; b < S.dim(); ++b) EXPECT_EQ(mu[1].at(S.var(0), b), ad1.col(b));
}
