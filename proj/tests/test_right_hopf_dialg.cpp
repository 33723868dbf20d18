#include "fixtures.hpp"

#include <rackbi/right_hopf_dialg.hpp>

#include <gtest/gtest.h>

using namespace rackbi;

namespace {

Subspace span(std::size_t n, const std::vector<QVec>& v) { return Subspace(n, v); }

/// Dialgebra on a B-bimodule A with Phi: A -> B; x |- y = Phi(x).y, x -| y = x.Phi(y).
/// lact[k], ract[k] are the actions of the k-th basis element of B.
Dialgebra augmented_target(const LinMap& phi, const std::vector<LinMap>& lact, const std::vector<LinMap>& ract,
                           QVec unit, std::vector<std::string> labels)
{
  std::size_t n = phi.dom();
  Dialgebra d;
  d.dim = n;
  d.vdash = Bilinear(n, n, n);
  d.dashv = Bilinear(n, n, n);
  d.unit = std::move(unit);
  d.labels = std::move(labels);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      QVec l, r;
      for (const auto& [k, c] : phi.col(x)) l.axpy(c, lact[k].col(y));
      for (const auto& [k, c] : phi.col(y)) r.axpy(c, ract[k].col(x));
      d.vdash.set(x, y, l);
      d.dashv.set(x, y, r);
    }
  return d;
}

/// A = K[eps]/eps^2 + span{m1, m2} (basis 1, eps, m1, m2) with eps.m1 = m2, m.eps = 0,
/// Phi(m1) = eps, Phi(m2) = 0.
Dialgebra dual_numbers_target()
{
  LinMap phi(4, 2);
  phi.set_col(0, QVec::basis(0));
  phi.set_col(1, QVec::basis(1));
  phi.set_col(2, QVec::basis(1));
  LinMap id = LinMap::identity(4);
  LinMap le(4, 4), re(4, 4);
  le.set_col(0, QVec::basis(1));
  le.set_col(2, QVec::basis(3));
  re.set_col(0, QVec::basis(1));
  return augmented_target(phi, {id, le}, {id, re}, QVec::basis(0), {"1", "eps", "m1", "m2"});
}

/// M_2(Q) with |- = -| = matrix product, basis E11, E12, E21, E22.
Dialgebra matrix_target()
{
  Dialgebra d;
  d.dim = 4;
  d.vdash = Bilinear(4, 4, 4);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      std::size_t i = a / 2, j = a % 2, k = b / 2, l = b % 2;
      d.vdash.set(a, b, j == k ? QVec::basis(i * 2 + l) : QVec{});
    }
  d.dashv = d.vdash;
  d.unit = QVec::basis(0) + QVec::basis(3);
  d.labels = {"E11", "E12", "E21", "E22"};
  return d;
}

/// K[X] -> K[Z2] with X = {a, b, c}, the generator swapping b and c, Phi_B = eps 1.
AugmentedRackBialgebra trivial_phi_example()
{
  AugmentedRackBialgebra A;
  A.B = setlike_coalgebra({"a", "b", "c"}, 0);
  A.H = group_algebra(fixtures::z2());
  A.phi = unit_counit(A.B, A.H.one(), 2);
  LinMap swap = LinMap::identity(3);
  swap.set_col(1, QVec::basis(2));
  swap.set_col(2, QVec::basis(1));
  std::size_t e = fixtures::z2().identity();
  A.ell.resize(2);
  A.ell[e] = LinMap::identity(3);
  A.ell[1 - e] = swap;
  return A;
}

} // namespace

TEST(RightGroup, SinglePointIsGroupAlgebra)
{
  FiniteGroup G = fixtures::s3();
  HopfData H = right_group_hopf(G, PointedSet{{"*"}, 0});
  HopfData K = group_algebra(G);
  EXPECT_EQ(H.mult, K.mult);
  EXPECT_EQ(H.antipode, K.antipode);
  EXPECT_TRUE(check_hopf(H).all_passed());
}

TEST(RightGroup, Z2TwoPoints)
{
  FiniteGroup G = fixtures::z2();
  HopfData H = right_group_hopf(G, fixtures::two_points());
  ASSERT_EQ(H.dim(), 4u);
  for (std::size_t a = 0; a < 4; ++a) EXPECT_EQ(H.mul(QVec::basis(a), H.antipode.col(a)), H.one());
  Report r = right_hopf_report(H);
  EXPECT_TRUE(r.all_passed()) << (r.failed().empty() ? "" : r.failed()[0]);
  // not right-unital: (g,q).1 = (g,p)
  std::size_t gq = (1 - G.identity()) * 2 + 1;
  EXPECT_EQ(H.mul(QVec::basis(gq), H.one()), QVec::basis(gq - 1));
  std::size_t e = G.identity();
  EXPECT_TRUE(span(4, generalized_idempotents(H)).same_as(span(4, {QVec::basis(e * 2), QVec::basis(e * 2 + 1)})));
}

TEST(RightGroup, S3TwoPointsLemmaIdentities)
{
  HopfData H = right_group_hopf(fixtures::s3(), fixtures::two_points());
  Report r = right_hopf_report(H);
  EXPECT_TRUE(r.all_passed()) << (r.failed().empty() ? "" : r.failed()[0]);
  // the opposite structure is not right Hopf
  EXPECT_FALSE(right_hopf_report(opposite(H)).all_passed());
}

TEST(Suschkewitsch, OrdinaryHopfAlgebra)
{
  HopfData H = group_algebra(fixtures::s3());
  auto s = suschkewitsch(H);
  EXPECT_EQ(s.h1.size(), H.dim());
  ASSERT_EQ(s.idem.size(), 1u);
  EXPECT_TRUE(span(H.dim(), s.idem).contains(H.one()));
  for (std::size_t x = 0; x < H.dim(); ++x) EXPECT_EQ(s.psi.col(x), tensor(QVec::basis(x), H.one(), H.dim()));
}

TEST(Suschkewitsch, Z2TwoPoints)
{
  FiniteGroup G = fixtures::z2();
  HopfData H = right_group_hopf(G, fixtures::two_points());
  auto s = suschkewitsch(H);
  EXPECT_TRUE(s.report.all_passed());
  EXPECT_EQ(s.h1.size(), 2u);
  EXPECT_EQ(s.idem.size(), 2u);
  std::size_t e = G.identity();
  for (std::size_t g = 0; g < 2; ++g)
    for (std::size_t x = 0; x < 2; ++x)
      EXPECT_EQ(s.psi.col(g * 2 + x), tensor(QVec::basis(g * 2), QVec::basis(e * 2 + x), 4));
}

TEST(Suschkewitsch, LeftTrivialOnC4Coalgebra)
{
  SymCoalgebra S2(2, 2);
  const Coalgebra& C = S2.coalgebra();
  HopfData H = left_trivial_right_hopf(C);
  EXPECT_TRUE(right_hopf_report(H).all_passed());
  auto s = suschkewitsch(H);
  ASSERT_EQ(s.h1.size(), 1u);
  EXPECT_EQ(s.idem.size(), C.dim);
  for (std::size_t x = 0; x < C.dim; ++x) EXPECT_EQ(s.psi.col(x), tensor(C.unit, QVec::basis(x), C.dim));
}

TEST(Suschkewitsch, WrongAntipodeIsRejected)
{
  HopfData H = right_group_hopf(fixtures::z2(), fixtures::two_points());
  H.antipode = LinMap::identity(4);
  EXPECT_FALSE(right_hopf_report(H).all_passed());
  EXPECT_THROW(suschkewitsch(H), DecompositionFailure);
  auto s = suschkewitsch(H, false);
  EXPECT_FALSE(s.report.find("S on E_H is 1eps")->passed);
}

TEST(Dialgebra, HopfAlgebraAsDialgebra)
{
  HopfData H = group_algebra(fixtures::s3());
  HopfDialgebra d = hopf_as_dialgebra(H);
  Report r = hopf_dialgebra_report(d);
  EXPECT_TRUE(r.all_passed()) << (r.failed().empty() ? "" : r.failed()[0]);
  EXPECT_EQ(hopf_dialgebra_rack(d).mu, hopf_adjoint(H).mu);
  auto sd = structure_decomposition(d);
  EXPECT_EQ(sd.idem.size(), 1u);
  EXPECT_EQ(sd.hopf.size(), H.dim());

  EnvelopingAlgebra U(fixtures::lie_2d(), 3);
  HopfDialgebra du = hopf_as_dialgebra(U.hopf());
  EXPECT_TRUE(hopf_dialgebra_report(du).all_passed());
  EXPECT_EQ(dialgebra_leibniz(du), fixtures::lie_2d());
  auto rb = hopf_dialgebra_rack(du);
  for (std::size_t b = 0; b < du.dim; ++b)
    if (U.pbw().degree(b) <= 2) EXPECT_EQ(rb.op(du.unit, QVec::basis(b)), QVec::basis(b));
}

TEST(Dialgebra, NonBalancedTensorSquare)
{
  Dialgebra d = tensor_square_dialgebra(group_algebra(fixtures::z2()));
  Report r = dialgebra_report(d);
  EXPECT_EQ(r.failed(), std::vector<std::string>{"balanced: a|-1 = 1-|a"});
  EXPECT_EQ(r.find("balanced: a|-1 = 1-|a")->witness.size(), 1u);
}

TEST(TensorDialgebra, TrivialPhiReducesToHProducts)
{
  AugmentedRackBialgebra A = trivial_phi_example();
  ASSERT_TRUE(augmented_report(A).all_passed());
  auto D = dialgebra_from_augmented(A);
  EXPECT_TRUE(hopf_dialgebra_report(D.d).all_passed());
  for (std::size_t b = 0; b < 3; ++b)
    for (std::size_t h = 0; h < 2; ++h)
      for (std::size_t b2 = 0; b2 < 3; ++b2)
        for (std::size_t h2 = 0; h2 < 2; ++h2) {
          QVec x = D.embed(QVec::basis(b), QVec::basis(h)), y = D.embed(QVec::basis(b2), QVec::basis(h2));
          QVec hh = A.H.mult.at(h, h2);
          EXPECT_EQ(D.d.right(x, y), D.embed(QVec::basis(b), hh));
          EXPECT_EQ(D.d.left(x, y), D.embed(A.ell[h].col(b2), hh));
        }
}

TEST(TensorDialgebra, S3AugmentedConjugation)
{
  FiniteGroup G = fixtures::s3();
  AugmentedRack R = conjugation_augmented(G);
  AugmentedRackBialgebra A = augmented_rack_algebra(R);
  auto D = dialgebra_from_augmented(A);
  ASSERT_EQ(D.d.dim, 36u);
  Report r = hopf_dialgebra_report(D.d);
  EXPECT_TRUE(r.all_passed()) << (r.failed().empty() ? "" : r.failed()[0]);
  EXPECT_TRUE(augmented_bracket_report(A, D).all_passed());

  auto rb = hopf_dialgebra_rack(D.d);
  EXPECT_TRUE(module_dialgebra_report(D.d, rb).all_passed());

  auto sd = structure_decomposition(D.d);
  std::vector<QVec> expect_e, expect_h;
  for (std::size_t x = 0; x < G.size(); ++x) expect_e.push_back(D.embed(QVec::basis(x), QVec::basis(G.inv(R.p[x]))));
  for (std::size_t g = 0; g < G.size(); ++g) expect_h.push_back(D.embed(QVec::basis(R.base), QVec::basis(g)));
  EXPECT_TRUE(span(36, sd.idem).same_as(span(36, expect_e)));
  EXPECT_TRUE(span(36, augmented_idempotents(A, D)).same_as(span(36, expect_e)));
  EXPECT_TRUE(span(36, sd.hopf).same_as(span(36, expect_h)));
}

TEST(UniversalDialgebra, AxiomsBracketAndSplitting)
{
  for (const auto& [name, h] : fixtures::leibniz_corpus()) {
    unsigned cap = h.dim() == 3 ? 2 : 3;
    auto U = universal_dialgebra(h, cap);
    const HopfDialgebra& d = U.dialgebra();
    Report r = hopf_dialgebra_report(d);
    EXPECT_TRUE(r.all_passed()) << name << " " << (r.failed().empty() ? "" : r.failed()[0]);
    Report b = augmented_bracket_report(U.augmented, U.tensor);
    EXPECT_TRUE(b.all_passed()) << name << " " << (b.failed().empty() ? "" : b.failed()[0]);
    auto sd = structure_decomposition(d, false);
    EXPECT_TRUE(sd.report.all_passed()) << name << " " << (sd.report.failed().empty() ? "" : sd.report.failed()[0]);
    EXPECT_TRUE(span(d.dim, sd.idem).same_as(span(d.dim, augmented_idempotents(U.augmented, U.tensor)))) << name;

    // Ud(h) = h (x) U(hbar) is closed under both products
    auto part = U.ud_part();
    std::vector<QVec> ud;
    for (auto p : part) ud.push_back(QVec::basis(p));
    Subspace Ud(d.dim, ud);
    for (auto x : part)
      for (auto y : part)
        if (d.within({x, y})) {
          EXPECT_TRUE(Ud.contains(d.vdash.at(x, y))) << name;
          EXPECT_TRUE(Ud.contains(d.dashv.at(x, y))) << name;
        }
    EXPECT_EQ(part.size() + U.env->enveloping().dim(), d.dim) << name;
  }
}

TEST(UniversalDialgebra, GeneratorBrackets)
{
  auto sq = universal_dialgebra(fixtures::square_2d(), 3);
  const HopfDialgebra& d = sq.dialgebra();
  QVec e1 = sq.generator(0), e2 = sq.generator(1);
  EXPECT_EQ(d.left(e1, e1) - d.right(e1, e1), e2);
  EXPECT_TRUE(d.bracket(e1, e2).empty());
  EXPECT_TRUE(d.bracket(e2, e1).empty());

  auto ab = universal_dialgebra(fixtures::abelian(2), 3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_TRUE(ab.dialgebra().bracket(ab.generator(i), ab.generator(j)).empty());
}

TEST(UniversalDialgebra, InducedMorphismIntoDualNumbers)
{
  Dialgebra A = dual_numbers_target();
  ASSERT_TRUE(dialgebra_report(A).all_passed());
  auto U = universal_dialgebra(fixtures::square_2d(), 3);
  LinMap phi(2, 4);
  phi.set_col(0, QVec::basis(2));
  phi.set_col(1, QVec::basis(3));
  LinMap f = induced_morphism(U, A, phi);
  Report r = dialgebra_morphism_report(f, U.dialgebra(), A);
  EXPECT_TRUE(r.all_passed()) << (r.failed().empty() ? "" : r.failed()[0]);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(f(U.generator(i)), phi.col(i));

  LinMap bad(2, 4);
  bad.set_col(0, QVec::basis(2));
  EXPECT_THROW(induced_morphism(U, A, bad), AxiomViolation);
}

TEST(UniversalDialgebra, InducedMorphismIntoMatrices)
{
  Dialgebra A = matrix_target();
  ASSERT_TRUE(dialgebra_report(A).all_passed());
  auto U = universal_dialgebra(fixtures::lie_2d(), 3);
  LinMap phi(2, 4);
  phi.set_col(0, QVec::basis(0));
  phi.set_col(1, QVec::basis(1));
  LinMap f = induced_morphism(U, A, phi);
  Report r = dialgebra_morphism_report(f, U.dialgebra(), A);
  EXPECT_TRUE(r.all_passed()) << (r.failed().empty() ? "" : r.failed()[0]);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(f(U.generator(i)), phi.col(i));
}

TEST(UniversalDialgebra, GeneratedByUnitAndGenerators)
{
  for (const auto& [name, h] : fixtures::leibniz_corpus()) {
    auto U = universal_dialgebra(h, 3);
    std::vector<QVec> gens{U.dialgebra().unit};
    for (std::size_t i = 0; i < h.dim(); ++i) gens.push_back(U.generator(i));
    EXPECT_EQ(generated_subdialgebra(U.dialgebra(), gens).dim(), U.dialgebra().dim) << name;
  }
}

TEST(Suschkewitsch, S3TwoPoints)
{
  FiniteGroup G = fixtures::s3();
  HopfData H = right_group_hopf(G, fixtures::two_points());
  auto s = suschkewitsch(H);
  EXPECT_TRUE(s.report.all_passed());
  EXPECT_EQ(s.h1.size(), 6u);
  EXPECT_EQ(s.idem.size(), 2u);
  // the kernel of x -> sum x1 x2 - x also contains (g,x) + (g^2,x) for 3-cycles g
  EXPECT_GT(generalized_idempotents(H).size(), s.idem.size());
  std::size_t e = G.identity();
  for (std::size_t g = 0; g < 6; ++g)
    for (std::size_t x = 0; x < 2; ++x)
      EXPECT_EQ(s.psi.col(g * 2 + x), tensor(QVec::basis(g * 2), QVec::basis(e * 2 + x), 12));
}
