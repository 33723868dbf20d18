#pragma once

// Bundled example structures. Every builder goes through the validating
// constructors, so a wrong table fails at construction.

#include "finite.hpp"
#include "leibniz.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rackbi::corpus {

inline LeibnizAlgebra abelian(std::size_t n) { return check_leibniz(n, std::vector<QVec>(n * n)); }

/// [e1,e1] = e2
inline LeibnizAlgebra square_2d()
{
  std::vector<QVec> br(4);
  br[0] = QVec::basis(1);
  return check_leibniz(2, br);
}

/// [e1,e2] = e2 = -[e2,e1]
inline LeibnizAlgebra lie_2d()
{
  std::vector<QVec> br(4);
  br[0 * 2 + 1] = QVec::basis(1);
  br[1 * 2 + 0] = QVec::basis(1, Q(-1));
  return check_leibniz(2, br);
}

/// [e1,e1] = e3, [e1,e2] = e3
inline LeibnizAlgebra non_lie_3d()
{
  std::vector<QVec> br(9);
  br[0 * 3 + 0] = QVec::basis(2);
  br[0 * 3 + 1] = QVec::basis(2);
  return check_leibniz(3, br);
}

/// [e1,e2] = e1, [e2,e1] = e1. Fails the left Leibniz identity, so this throws.
inline LeibnizAlgebra non_leibniz()
{
  std::vector<QVec> br(4);
  br[0 * 2 + 1] = QVec::basis(0);
  br[1 * 2 + 0] = QVec::basis(0);
  return check_leibniz(2, br);
}

inline std::vector<std::pair<std::string, LeibnizAlgebra>> leibniz_corpus()
{
  return {{"abelian1", abelian(1)}, {"abelian2", abelian(2)},     {"abelian3", abelian(3)},
          {"square2", square_2d()}, {"lie2", lie_2d()},           {"nonlie3", non_lie_3d()}};
}

inline FiniteGroup z2() { return cyclic_group(2); }
inline FiniteGroup s3() { return symmetric_group(3); }

/// Identity and the three transpositions of S3, closed under conjugation.
inline std::vector<std::size_t> s3_transpositions_with_identity()
{
  FiniteGroup g = s3();
  std::vector<std::size_t> out{g.identity()};
  for (std::size_t a = 0; a < g.size(); ++a)
    if (a != g.identity() && g.mul(a, a) == g.identity()) out.push_back(a);
  return out;
}

inline PointedSet two_points() { return PointedSet{{"p", "q"}, 0}; }

} // namespace rackbi::corpus
