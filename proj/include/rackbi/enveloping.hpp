#pragma once

#include "hopf.hpp"
#include "leibniz.hpp"
#include "symcoalg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <vector>

namespace rackbi {

/// U(g) of a finite-dimensional Lie algebra, truncated at filtration degree `cap`.
///
/// Basis: ordered PBW monomials x_1^{a_1}...x_m^{a_m} of degree <= cap. Products whose
/// degree would pass the cap throw DegreeCapExceeded.
class EnvelopingAlgebra {
public:
  using Word = std::vector<std::size_t>;

  EnvelopingAlgebra(LeibnizAlgebra g, unsigned cap)
      : g_(std::move(g)), cap_(cap), pbw_(g_.dim(), cap, var_labels(g_))
  {
    if (!g_.is_lie()) throw std::invalid_argument("enveloping algebra needs a Lie algebra");
    build_hopf();
  }

  const LeibnizAlgebra& lie() const { return g_; }
  unsigned cap() const { return cap_; }
  std::size_t dim() const { return pbw_.dim(); }
  const SymCoalgebra& pbw() const { return pbw_; }
  const Coalgebra& coalgebra() const { return pbw_.coalgebra(); }
  const HopfData& hopf() const { return hopf_; }
  std::size_t gen(std::size_t i) const { return pbw_.var(i); }
  QVec one() const { return QVec::basis(pbw_.one()); }
  std::string show(const QVec& v) const { return pbw_.show(v); }

  /// The ordered word of a PBW basis element.
  Word word(std::size_t i) const
  {
    Word w;
    const Exponents& e = pbw_.monomial(i);
    for (std::size_t k = 0; k < e.size(); ++k)
      for (unsigned r = 0; r < e[k]; ++r) w.push_back(k);
    return w;
  }

  /// PBW normal form of a word, rewriting the leftmost inversion first (memoized).
  QVec straighten(const Word& w) const
  {
    check_len(w);
    {
      std::lock_guard<std::mutex> lock(memo_mutex_);
      auto it = memo_.find(w);
      if (it != memo_.end()) return it->second;
    }
    QVec r;
    std::size_t i = 0;
    while (i + 1 < w.size() && w[i] <= w[i + 1]) ++i;
    if (i + 1 >= w.size()) r = QVec::basis(sorted_index(w));
    else r = rewrite(w, i, [this](const Word& x) { return straighten(x); });
    std::lock_guard<std::mutex> lock(memo_mutex_);
    memo_.emplace(w, r);
    return r;
  }

  /// Same normal form via rightmost-inversion rewriting, without memo.
  QVec straighten_rightmost(const Word& w) const
  {
    check_len(w);
    std::size_t i = w.size();
    for (std::size_t j = w.size(); j-- > 1;)
      if (w[j - 1] > w[j]) {
        i = j - 1;
        break;
      }
    if (i == w.size()) return QVec::basis(sorted_index(w));
    return rewrite(w, i, [this](const Word& x) { return straighten_rightmost(x); });
  }

  QVec mul(std::size_t a, std::size_t b) const
  {
    Word w = word(a), v = word(b);
    w.insert(w.end(), v.begin(), v.end());
    return straighten(w);
  }
  QVec mul(const QVec& a, const QVec& b) const
  {
    QVec r;
    for (const auto& [i, x] : a)
      for (const auto& [j, y] : b) r.axpy(x * y, mul(i, j));
    return r;
  }

  /// Anti-automorphism with S(xi) = -xi.
  QVec antipode(std::size_t i) const
  {
    Word w = word(i);
    std::reverse(w.begin(), w.end());
    QVec r = straighten(w);
    return w.size() % 2 ? -r : r;
  }

  /// omega(xi_1 . ... . xi_k) = average of xi_s(1)...xi_s(k) over all orderings.
  QVec symmetrize(const Exponents& e) const
  {
    if (e.size() != g_.dim()) throw BasisMismatch("symmetrize: exponent vector length");
    Word w;
    for (std::size_t k = 0; k < e.size(); ++k)
      for (unsigned r = 0; r < e[k]; ++r) w.push_back(k);
    check_len(w);
    QVec acc;
    std::size_t count = 0;
    do {
      acc += straighten(w);
      ++count;
    } while (std::next_permutation(w.begin(), w.end()));
    return acc * Q(1, static_cast<long>(count));
  }

  /// omega as a map from a truncated S(g) into U(g).
  LinMap omega(const SymCoalgebra& Sg) const
  {
    if (Sg.vars() != g_.dim()) throw BasisMismatch("omega: symmetric coalgebra over a different space");
    LinMap m(Sg.dim(), dim());
    for (std::size_t b = 0; b < Sg.dim(); ++b) m.set_col(b, symmetrize(Sg.monomial(b)));
    return m;
  }

  /// ad_h(u) = sum h1 u S(h2).
  QVec adjoint(const QVec& h, const QVec& u) const { return rackbi::adjoint(hopf_, h, u); }

private:
  static std::vector<std::string> var_labels(const LeibnizAlgebra& g)
  {
    std::vector<std::string> l;
    for (std::size_t i = 0; i < g.dim(); ++i) l.push_back(g.label(i));
    return l;
  }

  void check_len(const Word& w) const
  {
    if (w.size() > cap_) throw DegreeCapExceeded(static_cast<int>(w.size()), static_cast<int>(cap_));
  }

  std::size_t sorted_index(const Word& w) const
  {
    Exponents e(g_.dim(), 0);
    for (auto x : w) ++e[x];
    return pbw_.index_of(e);
  }

  /// ...ab... = ...ba... + ...[a,b]...
  template <typename Rec>
  QVec rewrite(const Word& w, std::size_t i, const Rec& rec) const
  {
    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    QVec r = rec(swapped);
    for (const auto& [k, c] : g_.bracket(w[i], w[i + 1])) {
      Word shorter(w.begin(), w.begin() + static_cast<long>(i));
      shorter.push_back(k);
      shorter.insert(shorter.end(), w.begin() + static_cast<long>(i) + 2, w.end());
      r.axpy(c, rec(shorter));
    }
    return r;
  }

  void build_hopf()
  {
    std::size_t n = dim();
    hopf_.coalg = pbw_.coalgebra();
    hopf_.cap = static_cast<int>(cap_);
    hopf_.mult = Bilinear(n, n, n);
    hopf_.mult.cap = hopf_.cap;
    hopf_.antipode = LinMap(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      hopf_.antipode.set_col(a, antipode(a));
      for (std::size_t b = 0; b < n; ++b)
        if (pbw_.degree(a) + pbw_.degree(b) <= cap_) hopf_.mult.set(a, b, mul(a, b));
    }
  }

  LeibnizAlgebra g_;
  unsigned cap_;
  SymCoalgebra pbw_;
  HopfData hopf_;
  mutable std::mutex memo_mutex_;
  mutable std::map<Word, QVec> memo_;
};

/// The data attached to a Leibniz algebra h and an ideal Q(h) <= z <= z(h):
/// g = h/z, U(g) (capped), the action of U(g) on S(h)_(k) and Phi = omega o S(p).
class LeibnizEnvelope {
public:
  LeibnizEnvelope(const LeibnizAlgebra& h, const LeibnizIdeal& z, unsigned k, unsigned cap)
      : q_(quotient_lie(h, z)), U_(q_.lie, cap), S_(h.dim(), k, var_labels(h))
  {
    if (cap < k) throw DegreeCapExceeded(static_cast<int>(k), static_cast<int>(cap));
    for (std::size_t a = 0; a < q_.dim(); ++a) gens_.push_back(S_.derivation(h.ad(q_.lift_vector(a))));
    for (std::size_t u = 0; u < U_.dim(); ++u) {
      LinMap m = LinMap::identity(S_.dim());
      for (auto letter : U_.word(u)) m = m.after(gens_[letter]);
      ell_.push_back(std::move(m));
    }
    SymCoalgebra Sg(q_.dim(), k);
    phi_ = U_.omega(Sg).after(S_.functor(q_.p, Sg));
  }

  const QuotientLie& quotient() const { return q_; }
  const EnvelopingAlgebra& enveloping() const { return U_; }
  const SymCoalgebra& sym() const { return S_; }
  const LinMap& phi() const { return phi_; }
  /// l_u for a PBW basis element u.
  const LinMap& ell(std::size_t u) const { return ell_.at(u); }
  const std::vector<LinMap>& ell() const { return ell_; }

  /// u.a for u in U(g), a in S(h)_(k).
  QVec act(const QVec& u, const QVec& a) const
  {
    QVec r;
    for (const auto& [i, c] : u) r.axpy(c, ell_.at(i)(a));
    return r;
  }
  QVec phi(const QVec& a) const { return phi_(a); }

private:
  static std::vector<std::string> var_labels(const LeibnizAlgebra& h)
  {
    std::vector<std::string> l;
    for (std::size_t i = 0; i < h.dim(); ++i) l.push_back(h.label(i));
    return l;
  }

  QuotientLie q_;
  EnvelopingAlgebra U_;
  SymCoalgebra S_;
  std::vector<LinMap> gens_;
  std::vector<LinMap> ell_;
  LinMap phi_;
};

} // namespace rackbi
