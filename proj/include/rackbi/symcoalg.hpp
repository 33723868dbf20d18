#pragma once

#include "coalgebra.hpp"

#include <map>
#include <string>
#include <vector>

namespace rackbi {

/// Monomial in S(V): multiplicities over the basis of V.
using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents& e)
{
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

/// Truncated symmetric coalgebra S(V)_(k) in the monomial basis.
///
/// Basis is ordered by degree, then lexicographically by the sorted index word.
class SymCoalgebra {
public:
  SymCoalgebra(std::size_t n, unsigned k, std::vector<std::string> var_labels = {})
      : n_(n), k_(k), vars_(std::move(var_labels))
  {
    if (vars_.empty())
      for (std::size_t i = 0; i < n; ++i) vars_.push_back("e" + std::to_string(i + 1));
    for (unsigned d = 0; d <= k; ++d) {
      std::vector<std::size_t> word;
      enumerate(d, 0, word);
    }
    build();
  }

  std::size_t vars() const { return n_; }
  unsigned order() const { return k_; }
  std::size_t dim() const { return mons_.size(); }
  const Coalgebra& coalgebra() const { return C_; }
  const Exponents& monomial(std::size_t i) const { return mons_.at(i); }
  unsigned degree(std::size_t i) const { return total_degree(mons_.at(i)); }
  std::size_t index_of(const Exponents& e) const
  {
    auto it = index_.find(e);
    if (it == index_.end()) throw DegreeCapExceeded(static_cast<int>(total_degree(e)), static_cast<int>(k_));
    return it->second;
  }
  bool has(const Exponents& e) const { return index_.count(e) != 0; }
  std::size_t one() const { return 0; }
  /// Index of the degree-one monomial e_i.
  std::size_t var(std::size_t i) const
  {
    Exponents e(n_, 0);
    e.at(i) = 1;
    return index_of(e);
  }
  /// Embedding V -> S(V)_(k) onto degree one.
  QVec embed(const QVec& x) const
  {
    QVec r;
    for (const auto& [i, c] : x) r.add(var(i), c);
    return r;
  }

  /// Monomial product, rejected past the truncation order.
  QVec product(std::size_t a, std::size_t b) const
  {
    Exponents e = mons_.at(a);
    for (std::size_t i = 0; i < n_; ++i) e[i] += mons_.at(b)[i];
    return QVec::basis(index_of(e));
  }
  QVec product(const QVec& a, const QVec& b) const
  {
    QVec r;
    for (const auto& [i, x] : a)
      for (const auto& [j, y] : b) r.axpy(x * y, product(i, j));
    return r;
  }

  /// Extension of a linear map D: V -> V to a derivation of S(V)_(k).
  LinMap derivation(const LinMap& D) const
  {
    LinMap m(dim(), dim());
    for (std::size_t b = 0; b < dim(); ++b) {
      QVec out;
      const Exponents& e = mons_[b];
      for (std::size_t i = 0; i < n_; ++i) {
        if (e[i] == 0) continue;
        Exponents rest = e;
        rest[i] -= 1;
        std::size_t ri = index_of(rest);
        for (const auto& [j, c] : D.col(i)) out.axpy(c * e[i], product(ri, var(j)));
      }
      m.set_col(b, out);
    }
    return m;
  }

  /// S(f): x1...xr -> f(x1)...f(xr) into another truncated symmetric coalgebra.
  LinMap functor(const LinMap& f, const SymCoalgebra& target) const
  {
    if (f.dom() != n_ || f.cod() != target.vars()) throw BasisMismatch("S(f) shape");
    LinMap m(dim(), target.dim());
    for (std::size_t b = 0; b < dim(); ++b) {
      QVec acc = QVec::basis(target.one());
      const Exponents& e = mons_[b];
      for (std::size_t i = 0; i < n_; ++i)
        for (unsigned r = 0; r < e[i]; ++r) acc = target.product(acc, target.embed(f.col(i)));
      m.set_col(b, acc);
    }
    return m;
  }

  std::string label(std::size_t i) const { return C_.label(i); }
  std::string show(const QVec& v) const { return C_.show(v); }

private:
  void enumerate(unsigned remaining, std::size_t from, std::vector<std::size_t>& word)
  {
    if (remaining == 0) {
      Exponents e(n_, 0);
      for (auto x : word) ++e[x];
      index_.emplace(e, mons_.size());
      mons_.push_back(e);
      return;
    }
    for (std::size_t i = from; i < n_; ++i) {
      word.push_back(i);
      enumerate(remaining - 1, i, word);
      word.pop_back();
    }
  }

  std::string mono_label(const Exponents& e) const
  {
    std::string s;
    for (std::size_t i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += ".";
      s += vars_[i];
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
  }

  void build()
  {
    std::size_t d = mons_.size();
    C_.dim = d;
    C_.delta.resize(d);
    C_.eps.assign(d, Q(0));
    C_.eps[0] = 1;
    C_.unit = QVec::basis(0);
    for (std::size_t b = 0; b < d; ++b) {
      C_.labels.push_back(mono_label(mons_[b]));
      C_.degree.push_back(static_cast<int>(total_degree(mons_[b])));
      // Sum over sub-multisets A with weight prod_i C(m_i, a_i).
      const Exponents& m = mons_[b];
      Exponents a(n_, 0);
      QVec out;
      while (true) {
        Q w = 1;
        Exponents rest(n_);
        for (std::size_t i = 0; i < n_; ++i) {
          w *= binomial(m[i], a[i]);
          rest[i] = m[i] - a[i];
        }
        out.add(index_of(a) * d + index_of(rest), w);
        std::size_t i = 0;
        while (i < n_ && a[i] == m[i]) a[i++] = 0;
        if (i == n_) break;
        ++a[i];
      }
      C_.delta[b] = std::move(out);
    }
  }

  std::size_t n_;
  unsigned k_;
  std::vector<std::string> vars_;
  std::vector<Exponents> mons_;
  std::map<Exponents, std::size_t> index_;
  Coalgebra C_;
};

} // namespace rackbi
