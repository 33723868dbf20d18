#pragma once

#include "errors.hpp"
#include "scalar.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace rackbi {

/// Sparse vector over an indexed basis. Zero entries are never stored.
template <typename T>
class Vec {
public:
  using Map = std::map<std::size_t, T>;

  Vec() = default;
  static Vec basis(std::size_t i)
  {
    Vec v;
    v.e_.emplace(i, T(1));
    return v;
  }
  static Vec basis(std::size_t i, const T& c)
  {
    Vec v;
    v.add(i, c);
    return v;
  }

  void add(std::size_t i, const T& c)
  {
    if (is_zero(c)) return;
    auto [it, fresh] = e_.try_emplace(i, c);
    if (!fresh) {
      it->second += c;
      if (is_zero(it->second)) e_.erase(it);
    }
  }
  /// this += c * v
  template <typename S>
  void axpy(const S& c, const Vec& v)
  {
    if (is_zero(c)) return;
    for (const auto& [i, x] : v.e_) add(i, x * c);
  }

  T get(std::size_t i) const
  {
    auto it = e_.find(i);
    return it == e_.end() ? T{} : it->second;
  }
  bool contains(std::size_t i) const { return e_.count(i) != 0; }
  bool empty() const { return e_.empty(); }
  std::size_t nnz() const { return e_.size(); }
  const Map& entries() const { return e_; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }
  std::size_t max_index_plus_one() const { return e_.empty() ? 0 : e_.rbegin()->first + 1; }

  Vec& operator+=(const Vec& o)
  {
    for (const auto& [i, x] : o.e_) add(i, x);
    return *this;
  }
  Vec& operator-=(const Vec& o)
  {
    for (const auto& [i, x] : o.e_) add(i, -x);
    return *this;
  }
  template <typename S>
  Vec& operator*=(const S& c)
  {
    if (is_zero(c)) {
      e_.clear();
      return *this;
    }
    for (auto it = e_.begin(); it != e_.end();) {
      it->second = it->second * c;
      if (is_zero(it->second)) it = e_.erase(it);
      else ++it;
    }
    return *this;
  }
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator-(Vec a)
  {
    for (auto& [i, x] : a.e_) x = -x;
    return a;
  }
  template <typename S>
  friend Vec operator*(Vec a, const S& c)
  {
    return a *= c;
  }
  friend bool operator==(const Vec& a, const Vec& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

  /// Coordinate-wise transform of indices (used to re-embed into larger bases).
  Vec reindexed(const std::function<std::size_t(std::size_t)>& f) const
  {
    Vec r;
    for (const auto& [i, x] : e_) r.add(f(i), x);
    return r;
  }

private:
  Map e_;
};

using QVec = Vec<Q>;

inline std::string to_string(const QVec& v, const std::vector<std::string>& labels = {})
{
  if (v.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [i, c] : v) {
    if (!first) s += (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) s += "-";
    Q a = abs(c);
    std::string name = i < labels.size() ? labels[i] : "b" + std::to_string(i);
    if (a != 1) s += pretty(a) + "*";
    s += name;
    first = false;
  }
  return s;
}

/// Lexicographic index of a tuple in V^{(x)n}, dim V = d.
inline std::size_t encode(const std::vector<std::size_t>& t, std::size_t d)
{
  std::size_t idx = 0;
  for (std::size_t x : t) idx = idx * d + x;
  return idx;
}

inline std::vector<std::size_t> decode(std::size_t idx, std::size_t n, std::size_t d)
{
  std::vector<std::size_t> t(n);
  for (std::size_t k = n; k-- > 0;) {
    t[k] = idx % d;
    idx /= d;
  }
  return t;
}

inline std::size_t ipow(std::size_t d, std::size_t n)
{
  std::size_t r = 1;
  for (std::size_t i = 0; i < n; ++i) r *= d;
  return r;
}

/// a (x) b on the product basis, right factor of dimension db.
template <typename T>
Vec<T> tensor(const Vec<T>& a, const Vec<T>& b, std::size_t db)
{
  Vec<T> r;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) r.add(i * db + j, x * y);
  return r;
}

/// Tensor product of several vectors living in spaces of the given dimensions.
inline QVec tensor_all(const std::vector<QVec>& parts, const std::vector<std::size_t>& dims)
{
  QVec acc = QVec::basis(0);
  for (std::size_t k = 0; k < parts.size(); ++k) acc = tensor(acc, parts[k], dims[k]);
  return acc;
}

/// Linear map between finite indexed bases, stored by sparse columns.
class LinMap {
public:
  LinMap() = default;
  LinMap(std::size_t dom, std::size_t cod) : dom_(dom), cod_(cod), cols_(dom) {}
  LinMap(std::size_t cod, std::vector<QVec> cols) : dom_(cols.size()), cod_(cod), cols_(std::move(cols))
  {
    for (const auto& c : cols_)
      if (c.max_index_plus_one() > cod_) throw BasisMismatch("column entry outside codomain");
  }

  static LinMap identity(std::size_t n)
  {
    LinMap m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.cols_[i] = QVec::basis(i);
    return m;
  }
  static LinMap zero(std::size_t dom, std::size_t cod) { return LinMap(dom, cod); }

  std::size_t dom() const { return dom_; }
  std::size_t cod() const { return cod_; }
  const QVec& col(std::size_t i) const { return cols_.at(i); }
  const std::vector<QVec>& cols() const { return cols_; }
  void set_col(std::size_t i, QVec v)
  {
    if (v.max_index_plus_one() > cod_) throw BasisMismatch("column entry outside codomain");
    cols_.at(i) = std::move(v);
  }

  QVec operator()(const QVec& v) const
  {
    QVec r;
    for (const auto& [i, c] : v) {
      if (i >= dom_) throw BasisMismatch("vector outside map domain");
      r.axpy(c, cols_[i]);
    }
    return r;
  }

  /// (*this) o g
  LinMap after(const LinMap& g) const
  {
    if (g.cod_ != dom_) throw BasisMismatch("composition of incompatible maps");
    LinMap r(g.dom_, cod_);
    for (std::size_t i = 0; i < g.dom_; ++i) r.cols_[i] = (*this)(g.cols_[i]);
    return r;
  }

  LinMap& operator+=(const LinMap& o)
  {
    same_shape(o);
    for (std::size_t i = 0; i < dom_; ++i) cols_[i] += o.cols_[i];
    return *this;
  }
  LinMap& operator-=(const LinMap& o)
  {
    same_shape(o);
    for (std::size_t i = 0; i < dom_; ++i) cols_[i] -= o.cols_[i];
    return *this;
  }
  LinMap& operator*=(const Q& c)
  {
    for (auto& col : cols_) col *= c;
    return *this;
  }
  friend LinMap operator+(LinMap a, const LinMap& b) { return a += b; }
  friend LinMap operator-(LinMap a, const LinMap& b) { return a -= b; }
  friend LinMap operator*(LinMap a, const Q& c) { return a *= c; }
  friend bool operator==(const LinMap& a, const LinMap& b)
  {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.cols_ == b.cols_;
  }
  friend bool operator!=(const LinMap& a, const LinMap& b) { return !(a == b); }

  bool is_zero() const
  {
    for (const auto& c : cols_)
      if (!c.empty()) return false;
    return true;
  }

  std::vector<std::vector<Q>> dense() const
  {
    std::vector<std::vector<Q>> m(cod_, std::vector<Q>(dom_));
    for (std::size_t j = 0; j < dom_; ++j)
      for (const auto& [i, c] : cols_[j]) m[i][j] = c;
    return m;
  }
  static LinMap from_dense(const std::vector<std::vector<Q>>& m, std::size_t dom)
  {
    LinMap r(dom, m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < dom; ++j) r.cols_[j].add(i, m[i][j]);
    return r;
  }

private:
  void same_shape(const LinMap& o) const
  {
    if (o.dom_ != dom_ || o.cod_ != cod_) throw BasisMismatch("maps of different shape");
  }

  std::size_t dom_ = 0;
  std::size_t cod_ = 0;
  std::vector<QVec> cols_;
};

/// (f (x) g)(e_i (x) e_j) = f(e_i) (x) g(e_j).
inline LinMap tensor_product_map(const LinMap& f, const LinMap& g)
{
  LinMap r(f.dom() * g.dom(), f.cod() * g.cod());
  for (std::size_t i = 0; i < f.dom(); ++i)
    for (std::size_t j = 0; j < g.dom(); ++j) r.set_col(i * g.dom() + j, tensor(f.col(i), g.col(j), g.cod()));
  return r;
}

/// The flip V (x) W -> W (x) V.
inline LinMap flip_map(std::size_t dv, std::size_t dw)
{
  LinMap r(dv * dw, dw * dv);
  for (std::size_t i = 0; i < dv; ++i)
    for (std::size_t j = 0; j < dw; ++j) r.set_col(i * dw + j, QVec::basis(j * dv + i));
  return r;
}

} // namespace rackbi
