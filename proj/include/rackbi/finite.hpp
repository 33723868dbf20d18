#pragma once

#include "errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace rackbi {

/// Finite group from its multiplication table (elements 0..n-1).
class FiniteGroup {
public:
  FiniteGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::string> labels = {})
      : mul_(std::move(table)), labels_(std::move(labels))
  {
    std::size_t n = mul_.size();
    if (n == 0) throw std::invalid_argument("empty group");
    for (const auto& row : mul_) {
      if (row.size() != n) throw std::invalid_argument("group table is not square");
      for (auto x : row)
        if (x >= n) throw std::invalid_argument("group table entry out of range");
    }
    e_ = n;
    for (std::size_t a = 0; a < n && e_ == n; ++a) {
      bool ok = true;
      for (std::size_t b = 0; b < n && ok; ++b) ok = mul_[a][b] == b && mul_[b][a] == b;
      if (ok) e_ = a;
    }
    if (e_ == n) throw std::invalid_argument("group table has no identity");
    inv_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (mul_[a][b] == e_ && mul_[b][a] == e_) inv_[a] = b;
    for (auto i : inv_)
      if (i == n) throw std::invalid_argument("group table has a non-invertible element");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]]) throw std::invalid_argument("group table is not associative");
    if (labels_.empty())
      for (std::size_t a = 0; a < n; ++a) labels_.push_back("g" + std::to_string(a));
  }

  std::size_t size() const { return mul_.size(); }
  std::size_t identity() const { return e_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_.at(a).at(b); }
  std::size_t inv(std::size_t a) const { return inv_.at(a); }
  const std::string& label(std::size_t a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<std::size_t>>& table() const { return mul_; }
  bool is_abelian() const
  {
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = 0; b < size(); ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

private:
  std::vector<std::vector<std::size_t>> mul_;
  std::vector<std::string> labels_;
  std::size_t e_ = 0;
  std::vector<std::size_t> inv_;
};

inline FiniteGroup cyclic_group(std::size_t n)
{
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> l;
  for (std::size_t a = 0; a < n; ++a) {
    l.push_back(a == 0 ? "e" : "g" + std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return FiniteGroup(t, l);
}

/// Symmetric group on m letters; permutations in lexicographic order, composition (ab)(i) = a(b(i)).
inline FiniteGroup symmetric_group(std::size_t m)
{
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(m);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::vector<std::size_t>& q) {
    return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::size_t n = perms.size();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    std::string s = "[";
    for (std::size_t i = 0; i < m; ++i) s += std::to_string(perms[a][i] + 1);
    labels.push_back(s + "]");
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::size_t> c(m);
      for (std::size_t i = 0; i < m; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = index(c);
    }
  }
  return FiniteGroup(t, labels);
}

/// Pointed rack: self-distributive operation with bijective left multiplications and a unit.
class FiniteRack {
public:
  FiniteRack(std::vector<std::vector<std::size_t>> op, std::size_t unit, std::vector<std::string> labels = {})
      : op_(std::move(op)), e_(unit), labels_(std::move(labels))
  {
    std::size_t n = op_.size();
    if (n == 0 || e_ >= n) throw std::invalid_argument("rack needs a unit among its elements");
    for (const auto& row : op_) {
      if (row.size() != n) throw std::invalid_argument("rack table is not square");
      for (auto x : row)
        if (x >= n) throw std::invalid_argument("rack table entry out of range");
    }
    if (labels_.empty())
      for (std::size_t a = 0; a < n; ++a) labels_.push_back("x" + std::to_string(a));
    inv_.assign(n, std::vector<std::size_t>(n, n));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        std::size_t z = op_[x][y];
        if (inv_[x][z] != n) throw std::invalid_argument("left multiplication of " + labels_[x] + " is not bijective");
        inv_[x][z] = y;
      }
    for (std::size_t x = 0; x < n; ++x) {
      if (op_[e_][x] != x) throw std::invalid_argument("unit does not act trivially");
      if (op_[x][e_] != e_) throw std::invalid_argument("unit is not fixed");
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (op_[x][op_[y][z]] != op_[op_[x][y]][op_[x][z]])
            throw std::invalid_argument("rack table is not self-distributive at (" + labels_[x] + "," + labels_[y] +
                                        "," + labels_[z] + ")");
    }
  }

  std::size_t size() const { return op_.size(); }
  std::size_t unit() const { return e_; }
  std::size_t op(std::size_t x, std::size_t y) const { return op_.at(x).at(y); }
  std::size_t left_inverse(std::size_t x, std::size_t z) const { return inv_.at(x).at(z); }
  const std::string& label(std::size_t a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<std::size_t>>& table() const { return op_; }

private:
  std::vector<std::vector<std::size_t>> op_;
  std::size_t e_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> inv_;
};

inline FiniteRack conjugation_rack(const FiniteGroup& G)
{
  std::size_t n = G.size();
  std::vector<std::vector<std::size_t>> op(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) op[x][y] = G.mul(G.mul(x, y), G.inv(x));
  return FiniteRack(op, G.identity(), G.labels());
}

/// Conjugation rack on a conjugation-closed subset containing the identity.
inline FiniteRack conjugation_subrack(const FiniteGroup& G, const std::vector<std::size_t>& subset)
{
  std::size_t n = subset.size();
  auto pos = [&](std::size_t g) {
    auto it = std::find(subset.begin(), subset.end(), g);
    if (it == subset.end()) throw std::invalid_argument("subset is not closed under conjugation");
    return static_cast<std::size_t>(it - subset.begin());
  };
  std::vector<std::vector<std::size_t>> op(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x) {
    labels.push_back(G.label(subset[x]));
    for (std::size_t y = 0; y < n; ++y) op[x][y] = pos(G.mul(G.mul(subset[x], subset[y]), G.inv(subset[x])));
  }
  return FiniteRack(op, pos(G.identity()), labels);
}

/// Finite set with a base point (index 0 unless stated).
struct PointedSet {
  std::vector<std::string> elements;
  std::size_t base = 0;
  std::size_t size() const { return elements.size(); }
};

/// Augmented finite rack: a group G acting on a pointed set X with an equivariant map p: X -> G
/// (p(g.x) = g p(x) g^-1, p(base) = e, g.base = base). The induced rack is x |> y = p(x).y.
struct AugmentedRack {
  std::vector<std::string> elements;
  std::size_t base = 0;
  FiniteGroup group;
  std::vector<std::size_t> p;
  std::vector<std::vector<std::size_t>> action; ///< action[g][x] = g.x

  void validate() const
  {
    std::size_t n = elements.size();
    if (p.size() != n || action.size() != group.size()) throw std::invalid_argument("augmented rack shape");
    if (p[base] != group.identity()) throw std::invalid_argument("p(base) is not the identity");
    for (std::size_t g = 0; g < group.size(); ++g) {
      if (action[g].size() != n) throw std::invalid_argument("action table shape");
      if (action[g][base] != base) throw std::invalid_argument("action moves the base point");
      for (std::size_t x = 0; x < n; ++x) {
        if (action[g][x] >= n) throw std::invalid_argument("action entry out of range");
        if (p[action[g][x]] != group.mul(group.mul(g, p[x]), group.inv(g)))
          throw std::invalid_argument("p is not equivariant");
        for (std::size_t h = 0; h < group.size(); ++h)
          if (action[group.mul(g, h)][x] != action[g][action[h][x]]) throw std::invalid_argument("not a group action");
      }
    }
    for (std::size_t x = 0; x < n; ++x)
      if (action[group.identity()][x] != x) throw std::invalid_argument("identity acts nontrivially");
  }

  FiniteRack rack() const
  {
    std::size_t n = elements.size();
    std::vector<std::vector<std::size_t>> op(n, std::vector<std::size_t>(n));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) op[x][y] = action[p[x]][y];
    return FiniteRack(op, base, elements);
  }
};

/// p = id on the conjugation rack of G, G acting by conjugation.
inline AugmentedRack conjugation_augmented(const FiniteGroup& G)
{
  std::size_t n = G.size();
  std::vector<std::vector<std::size_t>> act(n, std::vector<std::size_t>(n));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t x = 0; x < n; ++x) act[g][x] = G.mul(G.mul(g, x), G.inv(g));
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  AugmentedRack a{G.labels(), G.identity(), G, p, act};
  a.validate();
  return a;
}

} // namespace rackbi
