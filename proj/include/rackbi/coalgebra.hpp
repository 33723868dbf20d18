#pragma once

#include "linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rackbi {

/// Finite-dimensional coalgebra given by structure tensors on a basis.
///
/// delta[i] lives on the pair basis (index p*dim+q); degree[i] is a filtration
/// bound for basis element i, used to keep capped computations honest.
struct Coalgebra {
  std::size_t dim = 0;
  std::vector<QVec> delta;
  std::vector<Q> eps;
  QVec unit;
  std::vector<std::string> labels;
  std::vector<int> degree;

  std::size_t pair(std::size_t p, std::size_t q) const { return p * dim + q; }

  QVec coproduct(const QVec& v) const
  {
    QVec r;
    for (const auto& [i, c] : v) r.axpy(c, delta.at(i));
    return r;
  }
  Q counit(const QVec& v) const
  {
    Q r = 0;
    for (const auto& [i, c] : v) r += c * eps.at(i);
    return r;
  }
  LinMap delta_map() const { return LinMap(dim * dim, delta); }
  std::string label(std::size_t i) const
  {
    return i < labels.size() ? labels[i] : "b" + std::to_string(i);
  }
  std::string show(const QVec& v) const { return to_string(v, labels); }
  int degree_of(std::size_t i) const { return degree.empty() ? 0 : degree.at(i); }
};

/// (f (x) g)(t) for t on the pair basis of spaces of dims (da, db), results of dims (ca, cb).
inline QVec apply_pair(const LinMap& f, const LinMap& g, const QVec& t)
{
  QVec r;
  std::size_t db = g.dom();
  for (const auto& [idx, c] : t) {
    QVec part = tensor(f.col(idx / db), g.col(idx % db), g.cod());
    r.axpy(c, part);
  }
  return r;
}

inline std::string show_pair(const Coalgebra& C, const QVec& t)
{
  if (t.empty()) return "0";
  std::string s;
  for (const auto& [idx, c] : t) {
    if (!s.empty()) s += " + ";
    s += pretty(c) + "*" + C.label(idx / C.dim) + "(x)" + C.label(idx % C.dim);
  }
  return s;
}

/// Result of a family of checks; each check keeps its first witness.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::vector<std::size_t> witness;
  std::string lhs;
  std::string rhs;
  std::size_t cases = 0;
};

struct Report {
  std::vector<CheckResult> checks;

  bool all_passed() const
  {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const CheckResult* find(const std::string& name) const
  {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  std::vector<std::string> failed() const
  {
    std::vector<std::string> out;
    for (const auto& c : checks)
      if (!c.passed) out.push_back(c.name);
    return out;
  }
  void append(const Report& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
  /// Throws the first failure as an AxiomViolation.
  void raise_first() const
  {
    for (const auto& c : checks)
      if (!c.passed) throw AxiomViolation(c.name, c.witness, c.lhs, c.rhs);
  }
};

/// Accumulates cases for one named check.
class Checker {
public:
  explicit Checker(std::string name) { r_.name = std::move(name); }
  template <typename Eq>
  bool expect(bool ok, std::vector<std::size_t> witness, const Eq& sides)
  {
    ++r_.cases;
    if (ok || !r_.passed) return ok;
    r_.passed = false;
    r_.witness = std::move(witness);
    auto [l, rr] = sides();
    r_.lhs = std::move(l);
    r_.rhs = std::move(rr);
    return false;
  }
  bool expect_eq(const QVec& a, const QVec& b, std::vector<std::size_t> witness,
                 const std::vector<std::string>& labels = {})
  {
    return expect(a == b, std::move(witness),
                  [&] { return std::pair{to_string(a, labels), to_string(b, labels)}; });
  }
  bool passed() const { return r_.passed; }
  CheckResult result() const { return r_; }

private:
  CheckResult r_;
};

/// Coassociativity, counit laws, coaugmentation (and optionally cocommutativity).
inline Report check_coalgebra(const Coalgebra& C, bool cocommutative = true)
{
  Report rep;
  std::size_t n = C.dim;
  Checker coass("coassociativity"), counit("counit"), coaug("coaugmentation"), cocom("cocommutativity");
  for (std::size_t i = 0; i < n; ++i) {
    QVec d = C.delta[i];
    QVec left, right;
    for (const auto& [idx, c] : d) {
      left.axpy(c, tensor(C.delta[idx / n], QVec::basis(idx % n), n));
      right.axpy(c, tensor(QVec::basis(idx / n), C.delta[idx % n], n * n));
    }
    coass.expect_eq(left, right, {i});
    QVec l, r;
    for (const auto& [idx, c] : d) {
      l.axpy(c * C.eps[idx / n], QVec::basis(idx % n));
      r.axpy(c * C.eps[idx % n], QVec::basis(idx / n));
    }
    counit.expect_eq(l, QVec::basis(i), {i}, C.labels);
    counit.expect_eq(r, QVec::basis(i), {i}, C.labels);
    if (cocommutative) {
      QVec flipped;
      for (const auto& [idx, c] : d) flipped.add((idx % n) * n + idx / n, c);
      cocom.expect(flipped == d, {i}, [&] { return std::pair{show_pair(C, d), show_pair(C, flipped)}; });
    }
  }
  QVec u2 = tensor(C.unit, C.unit, n);
  QVec du = C.coproduct(C.unit);
  coaug.expect(du == u2, {}, [&] { return std::pair{show_pair(C, du), show_pair(C, u2)}; });
  Q eu = C.counit(C.unit);
  coaug.expect(eu == 1, {}, [&] { return std::pair{pretty(eu), std::string("1")}; });
  rep.checks = {coass.result(), counit.result(), coaug.result()};
  if (cocommutative) rep.checks.push_back(cocom.result());
  return rep;
}

/// x -> Delta(x) - x(x)1 - 1(x)x as a map C -> C(x)C.
inline LinMap reduced_coproduct(const Coalgebra& C)
{
  LinMap m(C.dim, C.dim * C.dim);
  for (std::size_t i = 0; i < C.dim; ++i) {
    QVec v = C.delta[i];
    v -= tensor(QVec::basis(i), C.unit, C.dim);
    v -= tensor(C.unit, QVec::basis(i), C.dim);
    m.set_col(i, v);
  }
  return m;
}

/// Basis of the primitive elements.
inline std::vector<QVec> primitives(const Coalgebra& C) { return kernel_basis(reduced_coproduct(C)); }

/// The filtration C_(0) = K1, C_(r+1) = {x : reduced coproduct of x in C_(r)(x)C_(r)},
/// computed until it stabilises (or max_steps is reached).
inline std::vector<Subspace> coalgebra_filtration(const Coalgebra& C, std::size_t max_steps)
{
  std::vector<Subspace> out;
  out.emplace_back(C.dim, std::vector<QVec>{C.unit});
  LinMap red = reduced_coproduct(C);
  for (std::size_t step = 0; step < max_steps; ++step) {
    const Subspace& W = out.back();
    // v in W(x)W iff (q(x)id)v = 0 and (id(x)q)v = 0 where q is reduction modulo W.
    std::size_t n = C.dim;
    LinMap cond(n, 2 * n * n);
    for (std::size_t i = 0; i < n; ++i) {
      QVec img = red.col(i);
      QVec stacked;
      for (const auto& [idx, c] : img) {
        QVec left = W.residue(QVec::basis(idx / n));
        for (const auto& [a, x] : left) stacked.add(a * n + idx % n, c * x);
        QVec right = W.residue(QVec::basis(idx % n));
        for (const auto& [b, y] : right) stacked.add(n * n + (idx / n) * n + b, c * y);
      }
      cond.set_col(i, stacked);
    }
    Subspace next(n, kernel_basis(cond));
    bool stable = next.dim() == W.dim();
    out.push_back(std::move(next));
    if (stable || out.back().dim() == n) break;
  }
  return out;
}

/// Smallest r with x in C_(r); nullopt when x is outside the whole filtration.
inline std::optional<std::size_t> filtration_order(const Coalgebra& C, const QVec& x)
{
  if (x.empty()) return 0;
  auto filt = coalgebra_filtration(C, C.dim + 1);
  for (std::size_t r = 0; r < filt.size(); ++r)
    if (filt[r].contains(x)) return r;
  return std::nullopt;
}

/// Tensor product coalgebra C (x) D with shuffled coproduct.
inline Coalgebra tensor_coalgebra(const Coalgebra& C, const Coalgebra& D)
{
  Coalgebra T;
  std::size_t nc = C.dim, nd = D.dim;
  T.dim = nc * nd;
  T.delta.resize(T.dim);
  T.eps.resize(T.dim);
  T.degree.resize(T.dim);
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nd; ++j) {
      std::size_t b = i * nd + j;
      QVec d;
      for (const auto& [ci, x] : C.delta[i])
        for (const auto& [dj, y] : D.delta[j]) {
          std::size_t p = (ci / nc) * nd + dj / nd;
          std::size_t q = (ci % nc) * nd + dj % nd;
          d.add(p * T.dim + q, x * y);
        }
      T.delta[b] = std::move(d);
      T.eps[b] = C.eps[i] * D.eps[j];
      T.degree[b] = C.degree_of(i) + D.degree_of(j);
      T.labels.push_back(C.label(i) + "(x)" + D.label(j));
    }
  T.unit = tensor(C.unit, D.unit, nd);
  return T;
}

/// Bilinear map U (x) V -> W on basis pairs. Entries may be absent when they fall
/// outside a declared filtration window; evaluating such an entry throws.
struct Bilinear {
  std::size_t left = 0, right = 0, out = 0;
  std::vector<std::optional<QVec>> table;
  int cap = -1;

  Bilinear() = default;
  Bilinear(std::size_t l, std::size_t r, std::size_t o) : left(l), right(r), out(o), table(l * r) {}

  const QVec& at(std::size_t i, std::size_t j) const
  {
    const auto& e = table.at(i * right + j);
    if (!e) throw DegreeCapExceeded(cap + 1, cap);
    return *e;
  }
  bool defined(std::size_t i, std::size_t j) const { return table.at(i * right + j).has_value(); }
  void set(std::size_t i, std::size_t j, QVec v) { table.at(i * right + j) = std::move(v); }

  QVec operator()(const QVec& a, const QVec& b) const
  {
    QVec r;
    for (const auto& [i, x] : a)
      for (const auto& [j, y] : b) r.axpy(x * y, at(i, j));
    return r;
  }
  /// Apply to an element of the pair basis.
  QVec on_pairs(const QVec& t) const
  {
    QVec r;
    for (const auto& [idx, c] : t) r.axpy(c, at(idx / right, idx % right));
    return r;
  }
  LinMap as_map() const
  {
    LinMap m(left * right, out);
    for (std::size_t i = 0; i < left; ++i)
      for (std::size_t j = 0; j < right; ++j) m.set_col(i * right + j, at(i, j));
    return m;
  }
  static Bilinear from_map(const LinMap& m, std::size_t l, std::size_t r)
  {
    if (m.dom() != l * r) throw BasisMismatch("bilinear map shape");
    Bilinear b(l, r, m.cod());
    for (std::size_t i = 0; i < l * r; ++i) b.table[i] = m.col(i);
    return b;
  }
  friend bool operator==(const Bilinear& a, const Bilinear& b)
  {
    return a.left == b.left && a.right == b.right && a.out == b.out && a.table == b.table;
  }
};

/// Convolution f*g = mult o (f(x)g) o Delta for f,g: C -> A.
inline LinMap convolution(const Coalgebra& C, const LinMap& f, const LinMap& g, const Bilinear& mult)
{
  if (f.dom() != C.dim || g.dom() != C.dim) throw BasisMismatch("convolution: domain is not the coalgebra");
  if (f.cod() != mult.left || g.cod() != mult.right) throw BasisMismatch("convolution: codomain mismatch");
  LinMap r(C.dim, mult.out);
  for (std::size_t i = 0; i < C.dim; ++i) {
    QVec acc;
    for (const auto& [idx, c] : C.delta[i]) acc.axpy(c, mult(f.col(idx / C.dim), g.col(idx % C.dim)));
    r.set_col(i, acc);
  }
  return r;
}

/// 1_A eps as a map C -> A.
inline LinMap unit_counit(const Coalgebra& C, const QVec& unitA, std::size_t dimA)
{
  LinMap r(C.dim, dimA);
  for (std::size_t i = 0; i < C.dim; ++i) r.set_col(i, unitA * C.eps[i]);
  return r;
}

/// Convolution inverse of psi (psi(1) = 1_A) as the finite series sum (1eps - psi)^{*r}.
inline LinMap convolution_inverse(const Coalgebra& C, const LinMap& psi, const Bilinear& mult, const QVec& unitA)
{
  LinMap e = unit_counit(C, unitA, mult.out);
  LinMap phi = e - psi;
  LinMap result = e;
  LinMap power = e;
  for (std::size_t r = 1; r <= C.dim + 1; ++r) {
    power = convolution(C, power, phi, mult);
    if (power.is_zero()) return result;
    result += power;
  }
  throw std::domain_error("convolution series does not terminate: coalgebra is not connected");
}

} // namespace rackbi
