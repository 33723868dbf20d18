#pragma once

#include "rack_bialg.hpp"

#include <cstdlib>
#include <future>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace rackbi {

struct DeformationBudget {
  std::size_t max_dim = 4;
  unsigned max_n = 2;

  /// RACKBI_MAX_DIM / RACKBI_MAX_N override the defaults.
  static DeformationBudget from_env()
  {
    DeformationBudget b;
    if (const char* s = std::getenv("RACKBI_MAX_DIM")) b.max_dim = std::stoul(s);
    if (const char* s = std::getenv("RACKBI_MAX_N")) b.max_n = static_cast<unsigned>(std::stoul(s));
    return b;
  }
};

/// Multilinear maps R^(x)n -> R as LinMaps on the tuple basis (r1 most significant),
/// together with the faces of the deformation complex of a finite-dimensional rack bialgebra.
class DeformationComplex {
public:
  using Tuple = std::vector<std::size_t>;
  struct Split {
    Tuple first, second;
    Q c;
  };

  explicit DeformationComplex(RackBialgebra rb, DeformationBudget budget = {}) : rb_(std::move(rb)), budget_(budget)
  {
    m_ = rb_.dim();
    if (m_ > budget_.max_dim) throw BudgetExceeded("dim R", m_, budget_.max_dim);
    if (!rb_.certified) rb_ = certify(std::move(rb_));
    if (rb_.cap >= 0 && rb_.cap < 3 * static_cast<int>(max_degree(rb_.carrier)))
      throw std::invalid_argument("deformation complex needs a product defined on all basis pairs");
    mu_.push_back(LinMap());
    mu_.push_back(LinMap::identity(m_));
    for (unsigned n = 2; n <= budget_.max_n + 2; ++n) {
      LinMap next(power(n), m_);
      for (std::size_t t = 0; t < power(n); ++t) {
        Tuple tt = decode(t, n);
        Tuple rest(tt.begin() + 1, tt.end());
        next.set_col(t, rb_.mu(QVec::basis(tt[0]), mu_[n - 1].col(encode(rest))));
      }
      mu_.push_back(std::move(next));
    }
    for (unsigned n = 1; n <= budget_.max_n + 1; ++n) basis_.push_back(coderivations(n, mu_[n]));
  }

  const RackBialgebra& rack() const { return rb_; }
  const DeformationBudget& budget() const { return budget_; }
  std::size_t dim() const { return m_; }
  std::size_t power(unsigned n) const
  {
    std::size_t p = 1;
    for (unsigned i = 0; i < n; ++i) p *= m_;
    return p;
  }
  Tuple decode(std::size_t idx, unsigned n) const
  {
    Tuple t(n);
    for (unsigned i = n; i-- > 0;) {
      t[i] = idx % m_;
      idx /= m_;
    }
    return t;
  }
  std::size_t encode(const Tuple& t) const
  {
    std::size_t idx = 0;
    for (auto r : t) idx = idx * m_ + r;
    return idx;
  }
  static unsigned arity(const LinMap& f, std::size_t m)
  {
    if (m == 1) return 1;
    unsigned n = 0;
    for (std::size_t p = 1; p < f.dom(); p *= m) ++n;
    return n;
  }

  /// mu^n(r1,...,rn) = r1 |> (r2 |> (... |> rn)).
  const LinMap& mu_n(unsigned n) const
  {
    if (n == 0 || n >= mu_.size()) throw BudgetExceeded("mu^n degree", n, mu_.size() - 1);
    return mu_[n];
  }

  /// Basis of C^n(R;R) = Coder(R^(x)n, R, mu^n), n <= max_n + 1.
  const std::vector<LinMap>& cochains(unsigned n) const
  {
    if (n == 0 || n > basis_.size()) throw BudgetExceeded("cochain degree", n, basis_.size());
    return basis_[n - 1];
  }

  /// r_i split into k legs (k = 0 is the counit).
  std::vector<std::pair<Tuple, Q>> legs(std::size_t r, unsigned k) const
  {
    const Coalgebra& C = rb_.carrier;
    if (k == 0) {
      if (is_zero(C.eps[r])) return {};
      return {{Tuple{}, C.eps[r]}};
    }
    if (k == 1) return {{Tuple{r}, Q(1)}};
    std::vector<std::pair<Tuple, Q>> out;
    for (const auto& [p, c] : C.delta[r])
      for (auto [rest, d] : legs(p % m_, k - 1)) {
        rest.insert(rest.begin(), p / m_);
        out.push_back({std::move(rest), c * d});
      }
    return out;
  }

  /// Coproduct of R^(x)n on a basis tuple.
  std::vector<Split> split(const Tuple& t) const
  {
    std::vector<Split> out{{{}, {}, Q(1)}};
    const Coalgebra& C = rb_.carrier;
    for (auto r : t) {
      std::vector<Split> next;
      for (const auto& s : out)
        for (const auto& [p, c] : C.delta[r]) {
          Split n = s;
          n.first.push_back(p / m_);
          n.second.push_back(p % m_);
          n.c *= c;
          next.push_back(std::move(n));
        }
      out = std::move(next);
    }
    return out;
  }

  /// f(v1, ..., vn) for vectors of R.
  QVec eval(const LinMap& f, const std::vector<QVec>& args) const
  {
    QVec out;
    eval_rec(f, args, 0, 0, Q(1), out);
    return out;
  }

  /// Delta o f = (f (x) phi + phi (x) f) o Delta on every basis tuple.
  CheckResult coderivation_check(const LinMap& f, const LinMap& along, const std::string& name = "coderivation") const
  {
    const Coalgebra& C = rb_.carrier;
    unsigned n = arity(f, m_);
    Checker chk(name);
    for (std::size_t t = 0; t < f.dom(); ++t) {
      QVec lhs = C.coproduct(f.col(t)), rhs;
      for (const auto& s : split(decode(t, n))) {
        std::size_t a = encode(s.first), b = encode(s.second);
        rhs.axpy(s.c, tensor(f.col(a), along.col(b), m_));
        rhs.axpy(s.c, tensor(along.col(a), f.col(b), m_));
      }
      if (!chk.expect(lhs == rhs, {t}, [&] { return std::pair{show_pair(C, lhs), show_pair(C, rhs)}; })) break;
    }
    return chk.result();
  }
  bool is_coderivation(const LinMap& f, const LinMap& along) const { return coderivation_check(f, along).passed; }

  /// Kernel of the coderivation constraint for maps R^(x)n -> R along `along`.
  std::vector<LinMap> coderivations(unsigned n, const LinMap& along) const
  {
    std::size_t dn = power(n);
    const Coalgebra& C = rb_.carrier;
    std::vector<QVec> cols(dn * m_);
    std::size_t block = m_ * m_;
    for (std::size_t t = 0; t < dn; ++t) {
      for (std::size_t k = 0; k < m_; ++k) cols[t * m_ + k].axpy(Q(1), C.delta[k].reindexed([&](std::size_t p) { return t * block + p; }));
      for (const auto& s : split(decode(t, n))) {
        std::size_t a = encode(s.first), b = encode(s.second);
        for (std::size_t k = 0; k < m_; ++k) {
          for (const auto& [j, x] : along.col(b)) cols[a * m_ + k].add(t * block + k * m_ + j, -s.c * x);
          for (const auto& [j, x] : along.col(a)) cols[b * m_ + k].add(t * block + j * m_ + k, -s.c * x);
        }
      }
    }
    LinMap constraint(dn * block, std::move(cols));
    std::vector<LinMap> out;
    for (const auto& v : echelon_basis(kernel_basis(constraint), dn * m_)) out.push_back(unflatten(v, n));
    return out;
  }

  QVec flatten(const LinMap& f) const
  {
    QVec v;
    for (std::size_t t = 0; t < f.dom(); ++t)
      for (const auto& [k, c] : f.col(t)) v.add(t * m_ + k, c);
    return v;
  }
  LinMap unflatten(const QVec& v, unsigned n) const
  {
    std::vector<QVec> cols(power(n));
    for (const auto& [i, c] : v) cols[i / m_].add(i % m_, c);
    return LinMap(m_, std::move(cols));
  }

  /// (f *part g)(a, b, c) = sum f(a1, b) |> g(a2, c), a in R^(x)s, b in R^(x)p, c in R^(x)q.
  LinMap partial_convolution(const LinMap& f, const LinMap& g, unsigned s, unsigned p, unsigned q) const
  {
    if (f.dom() != power(s + p) || g.dom() != power(s + q)) throw BasisMismatch("partial convolution arities");
    LinMap out(power(s + p + q), m_);
    for (std::size_t t = 0; t < out.dom(); ++t) {
      Tuple tt = decode(t, s + p + q);
      Tuple a(tt.begin(), tt.begin() + s), b(tt.begin() + s, tt.begin() + s + p), c(tt.begin() + s + p, tt.end());
      QVec acc;
      for (const auto& sp : split(a)) {
        Tuple fa = sp.first, ga = sp.second;
        fa.insert(fa.end(), b.begin(), b.end());
        ga.insert(ga.end(), c.begin(), c.end());
        const QVec& x = f.col(encode(fa));
        if (x.empty()) continue;
        acc.axpy(sp.c, rb_.mu(x, g.col(encode(ga))));
      }
      out.set_col(t, acc);
    }
    return out;
  }

  /// d_{i,1}^n w = mu^i *part w over the first i-1 slots.
  LinMap face1(unsigned i, const LinMap& w, unsigned n) const
  {
    check_face(i, w, n);
    return tweak(i, true, w, n, plain_face1(i, w, n));
  }

  /// d_{i,0}^n w (r1..r_{n+1}) = sum w(r1, .., r_{i-1}, r_i^(1) |> r_{i+1}, .., r_i^(n+1-i) |> r_{n+1}).
  LinMap face0(unsigned i, const LinMap& w, unsigned n) const
  {
    check_face(i, w, n);
    return tweak(i, false, w, n, plain_face0(i, w, n));
  }

  LinMap face(unsigned i, bool one, const LinMap& w, unsigned n) const { return one ? face1(i, w, n) : face0(i, w, n); }

  /// d_{n+1}^n w = w *part mu^n over the first n-1 slots.
  LinMap top(const LinMap& w, unsigned n) const
  {
    if (w.dom() != power(n)) throw BasisMismatch("cochain arity");
    return partial_convolution(w, mu_n(n), n - 1, 1, 1);
  }

  /// d_R^n = sum_{i=1}^n (-1)^{i+1} (d_{i,1} - d_{i,0}) + (-1)^{n+1} d_{n+1}.
  LinMap differential(const LinMap& w, unsigned n) const
  {
    LinMap out = top(w, n);
    if (n % 2 == 0) out *= Q(-1);
    for (unsigned i = 1; i <= n; ++i) {
      LinMap t = face1(i, w, n) - face0(i, w, n);
      if (i % 2 == 0) t *= Q(-1);
      out += t;
    }
    return out;
  }

  /// Coordinates of a coderivation in the basis of C^n, if it lies there.
  std::optional<QVec> coordinates(const LinMap& f, unsigned n) const
  {
    const auto& B = cochains(n);
    std::vector<QVec> cols;
    for (const auto& b : B) cols.push_back(flatten(b));
    return solve(LinMap(power(n) * m_, std::move(cols)), flatten(f));
  }

  /// d^n as a matrix C^n -> C^{n+1}; throws AxiomViolation if an image leaves C^{n+1}.
  LinMap matrix(unsigned n) const
  {
    const auto& B = cochains(n);
    LinMap out(B.size(), cochains(n + 1).size());
    for (std::size_t b = 0; b < B.size(); ++b) {
      auto c = coordinates(differential(B[b], n), n + 1);
      if (!c) throw AxiomViolation("d_R lands in coderivations", {n, b}, "d(w)", "not in C^" + std::to_string(n + 1));
      out.set_col(b, *c);
    }
    return out;
  }

  /// Negative control: in degree n, replace d_{i,0} by d_{i,0} + d_{i,1} and d_{i,1} by 2 d_{i,1}.
  /// d_R and the extra relations are unchanged; the cubical identities are not.
  void shear_face(unsigned n, unsigned i) { shear_ = {n, i}; }

private:
  LinMap plain_face1(unsigned i, const LinMap& w, unsigned n) const
  {
    return partial_convolution(mu_n(i), w, i - 1, 1, n - i + 1);
  }
  LinMap plain_face0(unsigned i, const LinMap& w, unsigned n) const
  {
    LinMap out(power(n + 1), m_);
    for (std::size_t t = 0; t < out.dom(); ++t) {
      Tuple tt = decode(t, n + 1);
      QVec acc;
      for (const auto& [ls, c] : legs(tt[i - 1], n + 1 - i)) {
        std::vector<QVec> args;
        for (unsigned k = 0; k + 1 < i; ++k) args.push_back(QVec::basis(tt[k]));
        for (unsigned k = 0; k < ls.size(); ++k) args.push_back(rb_.op(ls[k], tt[i + k]));
        acc.axpy(c, eval(w, args));
      }
      out.set_col(t, acc);
    }
    return out;
  }

  static unsigned max_degree(const Coalgebra& C)
  {
    unsigned d = 0;
    for (std::size_t i = 0; i < C.dim; ++i) d = std::max(d, static_cast<unsigned>(C.degree_of(i)));
    return d;
  }

  void check_face(unsigned i, const LinMap& w, unsigned n) const
  {
    if (w.dom() != power(n)) throw BasisMismatch("cochain arity");
    if (i == 0 || i > n + 1) throw std::out_of_range("face index " + std::to_string(i));
  }

  LinMap tweak(unsigned i, bool one, const LinMap& w, unsigned n, LinMap out) const
  {
    if (!shear_ || shear_->first != n || shear_->second != i) return out;
    if (one) return out * Q(2);
    return out + plain_face1(i, w, n);
  }

  void eval_rec(const LinMap& f, const std::vector<QVec>& args, std::size_t pos, std::size_t idx, const Q& c,
                QVec& out) const
  {
    if (pos == args.size()) {
      out.axpy(c, f.col(idx));
      return;
    }
    for (const auto& [r, x] : args[pos]) eval_rec(f, args, pos + 1, idx * m_ + r, c * x, out);
  }

  RackBialgebra rb_;
  DeformationBudget budget_;
  std::size_t m_ = 0;
  std::vector<LinMap> mu_;
  std::vector<std::vector<LinMap>> basis_;
  std::optional<std::pair<unsigned, unsigned>> shear_;
};

/// mu^n is a coalgebra morphism and satisfies both recursion identities on basis tuples, n <= max_n + 2.
inline Report mu_n_report(const DeformationComplex& D)
{
  const Coalgebra& C = D.rack().carrier;
  std::size_t m = D.dim();
  unsigned top = D.budget().max_n + 2;
  Checker morph("mu^n coalgebra morphism"), rhd("mu^i(r1',..,r_i) |> mu^{n-1}(r1'',..) = mu^n"),
      rhd2("mu^n(.., r_i' |> r_{i+1}, ..) = mu^{n+1}");
  for (unsigned n = 1; n <= top; ++n) {
    const LinMap& mu = D.mu_n(n);
    for (std::size_t t = 0; t < mu.dom(); ++t) {
      QVec lhs = C.coproduct(mu.col(t)), rhs;
      for (const auto& s : D.split(D.decode(t, n)))
        rhs.axpy(s.c, tensor(mu.col(D.encode(s.first)), mu.col(D.encode(s.second)), m));
      morph.expect(lhs == rhs, {n, t}, [&] { return std::pair{show_pair(C, lhs), show_pair(C, rhs)}; });
    }
    for (unsigned i = 1; i < n; ++i) {
      LinMap l = D.partial_convolution(D.mu_n(i), D.mu_n(n - 1), i - 1, 1, n - i);
      for (std::size_t t = 0; t < l.dom(); ++t) rhd.expect_eq(l.col(t), mu.col(t), {n, i, t}, C.labels);
    }
    if (n + 1 <= top)
      for (unsigned i = 1; i < n; ++i) {
        LinMap l = D.face0(i, mu, n);
        for (std::size_t t = 0; t < l.dom(); ++t) rhd2.expect_eq(l.col(t), D.mu_n(n + 1).col(t), {n, i, t}, C.labels);
      }
  }
  Report rep;
  for (auto* c : {&morph, &rhd, &rhd2}) rep.checks.push_back(c->result());
  return rep;
}

/// Faces and d_R land in coderivations, d_R^2 = 0, cubical identities, both extra relations.
inline Report verify_complex(const DeformationComplex& D, unsigned max_n)
{
  if (max_n > D.budget().max_n) throw BudgetExceeded("max_n", max_n, D.budget().max_n);
  const auto& labels = D.rack().carrier.labels;
  Checker lands("d_R lands in coderivations"), faces("faces land in coderivations"), dd("d_R^2 = 0"),
      cube("cubical identities"), extra1("extra relation d_{i,mu} d_{n+1} = d_{n+2} d_{i,mu}"),
      extra2("extra relation d_{n+1,0} d_{n+1} = d_{n+2} d_{n+1} + d_{n+1,1} d_{n+1}");
  auto same = [&](Checker& c, const LinMap& a, const LinMap& b, std::vector<std::size_t> w) {
    if (a == b) return c.expect(true, {}, [] { return std::pair{std::string(), std::string()}; });
    std::size_t t = 0;
    while (a.col(t) == b.col(t)) ++t;
    w.push_back(t);
    return c.expect(false, w, [&] { return std::pair{to_string(a.col(t), labels), to_string(b.col(t), labels)}; });
  };

  std::size_t cases[6] = {};
  for (unsigned n = 1; n <= max_n; ++n) {
    const auto& B = D.cochains(n);
    const LinMap& along = D.mu_n(n + 1);
    // one task per basis cochain; each returns its own checkers
    std::vector<std::future<std::vector<CheckResult>>> jobs;
    for (std::size_t b = 0; b < B.size(); ++b)
      jobs.push_back(std::async(std::launch::async, [&, b, n] {
        Checker l(lands.result().name), f(faces.result().name), d2(dd.result().name), cu(cube.result().name),
            e1(extra1.result().name), e2(extra2.result().name);
        const LinMap& w = B[b];
        LinMap dw = D.differential(w, n);
        l.expect(D.is_coderivation(dw, along), {n, b}, [] { return std::pair{std::string("d(w)"), std::string("coderivation")}; });
        std::vector<LinMap> f1, f0;
        for (unsigned i = 1; i <= n; ++i) {
          f1.push_back(D.face1(i, w, n));
          f0.push_back(D.face0(i, w, n));
          for (bool one : {false, true})
            f.expect(D.is_coderivation(one ? f1.back() : f0.back(), along), {n, i, one, b},
                     [] { return std::pair{std::string("face(w)"), std::string("coderivation")}; });
        }
        LinMap topw = D.top(w, n);
        f.expect(D.is_coderivation(topw, along), {n, n + 1, 2, b},
                 [] { return std::pair{std::string("d_{n+1}(w)"), std::string("coderivation")}; });
        LinMap ddw = D.differential(dw, n + 1);
        same(d2, ddw, LinMap::zero(ddw.dom(), ddw.cod()), {n, b});
        auto fc = [&](unsigned i, bool one) -> const LinMap& { return one ? f1[i - 1] : f0[i - 1]; };
        for (unsigned i = 1; i <= n; ++i)
          for (unsigned j = 1; j <= i; ++j)
            for (bool mu : {false, true})
              for (bool nu : {false, true})
                same(cu, D.face(j, mu, fc(i, nu), n + 1), D.face(i + 1, nu, fc(j, mu), n + 1), {n, j, mu, i, nu, b});
        LinMap top2 = D.top(topw, n + 1);
        for (unsigned i = 1; i <= n; ++i)
          for (bool mu : {false, true})
            same(e1, D.face(i, mu, topw, n + 1), D.top(fc(i, mu), n + 1), {n, i, mu, b});
        same(e2, D.face0(n + 1, topw, n + 1), top2 + D.face1(n + 1, topw, n + 1), {n, b});
        return std::vector<CheckResult>{l.result(), f.result(), d2.result(), cu.result(), e1.result(), e2.result()};
      }));
    for (auto& j : jobs) {
      auto rs = j.get();
      Checker* cs[] = {&lands, &faces, &dd, &cube, &extra1, &extra2};
      for (std::size_t k = 0; k < rs.size(); ++k) {
        const CheckResult& r = rs[k];
        cs[k]->expect(r.passed, r.witness, [&] { return std::pair{r.lhs, r.rhs}; });
        cases[k] += r.cases;
      }
    }
  }
  Report rep;
  for (auto* c : {&lands, &faces, &dd, &cube, &extra1, &extra2}) {
    rep.checks.push_back(c->result());
    rep.checks.back().cases = cases[rep.checks.size() - 1];
  }
  return rep;
}

struct H2 {
  std::size_t cochains = 0;  // dim C^2
  std::size_t cocycles = 0;  // dim Z^2
  std::size_t coboundaries = 0;
  std::size_t cohomology = 0;
};

inline H2 h2(const DeformationComplex& D)
{
  if (D.budget().max_n < 2) throw BudgetExceeded("max_n for H^2", 2, D.budget().max_n);
  H2 out;
  const auto& C1 = D.cochains(1);
  const auto& C2 = D.cochains(2);
  out.cochains = C2.size();
  std::vector<QVec> d1, d2;
  for (const auto& w : C1) d1.push_back(D.flatten(D.differential(w, 1)));
  for (const auto& w : C2) d2.push_back(D.flatten(D.differential(w, 2)));
  out.coboundaries = rank_of(d1, D.power(2) * D.dim());
  out.cocycles = C2.size() - rank_of(d2, D.power(3) * D.dim());
  out.cohomology = out.cocycles - out.coboundaries;
  return out;
}

/// phi = id + h alpha satisfies phi o mu0 = (mu0 + h mu1) o (phi (x) phi) mod h^2.
inline CheckResult first_order_equivalence_check(const DeformationComplex& D, const LinMap& alpha, const LinMap& mu1)
{
  const RackBialgebra& rb = D.rack();
  std::size_t m = D.dim();
  Checker chk("phi o mu0 = (mu0 + h mu1) o phi mod h^2");
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      QVec lhs = alpha(rb.op(a, b));
      QVec rhs = rb.mu(alpha.col(a), QVec::basis(b)) + rb.mu(QVec::basis(a), alpha.col(b)) + mu1.col(a * m + b);
      chk.expect_eq(lhs, rhs, {a, b}, rb.carrier.labels);
    }
  return chk.result();
}

/// The h^1 coefficient of self-distributivity of mu + h w, term by term:
/// w(a, b |> c), a |> w(b, c), w(a1 |> b, a2 |> c), (a1 |> b) |> w(a2, c), w(a1, b) |> (a2 |> c).
inline std::vector<LinMap> infinitesimal_selfdist_terms(const DeformationComplex& D, const LinMap& w)
{
  const RackBialgebra& rb = D.rack();
  const Coalgebra& C = rb.carrier;
  std::size_t m = D.dim();
  std::vector<LinMap> out(5, LinMap(D.power(3), m));
  for (std::size_t t = 0; t < D.power(3); ++t) {
    auto r = D.decode(t, 3);
    std::size_t a = r[0], b = r[1], c = r[2];
    QVec bc = rb.op(b, c);
    std::vector<QVec> col(5);
    col[0] = D.eval(w, {QVec::basis(a), bc});
    col[1] = rb.mu(QVec::basis(a), w.col(b * m + c));
    for (const auto& [p, x] : C.delta[a]) {
      std::size_t a1 = p / m, a2 = p % m;
      QVec a1b = rb.op(a1, b), a2c = rb.op(a2, c);
      col[2].axpy(x, D.eval(w, {a1b, a2c}));
      col[3].axpy(x, rb.mu(a1b, w.col(a2 * m + c)));
      col[4].axpy(x, rb.mu(w.col(a1 * m + b), a2c));
    }
    for (std::size_t k = 0; k < 5; ++k) out[k].set_col(t, col[k]);
  }
  return out;
}

/// A Leibniz 2-cochain c on h (index i*n+j) extended by zero to UR(h) = K (+) h.
inline LinMap leibniz_cochain_on_ur(const LeibnizAlgebra& h, const std::vector<QVec>& c)
{
  std::size_t n = h.dim(), m = n + 1;
  if (c.size() != n * n) throw std::invalid_argument("leibniz cochain needs dim(h)^2 columns");
  LinMap w(m * m, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w.set_col((i + 1) * m + j + 1, c[i * n + j].reindexed([](std::size_t k) { return k + 1; }));
  return w;
}

/// Membership only: the extended cochain is a coderivation along mu^2 of UR(h).
inline CheckResult leibniz_cochain_membership(const DeformationComplex& D, const LeibnizAlgebra& h,
                                              const std::vector<QVec>& c)
{
  return D.coderivation_check(leibniz_cochain_on_ur(h, c), D.mu_n(2), "Leibniz 2-cochain lies in C^2(UR(h))");
}

} // namespace rackbi
