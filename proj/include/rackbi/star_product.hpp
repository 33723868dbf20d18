#pragma once

#include "rack_bialg.hpp"

#include <map>
#include <string>
#include <vector>

namespace rackbi {

/// Polynomial in alpha_1..alpha_n with coefficients in Q[h]/(h^N), truncated at alpha-degree D.
class PolyFunction {
public:
  PolyFunction(std::size_t vars, std::size_t order, unsigned max_degree)
      : n_(vars), order_(order), deg_(max_degree)
  {
    if (order == 0) throw std::invalid_argument("series order must be at least 1");
  }

  static PolyFunction constant(std::size_t vars, std::size_t order, unsigned max_degree, const Q& c)
  {
    PolyFunction f(vars, order, max_degree);
    f.add(Exponents(vars, 0), Series(order, c));
    return f;
  }
  static PolyFunction variable(std::size_t vars, std::size_t order, unsigned max_degree, std::size_t i)
  {
    PolyFunction f(vars, order, max_degree);
    Exponents e(vars, 0);
    e.at(i) = 1;
    f.add(e, Series(order, 1));
    return f;
  }

  std::size_t vars() const { return n_; }
  std::size_t order() const { return order_; }
  unsigned max_degree() const { return deg_; }
  const std::map<Exponents, Series>& terms() const { return t_; }
  bool empty() const { return t_.empty(); }

  /// Largest alpha-degree present (0 for the zero function).
  unsigned degree() const
  {
    unsigned d = 0;
    for (const auto& [e, s] : t_) d = std::max(d, total_degree(e));
    return d;
  }

  Series coeff(const Exponents& e) const
  {
    auto it = t_.find(e);
    return it == t_.end() ? Series(order_) : it->second;
  }
  Series at_zero() const { return coeff(Exponents(n_, 0)); }

  /// Adds s alpha^e; terms past the degree window are dropped.
  void add(const Exponents& e, const Series& s)
  {
    if (e.size() != n_) throw BasisMismatch("exponent length " + std::to_string(e.size()) + " vs " + std::to_string(n_));
    if (total_degree(e) > deg_ || s.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(e, s);
    if (!fresh) {
      it->second += s;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  PolyFunction& operator+=(const PolyFunction& o)
  {
    compatible(o);
    for (const auto& [e, s] : o.t_) add(e, s);
    return *this;
  }
  PolyFunction& operator-=(const PolyFunction& o)
  {
    compatible(o);
    for (const auto& [e, s] : o.t_) add(e, -s);
    return *this;
  }
  friend PolyFunction operator+(PolyFunction a, const PolyFunction& b) { return a += b; }
  friend PolyFunction operator-(PolyFunction a, const PolyFunction& b) { return a -= b; }
  friend PolyFunction operator*(const PolyFunction& a, const Series& s)
  {
    PolyFunction r(a.n_, a.order_, a.deg_);
    for (const auto& [e, c] : a.t_) r.add(e, c * s);
    return r;
  }
  friend PolyFunction operator*(const PolyFunction& a, const Q& q) { return a * Series(a.order_, q); }
  friend PolyFunction operator*(const PolyFunction& a, const PolyFunction& b)
  {
    a.compatible(b);
    PolyFunction r(a.n_, a.order_, a.deg_);
    for (const auto& [e, s] : a.t_)
      for (const auto& [f, t] : b.t_) {
        Exponents g = e;
        for (std::size_t i = 0; i < g.size(); ++i) g[i] += f[i];
        r.add(g, s * t);
      }
    return r;
  }
  friend bool operator==(const PolyFunction& a, const PolyFunction& b) { return a.t_ == b.t_; }
  friend bool operator!=(const PolyFunction& a, const PolyFunction& b) { return !(a == b); }

  /// Multiply by h^r.
  PolyFunction shifted(std::size_t r) const
  {
    PolyFunction out(n_, order_, deg_);
    for (const auto& [e, s] : t_) out.add(e, s.shifted(r));
    return out;
  }

  PolyFunction derivative(std::size_t i) const
  {
    PolyFunction out(n_, order_, deg_);
    for (const auto& [e, s] : t_) {
      if (e[i] == 0) continue;
      Exponents f = e;
      --f[i];
      out.add(f, s * Q(e[i]));
    }
    return out;
  }

  /// The coefficient of h^r, as a polynomial with rational coefficients.
  std::map<Exponents, Q> order_coefficients(std::size_t r) const
  {
    std::map<Exponents, Q> out;
    for (const auto& [e, s] : t_)
      if (!is_zero(s[r])) out.emplace(e, s[r]);
    return out;
  }

  std::string str() const
  {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [e, s] : t_) {
      if (!out.empty()) out += " + ";
      out += "(" + s.str() + ")";
      for (std::size_t i = 0; i < n_; ++i) {
        if (e[i] == 0) continue;
        out += " a" + std::to_string(i + 1);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
      }
    }
    return out;
  }

private:
  void compatible(const PolyFunction& o) const
  {
    if (o.n_ != n_ || o.order_ != order_ || o.deg_ != deg_)
      throw std::invalid_argument("polynomial functions over different windows");
  }

  std::size_t n_;
  std::size_t order_;
  unsigned deg_;
  std::map<Exponents, Series> t_;
};

/// Vector of h with coordinates in Q[h]/(h^N).
using SeriesVec = std::vector<Series>;

inline SeriesVec series_vec(const QVec& x, std::size_t dim, std::size_t order)
{
  SeriesVec v(dim, Series(order));
  for (const auto& [i, c] : x) v.at(i) = Series(order, c);
  return v;
}

inline std::string show(const SeriesVec& v)
{
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
  return out + ")";
}

/// Coefficient of h^r of each coordinate.
inline QVec order_coefficients(const SeriesVec& v, std::size_t r)
{
  QVec out;
  for (std::size_t i = 0; i < v.size(); ++i) out.add(i, v[i][r]);
  return out;
}

/// Hat morphism S(h)_(k) -> polynomial functions, e_i -> alpha_i.
inline PolyFunction hat(const SymCoalgebra& S, const QVec& a, std::size_t order, unsigned max_degree)
{
  PolyFunction f(S.vars(), order, max_degree);
  for (const auto& [b, c] : a) f.add(S.monomial(b), Series(order, c));
  return f;
}

/// Inverse of the hat on one h-order: polynomial with rational coefficients back into S(h)_(k).
inline QVec unhat(const SymCoalgebra& S, const std::map<Exponents, Q>& p)
{
  QVec out;
  for (const auto& [e, c] : p) out.add(S.index_of(e), c);
  return out;
}

/// hat of a (series) vector of h: sum_i x_i alpha_i.
inline PolyFunction hat(const SeriesVec& x, unsigned max_degree)
{
  std::size_t order = x.empty() ? 1 : x[0].order();
  PolyFunction f(x.size(), order, max_degree);
  for (std::size_t i = 0; i < x.size(); ++i) {
    Exponents e(x.size(), 0);
    e[i] = 1;
    f.add(e, x[i]);
  }
  return f;
}

/// e^f truncated at the degree window; f must vanish at alpha = 0.
inline PolyFunction exp_function(const PolyFunction& f)
{
  if (!f.at_zero().is_zero()) throw std::domain_error("exp_function needs f(0) = 0");
  PolyFunction result = PolyFunction::constant(f.vars(), f.order(), f.max_degree(), 1);
  PolyFunction power = result;
  for (unsigned r = 1; r <= f.max_degree(); ++r) {
    power = power * f;
    if (power.empty()) break;
    result += power * (1 / factorial(r));
  }
  return result;
}

/// e^{x hat} for a vector of h.
struct ExpFunction {
  SeriesVec x;
  PolyFunction expand(unsigned max_degree) const { return exp_function(hat(x, max_degree)); }
};

/// (ad~_i f)(alpha) = sum_{j,k} alpha_k c_ij^k df/dalpha_j.
inline PolyFunction ad_tilde(const LeibnizAlgebra& h, std::size_t i, const PolyFunction& f)
{
  std::size_t n = h.dim();
  if (f.vars() != n) throw BasisMismatch("polynomial in " + std::to_string(f.vars()) + " variables over dim " + std::to_string(n));
  PolyFunction out(n, f.order(), f.max_degree());
  for (const auto& [e, s] : f.terms())
    for (std::size_t j = 0; j < n; ++j) {
      if (e[j] == 0) continue;
      for (const auto& [k, c] : h.bracket(i, j)) {
        Exponents g = e;
        --g[j];
        ++g[k];
        out.add(g, s * (c * Q(e[j])));
      }
    }
  return out;
}

namespace detail {

/// sum over words w of length r of (d_w f)(0) ad~_w(g).
inline PolyFunction word_sum(const LeibnizAlgebra& h, const PolyFunction& f, const PolyFunction& g, unsigned r)
{
  if (r == 0) return g * f.at_zero();
  PolyFunction out(g.vars(), g.order(), g.max_degree());
  for (std::size_t i = 0; i < h.dim(); ++i) {
    PolyFunction df = f.derivative(i);
    if (df.empty()) continue;
    PolyFunction inner = word_sum(h, df, g, r - 1);
    if (!inner.empty()) out += ad_tilde(h, i, inner);
  }
  return out;
}

} // namespace detail

/// f |>_h g = sum_r h^r/r! sum d^r f/dalpha_{i1}..dalpha_{ir}(0) ad~_{i1}..ad~_{ir}(g), truncated mod h^N.
inline PolyFunction star(const LeibnizAlgebra& h, const PolyFunction& f, const PolyFunction& g)
{
  PolyFunction out(g.vars(), g.order(), g.max_degree());
  unsigned top = std::min<unsigned>(f.degree(), static_cast<unsigned>(g.order() - 1));
  for (unsigned r = 0; r <= top; ++r) {
    PolyFunction term = detail::word_sum(h, f, g, r);
    if (!term.empty()) out += term.shifted(r) * (1 / factorial(r));
  }
  return out;
}

/// ad_x on series vectors.
inline SeriesVec ad(const LeibnizAlgebra& h, const SeriesVec& x, const SeriesVec& y)
{
  std::size_t n = h.dim(), order = x.at(0).order();
  SeriesVec out(n, Series(order));
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t k = 0; k < n; ++k) {
      if (y[k].is_zero()) continue;
      Series s = x[j] * y[k];
      for (const auto& [i, c] : h.bracket(j, k)) out[i] += s * c;
    }
  }
  return out;
}

/// x |>> y = e^{h ad_x}(y) mod h^N.
inline SeriesVec rack_exp(const LeibnizAlgebra& h, const SeriesVec& x, const SeriesVec& y)
{
  std::size_t order = y.at(0).order();
  SeriesVec result = y, term = y;
  for (std::size_t r = 1; r < order; ++r) {
    term = ad(h, x, term);
    for (auto& s : term) s = s.shifted(1) * Q(1, static_cast<long>(r));
    bool zero = true;
    for (std::size_t i = 0; i < result.size(); ++i) {
      result[i] += term[i];
      zero = zero && term[i].is_zero();
    }
    if (zero) break;
  }
  return result;
}

struct StarExp {
  PolyFunction lhs;   // e^{x hat} |>_h e^{y hat}
  PolyFunction rhs;   // e^{(x |>> y) hat}
  SeriesVec rack;     // x |>> y
  CheckResult check;  // lhs = rhs, first failing h-order as witness
};

namespace detail {

inline CheckResult compare_orders(const std::string& name, const PolyFunction& a, const PolyFunction& b)
{
  Checker c(name);
  for (std::size_t r = 0; r < a.order(); ++r) {
    auto ca = a.order_coefficients(r), cb = b.order_coefficients(r);
    if (!c.expect(ca == cb, {r}, [&] {
          PolyFunction pa(a.vars(), 1, a.max_degree()), pb(a.vars(), 1, a.max_degree());
          for (const auto& [e, q] : ca) pa.add(e, Series(1, q));
          for (const auto& [e, q] : cb) pb.add(e, Series(1, q));
          return std::pair{pa.str(), pb.str()};
        }))
      break;
  }
  return c.result();
}

inline CheckResult compare_orders(const std::string& name, const SeriesVec& a, const SeriesVec& b,
                                  const LeibnizAlgebra& h)
{
  Checker c(name);
  std::size_t order = a.at(0).order();
  for (std::size_t r = 0; r < order; ++r) {
    QVec ca = order_coefficients(a, r), cb = order_coefficients(b, r);
    if (!c.expect(ca == cb, {r}, [&] { return std::pair{h.show(ca), h.show(cb)}; })) break;
  }
  return c.result();
}

} // namespace detail

/// Both sides of e^{x hat} |>_h e^{y hat} = e^{(x |>> y) hat} mod h^N, alpha-degree window N-1 unless given.
inline StarExp star_exp(const LeibnizAlgebra& h, const QVec& x, const QVec& y, std::size_t N, int max_degree = -1)
{
  unsigned D = max_degree < 0 ? static_cast<unsigned>(N - 1) : static_cast<unsigned>(max_degree);
  if (D + 1 < N) throw std::invalid_argument("degree window must reach N-1 to capture all h-orders");
  std::size_t n = h.dim();
  SeriesVec sx = series_vec(x, n, N), sy = series_vec(y, n, N);
  PolyFunction ex = ExpFunction{sx}.expand(D), ey = ExpFunction{sy}.expand(D);
  StarExp out{star(h, ex, ey), PolyFunction(n, N, D), rack_exp(h, sx, sy), {}};
  out.rhs = ExpFunction{out.rack}.expand(D);
  out.check = detail::compare_orders("e^x |> e^y = e^(x |>> y)", out.lhs, out.rhs);
  return out;
}

/// Self-distributivity of |>_h on exponentials mod h^N, at the vector level and on the function level.
inline Report star_rack_selfdist_check(const LeibnizAlgebra& h, const QVec& x, const QVec& y, const QVec& z,
                                       std::size_t N)
{
  std::size_t n = h.dim();
  unsigned D = static_cast<unsigned>(N - 1);
  SeriesVec sx = series_vec(x, n, N), sy = series_vec(y, n, N), sz = series_vec(z, n, N);
  Report rep;
  SeriesVec yz = rack_exp(h, sy, sz), xy = rack_exp(h, sx, sy), xz = rack_exp(h, sx, sz);
  SeriesVec left = rack_exp(h, sx, yz), right = rack_exp(h, xy, xz);
  rep.checks.push_back(detail::compare_orders("x |>> (y |>> z) = (x |>> y) |>> (x |>> z)", left, right, h));

  PolyFunction ex = ExpFunction{sx}.expand(D), ey = ExpFunction{sy}.expand(D), ez = ExpFunction{sz}.expand(D);
  PolyFunction exy = star(h, ex, ey), exz = star(h, ex, ez);
  PolyFunction fl = star(h, ex, star(h, ey, ez)), fr = star(h, exy, exz);
  rep.checks.push_back(detail::compare_orders("e^x |> (e^y |> e^z) = (e^x |> e^y) |> (e^x |> e^z)", fl, fr));
  rep.checks.push_back(detail::compare_orders("function level agrees with e^(x |>> (y |>> z))", fl,
                                              ExpFunction{left}.expand(D)));
  return rep;
}

/// The hat is multiplicative, intertwines ad^s with ad~, and
/// hat(x1...xr) |>_h hat(b) = h^r hat((x1...xr) |> b) against UAR^infinity(h)_(k).
inline Report star_lemmas_report(const LeibnizAlgebra& h, unsigned k, IdealChoice z = IdealChoice::squares)
{
  SymCoalgebra S(h.dim(), k);
  RackBialgebra rb = uar_infinity(h, k, z);
  std::size_t N = k + 1, n = S.dim();
  Checker mult("hat multiplicative"), inter("hat intertwines ad"), lemma("hat(a) |>_h hat(b) = h^deg(a) hat(a |> b)");
  auto H = [&](const QVec& a) { return hat(S, a, N, k); };
  std::vector<LinMap> ads;
  for (std::size_t i = 0; i < h.dim(); ++i) ads.push_back(S.derivation(h.ad(QVec::basis(i))));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t i = 0; i < h.dim(); ++i) {
      PolyFunction l = H(ads[i].col(a)), r = ad_tilde(h, i, H(QVec::basis(a)));
      inter.expect(l == r, {i, a}, [&] { return std::pair{l.str(), r.str()}; });
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (S.degree(a) + S.degree(b) <= k) {
        PolyFunction l = H(S.product(a, b)), r = H(QVec::basis(a)) * H(QVec::basis(b));
        mult.expect(l == r, {a, b}, [&] { return std::pair{l.str(), r.str()}; });
      }
      if (!rb.within({a, b})) continue;
      PolyFunction l = star(h, H(QVec::basis(a)), H(QVec::basis(b)));
      PolyFunction r = H(rb.op(a, b)).shifted(S.degree(a));
      lemma.expect(l == r, {a, b}, [&] { return std::pair{l.str(), r.str()}; });
    }
  }
  Report rep;
  for (auto* c : {&mult, &inter, &lemma}) rep.checks.push_back(c->result());
  return rep;
}

/// The star product pulled back to S(h)_(k): entry r is the coefficient of h^r, r < N.
inline std::vector<Bilinear> star_product_orders(const LeibnizAlgebra& h, unsigned k, std::size_t N)
{
  SymCoalgebra S(h.dim(), k);
  std::size_t n = S.dim();
  std::vector<Bilinear> out(N, Bilinear(n, n, n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      PolyFunction p = star(h, hat(S, QVec::basis(a), N, k), hat(S, QVec::basis(b), N, k));
      for (std::size_t r = 0; r < N; ++r) out[r].set(a, b, unhat(S, p.order_coefficients(r)));
    }
  return out;
}

} // namespace rackbi
