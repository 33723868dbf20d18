#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rackbi {

/// Exact rational. gmp keeps it canonical (lowest terms, positive denominator).
using Q = mpq_class;

inline bool is_zero(const Q& q) { return sgn(q) == 0; }

/// Serialized as "p/q" (denominator always written).
inline std::string to_string(const Q& q)
{
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Human readable form, "p" for integers.
inline std::string pretty(const Q& q)
{
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

inline Q parse_rational(const std::string& s)
{
  auto trim = [](std::string t) {
    auto a = t.find_first_not_of(" \t");
    auto b = t.find_last_not_of(" \t");
    if (a == std::string::npos) return std::string{};
    return t.substr(a, b - a + 1);
  };
  std::string t = trim(s);
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  if (t.front() == '+') t.erase(0, 1);
  Q q;
  if (q.set_str(t, 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("malformed rational literal '" + s + "'");
  q.canonicalize();
  return q;
}

/// Size measure used to choose pivots: bits of numerator plus bits of denominator.
inline std::size_t bit_size(const Q& q)
{
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

inline Q factorial(unsigned n)
{
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Q(r);
}

inline Q binomial(unsigned n, unsigned k)
{
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Q(r);
}

/// Element of Q[h]/(h^N). N is fixed per value; mixing orders throws.
class Series {
public:
  Series() = default;
  explicit Series(std::size_t order) : c_(order) { check_order(); }
  Series(std::size_t order, const Q& constant) : c_(order)
  {
    check_order();
    c_[0] = constant;
  }
  Series(std::vector<Q> coeffs) : c_(std::move(coeffs)) { check_order(); }

  /// h^r truncated at order N.
  static Series monomial(std::size_t order, std::size_t r, const Q& coeff = 1)
  {
    Series s(order);
    if (r < order) s.c_[r] = coeff;
    return s;
  }

  std::size_t order() const { return c_.size(); }
  const Q& operator[](std::size_t r) const { return c_.at(r); }
  Q& operator[](std::size_t r) { return c_.at(r); }
  const std::vector<Q>& coeffs() const { return c_; }

  bool is_zero() const
  {
    for (const auto& q : c_)
      if (sgn(q) != 0) return false;
    return true;
  }

  Series& operator+=(const Series& o)
  {
    same_order(o);
    for (std::size_t r = 0; r < c_.size(); ++r) c_[r] += o.c_[r];
    return *this;
  }
  Series& operator-=(const Series& o)
  {
    same_order(o);
    for (std::size_t r = 0; r < c_.size(); ++r) c_[r] -= o.c_[r];
    return *this;
  }
  Series& operator*=(const Q& q)
  {
    for (auto& x : c_) x *= q;
    return *this;
  }
  Series& operator*=(const Series& o)
  {
    *this = *this * o;
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator-(Series a)
  {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Series operator*(Series a, const Q& q) { return a *= q; }
  friend Series operator*(const Q& q, Series a) { return a *= q; }
  friend Series operator*(const Series& a, const Series& b)
  {
    a.same_order(b);
    std::size_t n = a.c_.size();
    Series r(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (std::size_t j = 0; i + j < n; ++j)
        if (sgn(b.c_[j]) != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

  /// Multiply by h^r, dropping what falls past the order.
  Series shifted(std::size_t r) const
  {
    Series s(order());
    for (std::size_t i = 0; i + r < order(); ++i) s.c_[i + r] = c_[i];
    return s;
  }

  /// Multiplicative inverse; needs an invertible constant term.
  Series inverse() const
  {
    if (sgn(c_[0]) == 0) throw std::domain_error("series with zero constant term is not invertible");
    std::size_t n = order();
    Series r(n);
    r.c_[0] = 1 / c_[0];
    for (std::size_t k = 1; k < n; ++k) {
      Q acc = 0;
      for (std::size_t i = 1; i <= k; ++i) acc += c_[i] * r.c_[k - i];
      r.c_[k] = -acc * r.c_[0];
    }
    return r;
  }

  std::string str() const
  {
    std::string out;
    for (std::size_t r = 0; r < c_.size(); ++r) {
      if (sgn(c_[r]) == 0) continue;
      if (!out.empty()) out += " + ";
      out += pretty(c_[r]);
      if (r == 1) out += " h";
      else if (r > 1) out += " h^" + std::to_string(r);
    }
    return out.empty() ? "0" : out;
  }

private:
  void check_order() const
  {
    if (c_.empty()) throw std::invalid_argument("series order must be at least 1");
  }
  void same_order(const Series& o) const
  {
    if (o.c_.size() != c_.size()) throw std::invalid_argument("series truncation orders differ");
  }

  std::vector<Q> c_;
};

inline bool is_zero(const Series& s) { return s.is_zero(); }

/// exp(s) for s without constant term, as sum of s^r/r! for r < N.
inline Series series_exp(const Series& s)
{
  if (sgn(s[0]) != 0) throw std::domain_error("series_exp needs a zero constant term");
  std::size_t n = s.order();
  Series result(n, 1);
  Series power(n, 1);
  for (std::size_t r = 1; r < n; ++r) {
    power = power * s;
    if (power.is_zero()) break;
    result += power * (1 / factorial(static_cast<unsigned>(r)));
  }
  return result;
}

} // namespace rackbi
