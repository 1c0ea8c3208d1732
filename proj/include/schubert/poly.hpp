#pragma once

// Exact polynomials in the simple-root variables alpha_1, ..., alpha_n.

#include "schubert/error.hpp"
#include "schubert/rational.hpp"
#include "schubert/rootsys.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace schubert {

/// sum_i c_i alpha_i; shares its representation with vectors of t^*.
using LinearForm = RootVector;

/// True when g = c d for some rational c; c is returned through `scale`.
inline bool proportional(const LinearForm &g, const LinearForm &d, Rational *scale = nullptr) {
  if (g.size() != d.size() || d.is_zero() || g.is_zero())
    return false;
  const int k = h_root(d) - 1;
  if (g[static_cast<std::size_t>(k)] == 0)
    return false;
  const Rational c = g[static_cast<std::size_t>(k)] / d[static_cast<std::size_t>(k)];
  for (std::size_t i = 0; i < d.size(); ++i)
    if (g[i] != c * d[i])
      return false;
  if (scale)
    *scale = c;
  return true;
}

/// scalar * prod(factors). Factors are kept sorted.
class FactoredPoly {
public:
  explicit FactoredPoly(std::size_t nvars, Rational scalar = 1) : n_(nvars), scalar_(std::move(scalar)) {}
  FactoredPoly(std::size_t nvars, Rational scalar, std::vector<LinearForm> factors)
      : n_(nvars), scalar_(std::move(scalar)), factors_(std::move(factors)) {
    for (const auto &f : factors_) {
      if (f.size() != n_)
        throw InvalidArgument("factor dimension mismatch");
      if (f.is_zero())
        throw InvalidArgument("zero linear factor");
    }
    std::sort(factors_.begin(), factors_.end());
  }

  std::size_t nvars() const { return n_; }
  const Rational &scalar() const { return scalar_; }
  const std::vector<LinearForm> &factors() const { return factors_; }
  std::size_t degree() const { return factors_.size(); }

  void multiply(const LinearForm &f) {
    if (f.size() != n_ || f.is_zero())
      throw InvalidArgument("bad linear factor");
    factors_.insert(std::upper_bound(factors_.begin(), factors_.end(), f), f);
  }
  void scale(const Rational &s) { scalar_ *= s; }

  friend FactoredPoly operator*(const FactoredPoly &a, const FactoredPoly &b) {
    std::vector<LinearForm> fs = a.factors_;
    fs.insert(fs.end(), b.factors_.begin(), b.factors_.end());
    return FactoredPoly(a.n_, a.scalar_ * b.scalar_, std::move(fs));
  }

  bool operator==(const FactoredPoly &) const = default;

  /// Removes the first factor g = c d (c > 0) and multiplies the scalar by c.
  void cancel(const LinearForm &d) {
    if (d.is_zero())
      throw InvalidArgument("cannot cancel a zero form");
    for (auto it = factors_.begin(); it != factors_.end(); ++it) {
      Rational c;
      if (!proportional(*it, d, &c))
        continue;
      if (c <= 0)
        throw CancellationFailure("proportional factor with non-positive ratio");
      scalar_ *= c;
      factors_.erase(it);
      return;
    }
    throw CancellationFailure("no factor proportional to the denominator");
  }

private:
  std::size_t n_;
  Rational scalar_;
  std::vector<LinearForm> factors_;
};

inline FactoredPoly cancel_factor(FactoredPoly f, const LinearForm &d) {
  f.cancel(d);
  return f;
}

using Monomial = std::vector<int>;

inline int total_degree(const Monomial &m) { return std::accumulate(m.begin(), m.end(), 0); }

/// Ascending total degree, then descending lexicographic exponents.
struct MonomialOrder {
  bool operator()(const Monomial &a, const Monomial &b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db)
      return da < db;
    return b < a;
  }
};

class Polynomial {
public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  explicit Polynomial(std::size_t nvars = 0) : n_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational &c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
  }
  static Polynomial linear(const LinearForm &f) {
    Polynomial p(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      Monomial m(f.size(), 0);
      m[i] = 1;
      p.add_term(m, f[i]);
    }
    return p;
  }

  std::size_t nvars() const { return n_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Monomial &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Monomial &m, const Rational &c) {
    if (m.size() != n_)
      throw InvalidArgument("monomial has the wrong number of variables");
    if (c == 0)
      return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  /// Degree of the leading term; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto &[m, c] : terms_)
      d = std::max(d, total_degree(m));
    return d;
  }

  bool is_homogeneous(int deg) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [deg](const auto &t) { return total_degree(t.first) == deg; });
  }

  bool has_nonnegative_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto &t) { return t.second >= 0; });
  }
  bool has_integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto &t) { return is_integer(t.second); });
  }

  Polynomial &operator+=(const Polynomial &o) {
    check(o);
    for (const auto &[m, c] : o.terms_)
      add_term(m, c);
    return *this;
  }
  Polynomial &operator-=(const Polynomial &o) {
    check(o);
    for (const auto &[m, c] : o.terms_)
      add_term(m, -c);
    return *this;
  }
  Polynomial &operator*=(const Rational &s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto &[m, c] : terms_)
      c *= s;
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
  friend Polynomial operator*(const Rational &s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    a.check(b);
    Polynomial out(a.n_);
    Monomial m(a.n_);
    for (const auto &[ma, ca] : a.terms_)
      for (const auto &[mb, cb] : b.terms_) {
        for (std::size_t i = 0; i < a.n_; ++i)
          m[i] = ma[i] + mb[i];
        out.add_term(m, ca * cb);
      }
    return out;
  }

  bool operator==(const Polynomial &o) const { return n_ == o.n_ && terms_ == o.terms_; }

  Rational evaluate(const std::vector<Rational> &x) const {
    if (x.size() != n_)
      throw InvalidArgument("evaluation point has the wrong dimension");
    Rational s = 0;
    for (const auto &[m, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < n_; ++i)
        for (int e = 0; e < m[i]; ++e)
          t *= x[i];
      s += t;
    }
    return s;
  }

private:
  void check(const Polynomial &o) const {
    if (o.n_ != n_)
      throw InvalidArgument("polynomials in different numbers of variables");
  }

  std::size_t n_;
  Terms terms_;
};

inline Polynomial expand(const FactoredPoly &f) {
  Polynomial p = Polynomial::constant(f.nvars(), f.scalar());
  for (const auto &g : f.factors())
    p = p * Polynomial::linear(g);
  return p;
}

inline Rational evaluate(const Polynomial &p, const std::vector<Rational> &alpha_values) {
  return p.evaluate(alpha_values);
}

inline Rational evaluate_form(const LinearForm &f, const std::vector<Rational> &x) {
  if (x.size() != f.size())
    throw InvalidArgument("evaluation point has the wrong dimension");
  Rational s = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    s += f[i] * x[i];
  return s;
}

inline Rational evaluate(const FactoredPoly &f, const std::vector<Rational> &x) {
  Rational s = f.scalar();
  for (const auto &g : f.factors())
    s *= evaluate_form(g, x);
  return s;
}

/// q with p = d q, or nullopt. Eliminates the first variable occurring in d.
inline std::optional<Polynomial> divide_linear(const Polynomial &p, const LinearForm &d) {
  if (d.is_zero())
    throw InvalidArgument("division by the zero form");
  if (d.size() != p.nvars())
    throw InvalidArgument("divisor has the wrong number of variables");
  const std::size_t k = static_cast<std::size_t>(h_root(d) - 1);
  Polynomial q(p.nvars()), r = p;
  while (true) {
    // Term with the largest power of the eliminated variable.
    const Monomial *lead = nullptr;
    for (const auto &[m, c] : r.terms())
      if (m[k] > 0 && (!lead || m[k] > (*lead)[k]))
        lead = &m;
    if (!lead)
      break;
    Monomial m = *lead;
    const Rational c = r.coefficient(m) / d[k];
    --m[k];
    Polynomial t(p.nvars());
    t.add_term(m, c);
    q += t;
    r -= t * Polynomial::linear(d);
  }
  if (!r.is_zero())
    return std::nullopt;
  return q;
}

} // namespace schubert
