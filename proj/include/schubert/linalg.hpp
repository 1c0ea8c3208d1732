#pragma once

// Small dense linear algebra over the integers and the rationals. Dimensions
// here never exceed the rank of a root system, so everything is naive.

#include "schubert/error.hpp"
#include "schubert/rational.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace schubert {

/// Square integer matrix, row-major.
class IntMatrix {
public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n * n), 0) {}

  static IntMatrix identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  int dim() const { return n_; }
  int &operator()(int r, int c) { return a_[static_cast<std::size_t>(r * n_ + c)]; }
  int operator()(int r, int c) const { return a_[static_cast<std::size_t>(r * n_ + c)]; }
  const std::vector<int> &data() const { return a_; }

  friend IntMatrix operator*(const IntMatrix &x, const IntMatrix &y) {
    IntMatrix z(x.n_);
    for (int i = 0; i < x.n_; ++i)
      for (int k = 0; k < x.n_; ++k) {
        const int xik = x(i, k);
        if (xik == 0)
          continue;
        for (int j = 0; j < x.n_; ++j)
          z(i, j) += xik * y(k, j);
      }
    return z;
  }

  std::vector<int> apply(const std::vector<int> &v) const {
    std::vector<int> out(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        out[static_cast<std::size_t>(i)] += (*this)(i, j) * v[static_cast<std::size_t>(j)];
    return out;
  }

  std::vector<Rational> apply(const std::vector<Rational> &v) const {
    std::vector<Rational> out(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if ((*this)(i, j) != 0)
          out[static_cast<std::size_t>(i)] += (*this)(i, j) * v[static_cast<std::size_t>(j)];
    return out;
  }

  bool operator==(const IntMatrix &) const = default;

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(n_);
    for (int x : a_)
      h = h * 1000003u ^ std::hash<int>{}(x);
    return h;
  }

private:
  int n_ = 0;
  std::vector<int> a_;
};

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solves m x = b exactly. Throws InvalidArgument when m is singular.
inline std::vector<Rational> solve(RationalMatrix m, std::vector<Rational> b) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0)
      ++piv;
    if (piv == n)
      throw InvalidArgument("singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0)
        continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c)
        m[r][c] -= f * m[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    b[i] /= m[i][i];
  return b;
}

inline Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0)
      ++piv;
    if (piv == n)
      return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0)
        continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c)
        m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

} // namespace schubert
