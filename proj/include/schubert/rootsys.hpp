#pragma once

// Root systems of types A, B and C. Every vector lives in the simple-root
// basis {alpha_1, ..., alpha_n}; alpha_1 -- ... -- alpha_{n-1} = alpha_n with
// the double bond at the end (alpha_n short in B_n, long in C_n).

#include "schubert/error.hpp"
#include "schubert/linalg.hpp"
#include "schubert/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <initializer_list>
#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace schubert {

enum class Family { A, B, C };

inline char family_letter(Family f) {
  switch (f) {
  case Family::A:
    return 'A';
  case Family::B:
    return 'B';
  case Family::C:
    return 'C';
  }
  return '?';
}

inline Family parse_family(const std::string &s) {
  if (s == "A" || s == "a")
    return Family::A;
  if (s == "B" || s == "b")
    return Family::B;
  if (s == "C" || s == "c")
    return Family::C;
  throw InvalidArgument("unknown Lie type family '" + s + "' (expected A, B or C)");
}

struct LieType {
  Family family = Family::A;
  int rank = 1;

  void validate() const {
    if (rank < 1)
      throw InvalidArgument("rank must be positive");
    if (family != Family::A && rank < 2)
      throw InvalidArgument(std::string("degenerate family ") + family_letter(family) + "1");
  }

  std::string name() const { return family_letter(family) + std::to_string(rank); }

  bool operator==(const LieType &) const = default;
};

/// A vector of t^* written in the simple-root basis. Roots have integer
/// coordinates; weights and their differences may be rational.
class RootVector {
public:
  RootVector() = default;
  explicit RootVector(std::size_t n) : c_(n) {}
  explicit RootVector(std::vector<Rational> coords) : c_(std::move(coords)) {}
  RootVector(std::initializer_list<long long> coords) {
    c_.reserve(coords.size());
    for (long long x : coords)
      c_.emplace_back(x);
  }

  static RootVector from_ints(const std::vector<int> &v) {
    RootVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      r.c_[i] = v[i];
    return r;
  }

  /// The i-th simple root, 1-based.
  static RootVector simple(std::size_t n, int i) {
    RootVector r(n);
    r.c_.at(static_cast<std::size_t>(i - 1)) = 1;
    return r;
  }

  std::size_t size() const { return c_.size(); }
  const Rational &operator[](std::size_t i) const { return c_[i]; }
  Rational &operator[](std::size_t i) { return c_[i]; }
  const std::vector<Rational> &coords() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational &x) { return x == 0; });
  }
  /// beta > 0: nonnegative coordinates, not all zero.
  bool is_positive() const {
    return !is_zero() && std::all_of(c_.begin(), c_.end(), [](const Rational &x) { return x >= 0; });
  }
  bool is_negative() const { return (-*this).is_positive(); }

  /// Integer coordinates, when they all are integers.
  bool integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational &x) { return is_integer(x); });
  }
  std::vector<int> to_ints() const {
    std::vector<int> out;
    out.reserve(c_.size());
    for (const auto &x : c_) {
      if (!is_integer(x))
        throw InvalidArgument("vector has non-integer coordinates");
      out.push_back(static_cast<int>(numerator(x)));
    }
    return out;
  }

  RootVector operator-() const {
    RootVector r(*this);
    for (auto &x : r.c_)
      x = -x;
    return r;
  }
  RootVector &operator+=(const RootVector &o) {
    check_size(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
      c_[i] += o.c_[i];
    return *this;
  }
  RootVector &operator-=(const RootVector &o) {
    check_size(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
      c_[i] -= o.c_[i];
    return *this;
  }
  RootVector &operator*=(const Rational &s) {
    for (auto &x : c_)
      x *= s;
    return *this;
  }
  friend RootVector operator+(RootVector a, const RootVector &b) { return a += b; }
  friend RootVector operator-(RootVector a, const RootVector &b) { return a -= b; }
  friend RootVector operator*(const Rational &s, RootVector a) { return a *= s; }

  bool operator==(const RootVector &) const = default;
  friend bool operator<(const RootVector &a, const RootVector &b) {
    return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
  }

  friend std::ostream &operator<<(std::ostream &os, const RootVector &v) {
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
      os << (i ? "," : "") << v[i];
    return os << ')';
  }

private:
  void check_size(const RootVector &o) const {
    if (o.size() != c_.size())
      throw InvalidArgument("vector dimension mismatch");
  }

  std::vector<Rational> c_;
};

/// Smallest 1-based index of a nonzero coordinate.
inline int h_root(const RootVector &beta) {
  for (std::size_t i = 0; i < beta.size(); ++i)
    if (beta[i] != 0)
      return static_cast<int>(i) + 1;
  throw InvalidArgument("h undefined on the zero vector");
}

class RootSystem;
using RootSystemPtr = std::shared_ptr<const RootSystem>;

class RootSystem {
public:
  static RootSystemPtr build(LieType type) {
    type.validate();
    return RootSystemPtr(new RootSystem(type));
  }

  const LieType &type() const { return type_; }
  int rank() const { return type_.rank; }
  std::size_t dim() const { return static_cast<std::size_t>(type_.rank); }

  /// (alpha_i, alpha_j), 0-based indices.
  const RationalMatrix &gram() const { return gram_; }
  /// <alpha_i, alpha_j> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j), 0-based.
  int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

  RootVector simple_root(int i) const { return RootVector::simple(dim(), i); }
  const std::vector<RootVector> &positive_roots() const { return positive_; }
  const std::vector<std::vector<int>> &positive_roots_int() const { return positive_int_; }
  /// omega_i, 1-based.
  const RootVector &fundamental_weight(int i) const {
    return weights_.at(static_cast<std::size_t>(i - 1));
  }
  const std::vector<RootVector> &fundamental_weights() const { return weights_; }

  Rational inner(const RootVector &a, const RootVector &b) const {
    check_dim(a);
    check_dim(b);
    Rational s = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (a[i] == 0)
        continue;
      for (std::size_t j = 0; j < dim(); ++j)
        if (b[j] != 0)
          s += a[i] * gram_[i][j] * b[j];
    }
    return s;
  }

  /// <lam, beta> = 2 (lam, beta) / (beta, beta).
  Rational pairing(const RootVector &lam, const RootVector &beta) const {
    const Rational nb = inner(beta, beta);
    if (nb == 0)
      throw InvalidArgument("pairing with a zero vector");
    return 2 * inner(lam, beta) / nb;
  }

  /// Index into positive_roots() of +-v, or -1.
  int positive_root_index(const RootVector &v) const {
    if (v.size() != dim() || !v.integral())
      return -1;
    auto ints = v.to_ints();
    if (v.is_negative())
      for (auto &x : ints)
        x = -x;
    auto it = index_.find(ints);
    return it == index_.end() ? -1 : it->second;
  }
  bool is_root(const RootVector &v) const { return positive_root_index(v) >= 0; }
  bool is_positive_root(const RootVector &v) const { return v.is_positive() && is_root(v); }

  /// s_beta(v) = v - <v, beta> beta.
  RootVector reflect(const RootVector &beta, const RootVector &v) const {
    if (!is_root(beta))
      throw InvalidArgument("invalid reflection: not a root");
    return v - pairing(v, beta) * beta;
  }

  /// Matrix of s_i, 1-based.
  const IntMatrix &simple_reflection(int i) const {
    if (i < 1 || i > rank())
      throw InvalidArgument("simple reflection index out of range: " + std::to_string(i));
    return simple_refl_[static_cast<std::size_t>(i - 1)];
  }
  /// Matrix of s_beta for the k-th positive root.
  const IntMatrix &root_reflection(std::size_t k) const { return root_refl_.at(k); }

  /// |W|.
  unsigned long long group_order() const {
    unsigned long long f = 1;
    const int n = rank();
    if (type_.family == Family::A) {
      for (int k = 2; k <= n + 1; ++k)
        f *= static_cast<unsigned long long>(k);
      return f;
    }
    for (int k = 2; k <= n; ++k)
      f *= static_cast<unsigned long long>(k);
    return f << n;
  }

  bool operator==(const RootSystem &o) const { return type_ == o.type_; }

private:
  explicit RootSystem(LieType type) : type_(type) {
    const std::size_t n = dim();
    gram_.assign(n, std::vector<Rational>(n));
    // Normalization: long roots have (a, a) = 2.
    Rational sq_last = 2, sq_rest = 2;
    if (type.family == Family::B)
      sq_last = 1;
    if (type.family == Family::C)
      sq_rest = 1;
    for (std::size_t i = 0; i < n; ++i)
      gram_[i][i] = (i + 1 == n) ? sq_last : sq_rest;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      // Single bonds: (a_i, a_{i+1}) = -(a_i, a_i) / 2 for equal lengths; the
      // double bond pairs a short root with a long root: -(short, short).
      Rational off = (i + 2 == n && type.family != Family::A)
                         ? -std::min(gram_[i][i], gram_[i + 1][i + 1])
                         : -gram_[i][i] / 2;
      gram_[i][i + 1] = gram_[i + 1][i] = off;
    }
    cartan_.assign(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        cartan_[i][j] = static_cast<int>(numerator(2 * gram_[i][j] / gram_[j][j]));

    for (int i = 1; i <= rank(); ++i) {
      IntMatrix s = IntMatrix::identity(rank());
      // Column j is s_i(alpha_j) = alpha_j - <alpha_j, alpha_i> alpha_i.
      for (int j = 0; j < rank(); ++j)
        s(i - 1, j) -= cartan_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i - 1)];
      simple_refl_.push_back(s);
    }

    // Closure of the simple roots under simple reflections, positives only.
    std::vector<std::vector<int>> found;
    std::deque<std::vector<int>> queue;
    for (int i = 1; i <= rank(); ++i) {
      std::vector<int> e(n, 0);
      e[static_cast<std::size_t>(i - 1)] = 1;
      index_.emplace(e, 0);
      queue.push_back(e);
    }
    while (!queue.empty()) {
      auto r = queue.front();
      queue.pop_front();
      found.push_back(r);
      for (int i = 1; i <= rank(); ++i) {
        auto img = simple_refl_[static_cast<std::size_t>(i - 1)].apply(r);
        if (std::any_of(img.begin(), img.end(), [](int x) { return x < 0; }))
          continue;
        if (index_.emplace(img, 0).second)
          queue.push_back(img);
      }
    }
    std::sort(found.begin(), found.end());
    index_.clear();
    for (std::size_t k = 0; k < found.size(); ++k) {
      index_.emplace(found[k], static_cast<int>(k));
      positive_.push_back(RootVector::from_ints(found[k]));
    }
    positive_int_ = std::move(found);

    for (const auto &beta : positive_) {
      const Rational nb = inner(beta, beta);
      IntMatrix s = IntMatrix::identity(rank());
      for (int j = 0; j < rank(); ++j) {
        const Rational p = 2 * inner(simple_root(j + 1), beta) / nb;
        for (std::size_t i = 0; i < n; ++i)
          s(static_cast<int>(i), j) -= static_cast<int>(numerator(p * beta[i]));
      }
      root_refl_.push_back(s);
    }

    // (omega_i, alpha_k) = delta_ik (alpha_k, alpha_k) / 2.
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> rhs(n);
      rhs[i] = gram_[i][i] / 2;
      weights_.emplace_back(solve(gram_, rhs));
    }
  }

  void check_dim(const RootVector &v) const {
    if (v.size() != dim())
      throw InvalidArgument("vector dimension does not match the rank");
  }

  LieType type_;
  RationalMatrix gram_;
  std::vector<std::vector<int>> cartan_;
  std::vector<IntMatrix> simple_refl_;
  std::vector<IntMatrix> root_refl_;
  std::vector<RootVector> positive_;
  std::vector<std::vector<int>> positive_int_;
  std::map<std::vector<int>, int> index_;
  std::vector<RootVector> weights_;
};

inline RootSystemPtr build_root_system(LieType type) { return RootSystem::build(type); }

} // namespace schubert
