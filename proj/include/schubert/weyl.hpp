#pragma once

// Weyl group elements as integer matrices acting on the simple-root basis.

#include "schubert/error.hpp"
#include "schubert/linalg.hpp"
#include "schubert/rootsys.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <ostream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace schubert {

/// Letters are 1-based simple reflection indices; 0 never appears.
using Word = std::vector<int>;

/// h(p, p) = infinity.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

namespace detail {

inline bool has_negative_column(const IntMatrix &m, int col) {
  for (int r = 0; r < m.dim(); ++r)
    if (m(r, col) < 0)
      return true;
  return false;
}

/// Number of positive roots sent to negative roots.
inline int count_inversions(const RootSystem &rs, const IntMatrix &m) {
  int len = 0;
  for (const auto &beta : rs.positive_roots_int()) {
    const auto img = m.apply(beta);
    if (std::any_of(img.begin(), img.end(), [](int x) { return x < 0; }))
      ++len;
  }
  return len;
}

/// Smallest i with s_i m < m, i.e. some positive root is sent to -alpha_i.
inline int first_left_descent(const RootSystem &rs, const IntMatrix &m) {
  int best = 0;
  for (const auto &beta : rs.positive_roots_int()) {
    const auto img = m.apply(beta);
    int idx = -1;
    bool simple_neg = true;
    for (std::size_t k = 0; k < img.size(); ++k) {
      if (img[k] == 0)
        continue;
      if (img[k] == -1 && idx < 0)
        idx = static_cast<int>(k);
      else
        simple_neg = false;
    }
    if (simple_neg && idx >= 0 && (best == 0 || idx + 1 < best))
      best = idx + 1;
  }
  return best;
}

} // namespace detail

class WeylElement {
public:
  WeylElement(RootSystemPtr rs, IntMatrix m) : rs_(std::move(rs)), m_(std::move(m)) {
    if (!rs_ || m_.dim() != rs_->rank())
      throw InvalidArgument("matrix does not match the root system");
    len_ = detail::count_inversions(*rs_, m_);
    IntMatrix cur = m_;
    word_.reserve(static_cast<std::size_t>(len_));
    for (int k = 0; k < len_; ++k) {
      const int i = detail::first_left_descent(*rs_, cur);
      if (i == 0)
        throw InvalidArgument("matrix is not a Weyl group element");
      word_.push_back(i);
      cur = rs_->simple_reflection(i) * cur;
    }
    if (!(cur == IntMatrix::identity(rs_->rank())))
      throw InvalidArgument("matrix is not a Weyl group element");
  }

  static WeylElement identity(RootSystemPtr rs) {
    const int n = rs->rank();
    return WeylElement(std::move(rs), IntMatrix::identity(n));
  }
  static WeylElement simple(RootSystemPtr rs, int i) {
    IntMatrix m = rs->simple_reflection(i);
    return WeylElement(std::move(rs), std::move(m));
  }
  /// s_beta for a root beta.
  static WeylElement reflection(RootSystemPtr rs, const RootVector &beta) {
    const int k = rs->positive_root_index(beta);
    if (k < 0)
      throw InvalidArgument("invalid reflection: not a root");
    IntMatrix m = rs->root_reflection(static_cast<std::size_t>(k));
    return WeylElement(std::move(rs), std::move(m));
  }

  const RootSystemPtr &root_system() const { return rs_; }
  const IntMatrix &matrix() const { return m_; }
  int length() const { return len_; }
  /// Lexicographically smallest reduced word.
  const Word &canonical_word() const { return word_; }
  bool is_identity() const { return len_ == 0; }

  RootVector act(const RootVector &v) const {
    if (v.size() != rs_->dim())
      throw InvalidArgument("vector dimension does not match the rank");
    return RootVector(m_.apply(v.coords()));
  }

  /// u s_i < u.
  bool is_right_descent(int i) const { return detail::has_negative_column(m_, i - 1); }

  bool same_system(const WeylElement &o) const { return rs_->type() == o.rs_->type(); }

  bool operator==(const WeylElement &o) const { return same_system(o) && m_ == o.m_; }

  /// Deterministic total order: length, then canonical word.
  friend bool operator<(const WeylElement &a, const WeylElement &b) {
    if (a.len_ != b.len_)
      return a.len_ < b.len_;
    return a.word_ < b.word_;
  }

  friend std::ostream &operator<<(std::ostream &os, const WeylElement &u) {
    if (u.word_.empty())
      return os << "e";
    for (std::size_t k = 0; k < u.word_.size(); ++k)
      os << (k ? "," : "") << u.word_[k];
    return os;
  }

private:
  RootSystemPtr rs_;
  IntMatrix m_;
  int len_ = 0;
  Word word_;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement &u) const { return u.matrix().hash(); }
};

template <class T> using ElementMap = std::unordered_map<WeylElement, T, WeylElementHash>;
using ElementSet = std::unordered_set<WeylElement, WeylElementHash>;

inline void require_same_system(const WeylElement &u, const WeylElement &v) {
  if (!u.same_system(v))
    throw InvalidArgument("elements belong to different root systems");
}

inline WeylElement element_from_word(const RootSystemPtr &rs, const Word &w) {
  IntMatrix m = IntMatrix::identity(rs->rank());
  for (int letter : w) {
    if (letter < 1 || letter > rs->rank())
      throw InvalidArgument("invalid word: letter " + std::to_string(letter) + " out of range");
    m = m * rs->simple_reflection(letter);
  }
  return WeylElement(rs, std::move(m));
}

inline WeylElement compose(const WeylElement &u, const WeylElement &v) {
  require_same_system(u, v);
  return WeylElement(u.root_system(), u.matrix() * v.matrix());
}

inline WeylElement inverse(const WeylElement &u) {
  Word w = u.canonical_word();
  std::reverse(w.begin(), w.end());
  return element_from_word(u.root_system(), w);
}

inline int length(const WeylElement &u) { return u.length(); }

inline RootVector act(const WeylElement &u, const RootVector &v) { return u.act(v); }

inline Word canonical_reduced_word(const WeylElement &u) { return u.canonical_word(); }

/// A word is reduced iff its product has length equal to its size.
inline bool is_reduced_word(const RootSystemPtr &rs, const Word &w) {
  return element_from_word(rs, w).length() == static_cast<int>(w.size());
}

/// Every reduced word of u, sorted lexicographically. Depth-first search over
/// right descents, memoized per call.
inline std::vector<Word> all_reduced_words(const WeylElement &u) {
  ElementMap<std::vector<Word>> memo;
  const auto &rs = u.root_system();
  std::function<const std::vector<Word> &(const WeylElement &)> rec =
      [&](const WeylElement &x) -> const std::vector<Word> & {
    if (auto it = memo.find(x); it != memo.end())
      return it->second;
    std::vector<Word> out;
    if (x.is_identity()) {
      out.emplace_back();
    } else {
      for (int i = 1; i <= rs->rank(); ++i) {
        if (!x.is_right_descent(i))
          continue;
        const WeylElement y(rs, x.matrix() * rs->simple_reflection(i));
        for (Word w : rec(y)) {
          w.push_back(i);
          out.push_back(std::move(w));
        }
      }
    }
    std::sort(out.begin(), out.end());
    return memo.emplace(x, std::move(out)).first->second;
  };
  return rec(u);
}

/// Elements v = u s_beta with beta > 0 and l(v) = l(u) + 1, ordered by beta.
inline std::vector<std::pair<RootVector, WeylElement>> covers_above(const WeylElement &u) {
  const auto &rs = u.root_system();
  std::vector<std::pair<RootVector, WeylElement>> out;
  const auto &roots = rs->positive_roots_int();
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const auto img = u.matrix().apply(roots[k]);
    if (std::any_of(img.begin(), img.end(), [](int x) { return x < 0; }))
      continue;
    IntMatrix m = u.matrix() * rs->root_reflection(k);
    if (detail::count_inversions(*rs, m) != u.length() + 1)
      continue;
    out.emplace_back(rs->positive_roots()[k], WeylElement(rs, std::move(m)));
  }
  return out;
}

namespace detail {

inline bool bruhat_leq(const RootSystem &rs, IntMatrix u, int lu, IntMatrix v, int lv) {
  while (true) {
    if (lu > lv)
      return false;
    if (lv == 0)
      return lu == 0;
    if (lu == 0)
      return true;
    int s = 0;
    for (int i = 1; i <= rs.rank(); ++i)
      if (has_negative_column(v, i - 1)) {
        s = i;
        break;
      }
    // Property Z: with vs < v, u <= v iff min(u, us) <= vs.
    const IntMatrix &si = rs.simple_reflection(s);
    v = v * si;
    --lv;
    if (has_negative_column(u, s - 1)) {
      u = u * si;
      --lu;
    }
  }
}

} // namespace detail

/// Strong Bruhat order u <= v.
inline bool bruhat_leq(const WeylElement &u, const WeylElement &v) {
  require_same_system(u, v);
  return detail::bruhat_leq(*u.root_system(), u.matrix(), u.length(), v.matrix(), v.length());
}

/// h(p, q) = min{ i | p omega_i != q omega_i }, kInfinity when p = q.
inline int h_pair(const WeylElement &p, const WeylElement &q) {
  require_same_system(p, q);
  const auto &rs = *p.root_system();
  for (int i = 1; i <= rs.rank(); ++i) {
    const auto &w = rs.fundamental_weight(i);
    if (p.act(w) != q.act(w))
      return i;
  }
  return kInfinity;
}

enum class DropKind { Root, TwiceRoot };

struct OmegaDrop {
  RootVector vec;
  DropKind kind;
};

/// omega_j - u omega_j for j = h(id, u). It is a positive root, or in type B
/// possibly twice a positive root; anything else is a CancellationFailure.
inline OmegaDrop omega_drop(const WeylElement &u, int j) {
  const auto &rs = u.root_system();
  const int h = h_pair(WeylElement::identity(rs), u);
  if (h != j)
    throw InvalidArgument("omega_drop precondition violated: j = " + std::to_string(j) +
                          " but h(id, u) = " + (h == kInfinity ? std::string("inf") : std::to_string(h)));
  const auto &w = rs->fundamental_weight(j);
  RootVector d = w - u.act(w);
  if (rs->is_positive_root(d))
    return {d, DropKind::Root};
  if (rs->is_positive_root(make_rational(1, 2) * d))
    return {d, DropKind::TwiceRoot};
  throw CancellationFailure("omega_j - u omega_j is not a multiple of a root");
}

inline std::size_t group_order_bound() {
  if (const char *env = std::getenv("SCHUBERT_MAX_GROUP_ORDER")) {
    char *end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<std::size_t>(v);
  }
  return 100000;
}

/// Every element exactly once, ordered by length then canonical word.
inline std::vector<WeylElement> enumerate_elements(const RootSystemPtr &rs,
                                                   std::size_t bound = group_order_bound()) {
  if (rs->group_order() > bound)
    throw GroupTooLarge("|W(" + rs->type().name() + ")| = " + std::to_string(rs->group_order()) +
                        " exceeds the enumeration bound " + std::to_string(bound));
  std::vector<WeylElement> out{WeylElement::identity(rs)};
  std::unordered_set<std::vector<int>, std::function<std::size_t(const std::vector<int> &)>> seen(
      16, [](const std::vector<int> &v) {
        std::size_t h = 0;
        for (int x : v)
          h = h * 1000003u ^ std::hash<int>{}(x);
        return h;
      });
  seen.insert(out.front().matrix().data());
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int i = 1; i <= rs->rank(); ++i) {
      IntMatrix m = out[head].matrix() * rs->simple_reflection(i);
      if (seen.insert(m.data()).second)
        out.emplace_back(rs, std::move(m));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace schubert
