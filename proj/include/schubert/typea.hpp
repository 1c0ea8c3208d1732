#pragma once

// Type A in one-line notation. S_n is the Weyl group of A_{n-1}; s_i swaps
// positions i and i+1, alpha_i = x_i - x_{i+1} and w x_a = x_{w(a)}.

#include "schubert/classes.hpp"
#include "schubert/error.hpp"
#include "schubert/poly.hpp"
#include "schubert/rootsys.hpp"
#include "schubert/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace schubert {

class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> oneline) : p_(std::move(oneline)) {
    std::vector<int> seen(p_.size() + 1, 0);
    for (int x : p_) {
      if (x < 1 || x > static_cast<int>(p_.size()) || seen[static_cast<std::size_t>(x)]++)
        throw InvalidArgument("not a permutation of 1..n");
    }
  }

  static Permutation identity(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    return Permutation(std::move(p));
  }

  /// "3421" (n <= 9) or "10,3,...".
  static Permutation parse(const std::string &s) {
    std::vector<int> p;
    if (s.find(',') != std::string::npos) {
      std::size_t pos = 0;
      while (pos <= s.size()) {
        const std::size_t next = std::min(s.find(',', pos), s.size());
        const std::string tok = s.substr(pos, next - pos);
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
          throw InvalidArgument("bad permutation '" + s + "'");
        p.push_back(std::stoi(tok));
        pos = next + 1;
      }
    } else {
      for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw InvalidArgument("bad permutation '" + s + "'");
        p.push_back(c - '0');
      }
    }
    return Permutation(std::move(p));
  }

  int size() const { return static_cast<int>(p_.size()); }
  /// u(i), 1-based.
  int operator()(int i) const { return p_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int> &oneline() const { return p_; }

  /// Right multiplication by the transposition (i, j): swaps positions.
  Permutation times_transposition(int i, int j) const {
    Permutation q(*this);
    std::swap(q.p_.at(static_cast<std::size_t>(i - 1)), q.p_.at(static_cast<std::size_t>(j - 1)));
    return q;
  }

  std::string str() const {
    std::string out;
    const bool commas = size() > 9;
    for (std::size_t k = 0; k < p_.size(); ++k) {
      if (commas && k)
        out += ',';
      out += std::to_string(p_[k]);
    }
    return out;
  }

  bool operator==(const Permutation &) const = default;
  friend bool operator<(const Permutation &a, const Permutation &b) { return a.p_ < b.p_; }

private:
  std::vector<int> p_;
};

inline RootSystemPtr type_a_system(int n) {
  if (n < 2)
    throw InvalidArgument("permutations need n >= 2");
  return build_root_system({Family::A, n - 1});
}

inline WeylElement perm_to_element(const RootSystemPtr &rs, const Permutation &p) {
  if (rs->type().family != Family::A || rs->rank() != p.size() - 1)
    throw InvalidArgument("permutation size does not match the type A rank");
  // Bubble sort from the right: p = p' s_i whenever p(i) > p(i+1).
  std::vector<int> cur = p.oneline();
  Word rev;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i)
      if (cur[i] > cur[i + 1]) {
        std::swap(cur[i], cur[i + 1]);
        rev.push_back(static_cast<int>(i) + 1);
        moved = true;
        break;
      }
  }
  std::reverse(rev.begin(), rev.end());
  return element_from_word(rs, rev);
}

inline Permutation element_to_perm(const WeylElement &u) {
  const auto &rs = u.root_system();
  if (rs->type().family != Family::A)
    throw InvalidArgument("permutation codec needs type A");
  Permutation p = Permutation::identity(rs->rank() + 1);
  for (int letter : u.canonical_word())
    p = p.times_transposition(letter, letter + 1);
  return p;
}

/// x_a - x_b (a < b) as alpha_a + ... + alpha_{b-1}, in rank n - 1.
inline LinearForm x_difference(int n, int a, int b) {
  if (a == b || a < 1 || b < 1 || a > n || b > n)
    throw InvalidArgument("bad x-difference");
  LinearForm f(static_cast<std::size_t>(n - 1));
  const int lo = std::min(a, b), hi = std::max(a, b);
  for (int i = lo; i < hi; ++i)
    f[static_cast<std::size_t>(i - 1)] = a < b ? 1 : -1;
  return f;
}

/// Inverse of x_difference for positive roots: alpha_a + ... + alpha_{b-1} -> (a, b).
inline std::pair<int, int> root_to_x_pair(const LinearForm &beta) {
  const int a = h_root(beta);
  int b = a;
  while (static_cast<std::size_t>(b - 1) < beta.size() && beta[static_cast<std::size_t>(b - 1)] == 1)
    ++b;
  for (std::size_t i = static_cast<std::size_t>(b - 1); i < beta.size(); ++i)
    if (beta[i] != 0)
      throw InvalidArgument("not a type A positive root");
  return {a, b};
}

/// Substitutes alpha_i = x_i - x_{i+1}: a polynomial in n - 1 alpha variables
/// becomes one in n x variables.
inline Polynomial alpha_to_x(const Polynomial &p) {
  const std::size_t n = p.nvars() + 1;
  std::vector<Polynomial> sub;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    LinearForm f(n);
    f[i] = 1;
    f[i + 1] = -1;
    sub.push_back(Polynomial::linear(f));
  }
  Polynomial out(n);
  for (const auto &[m, c] : p.terms()) {
    Polynomial t = Polynomial::constant(n, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int e = 0; e < m[i]; ++e)
        t = t * sub[i];
    out += t;
  }
  return out;
}

using InversionSet = std::set<std::pair<int, int>>;

/// {(v(j), v(i)) | i < j, v(i) > v(j)}.
inline InversionSet inv_set(const Permutation &v) {
  InversionSet out;
  for (int i = 1; i <= v.size(); ++i)
    for (int j = i + 1; j <= v.size(); ++j)
      if (v(i) > v(j))
        out.emplace(v(j), v(i));
  return out;
}

/// The transpositions (i_k, j_k) with u_k = u_{k-1} (i_k, j_k), i_k < j_k.
inline std::vector<std::pair<int, int>> transposition_labels(const Chain &gamma) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    const Permutation p = element_to_perm(gamma.elements[k]);
    const Permutation q = element_to_perm(gamma.elements[k + 1]);
    std::vector<int> diff;
    for (int i = 1; i <= p.size(); ++i)
      if (p(i) != q(i))
        diff.push_back(i);
    if (diff.size() != 2)
      throw InvalidArgument("chain step is not a transposition");
    out.emplace_back(diff[0], diff[1]);
  }
  return out;
}

/// Inv(v, gamma): Inv(v) minus the pairs (u_{k-1}(i_k), v(i_k)).
inline InversionSet chain_inversions(const Chain &gamma) {
  const Permutation v = element_to_perm(gamma.end());
  InversionSet rest = inv_set(v);
  const auto labels = transposition_labels(gamma);
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const int i = labels[k].first;
    const std::pair<int, int> removed{element_to_perm(gamma.elements[k])(i), v(i)};
    if (rest.erase(removed) != 1)
      throw CancellationFailure("edge removes a pair that is not an available inversion");
  }
  return rest;
}

/// prod over Inv(v, gamma) of (x_a - x_b), in the alpha basis.
inline FactoredPoly typea_chain_contribution(const Chain &gamma) {
  const int n = gamma.end().root_system()->rank() + 1;
  FactoredPoly f(static_cast<std::size_t>(n - 1));
  for (const auto &[a, b] : chain_inversions(gamma))
    f.multiply(x_difference(n, a, b));
  return f;
}

inline Polynomial tau_typea(const Permutation &u, const Permutation &v) {
  if (u.size() != v.size())
    throw InvalidArgument("permutation sizes differ");
  const auto rs = type_a_system(u.size());
  const WeylElement ue = perm_to_element(rs, u), ve = perm_to_element(rs, v);
  Polynomial total(rs->dim());
  for (const auto &gamma : enumerate_c0(ue, ve)) {
    const auto labels = transposition_labels(gamma);
    for (std::size_t k = 1; k < labels.size(); ++k)
      if (labels[k - 1].first > labels[k].first)
        throw InvalidArgument("C_0 chain with decreasing first transposition index");
    total += expand(typea_chain_contribution(gamma));
  }
  return total;
}

/// I(v) = [I_1, ..., I_{n-1}] with I_j = [k_j, ..., j+1, j] or empty.
inline std::vector<Word> canonical_word_iv_segments(const Permutation &v) {
  const auto rs = type_a_system(v.size());
  const WeylElement id = WeylElement::identity(rs);
  std::vector<Word> segments;
  Permutation rest = v;
  for (int j = 1; j < v.size(); ++j) {
    Word seg;
    const WeylElement r = perm_to_element(rs, rest);
    if (h_pair(id, r) == j) {
      // rest = s_k ... s_j w with k + 1 = rest(j) and h(id, w) > j.
      const int k = rest(j) - 1;
      for (int i = k; i >= j; --i)
        seg.push_back(i);
      // w = s_j s_{j+1} ... s_k rest; left multiplication swaps values.
      std::vector<int> p = rest.oneline();
      for (int i = k; i >= j; --i)
        for (auto &x : p)
          x = x == i ? i + 1 : x == i + 1 ? i : x;
      rest = Permutation(std::move(p));
    }
    segments.push_back(std::move(seg));
  }
  if (!(rest == Permutation::identity(v.size())))
    throw InvalidArgument("I(v) construction did not terminate at the identity");
  return segments;
}

inline Word canonical_word_iv(const Permutation &v) {
  Word out;
  for (const auto &seg : canonical_word_iv_segments(v))
    out.insert(out.end(), seg.begin(), seg.end());
  return out;
}

struct EquivalenceReport {
  Word word;
  std::size_t chains = 0;
  std::size_t subwords = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks that F_I is a bijection C_0(u, v) -> R(u, I) with SC(F_I(gamma), I) = E(gamma),
/// for I = I(v).
inline EquivalenceReport verify_equivalence(const Permutation &u, const Permutation &v) {
  if (u.size() != v.size())
    throw InvalidArgument("permutation sizes differ");
  const auto rs = type_a_system(v.size());
  const WeylElement ue = perm_to_element(rs, u), ve = perm_to_element(rs, v);
  EquivalenceReport rep;
  rep.word = canonical_word_iv(v);
  const auto c0 = enumerate_c0(ue, ve);
  const auto r = enumerate_reduced_subwords(ue, rep.word);
  rep.chains = c0.size();
  rep.subwords = r.size();
  std::set<Subword> images;
  const std::set<Subword> expected(r.begin(), r.end());
  for (const auto &gamma : c0) {
    const Subword j = f_i_map(gamma, rep.word);
    if (!images.insert(j).second)
      rep.violations.push_back("collision on a C_0 chain from " + u.str() + " to " + v.str());
    if (!expected.count(j))
      rep.violations.push_back("F_I image outside R(u, I) for " + u.str() + " -> " + v.str());
    if (!(expand(subword_contribution(rs, j)) == expand(chain_contribution(gamma, ve))))
      rep.violations.push_back("SC(F_I(gamma), I) != E(gamma) for " + u.str() + " -> " + v.str());
  }
  if (images.size() != expected.size())
    rep.violations.push_back("F_I is not onto R(u, I) for " + u.str() + " -> " + v.str());
  return rep;
}

} // namespace schubert
