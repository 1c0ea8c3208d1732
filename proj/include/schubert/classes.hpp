#pragma once

// Restrictions tau_u(v) of equivariant Schubert classes: chains of the Bruhat
// graph, subwords of reduced words, and the GKM divisibility check.

#include "schubert/error.hpp"
#include "schubert/poly.hpp"
#include "schubert/rootsys.hpp"
#include "schubert/weyl.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace schubert {

/// u = u_0 -> u_1 -> ... -> u_m = v with u_k = u_{k-1} s_{beta_k}.
struct Chain {
  std::vector<WeylElement> elements;
  std::vector<RootVector> betas;

  std::size_t size() const { return betas.size(); }
  const WeylElement &start() const { return elements.front(); }
  const WeylElement &end() const { return elements.back(); }

  /// Ascending steps: u_{k-1} beta_k > 0 and u_k = u_{k-1} s_{beta_k}.
  bool is_ascending() const {
    if (elements.size() != betas.size() + 1 || elements.empty())
      return false;
    for (std::size_t k = 0; k < betas.size(); ++k) {
      const auto &p = elements[k];
      if (!p.root_system()->is_positive_root(betas[k]) || !p.act(betas[k]).is_positive())
        return false;
      if (!(compose(p, WeylElement::reflection(p.root_system(), betas[k])) == elements[k + 1]))
        return false;
    }
    return true;
  }

  /// Every step raises the length by exactly one.
  bool is_maximal() const {
    for (std::size_t k = 0; k < betas.size(); ++k)
      if (elements[k + 1].length() != elements[k].length() + 1)
        return false;
    return true;
  }

  /// h(beta_1) <= h(beta_2) <= ... <= h(beta_m).
  bool has_nondecreasing_h() const {
    for (std::size_t k = 1; k < betas.size(); ++k)
      if (h_root(betas[k - 1]) > h_root(betas[k]))
        return false;
    return true;
  }

  bool operator==(const Chain &) const = default;
};

/// A reduced word I together with the 0/1 flags epsilon_1, ..., epsilon_m.
struct Subword {
  Word word;
  std::vector<int> mask;

  /// The selected letters, zeroes dropped.
  Word selected() const {
    Word w;
    for (std::size_t j = 0; j < word.size(); ++j)
      if (mask[j])
        w.push_back(word[j]);
    return w;
  }
  /// [eps_1 i_1, ..., eps_m i_m].
  Word letters() const {
    Word w(word.size());
    for (std::size_t j = 0; j < word.size(); ++j)
      w[j] = mask[j] ? word[j] : 0;
    return w;
  }
  int ones() const { return static_cast<int>(std::count(mask.begin(), mask.end(), 1)); }

  bool operator==(const Subword &) const = default;
  friend bool operator<(const Subword &a, const Subword &b) {
    return std::tie(a.word, a.mask) < std::tie(b.word, b.mask);
  }
};

/// Product of the positive roots beta with v^{-1} beta < 0.
inline FactoredPoly lambda_minus(const WeylElement &v) {
  const auto &rs = v.root_system();
  const WeylElement vinv = inverse(v);
  FactoredPoly f(rs->dim());
  for (const auto &beta : rs->positive_roots())
    if (vinv.act(beta).is_negative())
      f.multiply(beta);
  return f;
}

namespace detail {

/// Memoized membership in the lower interval [*, v].
class BelowCache {
public:
  explicit BelowCache(const WeylElement &v) : v_(v) {}
  bool operator()(const WeylElement &w) {
    auto it = memo_.find(w);
    if (it != memo_.end())
      return it->second;
    return memo_.emplace(w, bruhat_leq(w, v_)).first->second;
  }

private:
  WeylElement v_;
  ElementMap<bool> memo_;
};

/// Depth-first search over steps restricted to [u, v]. `next` yields the
/// candidate (beta, element) steps out of an element.
template <class Next, class Accept>
void chain_search(const WeylElement &u, const WeylElement &v, Next next, Accept accept,
                  std::vector<Chain> &out) {
  require_same_system(u, v);
  if (!bruhat_leq(u, v))
    return;
  BelowCache below(v);
  Chain cur;
  cur.elements.push_back(u);
  std::function<void()> rec = [&]() {
    const WeylElement &top = cur.elements.back();
    if (top == v) {
      out.push_back(cur);
      return;
    }
    for (auto &[beta, w] : next(top)) {
      if (w.length() > v.length() || !below(w) || !accept(cur, beta))
        continue;
      cur.betas.push_back(beta);
      cur.elements.push_back(std::move(w));
      rec();
      cur.betas.pop_back();
      cur.elements.pop_back();
    }
  };
  rec();
}

inline std::vector<std::pair<RootVector, WeylElement>> ascents(const WeylElement &p) {
  const auto &rs = p.root_system();
  std::vector<std::pair<RootVector, WeylElement>> out;
  for (std::size_t k = 0; k < rs->positive_roots().size(); ++k) {
    const auto &beta = rs->positive_roots()[k];
    if (!p.act(beta).is_positive())
      continue;
    out.emplace_back(beta, WeylElement(rs, p.matrix() * rs->root_reflection(k)));
  }
  return out;
}

} // namespace detail

/// Sigma(u, v): saturated ascending chains from u to v.
inline std::vector<Chain> enumerate_max_chains(const WeylElement &u, const WeylElement &v) {
  std::vector<Chain> out;
  detail::chain_search(
      u, v, [](const WeylElement &p) { return covers_above(p); },
      [](const Chain &, const RootVector &) { return true; }, out);
  return out;
}

/// C_0(u, v): the maximal chains with nondecreasing h(beta_k).
inline std::vector<Chain> enumerate_c0(const WeylElement &u, const WeylElement &v) {
  auto all = enumerate_max_chains(u, v);
  std::vector<Chain> out;
  for (auto &c : all)
    if (c.has_nondecreasing_h())
      out.push_back(std::move(c));
  return out;
}

/// Every ascending chain from u to v, maximal or not.
inline std::vector<Chain> enumerate_ascending_chains(const WeylElement &u, const WeylElement &v) {
  std::vector<Chain> out;
  detail::chain_search(
      u, v, detail::ascents, [](const Chain &, const RootVector &) { return true; }, out);
  return out;
}

/// C(u, v): ascending chains (any length) with nondecreasing h(beta_k).
inline std::vector<Chain> enumerate_h_chains(const WeylElement &u, const WeylElement &v) {
  std::vector<Chain> out;
  detail::chain_search(
      u, v, detail::ascents,
      [](const Chain &c, const RootVector &beta) {
        return c.betas.empty() || h_root(c.betas.back()) <= h_root(beta);
      },
      out);
  return out;
}

namespace detail {

inline void check_chain_to(const Chain &gamma, const WeylElement &v) {
  if (gamma.elements.empty() || !(gamma.end() == v))
    throw InvalidArgument("chain does not end at v");
  if (!gamma.is_ascending())
    throw InvalidArgument("not an ascending chain");
}

} // namespace detail

/// The linear forms u_{k-1} omega_{i_k} - v omega_{i_k}, i_k = h(beta_k).
inline std::vector<LinearForm> chain_denominators(const Chain &gamma, const WeylElement &v) {
  detail::check_chain_to(gamma, v);
  const auto &rs = v.root_system();
  std::vector<LinearForm> out;
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    const auto &w = rs->fundamental_weight(h_root(gamma.betas[k]));
    out.push_back(gamma.elements[k].act(w) - v.act(w));
  }
  return out;
}

/// E(gamma) = Lambda_v^- prod <omega_{i_k}, beta_k> / (u_{k-1} omega_{i_k} - v omega_{i_k}),
/// with every denominator cancelled against a proportional factor.
inline FactoredPoly chain_contribution(const Chain &gamma, const WeylElement &v) {
  detail::check_chain_to(gamma, v);
  if (!gamma.is_maximal() || !gamma.has_nondecreasing_h())
    throw InvalidArgument("chain is not in C_0(u, v)");
  const auto &rs = v.root_system();
  FactoredPoly f = lambda_minus(v);
  const auto dens = chain_denominators(gamma, v);
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    f.scale(rs->pairing(rs->fundamental_weight(h_root(gamma.betas[k])), gamma.betas[k]));
    f.cancel(dens[k]);
  }
  return f;
}

/// tau_u(v) as the sum of E(gamma) over C_0(u, v).
inline Polynomial tau_chain(const WeylElement &u, const WeylElement &v) {
  require_same_system(u, v);
  Polynomial total(u.root_system()->dim());
  for (const auto &gamma : enumerate_c0(u, v))
    total += expand(chain_contribution(gamma, v));
  return total;
}

/// s_{i_1} ... s_{i_{j-1}} alpha_{i_j} for every position j of the word.
inline std::vector<RootVector> prefix_roots(const RootSystemPtr &rs, const Word &w) {
  std::vector<RootVector> out;
  IntMatrix m = IntMatrix::identity(rs->rank());
  for (int letter : w) {
    if (letter < 1 || letter > rs->rank())
      throw InvalidArgument("invalid word: letter out of range");
    out.emplace_back(m.apply(rs->simple_root(letter).coords()));
    m = m * rs->simple_reflection(letter);
  }
  return out;
}

/// SC(J, I): product of the prefix roots at the selected positions.
inline FactoredPoly subword_contribution(const RootSystemPtr &rs, const Subword &j) {
  if (j.mask.size() != j.word.size())
    throw InvalidArgument("mask length differs from the word length");
  if (!is_reduced_word(rs, j.word))
    throw InvalidArgument("subword contribution needs a reduced word");
  const auto roots = prefix_roots(rs, j.word);
  FactoredPoly f(rs->dim());
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (j.mask[k])
      f.multiply(roots[k]);
  return f;
}

namespace detail {

inline void check_reduced(const RootSystemPtr &rs, const Word &w) {
  if (!is_reduced_word(rs, w))
    throw InvalidArgument("word is not reduced");
}

inline IntMatrix selected_product(const RootSystemPtr &rs, const Word &w, const std::vector<int> &mask) {
  IntMatrix m = IntMatrix::identity(rs->rank());
  for (std::size_t j = 0; j < w.size(); ++j)
    if (mask[j])
      m = m * rs->simple_reflection(w[j]);
  return m;
}

} // namespace detail

/// R(u, I): masks whose selected letters form a reduced word for u.
inline std::vector<Subword> enumerate_reduced_subwords(const WeylElement &u, const Word &word) {
  const auto &rs = u.root_system();
  detail::check_reduced(rs, word);
  std::vector<Subword> out;
  const int want = u.length();
  const int m = static_cast<int>(word.size());
  std::vector<int> mask(word.size(), 0);
  std::function<void(int, int, const IntMatrix &)> rec = [&](int pos, int chosen, const IntMatrix &prod) {
    if (chosen == want) {
      if (prod == u.matrix())
        out.push_back({word, mask});
      return;
    }
    if (m - pos < want - chosen)
      return;
    mask[static_cast<std::size_t>(pos)] = 1;
    rec(pos + 1, chosen + 1, prod * rs->simple_reflection(word[static_cast<std::size_t>(pos)]));
    mask[static_cast<std::size_t>(pos)] = 0;
    rec(pos + 1, chosen, prod);
  };
  rec(0, 0, IntMatrix::identity(rs->rank()));
  return out;
}

/// S(u, I): masks whose selected letters form any word for u.
inline std::vector<Subword> enumerate_subwords(const WeylElement &u, const Word &word) {
  const auto &rs = u.root_system();
  std::vector<Subword> out;
  std::vector<int> mask(word.size(), 0);
  std::function<void(std::size_t, const IntMatrix &)> rec = [&](std::size_t pos, const IntMatrix &prod) {
    if (pos == word.size()) {
      if (prod == u.matrix())
        out.push_back({word, mask});
      return;
    }
    mask[pos] = 1;
    rec(pos + 1, prod * rs->simple_reflection(word[pos]));
    mask[pos] = 0;
    rec(pos + 1, prod);
  };
  rec(0, IntMatrix::identity(rs->rank()));
  return out;
}

/// tau_u(v) by Billey's subword sum over R(u, I). I defaults to the
/// canonical reduced word of v.
inline Polynomial tau_billey(const WeylElement &u, const WeylElement &v,
                             const std::optional<Word> &word = std::nullopt) {
  require_same_system(u, v);
  const auto &rs = v.root_system();
  const Word w = word.value_or(v.canonical_word());
  detail::check_reduced(rs, w);
  if (!(element_from_word(rs, w) == v))
    throw InvalidArgument("word is not a word for v");
  Polynomial total(rs->dim());
  for (const auto &j : enumerate_reduced_subwords(u, w))
    total += expand(subword_contribution(rs, j));
  return total;
}

/// eta = sum_i mu_i omega_i.
inline RootVector weight_from_mu(const RootSystem &rs, const std::vector<Rational> &mu) {
  if (mu.size() != rs.dim())
    throw InvalidArgument("mu has the wrong dimension");
  RootVector eta(rs.dim());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] <= 0)
      throw InvalidArgument("mu must be strictly positive");
    eta += mu[i] * rs.fundamental_weight(static_cast<int>(i) + 1);
  }
  return eta;
}

/// E_eta(gamma) evaluated at alpha = alpha_values:
/// Lambda_v^- prod <eta, beta_k> / (u_{k-1} eta - v eta).
inline Rational gt_term_eval(const Chain &gamma, const WeylElement &v, const std::vector<Rational> &mu,
                             const std::vector<Rational> &alpha_values) {
  detail::check_chain_to(gamma, v);
  const auto &rs = v.root_system();
  const RootVector eta = weight_from_mu(*rs, mu);
  const RootVector v_eta = v.act(eta);
  Rational value = evaluate(lambda_minus(v), alpha_values);
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    const Rational den = evaluate_form(gamma.elements[k].act(eta) - v_eta, alpha_values);
    if (den == 0)
      throw NonGenericPoint("denominator vanishes at the chosen alpha values");
    value *= rs->pairing(eta, gamma.betas[k]) / den;
  }
  return value;
}

/// Sum of gt_term_eval over Sigma(u, v).
inline Rational tau_gt_eval(const WeylElement &u, const WeylElement &v, const std::vector<Rational> &mu,
                            const std::vector<Rational> &alpha_values) {
  Rational total = 0;
  for (const auto &gamma : enumerate_max_chains(u, v))
    total += gt_term_eval(gamma, v, mu, alpha_values);
  return total;
}

/// F_I(gamma): walk the chain backwards, deleting one letter per edge so that
/// the remaining letters multiply to the next element down. Ties go to the
/// rightmost deletable letter.
inline Subword f_i_map(const Chain &gamma, const Word &word) {
  if (gamma.elements.empty())
    throw InvalidArgument("empty chain");
  const auto &rs = gamma.end().root_system();
  detail::check_reduced(rs, word);
  if (!(element_from_word(rs, word) == gamma.end()))
    throw InvalidArgument("chain does not end at the element of the word");
  Subword j{word, std::vector<int>(word.size(), 1)};
  for (std::size_t k = gamma.size(); k-- > 0;) {
    const IntMatrix &target = gamma.elements[k].matrix();
    bool found = false;
    for (std::size_t pos = word.size(); pos-- > 0;) {
      if (!j.mask[pos])
        continue;
      j.mask[pos] = 0;
      if (detail::selected_product(rs, word, j.mask) == target) {
        found = true;
        break;
      }
      j.mask[pos] = 1;
    }
    if (!found)
      throw InvalidArgument("no single deletion reaches the next chain element");
  }
  return j;
}

/// An assignment W -> polynomials.
using GkmClass = std::map<WeylElement, Polynomial>;

struct GkmEdge {
  WeylElement u;
  WeylElement v;
  RootVector label;
};

struct GkmReport {
  std::size_t edges_checked = 0;
  std::vector<GkmEdge> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks f(v) - f(u) in (u beta) S for every edge {u, u s_beta} of the GKM graph.
inline GkmReport gkm_check_class(const RootSystemPtr &rs, const GkmClass &f) {
  GkmReport report;
  const auto elements = enumerate_elements(rs);
  for (const auto &u : elements)
    if (!f.count(u))
      throw InvalidArgument("class is not defined on every element");
  for (const auto &u : elements) {
    for (std::size_t k = 0; k < rs->positive_roots().size(); ++k) {
      const WeylElement v(rs, u.matrix() * rs->root_reflection(k));
      if (!(u < v))
        continue;
      ++report.edges_checked;
      const RootVector label = u.act(rs->positive_roots()[k]);
      if (!divide_linear(f.at(v) - f.at(u), label))
        report.failures.push_back({u, v, label});
    }
  }
  return report;
}

/// The full class v -> tau_chain(u, v).
inline GkmClass schubert_class(const WeylElement &u) {
  GkmClass f;
  for (const auto &v : enumerate_elements(u.root_system()))
    f.emplace(v, tau_chain(u, v));
  return f;
}

} // namespace schubert
