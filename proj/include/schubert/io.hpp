#pragma once

// Text, LaTeX and JSON forms of polynomials; parsing of words, permutations
// and element arguments.

#include "schubert/classes.hpp"
#include "schubert/error.hpp"
#include "schubert/poly.hpp"
#include "schubert/typea.hpp"
#include "schubert/weyl.hpp"

#include <json.hpp>

#include <cctype>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace schubert {

namespace detail {

inline std::string monomial_text(const Monomial &m, const std::string &var = "a") {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0)
      continue;
    if (!out.empty())
      out += '*';
    out += var + std::to_string(i + 1);
    if (m[i] > 1)
      out += "^" + std::to_string(m[i]);
  }
  return out;
}

inline std::string monomial_latex(const Monomial &m, const std::string &var = "\\alpha") {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0)
      continue;
    out += var + "_{" + std::to_string(i + 1) + "}";
    if (m[i] > 1)
      out += "^{" + std::to_string(m[i]) + "}";
  }
  return out;
}

inline std::string rational_latex(const Rational &q) {
  if (is_integer(q))
    return q.str();
  return "\\frac{" + numerator(q).str() + "}{" + denominator(q).str() + "}";
}

template <class Mono, class Coef>
std::string render_terms(const Polynomial &p, Mono mono, Coef coef, const char *times) {
  if (p.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[m, c] : p.terms()) {
    const bool neg = c < 0;
    const Rational a = neg ? Rational(-c) : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    const std::string mt = mono(m);
    if (mt.empty())
      out += coef(a);
    else if (a == 1)
      out += mt;
    else
      out += coef(a) + times + mt;
  }
  return out;
}

} // namespace detail

/// "a1^2 + 2*a1*a2 + a2^2"; `var` renames the variables (x1, x2, ...).
inline std::string to_text(const Polynomial &p, const std::string &var = "a") {
  return detail::render_terms(
      p, [&](const Monomial &m) { return detail::monomial_text(m, var); },
      [](const Rational &q) { return q.str(); }, "*");
}

inline std::string to_latex(const Polynomial &p, const std::string &var = "\\alpha") {
  return detail::render_terms(
      p, [&](const Monomial &m) { return detail::monomial_latex(m, var); }, detail::rational_latex, "");
}

inline std::string to_text(const LinearForm &f) { return to_text(Polynomial::linear(f)); }
inline std::string to_latex(const LinearForm &f) { return to_latex(Polynomial::linear(f)); }

/// "1/2*a1*(a1 + 2*a2)".
inline std::string to_text(const FactoredPoly &f) {
  std::string out;
  if (f.scalar() != 1 || f.factors().empty())
    out = f.scalar().str();
  for (const auto &g : f.factors()) {
    if (!out.empty())
      out += '*';
    const auto p = Polynomial::linear(g);
    out += p.terms().size() > 1 ? "(" + to_text(p) + ")" : to_text(p);
  }
  return out;
}

inline std::string to_latex(const FactoredPoly &f) {
  std::string out;
  if (f.scalar() != 1 || f.factors().empty())
    out = detail::rational_latex(f.scalar());
  for (const auto &g : f.factors()) {
    const auto p = Polynomial::linear(g);
    out += p.terms().size() > 1 ? "(" + to_latex(p) + ")" : to_latex(p);
  }
  return out;
}

/// Type A factored form in x variables: "(x1 - x3)*(x2 - x4)".
inline std::string to_x_text(const FactoredPoly &f, bool latex = false) {
  std::string out;
  if (f.scalar() != 1 || f.factors().empty())
    out = latex ? detail::rational_latex(f.scalar()) : f.scalar().str();
  for (const auto &g : f.factors()) {
    const auto [a, b] = root_to_x_pair(g);
    if (!out.empty() && !latex)
      out += '*';
    if (latex)
      out += "(x_{" + std::to_string(a) + "} - x_{" + std::to_string(b) + "})";
    else
      out += "(x" + std::to_string(a) + " - x" + std::to_string(b) + ")";
  }
  return out;
}

inline std::string to_text(const Word &w) {
  std::string out = "[";
  for (std::size_t k = 0; k < w.size(); ++k)
    out += (k ? "," : "") + std::to_string(w[k]);
  return out + "]";
}

inline std::string coords_text(const RootVector &v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

namespace detail {

inline nlohmann::json integer_json(const Integer &z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(z);
  return z.str();
}

inline Integer integer_from_json(const nlohmann::json &j) {
  if (j.is_number_integer())
    return Integer(j.get<std::int64_t>());
  if (j.is_string())
    return Integer(j.get<std::string>());
  throw InvalidArgument("expected an integer in polynomial JSON");
}

} // namespace detail

/// [{"exponents": [...], "numerator": n, "denominator": d}, ...] in canonical order.
inline nlohmann::json to_json(const Polynomial &p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto &[m, c] : p.terms())
    arr.push_back({{"exponents", m},
                   {"numerator", detail::integer_json(numerator(c))},
                   {"denominator", detail::integer_json(denominator(c))}});
  return arr;
}

inline Polynomial polynomial_from_json(const nlohmann::json &j, std::size_t nvars) {
  if (!j.is_array())
    throw InvalidArgument("polynomial JSON must be an array of terms");
  Polynomial p(nvars);
  for (const auto &t : j) {
    const auto m = t.at("exponents").get<Monomial>();
    const Integer den = detail::integer_from_json(t.at("denominator"));
    if (den == 0)
      throw InvalidArgument("zero denominator in polynomial JSON");
    p.add_term(m, Rational(detail::integer_from_json(t.at("numerator")), den));
  }
  return p;
}

/// "1,2,1"; "", "e" and "id" are the empty word.
inline Word parse_word(const std::string &s) {
  Word w;
  if (s.empty() || s == "e" || s == "id")
    return w;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t next = std::min(s.find(',', pos), s.size());
    const std::string tok = s.substr(pos, next - pos);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw InvalidArgument("bad word '" + s + "'");
    w.push_back(std::stoi(tok));
    pos = next + 1;
  }
  return w;
}

enum class InputMode { Auto, Word, Perm };

inline InputMode parse_input_mode(const std::string &s) {
  if (s == "auto")
    return InputMode::Auto;
  if (s == "word")
    return InputMode::Word;
  if (s == "perm")
    return InputMode::Perm;
  throw InvalidArgument("unknown input mode '" + s + "'");
}

/// In Auto mode a comma-free token of two or more digits is a one-line
/// permutation (type A only); anything else is a comma-separated word.
inline WeylElement parse_element(const RootSystemPtr &rs, const std::string &s, InputMode mode) {
  const bool digits = !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  const bool perm = mode == InputMode::Perm || (mode == InputMode::Auto && digits && s.size() >= 2);
  if (perm) {
    if (rs->type().family != Family::A)
      throw InvalidArgument("one-line permutation input requires type A");
    return perm_to_element(rs, Permutation::parse(s));
  }
  return element_from_word(rs, parse_word(s));
}

} // namespace schubert
