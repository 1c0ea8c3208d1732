#pragma once

// The `schubert` command line: restrict, chains, subwords, verify, table.
// run() is separate from main() so the tests can drive it in-process.

#include "schubert/classes.hpp"
#include "schubert/io.hpp"
#include "schubert/typea.hpp"
#include "schubert/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace schubert::cli {

enum Exit : int { kOk = 0, kFailure = 1, kUsage = 2 };

struct Options {
  std::string type = "A";
  int rank = 2;
  std::string u = "e";
  std::string v = "e";
  std::string method = "chain";
  std::string format = "text";
  std::string basis = "alpha";
  std::string input = "auto";
  std::string word;
  bool map_to_subwords = false;
  std::string suite = "oracle";
  int samples = 20;
  std::uint64_t seed = 12345;
  std::size_t max_pairs = 0;
  unsigned threads = 0;
  std::string out;
};

/// Errors in the request itself; reported with exit status 2.
struct UsageError : InvalidArgument {
  using InvalidArgument::InvalidArgument;
};

class Context {
public:
  explicit Context(const Options &o) : opt(o) {
    const LieType t{parse_family(o.type), o.rank};
    t.validate();
    rs = build_root_system(t);
    mode = parse_input_mode(o.input);
    if (o.format != "text" && o.format != "json" && o.format != "latex")
      throw UsageError("unknown format '" + o.format + "'");
    if (o.basis != "alpha" && o.basis != "x")
      throw UsageError("unknown basis '" + o.basis + "'");
    if (o.basis == "x" && t.family != Family::A)
      throw UsageError("the x basis needs type A");
  }

  WeylElement element(const std::string &s) const { return parse_element(rs, s, mode); }

  bool type_a() const { return rs->type().family == Family::A; }
  bool x_basis() const { return opt.basis == "x"; }

  std::string name(const WeylElement &w) const {
    if (type_a())
      return element_to_perm(w).str();
    std::ostringstream os;
    os << w;
    return os.str();
  }

  std::string poly(const Polynomial &p) const {
    const bool latex = opt.format == "latex";
    if (x_basis())
      return latex ? to_latex(alpha_to_x(p), "x") : to_text(alpha_to_x(p), "x");
    return latex ? to_latex(p) : to_text(p);
  }

  std::string factored(const FactoredPoly &f) const {
    const bool latex = opt.format == "latex";
    if (x_basis())
      return to_x_text(f, latex);
    return latex ? to_latex(f) : to_text(f);
  }

  std::string form(const LinearForm &f) const {
    if (x_basis()) {
      const auto [a, b] = root_to_x_pair(f);
      return "x" + std::to_string(a) + " - x" + std::to_string(b);
    }
    return to_text(f);
  }

  /// The reduced word from --word, or the canonical word of v.
  Word word_for(const WeylElement &v) const {
    if (opt.word.empty())
      return v.canonical_word();
    const Word w = parse_word(opt.word);
    if (!is_reduced_word(rs, w) || !(element_from_word(rs, w) == v))
      throw UsageError("--word " + opt.word + " is not a reduced word for v");
    return w;
  }

  nlohmann::json header() const { return {{"schema", "v1"}, {"type", rs->type().name()}}; }

  const Options &opt;
  RootSystemPtr rs;
  InputMode mode = InputMode::Auto;
};

inline nlohmann::json mask_json(const Subword &j) { return j.mask; }

inline std::string mask_text(const Subword &j) {
  std::string s = "[";
  for (std::size_t k = 0; k < j.mask.size(); ++k)
    s += (k ? "," : "") + std::to_string(j.mask[k] ? j.word[k] : 0);
  return s + "]";
}

inline int cmd_restrict(const Context &c, std::ostream &out) {
  const auto u = c.element(c.opt.u), v = c.element(c.opt.v);
  if (!c.opt.word.empty())
    c.word_for(v);
  std::vector<std::string> methods;
  if (c.opt.method == "all") {
    methods = {"chain", "billey"};
    if (c.type_a())
      methods.push_back("typea");
  } else if (c.opt.method == "chain" || c.opt.method == "billey" || c.opt.method == "typea") {
    methods = {c.opt.method};
  } else {
    throw UsageError("unknown method '" + c.opt.method + "'");
  }
  std::vector<Polynomial> values;
  for (const auto &m : methods) {
    if (m == "chain")
      values.push_back(tau_chain(u, v));
    else if (m == "billey")
      values.push_back(tau_billey(u, v, c.word_for(v)));
    else if (!c.type_a())
      throw UsageError("method typea needs type A");
    else
      values.push_back(tau_typea(element_to_perm(u), element_to_perm(v)));
  }
  bool agree = true;
  for (const auto &p : values)
    agree = agree && p == values.front();

  if (c.opt.format == "json") {
    auto j = c.header();
    j["u"] = c.name(u);
    j["v"] = c.name(v);
    j["results"] = nlohmann::json::array();
    for (std::size_t k = 0; k < methods.size(); ++k)
      j["results"].push_back({{"method", methods[k]}, {"value", to_json(values[k])}, {"text", c.poly(values[k])}});
    if (methods.size() > 1)
      j["verdict"] = agree ? "AGREE" : "DISAGREE";
    out << j.dump(2) << "\n";
  } else if (methods.size() == 1) {
    out << c.poly(values.front()) << "\n";
  } else {
    for (std::size_t k = 0; k < methods.size(); ++k)
      out << methods[k] << ": " << c.poly(values[k]) << "\n";
    out << "verdict: " << (agree ? "AGREE" : "DISAGREE") << "\n";
  }
  return agree ? kOk : kFailure;
}

inline int cmd_chains(const Context &c, std::ostream &out) {
  const auto u = c.element(c.opt.u), v = c.element(c.opt.v);
  const auto chains = enumerate_max_chains(u, v);
  std::optional<Word> word;
  if (c.opt.map_to_subwords)
    word = c.word_for(v);
  else if (!c.opt.word.empty())
    throw UsageError("--word with chains needs --map-to-subwords");

  std::size_t in_c0 = 0;
  nlohmann::json arr = nlohmann::json::array();
  std::ostringstream text;
  for (std::size_t k = 0; k < chains.size(); ++k) {
    const auto &g = chains[k];
    const bool c0 = g.has_nondecreasing_h();
    in_c0 += c0;
    const std::optional<FactoredPoly> e = c0 ? std::optional(chain_contribution(g, v)) : std::nullopt;
    const std::optional<Subword> sub = word ? std::optional(f_i_map(g, *word)) : std::nullopt;
    if (c.opt.format == "json") {
      nlohmann::json j;
      j["elements"] = nlohmann::json::array();
      for (const auto &w : g.elements)
        j["elements"].push_back(c.name(w));
      j["betas"] = nlohmann::json::array();
      for (const auto &b : g.betas)
        j["betas"].push_back(b.to_ints());
      j["in_c0"] = c0;
      j["contribution"] = to_json(e ? expand(*e) : Polynomial(c.rs->dim()));
      j["contribution_text"] = e ? c.factored(*e) : "0";
      if (sub)
        j["subword"] = mask_json(*sub);
      arr.push_back(std::move(j));
    } else {
      text << "#" << k + 1 << (c0 ? " C0 " : "    ");
      for (std::size_t i = 0; i < g.elements.size(); ++i)
        text << (i ? " -> " : "") << c.name(g.elements[i]);
      text << "  betas";
      for (const auto &b : g.betas)
        text << " " << (c.x_basis() ? "(" + c.form(b) + ")" : coords_text(b));
      text << "  E = " << (e ? c.factored(*e) : "0");
      if (sub)
        text << "  F_I = " << mask_text(*sub);
      text << "\n";
    }
  }
  if (c.opt.format == "json") {
    auto j = c.header();
    j["u"] = c.name(u);
    j["v"] = c.name(v);
    if (word)
      j["word"] = *word;
    j["chains"] = std::move(arr);
    out << j.dump(2) << "\n";
  } else {
    out << chains.size() << " maximal chains, " << in_c0 << " in C0";
    if (word)
      out << ", I = " << to_text(*word);
    out << "\n" << text.str();
  }
  return kOk;
}

inline int cmd_subwords(const Context &c, std::ostream &out) {
  const auto u = c.element(c.opt.u), v = c.element(c.opt.v);
  const Word word = c.word_for(v);
  const auto subs = enumerate_reduced_subwords(u, word);
  Polynomial total(c.rs->dim());
  nlohmann::json arr = nlohmann::json::array();
  std::ostringstream text;
  for (const auto &j : subs) {
    const FactoredPoly sc = subword_contribution(c.rs, j);
    total += expand(sc);
    if (c.opt.format == "json")
      arr.push_back({{"mask", mask_json(j)}, {"contribution", to_json(expand(sc))}, {"contribution_text", c.factored(sc)}});
    else
      text << mask_text(j) << "  SC = " << c.factored(sc) << "\n";
  }
  if (c.opt.format == "json") {
    auto j = c.header();
    j["u"] = c.name(u);
    j["v"] = c.name(v);
    j["word"] = word;
    j["subwords"] = std::move(arr);
    j["total"] = to_json(total);
    out << j.dump(2) << "\n";
  } else {
    out << subs.size() << " reduced subwords of I = " << to_text(word) << "\n"
        << text.str() << "total = " << c.poly(total) << "\n";
  }
  return kOk;
}

inline int cmd_verify(const Context &c, std::ostream &out) {
  std::vector<std::string> suites;
  if (c.opt.suite == "all") {
    for (const auto &s : suite_names())
      if (s != "equivalence-typeA" || c.type_a())
        suites.push_back(s);
  } else {
    const auto &names = suite_names();
    if (std::find(names.begin(), names.end(), c.opt.suite) == names.end())
      throw UsageError("unknown suite '" + c.opt.suite + "'");
    if (c.opt.suite == "equivalence-typeA" && !c.type_a())
      throw UsageError("suite equivalence-typeA needs type A");
    suites.push_back(c.opt.suite);
  }
  VerifyOptions vo;
  vo.samples = c.opt.samples;
  vo.seed = c.opt.seed;
  vo.max_pairs = c.opt.max_pairs;
  vo.threads = c.opt.threads;
  bool ok = true;
  nlohmann::json reports = nlohmann::json::array();
  for (const auto &s : suites) {
    const auto rep = run_suite(s, c.rs, vo);
    ok = ok && rep.ok();
    if (c.opt.format == "text") {
      out << rep.suite << " " << rep.type << ": " << rep.cases << " cases, " << rep.failures.size() << " failures\n";
      for (const auto &f : rep.failures)
        out << "  " << f.u << " " << f.v << ": " << f.detail << "\n";
    } else {
      reports.push_back(rep.to_json());
    }
  }
  if (c.opt.format != "text")
    out << (reports.size() == 1 ? reports.front() : nlohmann::json{{"schema", "v1"}, {"reports", reports}}).dump(2)
        << "\n";
  return ok ? kOk : kFailure;
}

/// tau_u(v) for every pair u <= v.
inline int cmd_table(const Context &c, std::ostream &out) {
  const auto els = enumerate_elements(c.rs);
  if (c.opt.method != "chain" && c.opt.method != "billey" && c.opt.method != "typea")
    throw UsageError("table takes --method chain, billey or typea");
  if (c.opt.method == "typea" && !c.type_a())
    throw UsageError("method typea needs type A");
  nlohmann::json arr = nlohmann::json::array();
  if (c.opt.format == "latex")
    out << "\\begin{tabular}{lll}\n$u$ & $v$ & $\\tau_u(v)$ \\\\\n\\hline\n";
  for (const auto &u : els)
    for (const auto &v : els) {
      if (!bruhat_leq(u, v))
        continue;
      const Polynomial p = c.opt.method == "chain"    ? tau_chain(u, v)
                           : c.opt.method == "billey" ? tau_billey(u, v)
                                                      : tau_typea(element_to_perm(u), element_to_perm(v));
      if (c.opt.format == "json")
        arr.push_back({{"u", c.name(u)}, {"v", c.name(v)}, {"value", to_json(p)}, {"text", c.poly(p)}});
      else if (c.opt.format == "latex")
        out << "$" << c.name(u) << "$ & $" << c.name(v) << "$ & $" << c.poly(p) << "$ \\\\\n";
      else
        out << c.name(u) << "\t" << c.name(v) << "\t" << c.poly(p) << "\n";
    }
  if (c.opt.format == "json") {
    auto j = c.header();
    j["method"] = c.opt.method;
    j["entries"] = std::move(arr);
    out << j.dump(2) << "\n";
  } else if (c.opt.format == "latex") {
    out << "\\end{tabular}\n";
  }
  return kOk;
}

inline int run(int argc, const char *const *argv, std::ostream &out = std::cout, std::ostream &err = std::cerr) {
  CLI::App app{"Restrictions of equivariant Schubert classes in types A, B and C"};
  app.require_subcommand(1, 1);
  Options o;

  const auto common = [&o](CLI::App *sub, bool pair) {
    sub->add_option("--type", o.type, "Lie type: A, B or C")->capture_default_str();
    sub->add_option("--rank", o.rank, "Rank n")->capture_default_str();
    sub->add_option("--format", o.format, "text, json or latex")->capture_default_str();
    sub->add_option("--basis", o.basis, "alpha, or x (type A)")->capture_default_str();
    sub->add_option("--out", o.out, "Write output to this file");
    if (pair) {
      sub->add_option("--u", o.u, "Element u: word such as 1,2,1, or one-line permutation in type A")->capture_default_str();
      sub->add_option("--v", o.v, "Element v")->capture_default_str();
      sub->add_option("--input", o.input, "auto, word or perm")->capture_default_str();
      sub->add_option("--word", o.word, "Reduced word I for v (default: canonical)");
    }
  };

  auto *restrict_cmd = app.add_subcommand("restrict", "Compute tau_u(v)");
  common(restrict_cmd, true);
  restrict_cmd->add_option("--method", o.method, "chain, billey, typea or all")->capture_default_str();

  auto *chains_cmd = app.add_subcommand("chains", "List maximal chains from u to v with C0 flags");
  common(chains_cmd, true);
  chains_cmd->add_flag("--map-to-subwords", o.map_to_subwords, "Show the F_I image of each chain");

  auto *subwords_cmd = app.add_subcommand("subwords", "List reduced subwords of I for u");
  common(subwords_cmd, true);

  auto *verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  common(verify_cmd, false);
  verify_cmd->add_option("--suite", o.suite, "Suite name or all")->capture_default_str();
  verify_cmd->add_option("--samples", o.samples, "GT samples per pair")->capture_default_str()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  verify_cmd->add_option("--max-pairs", o.max_pairs, "Random subset of pairs (0 = all)")->capture_default_str();
  verify_cmd->add_option("--threads", o.threads, "Worker threads (0 = hardware)")->capture_default_str();

  auto *table_cmd = app.add_subcommand("table", "Tabulate tau_u(v) over the whole group");
  common(table_cmd, false);
  table_cmd->add_option("--method", o.method, "chain, billey or typea")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (verify_cmd->parsed() && verify_cmd->count("--format") == 0)
    o.format = "json";

  std::ostringstream buffer;
  int code = kOk;
  try {
    const Context c(o);
    if (restrict_cmd->parsed())
      code = cmd_restrict(c, buffer);
    else if (chains_cmd->parsed())
      code = cmd_chains(c, buffer);
    else if (subwords_cmd->parsed())
      code = cmd_subwords(c, buffer);
    else if (verify_cmd->parsed())
      code = cmd_verify(c, buffer);
    else
      code = cmd_table(c, buffer);
  } catch (const CancellationFailure &e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (o.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream f(o.out);
    if (!f) {
      err << "error: cannot write " << o.out << "\n";
      return kUsage;
    }
    f << buffer.str();
  }
  return code;
}

} // namespace schubert::cli
