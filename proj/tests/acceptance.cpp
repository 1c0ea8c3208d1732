// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "schubert/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace schubert;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

RootSystemPtr sys(Family f, int n) { return build_root_system({f, n}); }
WeylElement w(const RootSystemPtr &rs, Word word) { return element_from_word(rs, word); }
Polynomial lin(RootVector f) { return Polynomial::linear(f); }

struct Collector {
  Outcome out;
  std::ostringstream notes;
  void check(bool ok, const std::string &what) {
    if (!ok) {
      out.pass = false;
      notes << " [failed: " << what << "]";
    }
  }
  void add(const VerifyReport &r) {
    notes << " " << r.suite << "/" << r.type << "=" << r.cases;
    if (!r.ok()) {
      out.pass = false;
      notes << "(" << r.failures.size() << " failures; first: " << r.failures.front().u << " " << r.failures.front().v
            << " " << r.failures.front().detail << ")";
    }
  }
  Outcome done() {
    out.detail = notes.str();
    return out;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome golden() {
  Collector c;
  const auto timed = [&](const std::string &what, const std::function<bool()> &f) {
    const auto t0 = std::chrono::steady_clock::now();
    const bool ok = f();
    const double dt = seconds_since(t0);
    c.check(ok, what);
    c.check(dt < 1.0, what + " took " + std::to_string(dt) + "s");
  };
  timed("tau_2143(3421)", [] {
    const auto a3 = sys(Family::A, 3);
    const auto u = perm_to_element(a3, Permutation::parse("2143")), v = perm_to_element(a3, Permutation::parse("3421"));
    const auto want = lin({1, 1, 0}) * lin({1, 1, 1});
    return tau_chain(u, v) == want && tau_billey(u, v, Word{2, 1, 3, 2, 3}) == want && tau_billey(u, v) == want &&
           tau_typea(Permutation::parse("2143"), Permutation::parse("3421")) == want;
  });
  timed("A2 (s1, s1s2s1)", [] {
    const auto a = sys(Family::A, 2);
    const auto u = w(a, {1}), v = w(a, {1, 2, 1});
    return tau_chain(u, v) == lin({1, 1}) && enumerate_max_chains(u, v).size() == 2 && enumerate_c0(u, v).size() == 1;
  });
  timed("B2 half root", [] {
    const auto b = sys(Family::B, 2);
    const auto v = w(b, {1, 2, 1});
    for (const auto &g : enumerate_c0(w(b, {2}), v))
      if (g.elements == std::vector<WeylElement>{w(b, {2}), w(b, {1, 2}), v})
        return expand(chain_contribution(g, v)) == make_rational(1, 2) * lin({1, 0});
    return false;
  });
  timed("C2 non-equivalence", [] {
    const auto c2 = sys(Family::C, 2);
    const auto u = w(c2, {1}), v = w(c2, {1, 2, 1, 2});
    return enumerate_max_chains(u, v).size() == 4 && enumerate_c0(u, v).size() == 1 &&
           enumerate_reduced_subwords(u, {1, 2, 1, 2}).size() == 2 &&
           enumerate_reduced_subwords(u, {2, 1, 2, 1}).size() == 2;
  });
  timed("I(v) example", [] {
    const auto a3 = sys(Family::A, 3);
    const auto v = element_to_perm(w(a3, {2, 1, 3, 2, 3}));
    return canonical_word_iv_segments(v) == std::vector<Word>{{2, 1}, {3, 2}, {3}};
  });
  return c.done();
}

Outcome oracle() {
  Collector c;
  const auto t0 = std::chrono::steady_clock::now();
  for (auto [f, n] : {std::pair{Family::A, 2}, {Family::A, 3}, {Family::B, 2}, {Family::C, 2}, {Family::B, 3},
                      {Family::C, 3}})
    c.add(verify_oracle(sys(f, n)));
  const double dt = seconds_since(t0);
  c.check(dt < 300, "runtime " + std::to_string(dt) + "s");
  return c.done();
}

Outcome over(const std::vector<std::pair<Family, int>> &types,
             const std::function<VerifyReport(const RootSystemPtr &)> &suite) {
  Collector c;
  for (auto [f, n] : types)
    c.add(suite(sys(f, n)));
  return c.done();
}

const std::vector<std::pair<Family, int>> kRankTwoThree{{Family::A, 2}, {Family::A, 3}, {Family::B, 2},
                                                        {Family::B, 3}, {Family::C, 2}, {Family::C, 3}};
const std::vector<std::pair<Family, int>> kRankThree{{Family::A, 3}, {Family::B, 3}, {Family::C, 3}};
const std::vector<std::pair<Family, int>> kRankTwo{{Family::A, 2}, {Family::B, 2}, {Family::C, 2}};

Outcome gt() {
  Collector c;
  VerifyOptions o;
  o.samples = 20;
  for (auto [f, n] : kRankTwo)
    c.add(verify_gt(sys(f, n), o));
  o.max_pairs = 50;
  const auto a3 = verify_gt(sys(Family::A, 3), o);
  c.add(a3);
  c.check(a3.cases == 50u * 20u, "A3 sample count");
  return c.done();
}

Outcome equivalence() {
  Collector c;
  const auto t0 = std::chrono::steady_clock::now();
  c.add(verify_equivalence_typea(sys(Family::A, 3)));
  VerifyOptions o;
  o.max_pairs = 200;
  const auto s5 = verify_equivalence_typea(sys(Family::A, 4), o);
  c.add(s5);
  c.check(s5.cases == 200, "S5 sample count");
  const double dt = seconds_since(t0);
  c.check(dt < 600, "runtime " + std::to_string(dt) + "s");
  return c.done();
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 golden values", golden},
      {"2 oracle equivalence", oracle},
      {"3 positivity and integrality", [] { return over(kRankTwoThree, [](auto rs) { return verify_positivity(rs); }); }},
      {"4 GKM with mutation", [] { return over(kRankThree, [](auto rs) { return verify_gkm(rs); }); }},
      {"5 characterization", [] { return over(kRankTwoThree, [](auto rs) { return verify_characterization(rs); }); }},
      {"6 GT numeric evaluation", gt},
      {"7 iterated limits (t = 2^-12, tol 1e-3)", [] { return over(kRankTwo, [](auto rs) { return verify_limit(rs); }); }},
      {"8 type A equivalence", equivalence},
      {"9 lemma suites", [] { return over(kRankThree, [](auto rs) { return verify_lemmas(rs); }); }},
  };
  int failed = 0;
  for (const auto &[name, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception &e) {
      o = {false, std::string(" exception: ") + e.what()};
    }
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", seconds_since(t0));
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " (" << secs << ")" << o.detail << std::endl;
    failed += !o.pass;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << std::endl;
  return failed ? 1 : 0;
}
