// Acceptance run: one PASS/FAIL line per criterion.  Exits nonzero when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "campedelli/cover_configurations.hpp"
#include "campedelli/groebner.hpp"
#include "campedelli/hilbert.hpp"
#include "campedelli/ideal.hpp"
#include "campedelli/involution_invariants.hpp"
#include "campedelli/scenario.hpp"

using namespace campedelli;
using Clock = std::chrono::steady_clock;
using P = Polynomial<Rational>;

namespace {

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::vector<std::string> problems;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      problems.push_back(what);
    }
  }
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o, double took, double budget) {
  const bool ok = o.pass && took <= budget;
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << "  " << id << "  " << title << "  [" << std::fixed;
  std::cout.precision(2);
  std::cout << took << " s of " << budget << " s]\n";
  for (const auto& p : o.problems) std::cout << "        " << p << "\n";
  if (took > budget) std::cout << "        over budget\n";
  std::cout.flush();
}

// ---------------------------------------------------------------------------
// Scenario-backed criteria.

scenario::Report run(const std::string& name, std::set<std::string> ids,
                     scenario::FieldPolicy policy = scenario::FieldPolicy::modular, long timeout = 1800) {
  scenario::RunOptions opt;
  opt.policy = policy;
  opt.only = std::move(ids);
  opt.timeout = std::chrono::seconds(timeout);
  return scenario::run_scenario(scenario::builtin_scenario(name), opt);
}

void expect_check(Outcome& o, const scenario::Report& r, const std::string& id, const std::string& observed,
                  long long max_ms = -1) {
  const auto* c = r.find(id);
  if (!c) {
    o.require(false, r.scenario + "/" + id + " did not run");
    return;
  }
  o.require(c->verdict == scenario::Verdict::pass, r.scenario + "/" + id + " verdict " + to_string(c->verdict));
  for (const auto& run : c->runs) {
    o.require(run.error.empty() && run.observed == observed,
              r.scenario + "/" + id + " over " + run.field + ": observed '" + run.observed + "' " + run.error +
                  ", expected '" + observed + "'");
  }
  o.require(c->runs.size() >= 1, r.scenario + "/" + id + " has no runs");
  if (max_ms >= 0) {
    o.require(c->millis <= max_ms, r.scenario + "/" + id + " took " + std::to_string(c->millis) + " ms");
  }
}

void modular_runs_are_three_primes(Outcome& o, const scenario::Report& r, const std::string& id) {
  const auto* c = r.find(id);
  if (!c) return;
  std::size_t big = 0;
  for (const auto& run : c->runs) {
    if (run.field.rfind("F_", 0) == 0 && std::stoull(run.field.substr(2)) > (1ULL << 20)) ++big;
  }
  o.require(big == 3, r.scenario + "/" + id + " ran over " + std::to_string(big) + " primes > 2^20");
}

void criterion1() {
  const auto t0 = Clock::now();
  Outcome o;
  const auto r = run("barlow-one-node", {"singular"});
  expect_check(o, r, "singular", "dim=0 deg=8");
  modular_runs_are_three_primes(o, r, "singular");
  const double modular = seconds_since(t0);
  o.require(modular <= 900, "modular run over its 900 s budget");
  const auto rq = run("barlow-one-node", {"singular"}, scenario::FieldPolicy::exact, 7200);
  expect_check(o, rq, "singular", "dim=0 deg=8");
  report(1, "one-node singular scheme: dim 0, degree 8 (3 primes, then Q)", o, seconds_since(t0), 900 + 7200);
}

void criterion2() {
  const auto t0 = Clock::now();
  Outcome o;
  const auto r = run("barlow-one-node", {"miss-H1", "miss-H2"});
  expect_check(o, r, "miss-H1", "true", 60000);
  expect_check(o, r, "miss-H2", "true", 60000);
  modular_runs_are_three_primes(o, r, "miss-H1");
  report(2, "one-node surface misses <x1,x3,x5,x7> and <x2,x4,x6>", o, seconds_since(t0), 120);
}

void criterion3() {
  const auto t0 = Clock::now();
  Outcome o;
  const auto r = run("barlow-one-node", {"fixed-P3"});
  expect_check(o, r, "fixed-P3", "dim=0 deg=8");
  report(3, "one-node surface meets the fixed P3 in dim 0, degree 8", o, seconds_since(t0), 300);
}

void criterion4() {
  const auto t0 = Clock::now();
  Outcome o;
  const auto r = run("barlow-one-node", {"tangent", "tangent-action", "node"});
  expect_check(o, r, "tangent", "3");
  expect_check(o, r, "tangent-action", "-identity");
  expect_check(o, r, "node", "A1");
  if (const auto* c = r.find("node")) {
    for (const auto& run : c->runs) o.require(!run.certificate.is_null(), "node over " + run.field + " has no certificate");
  }
  report(4, "P1: tangent space dim 3, a acts as -1, A1 certificate", o, seconds_since(t0), 60);
}

void criterion5() {
  const auto t0 = Clock::now();
  Outcome o;
  const auto r = run("barlow-two-node", {"singular", "fixed-P2-support"});
  expect_check(o, r, "singular", "dim=0 deg=16");
  expect_check(o, r, "fixed-P2-support", "{P1,P2,Q1,Q2}");
  report(5, "two-node singular scheme dim 0 degree 16, fixed-P2 support {P1,P2,Q1,Q2}", o, seconds_since(t0), 1800);
}

void criterion6() {
  const auto t0 = Clock::now();
  Outcome o;
  const auto r = run("barlow-one-node", {"order-t", "order-G", "ata"});
  expect_check(o, r, "order-t", "8", 1000);
  expect_check(o, r, "order-G", "16", 1000);
  expect_check(o, r, "ata", "true", 1000);
  const auto b = run("beauville-xiao", {"smooth", "gamma3", "order-G", "order-G0", "commute-g1", "conjugate-g2",
                                         "involutions"});
  expect_check(o, b, "order-G", "9", 1000);
  expect_check(o, b, "order-G0", "18", 1000);
  expect_check(o, b, "commute-g1", "true", 1000);
  expect_check(o, b, "conjugate-g2", "true", 1000);
  expect_check(o, b, "involutions", "count=9 classes=1", 1000);
  report(6, "group orders, relations, 9 involutions in one class (each <= 1 s)", o, seconds_since(t0), 60);
}

void criterion7() {
  const auto t0 = Clock::now();
  Outcome o;
  const auto r = run("beauville-xiao", {"smooth", "gamma1", "gamma2", "gamma3", "sigma1-fixed", "free",
                                         "square-shortcut"});
  o.require(!r.certified_params.empty(), "no certified lambda");
  expect_check(o, r, "smooth", "true");
  expect_check(o, r, "gamma1", "contained");
  expect_check(o, r, "gamma2", "contained");
  expect_check(o, r, "gamma3", "deg=6 distinct");
  expect_check(o, r, "sigma1-fixed", "dim=0 deg=12");
  expect_check(o, r, "free", "true");
  expect_check(o, r, "square-shortcut", "true");
  if (const auto* c = r.find("square-shortcut")) {
    // |G| - |<g2>| = 9 - 3 elements sigma1*g to certify.
    for (const auto& run : c->runs) {
      o.require(run.certificate.contains("checked") && run.certificate["checked"].size() == 6,
                "square-shortcut over " + run.field + " did not certify 6 elements");
    }
  }
  std::string lambda;
  for (const auto& [k, v] : r.certified_params) lambda += k + "=" + v;
  report(7, "P2xP2 family at " + lambda + ": Gamma curves, 12 fixed points, free action, square shortcut", o,
         seconds_since(t0), 600);
}

// ---------------------------------------------------------------------------
// Cover configurations against brute force.

std::vector<std::array<unsigned, 3>> brute_force_triples(unsigned g0) {
  std::vector<std::array<unsigned, 3>> out;
  for (unsigned a = 1; a <= 7; ++a) {
    for (unsigned b = a + 1; b <= 7; ++b) {
      for (unsigned c = b + 1; c <= 7; ++c) {
        if ((a ^ b ^ c) == g0) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

Rational det3(const cover::Line& a, const cover::Line& b, const cover::Line& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// Concurrent triples of lines, found by determinants.
std::set<std::array<unsigned, 3>> concurrent_triples(const cover::LabeledConfiguration& c) {
  std::set<std::array<unsigned, 3>> out;
  for (unsigned a = 1; a <= 7; ++a) {
    for (unsigned b = a + 1; b <= 7; ++b) {
      for (unsigned d = b + 1; d <= 7; ++d) {
        const auto& la = c.line(cover::GroupElement2(a));
        const auto& lb = c.line(cover::GroupElement2(b));
        const auto& ld = c.line(cover::GroupElement2(d));
        if (la && lb && ld && det3(*la, *lb, *ld).is_zero()) out.insert({a, b, d});
      }
    }
  }
  return out;
}

void criterion8() {
  const auto t0 = Clock::now();
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    const auto built = cover::construct_case_config(n, 1);
    const std::string tag = "case " + std::to_string(n) + ": ";
    o.require(built.validity.valid, tag + "construction invalid");
    o.require(built.triples.classification == static_cast<cover::ConfigurationCase>(n), tag + "classified otherwise");
    const auto reread = cover::LabeledConfiguration::parse(built.config.to_text());
    o.require(reread.to_text() == built.config.to_text(), tag + "text round trip differs");
    o.require(cover::find_triple_points(reread).classification == static_cast<cover::ConfigurationCase>(n),
              tag + "round trip changes the case");
    const auto conc = concurrent_triples(built.config);
    o.require(conc.size() == static_cast<std::size_t>(n - 1), tag + std::to_string(conc.size()) + " concurrent triples");
    for (const auto& t : conc) o.require((t[0] ^ t[1] ^ t[2]) == 1, tag + "triple point with label sum != 100");
    const auto parity = cover::parity_check(built.config);
    o.require(parity.consistent && parity.sums == std::array<int, 3>{4, 4, 4}, tag + "parity sums differ from 4,4,4");
    // Each coordinate bit is set in exactly 4 of the 7 labels.
    for (int i = 0; i < 3; ++i) {
      int s = 0;
      for (unsigned g = 1; g <= 7; ++g) s += built.config.line(cover::GroupElement2(g)) ? static_cast<int>((g >> i) & 1) : 0;
      o.require(s == parity.sums[static_cast<std::size_t>(i)], tag + "parity oracle disagrees");
    }
  }
  for (unsigned g0 = 0; g0 < 8; ++g0) {
    const auto got = cover::compatible_triples(cover::GroupElement2(g0));
    const auto want = brute_force_triples(g0);
    const std::size_t expected = g0 == 0 ? 7 : 4;
    o.require(got.size() == expected && want.size() == expected,
              "g0=" + std::to_string(g0) + ": " + std::to_string(got.size()) + " triples, oracle " +
                  std::to_string(want.size()));
    std::set<std::array<unsigned, 3>> as_set;
    for (const auto& t : got) {
      std::array<unsigned, 3> v{t[0].bits, t[1].bits, t[2].bits};
      std::sort(v.begin(), v.end());
      as_set.insert(v);
    }
    o.require(as_set == std::set<std::array<unsigned, 3>>(want.begin(), want.end()),
              "g0=" + std::to_string(g0) + ": triple sets differ from the oracle");
  }
  const auto search = cover::four_point_search(cover::GroupElement2(1, 0, 0), 1);
  bool quadrangle = false;
  for (const auto& led : search.subsets) {
    if (led.rejected || led.triples.size() != 4) continue;
    // Oracle: every pair of triples shares exactly one label, and six labels
    // are each used exactly twice.
    std::map<unsigned, int> uses;
    bool pairwise = true;
    for (std::size_t i = 0; i < 4; ++i) {
      for (const auto g : led.triples[i]) ++uses[g.bits];
      for (std::size_t j = i + 1; j < 4; ++j) {
        int shared = 0;
        for (const auto g : led.triples[i]) shared += static_cast<int>(std::count(led.triples[j].begin(), led.triples[j].end(), g));
        pairwise = pairwise && shared == 1;
      }
    }
    const bool oracle = pairwise && uses.size() == 6 &&
                        std::all_of(uses.begin(), uses.end(), [](const auto& u) { return u.second == 2; });
    o.require(oracle == led.complete_quadrangle, "quadrangle flag disagrees with the oracle");
    quadrangle = quadrangle || led.complete_quadrangle;
  }
  o.require(search.subsets.size() == 1, std::to_string(search.subsets.size()) + " four-subsets, expected 1");
  o.require(quadrangle, "no complete-quadrangle ledger emitted");
  if (search.realization) {
    o.require(concurrent_triples(*search.realization).size() == 4, "reported realization lacks four triple points");
  }
  report(8, "cover configurations: cases 1-4, parity 4,4,4, triple counts 4/7, quadrangle ledger", o,
         seconds_since(t0), 60);
}

// ---------------------------------------------------------------------------
// Invariant grid against the closed forms.

std::set<std::string> oracle_violations(int k, int K2, int K2p, int pa) {
  namespace c = invariants::constraint;
  std::set<std::string> v;
  if (k != 4 && k != 6) return {c::k_values};
  if (k == 6) {
    if (!(K2 >= -4 && K2 <= 0)) v.insert(c::k6_range);
    const int R2 = 2 * K2 + 2;
    if (R2 < -6 || R2 > 2) v.insert(c::r2_range);
    if (pa < -1 || pa > 3) v.insert(c::pa_range);
    if (pa - K2 - 3 < 0) v.insert(c::h_nonnegative);
    if (K2p < -4 || K2p > 0) v.insert(c::wprime_range);
  } else if (!(K2 >= -2 && K2 <= 1)) {
    v.insert(c::k4_range);
  }
  if (K2p < K2) v.insert(c::wprime_dominates);
  return v;
}

void criterion9() {
  const auto t0 = Clock::now();
  Outcome o;
  const auto grid = invariants::invariant_grid();
  o.require(grid.size() == 5 * 10 * 9 * 6, std::to_string(grid.size()) + " cells");
  std::size_t valid = 0;
  for (const auto& cell : grid) {
    std::ostringstream tag;
    tag << "(k=" << cell.k << ", K_W^2=" << cell.K2_W << ", K_W'^2=" << cell.K2_Wprime << ", p_a=" << cell.p_a_gamma
        << ")";
    const auto want = oracle_violations(cell.k, cell.K2_W, cell.K2_Wprime, cell.p_a_gamma);
    const std::set<std::string> got(cell.violations.begin(), cell.violations.end());
    o.require(got == want, tag.str() + ": violations differ from the oracle");
    o.require(cell.valid == want.empty(), tag.str() + ": validity differs");
    if (!cell.valid) continue;
    ++valid;
    const auto& n = cell.numerics;
    o.require(n.D2 == 4, tag.str() + ": D^2");
    if (cell.k == 6) {
      o.require(n.KW_D == 0 && n.R2 == 2 * cell.K2_W + 2 && n.KS_R == 2 && n.h == cell.p_a_gamma - cell.K2_W - 3,
                tag.str() + ": k=6 numerics differ from the closed forms");
      o.require((*n.R2 % 2) == 0, tag.str() + ": R^2 odd");
      const bool enriques = cell.quotient && cell.quotient->type == invariants::QuotientType::enriques;
      o.require(enriques == (cell.K2_Wprime == 0), tag.str() + ": Enriques iff K_W'^2 = 0 fails");
    } else {
      o.require(n.KW_D == 2 && n.m == 1 - cell.K2_W, tag.str() + ": k=4 numerics differ from the closed forms");
    }
    for (const auto& f : cell.quotient->facts) o.require(!f.citation.empty(), tag.str() + ": uncited fact");
  }
  o.require(valid > 0, "no valid cells");
  report(9, "invariant grid over k 3..7, K_W^2 -6..3, K_W'^2 -6..2, p_a -1..4 (" + std::to_string(valid) + " valid)",
         o, seconds_since(t0), 1);
}

// ---------------------------------------------------------------------------
// Engine properties.

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == nvars - 1) {
      e[static_cast<std::size_t>(i)] = left;
      out.emplace_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[static_cast<std::size_t>(i)] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, d);
  return out;
}

P random_form(const RingPtr& ring, int d, std::mt19937_64& rng, double density, bool affine_tail = false) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_real_distribution<double> keep(0, 1);
  std::vector<Term<Rational>> terms;
  for (int dd = affine_tail ? 0 : d; dd <= d; ++dd) {
    for (const auto& m : monomials_of_degree(ring->nvars(), dd)) {
      if (keep(rng) > (dd == d ? density : density / 3)) continue;
      const int c = coef(rng);
      if (c != 0) terms.push_back({m, Rational(c)});
    }
  }
  if (terms.empty()) terms.push_back({Monomial::variable(0, static_cast<std::uint16_t>(d)), Rational(1)});
  return P::from_terms(ring, std::move(terms));
}

bool is_reduced(const GroebnerBasis<Rational>& gb) {
  for (std::size_t i = 0; i < gb.basis.size(); ++i) {
    if (!(gb.basis[i].leading_coefficient() == Rational(1))) return false;
    for (std::size_t j = 0; j < gb.basis.size(); ++j) {
      if (i == j) continue;
      const Monomial lm = gb.basis[j].leading_monomial();
      for (const auto& t : gb.basis[i].terms()) {
        if (lm.divides(t.monomial)) return false;
      }
    }
  }
  return true;
}

void groebner_uniqueness(Outcome& o, std::mt19937_64& rng) {
  std::vector<std::vector<P>> corpus;
  {
    auto r = Ring::create({"x", "y", "z", "w"}, FieldDescriptor::rational());
    corpus.push_back({parse_polynomial<Rational>(r, "x*z - y^2"), parse_polynomial<Rational>(r, "y*w - z^2"),
                      parse_polynomial<Rational>(r, "x*w - y*z")});
    auto s = Ring::create({"x", "y", "z"}, FieldDescriptor::rational());
    corpus.push_back({parse_polynomial<Rational>(s, "x + y + z"), parse_polynomial<Rational>(s, "x*y + y*z + z*x"),
                      parse_polynomial<Rational>(s, "x*y*z - 1")});
  }
  while (corpus.size() < 20) {
    auto r = Ring::create({"x", "y", "z"}, FieldDescriptor::rational());
    const bool affine = corpus.size() % 2 == 1;
    std::vector<P> gens;
    const int ngens = 2 + static_cast<int>(corpus.size() % 3);
    for (int i = 0; i < ngens; ++i) gens.push_back(random_form(r, 1 + (i + static_cast<int>(corpus.size())) % 3, rng, 0.5, affine));
    corpus.push_back(std::move(gens));
  }
  std::size_t index = 0;
  for (const auto& gens : corpus) {
    const auto order = index % 4 == 3 ? MonomialOrder::lex() : MonomialOrder::grevlex();
    std::vector<std::vector<P>> inputs = {gens};
    auto rev = gens;
    std::reverse(rev.begin(), rev.end());
    inputs.push_back(rev);
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    inputs.push_back(shuffled);
    std::optional<std::vector<P>> reference;
    for (const auto& in : inputs) {
      for (const auto strategy : {SelectionStrategy::normal, SelectionStrategy::sugar}) {
        GroebnerOptions opt;
        opt.strategy = strategy;
        const auto gb = reduced_groebner_basis(in, order, opt);
        o.require(is_reduced(gb), "ideal " + std::to_string(index) + ": basis not reduced");
        for (const auto& g : gens) o.require(gb.contains(g), "ideal " + std::to_string(index) + ": generator not reduced to 0");
        if (!reference) {
          reference = gb.basis;
        } else {
          o.require(gb.basis == *reference, "ideal " + std::to_string(index) + ": bases differ across routes");
        }
      }
    }
    ++index;
  }
}

void hilbert_counts(Outcome& o, std::mt19937_64& rng) {
  for (int t = 0; t < 10; ++t) {
    const int nv = 3 + t % 3;
    std::uniform_int_distribution<int> var(0, nv - 1);
    std::uniform_int_distribution<int> deg(1, 4);
    std::vector<Monomial> gens;
    const int ng = 2 + t % 4;
    for (int i = 0; i < ng; ++i) {
      std::vector<int> e(static_cast<std::size_t>(nv), 0);
      const int d = deg(rng);
      for (int k = 0; k < d; ++k) ++e[static_cast<std::size_t>(var(rng))];
      gens.emplace_back(e);
    }
    const auto hd = hilbert_data(gens, nv);
    for (int d = 0; d <= 8; ++d) {
      std::size_t brute = 0;
      for (const auto& m : monomials_of_degree(nv, d)) {
        if (std::none_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); })) ++brute;
      }
      const auto hf = hilbert_function(hd.numerator, nv, d);
      o.require(hf == mpz_class(static_cast<unsigned long>(brute)),
                "monomial ideal " + std::to_string(t) + ", degree " + std::to_string(d) + ": series " + hf.get_str() +
                    ", count " + std::to_string(brute));
    }
  }
}

void bezout(Outcome& o, std::mt19937_64& rng) {
  struct Case {
    int nvars;
    std::vector<int> degrees;
  };
  const std::vector<Case> cases = {{3, {2, 3}}, {4, {2, 2, 2}}, {4, {2, 3}}, {5, {2, 2}}, {4, {3}}};
  for (const auto& c : cases) {
    std::vector<std::string> names;
    for (int i = 0; i < c.nvars; ++i) names.push_back("x" + std::to_string(i));
    auto r = Ring::create(names, FieldDescriptor::rational());
    std::vector<P> gens;
    long product = 1;
    for (int d : c.degrees) {
      gens.push_back(random_form(r, d, rng, 0.8));
      product *= d;
    }
    const auto hd = projective_dimension_degree(Ideal<Rational>(r, gens));
    const int dim = c.nvars - 1 - static_cast<int>(c.degrees.size());
    std::ostringstream tag;
    tag << "P^" << c.nvars - 1 << " degrees";
    for (int d : c.degrees) tag << " " << d;
    o.require(hd.dimension == dim && hd.degree == product,
              tag.str() + ": dim " + std::to_string(hd.dimension) + " deg " + hd.degree.get_str() + ", expected dim " +
                  std::to_string(dim) + " deg " + std::to_string(product));
  }
}

void emptiness(Outcome& o, std::mt19937_64& rng) {
  int empty = 0;
  int nonempty = 0;
  for (int t = 0; t < 20; ++t) {
    const int nv = 3 + t % 2;
    std::vector<std::string> names;
    for (int i = 0; i < nv; ++i) names.push_back("x" + std::to_string(i));
    auto r = Ring::create(names, FieldDescriptor::rational());
    std::vector<P> gens;
    const int ng = 1 + t % (nv + 1);
    for (int i = 0; i < ng; ++i) gens.push_back(random_form(r, 1 + (t + i) % 2, rng, 0.7));
    if (t % 5 == 4) {
      // A shared linear factor keeps the scheme nonempty.
      const auto l = random_form(r, 1, rng, 1.0);
      for (auto& g : gens) g = g * l;
    }
    const Ideal<Rational> I(r, gens);
    const bool e = is_projectively_empty(I);
    const int dim = projective_dimension_degree(I).dimension;
    o.require(e == (dim == -1), "ideal " + std::to_string(t) + ": empty=" + (e ? "true" : "false") + " but dim " +
                                    std::to_string(dim));
    (e ? empty : nonempty) += 1;
  }
  o.require(empty >= 3 && nonempty >= 3, "corpus lacks one of the two outcomes (" + std::to_string(empty) + " empty, " +
                                              std::to_string(nonempty) + " nonempty)");
}

void criterion10() {
  const auto t0 = Clock::now();
  Outcome o;
  std::mt19937_64 rng(20240601);
  groebner_uniqueness(o, rng);
  hilbert_counts(o, rng);
  bezout(o, rng);
  emptiness(o, rng);
  report(10, "engine: GB uniqueness (20 ideals), Hilbert counts to degree 8, Bezout, emptiness vs dim -1", o,
         seconds_since(t0), 300);
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                       criterion6, criterion7, criterion8, criterion9, criterion10};
  int id = 0;
  for (const auto& c : criteria) {
    ++id;
    try {
      c();
    } catch (const std::exception& e) {
      Outcome o;
      o.require(false, std::string("exception: ") + e.what());
      report(id, "criterion aborted", o, 0, 0);
    }
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
