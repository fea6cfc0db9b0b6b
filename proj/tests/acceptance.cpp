// Standalone acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "giryq/giryq.hpp"
#include "oracles.hpp"

namespace giryq {
namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Rational R(const char* s) { return parse_rational(s); }

bool feasible_for(const Kernel& f, const Dist& p, const Dist& q) { return lift_kernel(f)(p) == q; }

Outcome three_point() {
  auto x = make_space("X", {"x1", "x2", "x3"});
  auto y = make_space("Y", {"y1", "y2"});
  const Kernel f = Kernel::from_matrix(x, y, {{R("1"), R("0")}, {R("1/2"), R("1/2")}, {R("3/10"), R("7/10")}});
  const Predicate g(x, {R("1/2"), R("3/5"), R("9/10")});
  const Dist q(y, {R("7/10"), R("3/10")});

  const auto lo = forall_lifted(f, g, q);
  const auto hi = exists_lifted(f, g, q);
  const Dist& wl = std::get<Dist>(lo.witness);
  const Dist& wh = std::get<Dist>(hi.witness);
  const Dist vl(x, {R("2/5"), R("3/5"), R("0")});
  const Dist vh(x, {R("4/7"), R("0"), R("3/7")});

  Outcome out;
  out.ok = lo.value == R("14/25") && hi.value == R("47/70") && feasible_for(f, wl, q) && feasible_for(f, wh, q) &&
           expectation(g, wl) == lo.value && expectation(g, wh) == hi.value && feasible_for(f, vl, q) &&
           feasible_for(f, vh, q) && expectation(g, vl) == lo.value && expectation(g, vh) == hi.value;
  out.detail = "forall=" + to_string(lo.value) + " exists=" + to_string(hi.value);
  return out;
}

Outcome monad_laws() {
  Sampler s(101);
  const int n = 250;
  for (int i = 0; i < n; ++i) {
    auto w = s.space("w", 1, 5), x = s.space("x", 1, 5), y = s.space("y", 1, 5), z = s.space("z", 1, 5);
    const Kernel f = s.kernel(w, x), g = s.kernel(x, y), h = s.kernel(y, z);
    if (kleisli_compose(f, eta(w)) != f || kleisli_compose(eta(x), f) != f ||
        kleisli_compose(kleisli_compose(h, g), f) != kleisli_compose(h, kleisli_compose(g, f))) {
      return {false, "law violated at instance " + std::to_string(i)};
    }
  }
  return {true, std::to_string(n) + " kernel triples"};
}

/// Brute force: does some point function embed to exactly this kernel?
bool is_some_dirac_embedding(const Kernel& k) {
  const std::size_t nx = k.source()->size(), ny = k.target()->size();
  std::vector<std::size_t> map(nx, 0);
  while (true) {
    if (dirac_embed(PointFunction(k.source(), k.target(), map)) == k) return true;
    std::size_t i = 0;
    while (i < nx && ++map[i] == ny) map[i++] = 0;
    if (i == nx) return false;
  }
}

Outcome determinism() {
  Sampler s(102);
  const int n = 250;
  for (int i = 0; i < n; ++i) {
    auto x = s.space("x", 1, 5), y = s.space("y", 1, 5);
    const PointFunction fn = s.point_function(x, y);
    if (extract_function(dirac_embed(fn)) != fn) return {false, "round trip failed at " + std::to_string(i)};
  }
  int deterministic = 0, pool = 0;
  for (int i = 0; i < 400; ++i, ++pool) {
    auto x = s.space("x", 1, 4), y = s.space("y", 1, 4);
    const Kernel k = s.chance(1, 3) ? dirac_embed(s.point_function(x, y)) : s.kernel(x, y);
    const bool expected = is_some_dirac_embedding(k);
    deterministic += expected;
    if (is_deterministic(k) != expected) return {false, "misclassified pool kernel " + std::to_string(i)};
  }
  if (deterministic == 0 || deterministic == pool) return {false, "degenerate pool"};
  return {true, std::to_string(n) + " functions, pool " + std::to_string(deterministic) + "/" +
                    std::to_string(pool) + " deterministic"};
}

Outcome adjunction() {
  Sampler s(103);
  const int n = 250;
  for (int i = 0; i < n; ++i) {
    auto x = s.space("x", 1, 5), y = s.space("y", 1, 5);
    const Kernel f = s.kernel(x, y);
    const Predicate g = s.predicate(x);
    for (Regime regime : {Regime::countable, Regime::lp}) {
      if (!check_adjunction_unit(f, g, regime).holds()) {
        return {false, std::string(to_string(regime)) + " violated at " + std::to_string(i)};
      }
    }
  }
  return {true, std::to_string(n) + " instances x 2 regimes"};
}

Predicate scaled(const Predicate& p, const Rational& factor, bool from_top) {
  std::vector<Rational> v;
  for (const auto& a : p.values()) v.push_back(from_top ? 1 - (1 - a) * factor : a * factor);
  return Predicate(p.space(), v);
}

Outcome galois() {
  Sampler s(104);
  const int n = 250;
  for (int i = 0; i < n; ++i) {
    auto x = s.space("x", 1, 5), y = s.space("y", 1, 4);
    const Kernel f = s.kernel(x, y);
    const Predicate g = s.predicate(x);
    const auto h = SimplexPredicate::lift(s.predicate(y));
    std::vector<Dist> probes = f.rows();
    probes.push_back(s.dist(y));
    for (Regime regime : {Regime::countable, Regime::lp}) {
      if (!check_galois(f, g, h, probes, regime).holds()) return {false, "equivalence failed at " + std::to_string(i)};
    }
  }
  // Falsifiers: push h below g at the argmax of g (exists side) and above g
  // at the argmin (forall side).
  int crafted = 0;
  while (crafted < 30) {
    auto x = s.space("x", 1, 5), y = s.space("y", 1, 4);
    const Kernel f = s.kernel(x, y);
    const Predicate g = s.predicate(x);
    const Predicate base = s.predicate(y);
    std::size_t top = 0, bottom = 0;
    for (std::size_t k = 0; k < x->size(); ++k) {
      if (g(k) > g(top)) top = k;
      if (g(k) < g(bottom)) bottom = k;
    }
    if (g(top) == 0 || g(bottom) == 1) continue;
    const Rational pulled_top = substitute(SimplexPredicate::lift(base), f)(top);
    const Rational down = pulled_top < g(top) ? Rational(1) : g(top) / (2 * pulled_top);
    const auto h_low = SimplexPredicate::lift(scaled(base, down, false));
    const Rational pulled_bottom = 1 - substitute(SimplexPredicate::lift(base), f)(bottom);
    const Rational up = pulled_bottom < 1 - g(bottom) ? Rational(1) : (1 - g(bottom)) / (2 * pulled_bottom);
    const auto h_high = SimplexPredicate::lift(scaled(base, up, true));
    for (Regime regime : {Regime::countable, Regime::lp}) {
      const auto lo = check_galois(f, g, h_low, f.rows(), regime);
      const auto hi = check_galois(f, g, h_high, f.rows(), regime);
      if (lo.g_entails_pullback || lo.exists_entails_h || hi.pullback_entails_g || hi.h_entails_forall) {
        return {false, "crafted instance " + std::to_string(crafted) + " not falsified"};
      }
    }
    ++crafted;
  }
  return {true, std::to_string(n) + " triples, " + std::to_string(crafted) + " falsifiers"};
}

Outcome composite() {
  Sampler s(105);
  const int n = 150;
  std::size_t checked = 0;
  for (int i = 0; i < n; ++i) {
    auto x = s.space("x", 1, 4), y = s.space("y", 1, 4), z = s.space("z", 1, 4);
    const Kernel f = s.kernel(x, y), g = s.kernel(y, z);
    const Predicate pred = s.predicate(x);
    const Kernel gf = kleisli_compose(g, f);
    for (const auto& q : gf.rows()) {
      if (exists_composite(f, g, pred, q).value != exists_countable(gf, pred, q).value ||
          forall_composite(f, g, pred, q).value != forall_countable(gf, pred, q).value) {
        return {false, "mismatch at triple " + std::to_string(i)};
      }
      ++checked;
    }
  }
  return {true, std::to_string(n) + " triples, " + std::to_string(checked) + " reachable queries"};
}

Outcome continuity() {
  Sampler s(106);
  const int n = 600;
  for (int i = 0; i < n; ++i) {
    auto x = s.space("x", 1, 5), y = s.space("y", 1, 5);
    const auto lifted = lift_kernel(s.kernel(x, y));
    const Dist p = s.dist(x), p2 = s.dist(x);
    if (tv_metric(lifted(p), lifted(p2)) > tv_norm(p - p2)) return {false, "continuity fails at " + std::to_string(i)};
  }
  for (int i = 0; i < 200; ++i) {
    auto x = s.space("x", 1, 12);
    const Dist a = s.dist(x), b = s.dist(x);
    const Rational d = tv_metric(a, b);
    if (2 * d != tv_norm(a - b)) return {false, "half-norm identity fails at " + std::to_string(i)};
    if (d != oracle::tv_by_subsets(a, b)) return {false, "subset oracle disagrees at " + std::to_string(i)};
  }
  return {true, std::to_string(n) + " pairs, 200 oracle checks"};
}

Outcome lp_oracle() {
  Sampler s(107);
  const int n = 400;
  int infeasible = 0, unbounded = 0;
  for (int i = 0; i < n; ++i) {
    const LinearProgram lp =
        s.linear_program(static_cast<std::size_t>(s.integer(1, 4)), static_cast<std::size_t>(s.integer(1, 6)));
    const auto sol = lp_solve(lp);
    const auto ref = oracle::solve_by_enumeration(lp);
    if (sol.status != ref.status) return {false, "status mismatch at " + std::to_string(i)};
    if (sol.status == LpStatus::optimal && sol.value != ref.value) return {false, "value mismatch at " + std::to_string(i)};
    infeasible += sol.status == LpStatus::infeasible;
    unbounded += sol.status == LpStatus::unbounded;
  }
  if (infeasible == 0) return {false, "no infeasible instance generated"};
  return {true, std::to_string(n) + " programs, " + std::to_string(infeasible) + " infeasible, " +
                    std::to_string(unbounded) + " unbounded"};
}

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> run;
  std::optional<double> budget_seconds;
};

}  // namespace
}  // namespace giryq

int main() {
  using namespace giryq;
  const std::vector<Criterion> criteria = {
      {1, "lifted quantifiers on the three-point kernel", three_point, 1.0},
      {2, "Kleisli associativity and unit laws", monad_laws, 10.0},
      {3, "deterministic kernels are Dirac embeddings", determinism, std::nullopt},
      {4, "adjunction unit and counit", adjunction, std::nullopt},
      {5, "Galois bijections and falsifiers", galois, std::nullopt},
      {6, "composite quantifier law", composite, std::nullopt},
      {7, "lift continuity in total variation", continuity, std::nullopt},
      {8, "simplex matches basis enumeration", lp_oracle, std::nullopt},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds && secs >= *c.budget_seconds) {
      out.ok = false;
      out.detail += " (over time budget)";
    }
    failures += !out.ok;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3fs", secs);
    std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << out.detail
              << "] " << timing << "\n";
  }
  return failures == 0 ? 0 : 1;
}
