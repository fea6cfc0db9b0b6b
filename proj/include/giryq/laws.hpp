#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "giryq/format.hpp"
#include "giryq/kernel.hpp"
#include "giryq/lp.hpp"
#include "giryq/measure.hpp"
#include "giryq/predicate.hpp"
#include "giryq/quantifiers.hpp"
#include "giryq/random.hpp"

namespace giryq {

struct LawResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

struct LawReport {
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::vector<LawResult> results;

  bool passed() const {
    for (const auto& r : results) {
      if (r.failures) return false;
    }
    return true;
  }

  std::string to_text() const {
    std::string out = "law suite seed=" + std::to_string(seed) +
                      " cases=" + std::to_string(cases) + "\n";
    for (const auto& r : results) {
      out += (r.failures ? "  FAIL " : "  PASS ") + r.name + " " +
             std::to_string(r.cases - r.failures) + "/" + std::to_string(r.cases) + "\n";
      if (r.failures) out += "       first counterexample: " + r.first_failure + "\n";
    }
    out += passed() ? "all laws hold\n" : "law violations found\n";
    return out;
  }
};

/// One property: draws an instance from the sampler and returns an empty
/// string when it holds, otherwise a description of the counterexample.
struct Law {
  std::string name;
  std::function<std::string(Sampler&)> check;
};

namespace laws {

inline SpaceRef small_space(Sampler& s, const char* name, std::size_t max = 5) {
  return s.space(name, 1, max);
}

/// All image points of f plus a few random distributions on the target.
inline std::vector<Dist> probes_for(Sampler& s, const Kernel& f) {
  std::vector<Dist> probes = f.rows();
  for (int i = 0; i < 3; ++i) probes.push_back(s.dist(f.target()));
  return probes;
}

inline std::vector<Law> standard_laws() {
  std::vector<Law> all;

  all.push_back({"kleisli_associativity", [](Sampler& s) -> std::string {
    auto w = small_space(s, "w"), x = small_space(s, "x"), y = small_space(s, "y"),
         z = small_space(s, "z");
    auto f = s.kernel(w, x);
    auto g = s.kernel(x, y);
    auto h = s.kernel(y, z);
    if (kleisli_compose(kleisli_compose(h, g), f) == kleisli_compose(h, kleisli_compose(g, f))) {
      return {};
    }
    return "f=" + format_kernel(f) + " g=" + format_kernel(g) + " h=" + format_kernel(h);
  }});

  all.push_back({"kleisli_unit_laws", [](Sampler& s) -> std::string {
    auto x = small_space(s, "x"), y = small_space(s, "y");
    auto f = s.kernel(x, y);
    if (kleisli_compose(f, eta(x)) == f && kleisli_compose(eta(y), f) == f) return {};
    return "f=" + format_kernel(f);
  }});

  all.push_back({"dirac_embedding_functorial", [](Sampler& s) -> std::string {
    auto x = small_space(s, "x"), y = small_space(s, "y"), z = small_space(s, "z");
    auto fn = s.point_function(x, y);
    auto gn = s.point_function(y, z);
    std::vector<std::size_t> composite(x->size());
    for (std::size_t i = 0; i < composite.size(); ++i) composite[i] = gn(fn(i));
    if (kleisli_compose(dirac_embed(gn), dirac_embed(fn)) ==
        dirac_embed(PointFunction(x, z, composite))) {
      return {};
    }
    return "point functions do not compose";
  }});

  all.push_back({"deterministic_iff_dirac_embedding", [](Sampler& s) -> std::string {
    auto x = small_space(s, "x"), y = small_space(s, "y");
    auto fn = s.point_function(x, y);
    const Kernel embedded = dirac_embed(fn);
    if (!is_deterministic(embedded) || !(extract_function(embedded) == fn)) {
      return "embedding of a point function not recovered";
    }
    const Kernel k = s.kernel(x, y);
    bool embeds = true;
    for (const auto& row : k.rows()) {
      bool dirac = false;
      for (std::size_t j = 0; j < y->size(); ++j) dirac = dirac || row == Dist::dirac(y, j);
      embeds = embeds && dirac;
    }
    if (is_deterministic(k) != embeds) return "k=" + format_kernel(k);
    return {};
  }});

  all.push_back({"lift_is_linear", [](Sampler& s) -> std::string {
    auto x = small_space(s, "x"), y = small_space(s, "y");
    auto f = s.kernel(x, y);
    const auto lifted = lift_kernel(f);
    std::vector<std::pair<Dist, Rational>> terms;
    const auto n = s.integer(1, 3);
    std::vector<Rational> mix(static_cast<std::size_t>(n));
    Rational total = 0;
    for (auto& m : mix) total += (m = s.integer(1, 5));
    for (auto& m : mix) terms.emplace_back(s.dist(x), m / total);
    const auto q = FinSuppMeasure<Dist>::collect(terms);
    std::vector<std::pair<Dist, Rational>> image;
    for (std::size_t i = 0; i < q.size(); ++i) image.emplace_back(lifted(q.atoms()[i]), q.weights()[i]);
    if (lifted(monad_mu(q)) == monad_mu(FinSuppMeasure<Dist>::collect(image))) return {};
    return "f=" + format_kernel(f);
  }});

  all.push_back({"tv_metric_is_half_tv_norm", [](Sampler& s) -> std::string {
    auto x = s.space("x", 1, 8);
    auto p = s.dist(x), q = s.dist(x);
    if (tv_metric(p, q) * 2 == tv_norm(p - q)) return {};
    return "p=" + format_dist(p) + " q=" + format_dist(q);
  }});

  all.push_back({"tv_metric_axioms", [](Sampler& s) -> std::string {
    auto x = s.space("x", 1, 6);
    auto p = s.dist(x), q = s.dist(x), r = s.dist(x);
    const bool ok = tv_metric(p, q) == tv_metric(q, p) &&
                    tv_metric(p, r) <= tv_metric(p, q) + tv_metric(q, r) &&
                    tv_metric(p, p) == 0 && ((tv_metric(p, q) == 0) == (p == q));
    return ok ? std::string() : "p=" + format_dist(p) + " q=" + format_dist(q) + " r=" + format_dist(r);
  }});

  all.push_back({"lift_is_tv_continuous", [](Sampler& s) -> std::string {
    auto x = small_space(s, "x"), y = small_space(s, "y");
    auto f = s.kernel(x, y);
    auto p = s.dist(x), p2 = s.dist(x);
    const auto lifted = lift_kernel(f);
    if (tv_metric(lifted(p), lifted(p2)) <= tv_norm(p - p2)) return {};
    return "f=" + format_kernel(f) + " p=" + format_dist(p) + " p'=" + format_dist(p2);
  }});

  all.push_back({"entailment_partial_order", [](Sampler& s) -> std::string {
    auto x = s.space("x", 1, 3);
    auto a = s.predicate(x), b = s.predicate(x), c = s.predicate(x);
    bool ok = entails(a, a);
    if (entails(a, b) && entails(b, a)) ok = ok && a == b;
    if (entails(a, b) && entails(b, c)) ok = ok && entails(a, c);
    return ok ? std::string() : "order axiom violated";
  }});

  all.push_back({"substitution_monotone", [](Sampler& s) -> std::string {
    auto x = small_space(s, "x"), y = s.space("y", 1, 3);
    auto f = s.kernel(x, y);
    auto a = s.predicate(y), b = s.predicate(y);
    if (!entails(a, b)) return {};
    if (entails(substitute(SimplexPredicate::lift(a), f), substitute(SimplexPredicate::lift(b), f))) {
      return {};
    }
    return "f=" + format_kernel(f);
  }});

  all.push_back({"expectation_affine", [](Sampler& s) -> std::string {
    auto y = small_space(s, "y");
    auto g = s.predicate(y);
    auto p1 = s.dist(y), p2 = s.dist(y);
    if (p1 == p2) p2 = Dist::dirac(y, 0) == p1 ? Dist::dirac(y, y->size() - 1) : Dist::dirac(y, 0);
    if (p1 == p2) return {};
    auto q = finsupp_new<Dist>({p1, p2}, {Rational(1, 3), Rational(2, 3)});
    Rational mixed = 0;
    for (std::size_t i = 0; i < q.size(); ++i) mixed += q.weights()[i] * expectation(g, q.atoms()[i]);
    const Rational e = expectation(g, monad_mu(q));
    return e == mixed && e >= 0 && e <= 1 ? std::string() : "expectation not affine";
  }});

  for (Regime regime : {Regime::countable, Regime::lp}) {
    const std::string suffix = regime == Regime::countable ? "_countable" : "_lp";

    all.push_back({"adjunction_unit_counit" + suffix, [regime](Sampler& s) -> std::string {
      auto x = small_space(s, "x"), y = small_space(s, "y");
      auto f = s.kernel(x, y);
      auto g = s.predicate(x);
      if (check_adjunction_unit(f, g, regime).holds()) return {};
      return "f=" + format_kernel(f) + " g=" + format_vector(g.values());
    }});

    all.push_back({"galois_bijections" + suffix, [regime](Sampler& s) -> std::string {
      auto x = small_space(s, "x"), y = small_space(s, "y");
      auto f = s.kernel(x, y);
      auto g = s.predicate(x);
      auto h = SimplexPredicate::lift(s.predicate(y));
      if (check_galois(f, g, h, probes_for(s, f), regime).holds()) return {};
      return "f=" + format_kernel(f) + " g=" + format_vector(g.values());
    }});

    all.push_back({"forall_below_exists" + suffix, [regime](Sampler& s) -> std::string {
      auto x = small_space(s, "x"), y = small_space(s, "y");
      auto f = s.kernel(x, y);
      auto g = s.predicate(x);
      for (const auto& q : probes_for(s, f)) {
        const auto e = quantify(Quantifier::exists, regime, f, g, q);
        const auto a = quantify(Quantifier::forall, regime, f, g, q);
        if (e.feasible && a.value > e.value) return "q=" + format_dist(q);
      }
      return {};
    }});

    all.push_back({"quantifiers_monotone" + suffix, [regime](Sampler& s) -> std::string {
      auto x = small_space(s, "x"), y = small_space(s, "y");
      auto f = s.kernel(x, y);
      auto g1 = s.predicate(x), g2 = s.predicate(x);
      if (!entails(g1, g2)) std::swap(g1, g2);
      if (!entails(g1, g2)) return {};
      for (const auto& q : probes_for(s, f)) {
        if (quantify(Quantifier::exists, regime, f, g1, q).value >
                quantify(Quantifier::exists, regime, f, g2, q).value ||
            quantify(Quantifier::forall, regime, f, g1, q).value >
                quantify(Quantifier::forall, regime, f, g2, q).value) {
          return "q=" + format_dist(q);
        }
      }
      return {};
    }});
  }

  all.push_back({"composite_law_exists", [](Sampler& s) -> std::string {
    auto x = s.space("x", 1, 4), y = s.space("y", 1, 4), z = s.space("z", 1, 4);
    auto f = s.kernel(x, y);
    auto g = s.kernel(y, z);
    auto pred = s.predicate(x);
    const Kernel gf = kleisli_compose(g, f);
    std::vector<Dist> qs = gf.rows();
    qs.push_back(s.dist(z));
    for (const auto& q : qs) {
      const auto nested = exists_composite(f, g, pred, q);
      const auto direct = exists_countable(gf, pred, q);
      if (nested.value != direct.value || nested.feasible != direct.feasible) {
        return "f=" + format_kernel(f) + " g=" + format_kernel(g) + " q=" + format_dist(q);
      }
    }
    return {};
  }});

  all.push_back({"composite_law_forall", [](Sampler& s) -> std::string {
    auto x = s.space("x", 1, 4), y = s.space("y", 1, 4), z = s.space("z", 1, 4);
    auto f = s.kernel(x, y);
    auto g = s.kernel(y, z);
    auto pred = s.predicate(x);
    const Kernel gf = kleisli_compose(g, f);
    std::vector<Dist> qs = gf.rows();
    qs.push_back(s.dist(z));
    for (const auto& q : qs) {
      const auto nested = forall_composite(f, g, pred, q);
      const auto direct = forall_countable(gf, pred, q);
      if (nested.value != direct.value || nested.feasible != direct.feasible) {
        return "f=" + format_kernel(f) + " g=" + format_kernel(g) + " q=" + format_dist(q);
      }
    }
    return {};
  }});

  all.push_back({"lifted_duality", [](Sampler& s) -> std::string {
    auto x = small_space(s, "x"), y = small_space(s, "y");
    auto f = s.kernel(x, y);
    auto g = s.predicate(x);
    std::vector<Rational> flipped;
    for (const auto& v : g.values()) flipped.push_back(1 - v);
    const Predicate not_g(x, flipped);
    const Dist q = lift_kernel(f)(s.dist(x));
    if (forall_lifted(f, g, q).value == 1 - exists_lifted(f, not_g, q).value) return {};
    return "f=" + format_kernel(f) + " q=" + format_dist(q);
  }});

  all.push_back({"lifted_witness_feasible", [](Sampler& s) -> std::string {
    auto x = small_space(s, "x"), y = small_space(s, "y");
    auto f = s.kernel(x, y);
    auto g = s.predicate(x);
    const auto lifted = lift_kernel(f);
    const Dist q = lifted(s.dist(x));
    for (auto kind : {Quantifier::exists, Quantifier::forall}) {
      const auto r = quantify(kind, Regime::lp, f, g, q);
      const auto* w = std::get_if<Dist>(&r.witness);
      if (!r.feasible || !w || !(lifted(*w) == q) || expectation(g, *w) != r.value) {
        return "f=" + format_kernel(f) + " q=" + format_dist(q);
      }
    }
    return {};
  }});

  all.push_back({"lifted_dominates_dirac_and_agrees_when_deterministic", [](Sampler& s) -> std::string {
    auto x = small_space(s, "x"), y = small_space(s, "y");
    auto f = s.kernel(x, y);
    auto g = s.predicate(x);
    for (std::size_t i = 0; i < x->size(); ++i) {
      if (exists_lifted(f, g, f.row(i)).value < g(i)) return "f=" + format_kernel(f);
    }
    const Kernel d = dirac_embed(s.point_function(x, y));
    for (std::size_t j = 0; j < y->size(); ++j) {
      const Dist q = Dist::dirac(y, j);
      if (exists_lifted(d, g, q).value != exists_countable(d, g, q).value ||
          forall_lifted(d, g, q).value != forall_countable(d, g, q).value) {
        return "d=" + format_kernel(d);
      }
    }
    return {};
  }});

  all.push_back({"lp_min_is_negated_max", [](Sampler& s) -> std::string {
    LinearProgram lp = s.linear_program(static_cast<std::size_t>(s.integer(1, 4)),
                                        static_cast<std::size_t>(s.integer(1, 6)));
    lp.sense = Sense::minimize;
    LinearProgram neg = lp;
    neg.sense = Sense::maximize;
    for (auto& c : neg.objective) c = -c;
    const auto a = lp_solve(lp), b = lp_solve(neg);
    if (a.status != b.status) return "status differs";
    if (a.status == LpStatus::optimal && a.value != -b.value) return "value differs";
    return {};
  }});

  all.push_back({"lp_point_feasible", [](Sampler& s) -> std::string {
    const LinearProgram lp = s.linear_program(static_cast<std::size_t>(s.integer(1, 4)),
                                              static_cast<std::size_t>(s.integer(1, 6)));
    const auto sol = lp_solve(lp);
    if (sol.status != LpStatus::optimal) return {};
    Rational value = 0;
    for (std::size_t j = 0; j < sol.point.size(); ++j) {
      if (sol.point[j] < 0) return "negative coordinate";
      value += lp.objective[j] * sol.point[j];
    }
    for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
      Rational row = 0;
      for (std::size_t j = 0; j < sol.point.size(); ++j) row += lp.constraints[i][j] * sol.point[j];
      if (row != lp.rhs[i]) return "constraint " + std::to_string(i) + " violated";
    }
    return value == sol.value ? std::string() : "value mismatch";
  }});

  return all;
}

}  // namespace laws

/// Runs every standard law on `cases` random instances. Each law has its own
/// generator stream derived from `seed`, so reports are reproducible.
inline LawReport run_law_suite(std::uint64_t seed, std::size_t cases) {
  LawReport report{seed, cases, {}};
  const auto all = laws::standard_laws();
  for (std::size_t i = 0; i < all.size(); ++i) {
    Sampler sampler(seed ^ (0x9E3779B97F4A7C15ULL * (i + 1)));
    LawResult result{all[i].name, cases, 0, {}};
    for (std::size_t c = 0; c < cases; ++c) {
      const std::string failure = all[i].check(sampler);
      if (!failure.empty() && result.failures++ == 0) {
        result.first_failure = "case " + std::to_string(c) + ": " + failure;
      }
    }
    report.results.push_back(std::move(result));
  }
  return report;
}

}  // namespace giryq
