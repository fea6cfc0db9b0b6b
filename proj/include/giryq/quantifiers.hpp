#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "giryq/error.hpp"
#include "giryq/kernel.hpp"
#include "giryq/lp.hpp"
#include "giryq/measure.hpp"
#include "giryq/predicate.hpp"
#include "giryq/rational.hpp"

namespace giryq {

/// COUNTABLE: quantify over the exact fibers {x : f(x) = Q}.
/// LP: quantify the expectation of g over the polytope {P : f#(P) = Q}.
enum class Regime { countable, lp };

constexpr std::string_view to_string(Regime r) {
  return r == Regime::countable ? "COUNTABLE" : "LP";
}

enum class Quantifier { exists, forall };

/// Either nothing, a source point index, or a distribution on the source.
using Witness = std::variant<std::monostate, std::size_t, Dist>;

struct QuantifierResult {
  Rational value;
  Witness witness;
  Regime regime = Regime::countable;
  /// False when the query lies outside the image and the value comes from
  /// the extension convention (0 for exists, 1 for forall).
  bool feasible = false;
};

namespace detail {

inline void require_quantifier_spaces(const Kernel& f, const Predicate& g, const Dist& q) {
  require_same_space(f.source(), g.space(), "predicate vs kernel source");
  require_same_space(f.target(), q.space(), "query vs kernel target");
}

inline Rational empty_value(Quantifier k) { return k == Quantifier::exists ? 0 : 1; }

inline bool improves(Quantifier k, const Rational& candidate, const Rational& incumbent) {
  return k == Quantifier::exists ? candidate > incumbent : candidate < incumbent;
}

inline QuantifierResult fiber_extremum(Quantifier kind, const Kernel& f, const Predicate& g,
                                       const Dist& q) {
  require_quantifier_spaces(f, g, q);
  QuantifierResult result{empty_value(kind), std::monostate{}, Regime::countable, false};
  for (std::size_t x = 0; x < f.rows().size(); ++x) {
    if (!(f.row(x) == q)) continue;
    if (!result.feasible || improves(kind, g(x), result.value)) {
      result.value = g(x);
      result.witness = x;
      result.feasible = true;
    }
  }
  return result;
}

inline LinearProgram fiber_program(const Kernel& f, const Predicate& g, const Dist& q,
                                   Sense sense) {
  LinearProgram lp;
  lp.sense = sense;
  lp.objective = g.values();
  const std::size_t nx = f.source()->size();
  for (std::size_t y = 0; y < q.size(); ++y) {
    std::vector<Rational> row(nx);
    for (std::size_t x = 0; x < nx; ++x) row[x] = f.at(x, y);
    lp.constraints.push_back(std::move(row));
    lp.rhs.push_back(q[y]);
  }
  return lp;
}

inline QuantifierResult lifted_extremum(Quantifier kind, const Kernel& f, const Predicate& g,
                                        const Dist& q) {
  require_quantifier_spaces(f, g, q);
  const Sense sense = kind == Quantifier::exists ? Sense::maximize : Sense::minimize;
  const LpSolution sol = lp_solve(fiber_program(f, g, q, sense));
  if (sol.status == LpStatus::infeasible) {
    return {empty_value(kind), std::monostate{}, Regime::lp, false};
  }
  // The feasible set lies inside the simplex: summing the constraint rows
  // gives sum(p) = sum(q) = 1, so the program cannot be unbounded and the
  // optimal point is itself a distribution.
  assert(sol.status == LpStatus::optimal);
  Dist witness(f.source(), sol.point);
  return {sol.value, std::move(witness), Regime::lp, true};
}

}  // namespace detail

/// sup { g(x) : f(x) = q }, with sup of the empty set = 0.
inline QuantifierResult exists_countable(const Kernel& f, const Predicate& g, const Dist& q) {
  return detail::fiber_extremum(Quantifier::exists, f, g, q);
}

/// inf { g(x) : f(x) = q }, with inf of the empty set = 1.
inline QuantifierResult forall_countable(const Kernel& f, const Predicate& g, const Dist& q) {
  return detail::fiber_extremum(Quantifier::forall, f, g, q);
}

/// max { E_P[g] : f#(P) = q } by exact LP; 0 when q is not reachable.
inline QuantifierResult exists_lifted(const Kernel& f, const Predicate& g, const Dist& q) {
  return detail::lifted_extremum(Quantifier::exists, f, g, q);
}

/// min { E_P[g] : f#(P) = q } by exact LP; 1 when q is not reachable.
inline QuantifierResult forall_lifted(const Kernel& f, const Predicate& g, const Dist& q) {
  return detail::lifted_extremum(Quantifier::forall, f, g, q);
}

inline QuantifierResult quantify(Quantifier kind, Regime regime, const Kernel& f,
                                 const Predicate& g, const Dist& q) {
  return regime == Regime::countable ? detail::fiber_extremum(kind, f, g, q)
                                     : detail::lifted_extremum(kind, f, g, q);
}

// Adjunction checks ---------------------------------------------------------

struct AdjunctionEntry {
  std::size_t point = 0;
  Rational g_value;
  Rational exists_value;
  Rational forall_value;
  Rational exists_margin;  // exists(f(x)) - g(x), must be >= 0
  Rational forall_margin;  // g(x) - forall(f(x)), must be >= 0
  bool ok() const { return exists_margin >= 0 && forall_margin >= 0; }
};

struct AdjunctionReport {
  Regime regime = Regime::countable;
  std::vector<AdjunctionEntry> entries;
  bool holds() const {
    for (const auto& e : entries) {
      if (!e.ok()) return false;
    }
    return true;
  }
};

/// Unit g |- (exists_f g) o f and counit (forall_f g) o f |- g, pointwise.
inline AdjunctionReport check_adjunction_unit(const Kernel& f, const Predicate& g,
                                              Regime regime) {
  AdjunctionReport report{regime, {}};
  for (std::size_t x = 0; x < f.rows().size(); ++x) {
    const Dist& image = f.row(x);
    AdjunctionEntry e;
    e.point = x;
    e.g_value = g(x);
    e.exists_value = quantify(Quantifier::exists, regime, f, g, image).value;
    e.forall_value = quantify(Quantifier::forall, regime, f, g, image).value;
    e.exists_margin = e.exists_value - e.g_value;
    e.forall_margin = e.g_value - e.forall_value;
    report.entries.push_back(std::move(e));
  }
  return report;
}

struct GaloisReport {
  bool g_entails_pullback = false;        // g |- f*(h)
  bool exists_entails_h = false;          // exists_f g |- h on the probes
  bool pullback_entails_g = false;        // f*(h) |- g
  bool h_entails_forall = false;          // h |- forall_f g on the probes
  bool exists_equivalent() const { return g_entails_pullback == exists_entails_h; }
  bool forall_equivalent() const { return pullback_entails_g == h_entails_forall; }
  bool holds() const { return exists_equivalent() && forall_equivalent(); }
};

/// Checks both adjunction bijections over a finite probe set that must
/// contain every image point f(x). In the LP regime the left-hand sides
/// range over all of TX; they are decided on Dirac points, which is exact
/// only for expectation-lifted h, so probe tables are rejected there.
inline GaloisReport check_galois(const Kernel& f, const Predicate& g, const SimplexPredicate& h,
                                 const std::vector<Dist>& probes,
                                 Regime regime = Regime::countable) {
  require_same_space(f.source(), g.space(), "check_galois predicate");
  require_same_space(f.target(), h.space(), "check_galois simplex predicate");
  for (const auto& probe : probes) require_same_space(f.target(), probe.space(), "probe");
  for (std::size_t x = 0; x < f.rows().size(); ++x) {
    bool found = false;
    for (const auto& probe : probes) {
      if (probe == f.row(x)) {
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error(ErrorKind::probe_set_incomplete,
                  "image of '" + f.source()->point(x) + "' is not among the probes");
    }
  }
  if (regime == Regime::lp && !h.is_lifted()) {
    throw Error(ErrorKind::unsupported,
                "LP-regime Galois check needs an expectation-lifted predicate");
  }

  const Predicate pullback = substitute(h, f);
  GaloisReport report;
  report.g_entails_pullback = entails(g, pullback);
  report.pullback_entails_g = entails(pullback, g);
  report.exists_entails_h = true;
  report.h_entails_forall = true;
  for (const auto& probe : probes) {
    const Rational hv = h(probe);
    if (quantify(Quantifier::exists, regime, f, g, probe).value > hv) {
      report.exists_entails_h = false;
    }
    if (hv > quantify(Quantifier::forall, regime, f, g, probe).value) {
      report.h_entails_forall = false;
    }
  }
  return report;
}

// Composite law ---------------------------------------------------------------

namespace detail {

template <class Atom>
struct Candidate {
  Atom atom;
  Rational value;
  std::size_t witness;
};

/// Keeps one candidate per distinct atom: the extremal value, and among
/// equal values the earliest source point.
template <class Atom>
void offer(std::vector<Candidate<Atom>>& table, Quantifier kind, Atom atom,
           const Rational& value, std::size_t witness) {
  for (auto& c : table) {
    if (c.atom == atom) {
      if (improves(kind, value, c.value) || (value == c.value && witness < c.witness)) {
        c.value = value;
        c.witness = witness;
      }
      return;
    }
  }
  table.push_back({std::move(atom), value, witness});
}

inline QuantifierResult composite_extremum(Quantifier kind, const Kernel& f, const Kernel& g,
                                           const Predicate& pred, const Dist& q) {
  require_same_space(f.target(), g.source(), "composite kernels");
  require_same_space(f.source(), pred.space(), "composite predicate");
  require_same_space(g.target(), q.space(), "composite query");

  // Q_f pred on TY, nonextremal off the finite image of f.
  std::vector<Candidate<Dist>> on_ty;
  for (std::size_t x = 0; x < f.rows().size(); ++x) offer(on_ty, kind, f.row(x), pred(x), x);

  // Q_{Tg} on T^2 Z: Tg sends P to the image of P under y -> g(y).
  std::vector<Candidate<FinSuppMeasure<Dist>>> on_t2z;
  for (const auto& c : on_ty) offer(on_t2z, kind, push_through(g, c.atom), c.value, c.witness);

  // Q_{mu_Z} on TZ.
  std::vector<Candidate<Dist>> on_tz;
  for (const auto& c : on_t2z) offer(on_tz, kind, monad_mu(c.atom), c.value, c.witness);

  for (const auto& c : on_tz) {
    if (c.atom == q) return {c.value, c.witness, Regime::countable, true};
  }
  return {empty_value(kind), std::monostate{}, Regime::countable, false};
}

}  // namespace detail

/// Evaluates (exists_{mu_Z} o exists_{Tg} o exists_f)(pred) at q through the
/// finitely supported intermediates in TY and T^2 Z.
inline QuantifierResult exists_composite(const Kernel& f, const Kernel& g, const Predicate& pred,
                                         const Dist& q) {
  return detail::composite_extremum(Quantifier::exists, f, g, pred, q);
}

inline QuantifierResult forall_composite(const Kernel& f, const Kernel& g, const Predicate& pred,
                                         const Dist& q) {
  return detail::composite_extremum(Quantifier::forall, f, g, pred, q);
}

}  // namespace giryq
