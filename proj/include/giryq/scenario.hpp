#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <future>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "giryq/error.hpp"
#include "giryq/format.hpp"
#include "giryq/kernel.hpp"
#include "giryq/laws.hpp"
#include "giryq/measure.hpp"
#include "giryq/predicate.hpp"
#include "giryq/quantifiers.hpp"
#include "giryq/rational.hpp"

namespace giryq {

using json = nlohmann::ordered_json;

enum class QueryKind {
  exists_countable,
  forall_countable,
  exists_lp,
  forall_lp,
  compose,
  metric,
  determinism,
  expectation,
  check_laws,
};

inline constexpr std::pair<QueryKind, std::string_view> kQueryKindNames[] = {
    {QueryKind::exists_countable, "EXISTS_COUNTABLE"},
    {QueryKind::forall_countable, "FORALL_COUNTABLE"},
    {QueryKind::exists_lp, "EXISTS_LP"},
    {QueryKind::forall_lp, "FORALL_LP"},
    {QueryKind::compose, "COMPOSE"},
    {QueryKind::metric, "METRIC"},
    {QueryKind::determinism, "DETERMINISM"},
    {QueryKind::expectation, "EXPECTATION"},
    {QueryKind::check_laws, "CHECK_LAWS"},
};

inline std::string_view to_string(QueryKind k) {
  for (const auto& [kind, name] : kQueryKindNames) {
    if (kind == k) return name;
  }
  return "?";
}

/// Name references are kept verbatim; literal distributions are resolved
/// against the space they live on while parsing.
struct Query {
  QueryKind kind = QueryKind::metric;
  std::vector<std::string> kernels;
  std::optional<std::string> predicate;
  std::optional<std::string> simplex_predicate;
  std::optional<std::string> space;
  std::vector<Dist> dists;

  friend bool operator==(const Query&, const Query&) = default;
};

template <class T>
struct Named {
  std::string name;
  T value;
  friend bool operator==(const Named&, const Named&) = default;
};

struct Scenario {
  std::vector<SpaceRef> spaces;
  std::vector<Named<Kernel>> kernels;
  std::vector<Named<Predicate>> predicates;
  std::vector<Named<SimplexPredicate>> simplex_predicates;
  std::vector<Query> queries;

  friend bool operator==(const Scenario& a, const Scenario& b) {
    if (a.spaces.size() != b.spaces.size()) return false;
    for (std::size_t i = 0; i < a.spaces.size(); ++i) {
      if (!same_space(a.spaces[i], b.spaces[i])) return false;
    }
    return a.kernels == b.kernels && a.predicates == b.predicates &&
           a.simplex_predicates == b.simplex_predicates && a.queries == b.queries;
  }

  template <class T>
  static const T* find(const std::vector<Named<T>>& items, std::string_view name) {
    for (const auto& item : items) {
      if (item.name == name) return &item.value;
    }
    return nullptr;
  }

  SpaceRef space(std::string_view name) const {
    for (const auto& s : spaces) {
      if (s->name() == name) return s;
    }
    return nullptr;
  }
};

/// Largest point count accepted in a scenario: GIRYQ_MAX_SPACE, default 64.
inline std::size_t max_space_size() {
  if (const char* env = std::getenv("GIRYQ_MAX_SPACE")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 64;
}

namespace detail {

class ScenarioReader {
 public:
  Scenario read(const json& doc) {
    if (!doc.is_object()) fail(ErrorKind::parse_error, "", "document must be a JSON object");
    for (const auto& [key, _] : doc.items()) {
      if (key != "spaces" && key != "kernels" && key != "predicates" &&
          key != "simplex_predicates" && key != "queries") {
        fail(ErrorKind::parse_error, key, "unknown top-level field");
      }
    }
    for_each(doc, "spaces", [&](const json& j, const std::string& at) { read_space(j, at); });
    for_each(doc, "kernels", [&](const json& j, const std::string& at) { read_kernel(j, at); });
    for_each(doc, "predicates", [&](const json& j, const std::string& at) { read_predicate(j, at); });
    for_each(doc, "simplex_predicates",
             [&](const json& j, const std::string& at) { read_simplex_predicate(j, at); });
    for_each(doc, "queries", [&](const json& j, const std::string& at) { read_query(j, at); });
    return std::move(out_);
  }

 private:
  [[noreturn]] static void fail(ErrorKind kind, const std::string& at, const std::string& msg) {
    throw Error(kind, (at.empty() ? std::string() : at + ": ") + msg);
  }

  template <class F>
  void for_each(const json& doc, const char* key, F&& f) {
    if (!doc.contains(key)) return;
    const json& arr = doc.at(key);
    if (!arr.is_array()) fail(ErrorKind::parse_error, key, "must be an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      f(arr[i], std::string(key) + "[" + std::to_string(i) + "]");
    }
  }

  static const json& field(const json& j, const char* key, const std::string& at) {
    if (!j.is_object()) fail(ErrorKind::parse_error, at, "must be an object");
    if (!j.contains(key)) fail(ErrorKind::parse_error, at, std::string("missing field '") + key + "'");
    return j.at(key);
  }

  static std::string string_field(const json& j, const char* key, const std::string& at) {
    const json& v = field(j, key, at);
    if (!v.is_string()) fail(ErrorKind::parse_error, at + "." + key, "must be a string");
    return v.get<std::string>();
  }

  static Rational rational(const json& v, const std::string& at) {
    if (!v.is_string()) fail(ErrorKind::parse_error, at, "rational must be a string like \"3/10\"");
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      fail(ErrorKind::parse_error, at, e.what());
    }
  }

  static std::vector<Rational> rationals(const json& v, const std::string& at) {
    if (!v.is_array()) fail(ErrorKind::parse_error, at, "must be an array of rationals");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      out.push_back(rational(v[i], at + "[" + std::to_string(i) + "]"));
    }
    return out;
  }

  /// Runs a constructor and reports library invariant violations as
  /// validation errors at `at`.
  template <class F>
  static auto validated(const std::string& at, F&& make) {
    try {
      return make();
    } catch (const Error& e) {
      fail(ErrorKind::validation_error, at, e.what());
    }
  }

  SpaceRef space_ref(const std::string& name, const std::string& at) const {
    SpaceRef s = out_.space(name);
    if (!s) fail(ErrorKind::reference_error, at, "unknown space '" + name + "'");
    return s;
  }

  void require_fresh(bool taken, const std::string& name, const std::string& at) {
    if (taken) fail(ErrorKind::validation_error, at, "duplicate name '" + name + "'");
  }

  Dist dist(const json& v, const SpaceRef& space, const std::string& at) const {
    auto weights = rationals(v, at);
    return validated(at, [&] { return Dist(space, std::move(weights)); });
  }

  void read_space(const json& j, const std::string& at) {
    const std::string name = string_field(j, "name", at);
    require_fresh(out_.space(name) != nullptr, name, at);
    const json& pts = field(j, "points", at);
    if (!pts.is_array()) fail(ErrorKind::parse_error, at + ".points", "must be an array");
    std::vector<std::string> points;
    for (const auto& p : pts) {
      if (!p.is_string()) fail(ErrorKind::parse_error, at + ".points", "labels must be strings");
      points.push_back(p.get<std::string>());
    }
    if (points.size() > max_space_size()) {
      fail(ErrorKind::validation_error, at,
           "space '" + name + "' has " + std::to_string(points.size()) +
               " points, limit is " + std::to_string(max_space_size()));
    }
    out_.spaces.push_back(validated(at, [&] { return make_space(name, points); }));
  }

  void read_kernel(const json& j, const std::string& at) {
    const std::string name = string_field(j, "name", at);
    require_fresh(Scenario::find(out_.kernels, name) != nullptr, name, at);
    const SpaceRef source = space_ref(string_field(j, "source", at), at + ".source");
    const SpaceRef target = space_ref(string_field(j, "target", at), at + ".target");
    const json& rows = field(j, "rows", at);
    if (!rows.is_array()) fail(ErrorKind::parse_error, at + ".rows", "must be an array of rows");
    std::vector<std::vector<Rational>> matrix;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      matrix.push_back(rationals(rows[i], at + ".rows[" + std::to_string(i) + "]"));
    }
    out_.kernels.push_back(
        {name, validated(at + " (kernel '" + name + "')",
                         [&] { return Kernel::from_matrix(source, target, matrix); })});
  }

  void read_predicate(const json& j, const std::string& at) {
    const std::string name = string_field(j, "name", at);
    require_fresh(Scenario::find(out_.predicates, name) != nullptr, name, at);
    const SpaceRef space = space_ref(string_field(j, "space", at), at + ".space");
    auto values = rationals(field(j, "values", at), at + ".values");
    out_.predicates.push_back(
        {name, validated(at, [&] { return Predicate(space, std::move(values)); })});
  }

  void read_simplex_predicate(const json& j, const std::string& at) {
    const std::string name = string_field(j, "name", at);
    require_fresh(Scenario::find(out_.simplex_predicates, name) != nullptr, name, at);
    const SpaceRef space = space_ref(string_field(j, "space", at), at + ".space");
    const bool lifted = j.contains("lifted");
    const bool table = j.contains("table");
    if (lifted == table) {
      fail(ErrorKind::parse_error, at, "exactly one of 'lifted' or 'table' is required");
    }
    if (lifted) {
      auto values = rationals(j.at("lifted"), at + ".lifted");
      out_.simplex_predicates.push_back(
          {name, validated(at, [&] { return SimplexPredicate::lift(Predicate(space, std::move(values))); })});
      return;
    }
    if (!j.contains("default")) fail(ErrorKind::parse_error, at, "probe table needs a 'default'");
    const Rational def = rational(j.at("default"), at + ".default");
    const json& entries = j.at("table");
    if (!entries.is_array()) fail(ErrorKind::parse_error, at + ".table", "must be an array");
    std::vector<std::pair<Dist, Rational>> rows;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const std::string eat = at + ".table[" + std::to_string(i) + "]";
      rows.emplace_back(dist(field(entries[i], "dist", eat), space, eat + ".dist"),
                        rational(field(entries[i], "value", eat), eat + ".value"));
    }
    out_.simplex_predicates.push_back(
        {name, validated(at, [&] { return SimplexPredicate(ProbeTable(space, std::move(rows), def)); })});
  }

  const Kernel& kernel_ref(const std::string& name, const std::string& at) const {
    const Kernel* k = Scenario::find(out_.kernels, name);
    if (!k) fail(ErrorKind::reference_error, at, "unknown kernel '" + name + "'");
    return *k;
  }

  const Predicate& predicate_ref(const std::string& name, const std::string& at) const {
    const Predicate* p = Scenario::find(out_.predicates, name);
    if (!p) fail(ErrorKind::reference_error, at, "unknown predicate '" + name + "'");
    return *p;
  }

  void read_query(const json& j, const std::string& at) {
    Query q;
    const std::string kind = string_field(j, "kind", at);
    bool known = false;
    for (const auto& [k, n] : kQueryKindNames) {
      if (n == kind) {
        q.kind = k;
        known = true;
      }
    }
    if (!known) fail(ErrorKind::parse_error, at + ".kind", "unknown query kind '" + kind + "'");

    switch (q.kind) {
      case QueryKind::exists_countable:
      case QueryKind::forall_countable:
      case QueryKind::exists_lp:
      case QueryKind::forall_lp: {
        q.kernels = {string_field(j, "kernel", at)};
        q.predicate = string_field(j, "predicate", at);
        const Kernel& f = kernel_ref(q.kernels[0], at + ".kernel");
        const Predicate& g = predicate_ref(*q.predicate, at + ".predicate");
        if (!same_space(f.source(), g.space())) {
          fail(ErrorKind::validation_error, at, "predicate is not on the kernel's source space");
        }
        q.dists.push_back(dist(field(j, "query", at), f.target(), at + ".query"));
        break;
      }
      case QueryKind::compose: {
        const json& names = field(j, "kernels", at);
        if (!names.is_array() || names.size() != 2) {
          fail(ErrorKind::parse_error, at + ".kernels", "needs exactly two kernel names [f, g]");
        }
        for (const auto& n : names) {
          if (!n.is_string()) fail(ErrorKind::parse_error, at + ".kernels", "names must be strings");
          q.kernels.push_back(n.get<std::string>());
        }
        const Kernel& f = kernel_ref(q.kernels[0], at + ".kernels[0]");
        const Kernel& g = kernel_ref(q.kernels[1], at + ".kernels[1]");
        if (!same_space(f.target(), g.source())) {
          fail(ErrorKind::validation_error, at, "kernels are not composable");
        }
        break;
      }
      case QueryKind::metric: {
        q.space = string_field(j, "space", at);
        const SpaceRef s = space_ref(*q.space, at + ".space");
        const json& ds = field(j, "dists", at);
        if (!ds.is_array() || ds.size() != 2) {
          fail(ErrorKind::parse_error, at + ".dists", "needs exactly two distributions");
        }
        for (std::size_t i = 0; i < 2; ++i) {
          q.dists.push_back(dist(ds[i], s, at + ".dists[" + std::to_string(i) + "]"));
        }
        break;
      }
      case QueryKind::determinism:
        q.kernels = {string_field(j, "kernel", at)};
        kernel_ref(q.kernels[0], at + ".kernel");
        break;
      case QueryKind::expectation: {
        q.predicate = string_field(j, "predicate", at);
        const Predicate& g = predicate_ref(*q.predicate, at + ".predicate");
        q.dists.push_back(dist(field(j, "dist", at), g.space(), at + ".dist"));
        break;
      }
      case QueryKind::check_laws: {
        if (j.contains("kernel")) q.kernels = {string_field(j, "kernel", at)};
        if (j.contains("predicate")) q.predicate = string_field(j, "predicate", at);
        if (j.contains("simplex_predicate")) {
          q.simplex_predicate = string_field(j, "simplex_predicate", at);
        }
        if (q.kernels.empty() != !q.predicate) {
          fail(ErrorKind::parse_error, at, "'kernel' and 'predicate' must be given together");
        }
        if (q.simplex_predicate && q.kernels.empty()) {
          fail(ErrorKind::parse_error, at, "'simplex_predicate' needs 'kernel' and 'predicate'");
        }
        if (!q.kernels.empty()) {
          const Kernel& f = kernel_ref(q.kernels[0], at + ".kernel");
          const Predicate& g = predicate_ref(*q.predicate, at + ".predicate");
          if (!same_space(f.source(), g.space())) {
            fail(ErrorKind::validation_error, at, "predicate is not on the kernel's source space");
          }
          if (q.simplex_predicate) {
            const SimplexPredicate* h = Scenario::find(out_.simplex_predicates, *q.simplex_predicate);
            if (!h) {
              fail(ErrorKind::reference_error, at + ".simplex_predicate",
                   "unknown simplex predicate '" + *q.simplex_predicate + "'");
            }
            if (!same_space(h->space(), f.target())) {
              fail(ErrorKind::validation_error, at, "simplex predicate is not on the kernel's target");
            }
          }
        }
        break;
      }
    }
    out_.queries.push_back(std::move(q));
  }

  Scenario out_;
};

inline json rationals_json(std::span<const Rational> values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(to_string(v));
  return arr;
}

}  // namespace detail

inline Scenario parse_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::parse_error, std::string("malformed JSON: ") + e.what());
  }
  return detail::ScenarioReader{}.read(doc);
}

inline json query_json(const Query& q) {
  json j;
  j["kind"] = to_string(q.kind);
  switch (q.kind) {
    case QueryKind::exists_countable:
    case QueryKind::forall_countable:
    case QueryKind::exists_lp:
    case QueryKind::forall_lp:
      j["kernel"] = q.kernels.at(0);
      j["predicate"] = *q.predicate;
      j["query"] = detail::rationals_json(q.dists.at(0).weights());
      break;
    case QueryKind::compose:
      j["kernels"] = q.kernels;
      break;
    case QueryKind::metric:
      j["space"] = *q.space;
      j["dists"] = json::array(
          {detail::rationals_json(q.dists.at(0).weights()), detail::rationals_json(q.dists.at(1).weights())});
      break;
    case QueryKind::determinism:
      j["kernel"] = q.kernels.at(0);
      break;
    case QueryKind::expectation:
      j["predicate"] = *q.predicate;
      j["dist"] = detail::rationals_json(q.dists.at(0).weights());
      break;
    case QueryKind::check_laws:
      if (!q.kernels.empty()) j["kernel"] = q.kernels.front();
      if (q.predicate) j["predicate"] = *q.predicate;
      if (q.simplex_predicate) j["simplex_predicate"] = *q.simplex_predicate;
      break;
  }
  return j;
}

inline json scenario_json(const Scenario& s) {
  json doc;
  json& spaces = doc["spaces"] = json::array();
  for (const auto& sp : s.spaces) spaces.push_back({{"name", sp->name()}, {"points", sp->points()}});
  json& kernels = doc["kernels"] = json::array();
  for (const auto& [name, k] : s.kernels) {
    json rows = json::array();
    for (const auto& row : k.rows()) rows.push_back(detail::rationals_json(row.weights()));
    kernels.push_back({{"name", name},
                       {"source", k.source()->name()},
                       {"target", k.target()->name()},
                       {"rows", rows}});
  }
  json& preds = doc["predicates"] = json::array();
  for (const auto& [name, g] : s.predicates) {
    preds.push_back({{"name", name}, {"space", g.space()->name()}, {"values", detail::rationals_json(g.values())}});
  }
  json& simplex = doc["simplex_predicates"] = json::array();
  for (const auto& [name, h] : s.simplex_predicates) {
    json j = {{"name", name}, {"space", h.space()->name()}};
    if (h.is_lifted()) {
      j["lifted"] = detail::rationals_json(h.lifted().base().values());
    } else {
      json entries = json::array();
      for (const auto& [p, v] : h.table().entries()) {
        entries.push_back({{"dist", detail::rationals_json(p.weights())}, {"value", to_string(v)}});
      }
      j["table"] = entries;
      j["default"] = to_string(h.table().default_value());
    }
    simplex.push_back(std::move(j));
  }
  json& queries = doc["queries"] = json::array();
  for (const auto& q : s.queries) queries.push_back(query_json(q));
  return doc;
}

inline std::string serialize_scenario(const Scenario& s) { return scenario_json(s).dump(2); }

// Execution -------------------------------------------------------------------

struct RunOptions {
  std::uint64_t seed = 0;
  std::size_t cases = 200;
  bool parallel = false;
};

/// One report record. `law_failure` is set when a CHECK_LAWS query found a
/// violation; `record` is the JSON object emitted for the query.
struct QueryOutcome {
  json record;
  bool law_failure = false;
};

namespace detail {

inline json scalar_record(const Query& q, const Rational& value) {
  json r;
  r["kind"] = to_string(q.kind);
  json inputs = query_json(q);
  inputs.erase("kind");
  r["inputs"] = std::move(inputs);
  r["value"] = to_string(value);
  r["value_decimal"] = to_decimal(value);
  r["witness"] = nullptr;
  r["feasible"] = true;
  r["regime"] = nullptr;
  return r;
}

inline json witness_json(const Witness& w, const Kernel& f) {
  if (const auto* x = std::get_if<std::size_t>(&w)) return f.source()->point(*x);
  if (const auto* p = std::get_if<Dist>(&w)) return rationals_json(p->weights());
  return nullptr;
}

inline json adjunction_json(const AdjunctionReport& rep, const Kernel& f) {
  json entries = json::array();
  for (const auto& e : rep.entries) {
    entries.push_back({{"point", f.source()->point(e.point)},
                       {"g", to_string(e.g_value)},
                       {"exists", to_string(e.exists_value)},
                       {"forall", to_string(e.forall_value)},
                       {"ok", e.ok()}});
  }
  return {{"regime", to_string(rep.regime)}, {"holds", rep.holds()}, {"points", entries}};
}

}  // namespace detail

inline QueryOutcome execute_query(const Scenario& s, const Query& q, const RunOptions& opts) {
  const auto kernel = [&](std::size_t i) -> const Kernel& { return *Scenario::find(s.kernels, q.kernels.at(i)); };
  const auto predicate = [&]() -> const Predicate& { return *Scenario::find(s.predicates, *q.predicate); };

  switch (q.kind) {
    case QueryKind::exists_countable:
    case QueryKind::forall_countable:
    case QueryKind::exists_lp:
    case QueryKind::forall_lp: {
      const Quantifier kind =
          (q.kind == QueryKind::exists_countable || q.kind == QueryKind::exists_lp) ? Quantifier::exists
                                                                                     : Quantifier::forall;
      const Regime regime =
          (q.kind == QueryKind::exists_lp || q.kind == QueryKind::forall_lp) ? Regime::lp : Regime::countable;
      const Kernel& f = kernel(0);
      const QuantifierResult r = quantify(kind, regime, f, predicate(), q.dists.at(0));
      json rec = detail::scalar_record(q, r.value);
      rec["witness"] = detail::witness_json(r.witness, f);
      rec["feasible"] = r.feasible;
      rec["regime"] = to_string(r.regime);
      return {rec, false};
    }
    case QueryKind::compose: {
      const Kernel gf = kleisli_compose(kernel(1), kernel(0));
      json rec = detail::scalar_record(q, 0);
      json rows = json::array();
      for (const auto& row : gf.rows()) rows.push_back(detail::rationals_json(row.weights()));
      rec["value"] = rows;
      rec["value_decimal"] = nullptr;
      return {rec, false};
    }
    case QueryKind::metric: {
      return {detail::scalar_record(q, tv_metric(q.dists.at(0), q.dists.at(1))), false};
    }
    case QueryKind::expectation: {
      return {detail::scalar_record(q, expectation(predicate(), q.dists.at(0))), false};
    }
    case QueryKind::determinism: {
      const Kernel& k = kernel(0);
      const bool det = is_deterministic(k);
      json rec = detail::scalar_record(q, 0);
      rec["value"] = det;
      rec["value_decimal"] = nullptr;
      if (det) {
        const PointFunction fn = extract_function(k);
        json w = json::object();
        for (std::size_t x = 0; x < k.source()->size(); ++x) {
          w[k.source()->point(x)] = k.target()->point(fn(x));
        }
        rec["witness"] = w;
      }
      return {rec, false};
    }
    case QueryKind::check_laws: {
      const LawReport laws = run_law_suite(opts.seed, opts.cases);
      bool ok = laws.passed();
      json rec = detail::scalar_record(q, 0);
      json details;
      json law_lines = json::array();
      for (const auto& r : laws.results) {
        law_lines.push_back({{"law", r.name},
                             {"cases", r.cases},
                             {"failures", r.failures},
                             {"first_failure", r.first_failure}});
      }
      details["seed"] = opts.seed;
      details["laws"] = law_lines;
      if (!q.kernels.empty()) {
        const Kernel& f = kernel(0);
        const Predicate& g = predicate();
        json adj = json::array();
        for (Regime regime : {Regime::countable, Regime::lp}) {
          const auto rep = check_adjunction_unit(f, g, regime);
          ok = ok && rep.holds();
          adj.push_back(detail::adjunction_json(rep, f));
        }
        details["adjunction"] = adj;
        if (q.simplex_predicate) {
          const SimplexPredicate& h = *Scenario::find(s.simplex_predicates, *q.simplex_predicate);
          json gal = json::array();
          for (Regime regime : {Regime::countable, Regime::lp}) {
            if (regime == Regime::lp && !h.is_lifted()) continue;
            const auto rep = check_galois(f, g, h, f.rows(), regime);
            ok = ok && rep.holds();
            gal.push_back({{"regime", to_string(regime)},
                           {"exists_equivalent", rep.exists_equivalent()},
                           {"forall_equivalent", rep.forall_equivalent()}});
          }
          details["galois"] = gal;
        }
      }
      rec["value"] = ok;
      rec["value_decimal"] = nullptr;
      rec["details"] = details;
      return {rec, !ok};
    }
  }
  return {};
}

struct RunResult {
  std::vector<QueryOutcome> outcomes;
  int exit_code = 0;
};

/// Executes all queries; with `parallel` they run concurrently but the
/// results keep query order.
inline RunResult run_scenario(const Scenario& s, const RunOptions& opts) {
  RunResult result;
  if (opts.parallel) {
    std::vector<std::future<QueryOutcome>> futures;
    for (const auto& q : s.queries) {
      futures.push_back(std::async(std::launch::async, [&s, &q, &opts] { return execute_query(s, q, opts); }));
    }
    for (auto& fut : futures) result.outcomes.push_back(fut.get());
  } else {
    for (const auto& q : s.queries) result.outcomes.push_back(execute_query(s, q, opts));
  }
  for (const auto& o : result.outcomes) {
    if (o.law_failure) result.exit_code = 3;
  }
  return result;
}

inline std::string render_text(const std::vector<QueryOutcome>& outcomes) {
  std::string out;
  const auto plain = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const json& r = outcomes[i].record;
    out += "[" + std::to_string(i + 1) + "] " + r["kind"].get<std::string>() + " " + r["inputs"].dump() + "\n";
    out += "    value    = " + plain(r["value"]);
    if (!r["value_decimal"].is_null()) out += "  (approx " + r["value_decimal"].get<std::string>() + ")";
    out += "\n";
    if (!r["witness"].is_null()) out += "    witness  = " + plain(r["witness"]) + "\n";
    out += "    feasible = " + plain(r["feasible"]);
    if (!r["regime"].is_null()) out += "  regime = " + plain(r["regime"]);
    out += "\n";
    if (r.contains("details")) {
      for (const auto& law : r["details"]["laws"]) {
        out += std::string("    ") + (law["failures"].get<std::size_t>() ? "FAIL " : "pass ") +
               law["law"].get<std::string>() + " " +
               std::to_string(law["cases"].get<std::size_t>() - law["failures"].get<std::size_t>()) + "/" +
               std::to_string(law["cases"].get<std::size_t>()) + "\n";
      }
      if (r["details"].contains("adjunction")) {
        for (const auto& a : r["details"]["adjunction"]) {
          out += "    adjunction " + a["regime"].get<std::string>() + ": " +
                 (a["holds"].get<bool>() ? "holds" : "VIOLATED") + "\n";
        }
      }
      if (r["details"].contains("galois")) {
        for (const auto& g : r["details"]["galois"]) {
          const bool ok = g["exists_equivalent"].get<bool>() && g["forall_equivalent"].get<bool>();
          out += "    galois " + g["regime"].get<std::string>() + ": " + (ok ? "holds" : "VIOLATED") + "\n";
        }
      }
    }
  }
  return out;
}

inline std::string render_json(const std::vector<QueryOutcome>& outcomes) {
  json arr = json::array();
  for (const auto& o : outcomes) arr.push_back(o.record);
  return arr.dump(2) + "\n";
}

}  // namespace giryq
