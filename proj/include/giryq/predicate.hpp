#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "giryq/error.hpp"
#include "giryq/kernel.hpp"
#include "giryq/measure.hpp"
#include "giryq/rational.hpp"

namespace giryq {

namespace detail {

inline void require_unit_interval(const Rational& v, std::string_view where) {
  if (v < 0 || v > 1) {
    throw Error(ErrorKind::value_out_of_range,
                std::string(where) + ": " + to_string(v) + " not in [0,1]");
  }
}

}  // namespace detail

/// A [0,1]-valued map on a finite space, i.e. a Kleisli arrow X -> 2.
class Predicate {
 public:
  Predicate(SpaceRef space, std::vector<Rational> values)
      : space_(std::move(space)), values_(std::move(values)) {
    if (values_.size() != space_->size()) {
      throw Error(ErrorKind::dimension_mismatch,
                  "predicate on '" + space_->name() + "' needs " +
                      std::to_string(space_->size()) + " values");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
      detail::require_unit_interval(values_[i], "predicate value at '" + space_->point(i) + "'");
    }
  }

  static Predicate constant(const SpaceRef& space, const Rational& c) {
    return Predicate(space, std::vector<Rational>(space->size(), c));
  }

  const SpaceRef& space() const noexcept { return space_; }
  const std::vector<Rational>& values() const noexcept { return values_; }
  const Rational& operator()(std::size_t x) const { return values_.at(x); }
  std::size_t size() const noexcept { return values_.size(); }

  friend bool operator==(const Predicate& a, const Predicate& b) {
    return same_space(a.space_, b.space_) && a.values_ == b.values_;
  }

 private:
  SpaceRef space_;
  std::vector<Rational> values_;
};

/// g1 |- g2 iff g1(x) <= g2(x) everywhere.
inline bool entails(const Predicate& g1, const Predicate& g2) {
  require_same_space(g1.space(), g2.space(), "entails");
  for (std::size_t x = 0; x < g1.size(); ++x) {
    if (g1(x) > g2(x)) return false;
  }
  return true;
}

/// The integral of g against p.
inline Rational expectation(const Predicate& g, const Dist& p) {
  require_same_space(g.space(), p.space(), "expectation");
  Rational e = 0;
  for (std::size_t y = 0; y < p.size(); ++y) e += p[y] * g(y);
  return e;
}

/// The expectation lift P -> integral of base dP, a predicate on the simplex.
class LiftedPredicate {
 public:
  explicit LiftedPredicate(Predicate base) : base_(std::move(base)) {}

  const Predicate& base() const noexcept { return base_; }
  const SpaceRef& space() const noexcept { return base_.space(); }
  Rational operator()(const Dist& p) const { return expectation(base_, p); }

  friend bool operator==(const LiftedPredicate&, const LiftedPredicate&) = default;

 private:
  Predicate base_;
};

/// A predicate on the simplex given by finitely many probe values and an
/// explicit value everywhere else.
class ProbeTable {
 public:
  ProbeTable(SpaceRef space, std::vector<std::pair<Dist, Rational>> entries,
             Rational default_value)
      : space_(std::move(space)), entries_(std::move(entries)),
        default_(std::move(default_value)) {
    detail::require_unit_interval(default_, "probe table default");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      require_same_space(space_, entries_[i].first.space(), "probe table entry");
      detail::require_unit_interval(entries_[i].second, "probe table value");
      for (std::size_t j = 0; j < i; ++j) {
        if (entries_[j].first == entries_[i].first) {
          throw Error(ErrorKind::duplicate_atom,
                      "probe table entries " + std::to_string(j) + " and " +
                          std::to_string(i));
        }
      }
    }
  }

  const SpaceRef& space() const noexcept { return space_; }
  const std::vector<std::pair<Dist, Rational>>& entries() const noexcept { return entries_; }
  const Rational& default_value() const noexcept { return default_; }

  Rational operator()(const Dist& p) const {
    require_same_space(space_, p.space(), "probe table lookup");
    for (const auto& [probe, value] : entries_) {
      if (probe == p) return value;
    }
    return default_;
  }

  friend bool operator==(const ProbeTable& a, const ProbeTable& b) {
    return same_space(a.space_, b.space_) && a.entries_ == b.entries_ &&
           a.default_ == b.default_;
  }

 private:
  SpaceRef space_;
  std::vector<std::pair<Dist, Rational>> entries_;
  Rational default_;
};

/// A predicate TY -> [0,1] from one of the two representable fragments.
class SimplexPredicate {
 public:
  SimplexPredicate(LiftedPredicate lifted) : repr_(std::move(lifted)) {}
  SimplexPredicate(ProbeTable table) : repr_(std::move(table)) {}

  static SimplexPredicate lift(Predicate base) {
    return SimplexPredicate(LiftedPredicate(std::move(base)));
  }

  bool is_lifted() const noexcept { return std::holds_alternative<LiftedPredicate>(repr_); }
  const LiftedPredicate& lifted() const { return std::get<LiftedPredicate>(repr_); }
  const ProbeTable& table() const { return std::get<ProbeTable>(repr_); }

  const SpaceRef& space() const {
    return std::visit([](const auto& r) -> const SpaceRef& { return r.space(); }, repr_);
  }

  Rational operator()(const Dist& p) const {
    return std::visit([&](const auto& r) { return r(p); }, repr_);
  }

  friend bool operator==(const SimplexPredicate&, const SimplexPredicate&) = default;

 private:
  std::variant<LiftedPredicate, ProbeTable> repr_;
};

/// f*(h) = h o f: evaluate h at each row of f.
inline Predicate substitute(const SimplexPredicate& h, const Kernel& f) {
  require_same_space(h.space(), f.target(), "substitute");
  std::vector<Rational> values;
  values.reserve(f.rows().size());
  for (const auto& row : f.rows()) values.push_back(h(row));
  return Predicate(f.source(), std::move(values));
}

}  // namespace giryq
