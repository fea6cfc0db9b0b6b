#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "giryq/error.hpp"
#include "giryq/rational.hpp"

namespace giryq {

/// A named finite measurable space with the discrete sigma-algebra.
/// Declaration order of the points is the canonical order used for every
/// vector and matrix layout.
class FiniteSpace {
 public:
  FiniteSpace(std::string name, std::vector<std::string> points)
      : name_(std::move(name)), points_(std::move(points)) {
    if (points_.empty()) {
      throw Error(ErrorKind::invalid_space, "space '" + name_ + "' has no points");
    }
    std::unordered_set<std::string> seen;
    for (const auto& p : points_) {
      if (!seen.insert(p).second) {
        throw Error(ErrorKind::invalid_space,
                    "duplicate point '" + p + "' in space '" + name_ + "'");
      }
    }
  }

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::string& point(std::size_t i) const { return points_.at(i); }

  std::optional<std::size_t> index_of(std::string_view label) const {
    const auto it = std::find(points_.begin(), points_.end(), label);
    if (it == points_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - points_.begin());
  }

  friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;

 private:
  std::string name_;
  std::vector<std::string> points_;
};

using SpaceRef = std::shared_ptr<const FiniteSpace>;

inline SpaceRef make_space(std::string name, std::vector<std::string> points) {
  return std::make_shared<const FiniteSpace>(std::move(name), std::move(points));
}

inline bool same_space(const SpaceRef& a, const SpaceRef& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_space(const SpaceRef& a, const SpaceRef& b,
                               std::string_view what) {
  if (!same_space(a, b)) {
    throw Error(ErrorKind::space_mismatch,
                std::string(what) + ": '" + (a ? a->name() : "?") + "' vs '" +
                    (b ? b->name() : "?") + "'");
  }
}

class SignedMeasure;

/// A probability distribution on a finite space: a point of TX.
class Dist {
 public:
  /// Validating constructor; see `dist_new`.
  Dist(SpaceRef space, std::vector<Rational> weights)
      : space_(std::move(space)), weights_(std::move(weights)) {
    if (!space_) throw Error(ErrorKind::invalid_space, "null space");
    if (weights_.size() != space_->size()) {
      throw Error(ErrorKind::dimension_mismatch,
                  "distribution on '" + space_->name() + "' needs " +
                      std::to_string(space_->size()) + " weights, got " +
                      std::to_string(weights_.size()));
    }
    Rational total = 0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      if (weights_[i] < 0) {
        throw Error(ErrorKind::negative_weight,
                    "weight " + to_string(weights_[i]) + " at '" +
                        space_->point(i) + "'");
      }
      total += weights_[i];
    }
    if (total != 1) {
      throw Error(ErrorKind::mass_not_one,
                  "weights on '" + space_->name() + "' sum to " + to_string(total));
    }
  }

  static Dist dirac(SpaceRef space, std::size_t index) {
    std::vector<Rational> w(space->size(), Rational(0));
    w.at(index) = 1;
    return Dist(std::move(space), std::move(w));
  }

  const SpaceRef& space() const noexcept { return space_; }
  std::span<const Rational> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  const Rational& operator[](std::size_t i) const { return weights_[i]; }

  /// P(B) for the set of point indices in `subset`.
  Rational mass(std::span<const std::size_t> subset) const {
    Rational m = 0;
    for (auto i : subset) m += weights_.at(i);
    return m;
  }

  friend bool operator==(const Dist& a, const Dist& b) {
    return same_space(a.space_, b.space_) && a.weights_ == b.weights_;
  }

  /// Lexicographic on weights; only meaningful within one space.
  friend bool operator<(const Dist& a, const Dist& b) {
    return a.weights_ < b.weights_;
  }

 private:
  SpaceRef space_;
  std::vector<Rational> weights_;
};

inline Dist dist_new(SpaceRef space, std::vector<Rational> weights) {
  return Dist(std::move(space), std::move(weights));
}

/// A finite signed measure; arises as the difference of two distributions.
class SignedMeasure {
 public:
  SignedMeasure(SpaceRef space, std::vector<Rational> weights)
      : space_(std::move(space)), weights_(std::move(weights)) {
    if (weights_.size() != space_->size()) {
      throw Error(ErrorKind::dimension_mismatch, "signed measure size");
    }
  }

  const SpaceRef& space() const noexcept { return space_; }
  std::span<const Rational> weights() const noexcept { return weights_; }

  Rational total_mass() const {
    Rational t = 0;
    for (const auto& w : weights_) t += w;
    return t;
  }

 private:
  SpaceRef space_;
  std::vector<Rational> weights_;
};

inline SignedMeasure operator-(const Dist& a, const Dist& b) {
  require_same_space(a.space(), b.space(), "measure difference");
  std::vector<Rational> w(a.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = a[i] - b[i];
  return SignedMeasure(a.space(), std::move(w));
}

/// Total variation ||m|| = sum of |m({x})|.
inline Rational tv_norm(const SignedMeasure& m) {
  Rational n = 0;
  for (const auto& w : m.weights()) n += abs(w);
  return n;
}

/// d(R,Q) = sup_B |R(B) - Q(B)|, attained at B* = {x : R({x}) > Q({x})}.
inline Rational tv_metric(const Dist& r, const Dist& q) {
  require_same_space(r.space(), q.space(), "tv_metric");
  Rational d = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] > q[i]) d += r[i] - q[i];
  }
  return d;
}

/// A finitely supported probability measure over arbitrary atoms that
/// support exact equality. Zero-weight atoms are dropped on construction;
/// equality ignores atom order.
template <class Atom>
class FinSuppMeasure {
 public:
  FinSuppMeasure(std::vector<Atom> atoms, std::vector<Rational> weights) {
    if (atoms.size() != weights.size()) {
      throw Error(ErrorKind::dimension_mismatch, "atom/weight count");
    }
    Rational total = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (weights[i] < 0) {
        throw Error(ErrorKind::negative_weight, "atom weight " + to_string(weights[i]));
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (atoms[j] == atoms[i]) {
          throw Error(ErrorKind::duplicate_atom,
                      "atoms " + std::to_string(j) + " and " + std::to_string(i));
        }
      }
      total += weights[i];
    }
    if (total != 1) {
      throw Error(ErrorKind::mass_not_one, "atom weights sum to " + to_string(total));
    }
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (weights[i] != 0) {
        atoms_.push_back(std::move(atoms[i]));
        weights_.push_back(std::move(weights[i]));
      }
    }
  }

  static FinSuppMeasure dirac(Atom atom) {
    return FinSuppMeasure({std::move(atom)}, {Rational(1)});
  }

  /// Builds a measure from possibly repeated atoms, adding up their weights.
  static FinSuppMeasure collect(const std::vector<std::pair<Atom, Rational>>& terms) {
    std::vector<Atom> atoms;
    std::vector<Rational> weights;
    for (const auto& [atom, w] : terms) {
      const auto it = std::find(atoms.begin(), atoms.end(), atom);
      if (it == atoms.end()) {
        atoms.push_back(atom);
        weights.push_back(w);
      } else {
        weights[static_cast<std::size_t>(it - atoms.begin())] += w;
      }
    }
    return FinSuppMeasure(std::move(atoms), std::move(weights));
  }

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  const std::vector<Rational>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return atoms_.size(); }

  /// Weight assigned to `atom` (0 when outside the support).
  Rational weight_of(const Atom& atom) const {
    const auto it = std::find(atoms_.begin(), atoms_.end(), atom);
    return it == atoms_.end()
               ? Rational(0)
               : weights_[static_cast<std::size_t>(it - atoms_.begin())];
  }

  friend bool operator==(const FinSuppMeasure& a, const FinSuppMeasure& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (b.weight_of(a.atoms_[i]) != a.weights_[i]) return false;
    }
    return true;
  }

 private:
  std::vector<Atom> atoms_;
  std::vector<Rational> weights_;
};

template <class Atom>
FinSuppMeasure<Atom> finsupp_new(std::vector<Atom> atoms, std::vector<Rational> weights) {
  return FinSuppMeasure<Atom>(std::move(atoms), std::move(weights));
}

}  // namespace giryq
