#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "giryq/error.hpp"
#include "giryq/measure.hpp"
#include "giryq/rational.hpp"

namespace giryq {

/// A Kleisli arrow X -> Y of the Giry monad on finite spaces: one
/// distribution on the target per source point, stored row-major in source
/// declaration order.
class Kernel {
 public:
  Kernel(SpaceRef source, SpaceRef target, std::vector<Dist> rows)
      : source_(std::move(source)), target_(std::move(target)), rows_(std::move(rows)) {
    if (rows_.size() != source_->size()) {
      throw Error(ErrorKind::dimension_mismatch,
                  "kernel from '" + source_->name() + "' needs " +
                      std::to_string(source_->size()) + " rows, got " +
                      std::to_string(rows_.size()));
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!same_space(rows_[i].space(), target_)) {
        throw Error(ErrorKind::space_mismatch,
                    "row '" + source_->point(i) + "' is not on '" + target_->name() + "'");
      }
    }
  }

  /// Builds a kernel from a rational matrix; a bad row is reported by its
  /// source point label.
  static Kernel from_matrix(SpaceRef source, SpaceRef target,
                            const std::vector<std::vector<Rational>>& matrix) {
    if (matrix.size() != source->size()) {
      throw Error(ErrorKind::dimension_mismatch,
                  "kernel from '" + source->name() + "' needs " +
                      std::to_string(source->size()) + " rows, got " +
                      std::to_string(matrix.size()));
    }
    std::vector<Dist> rows;
    rows.reserve(matrix.size());
    for (std::size_t i = 0; i < matrix.size(); ++i) {
      try {
        rows.emplace_back(target, matrix[i]);
      } catch (const Error& e) {
        throw Error(e.kind(), "row '" + source->point(i) + "': " + e.what());
      }
    }
    return Kernel(std::move(source), std::move(target), std::move(rows));
  }

  const SpaceRef& source() const noexcept { return source_; }
  const SpaceRef& target() const noexcept { return target_; }
  const std::vector<Dist>& rows() const noexcept { return rows_; }
  const Dist& row(std::size_t x) const { return rows_.at(x); }
  const Rational& at(std::size_t x, std::size_t y) const { return rows_.at(x)[y]; }

  friend bool operator==(const Kernel& a, const Kernel& b) {
    return same_space(a.source_, b.source_) && same_space(a.target_, b.target_) &&
           a.rows_ == b.rows_;
  }

 private:
  SpaceRef source_;
  SpaceRef target_;
  std::vector<Dist> rows_;
};

/// An ordinary (total) function between finite spaces, as point indices.
class PointFunction {
 public:
  PointFunction(SpaceRef source, SpaceRef target, std::vector<std::size_t> assignment)
      : source_(std::move(source)), target_(std::move(target)),
        assignment_(std::move(assignment)) {
    if (assignment_.size() != source_->size()) {
      throw Error(ErrorKind::dimension_mismatch, "point function must be total");
    }
    for (auto y : assignment_) {
      if (y >= target_->size()) {
        throw Error(ErrorKind::value_out_of_range, "point index outside target");
      }
    }
  }

  static PointFunction identity(const SpaceRef& space) {
    std::vector<std::size_t> a(space->size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = i;
    return PointFunction(space, space, std::move(a));
  }

  const SpaceRef& source() const noexcept { return source_; }
  const SpaceRef& target() const noexcept { return target_; }
  const std::vector<std::size_t>& assignment() const noexcept { return assignment_; }
  std::size_t operator()(std::size_t x) const { return assignment_.at(x); }

  friend bool operator==(const PointFunction& a, const PointFunction& b) {
    return same_space(a.source_, b.source_) && same_space(a.target_, b.target_) &&
           a.assignment_ == b.assignment_;
  }

 private:
  SpaceRef source_;
  SpaceRef target_;
  std::vector<std::size_t> assignment_;
};

/// (g . f)(x)[z] = sum_y f(x)[y] g(y)[z].
inline Kernel kleisli_compose(const Kernel& g, const Kernel& f) {
  require_same_space(f.target(), g.source(), "kleisli_compose");
  const auto& xs = *f.source();
  const std::size_t ny = g.source()->size();
  const std::size_t nz = g.target()->size();
  std::vector<Dist> rows;
  rows.reserve(xs.size());
  for (std::size_t x = 0; x < xs.size(); ++x) {
    std::vector<Rational> w(nz, Rational(0));
    for (std::size_t y = 0; y < ny; ++y) {
      const Rational& fy = f.at(x, y);
      if (fy == 0) continue;
      for (std::size_t z = 0; z < nz; ++z) w[z] += fy * g.at(y, z);
    }
    rows.emplace_back(g.target(), std::move(w));
  }
  return Kernel(f.source(), g.target(), std::move(rows));
}

/// Monad unit as the Kleisli identity: x -> delta_x.
inline Kernel eta(const SpaceRef& space) {
  std::vector<Dist> rows;
  rows.reserve(space->size());
  for (std::size_t x = 0; x < space->size(); ++x) rows.push_back(Dist::dirac(space, x));
  return Kernel(space, space, std::move(rows));
}

inline Kernel dirac_embed(const PointFunction& fn) {
  std::vector<Dist> rows;
  rows.reserve(fn.source()->size());
  for (std::size_t x = 0; x < fn.source()->size(); ++x) {
    rows.push_back(Dist::dirac(fn.target(), fn(x)));
  }
  return Kernel(fn.source(), fn.target(), std::move(rows));
}

/// On the discrete sigma-algebra every event probability is 0 or 1 iff
/// every singleton entry is.
inline bool is_deterministic(const Kernel& k) {
  for (const auto& row : k.rows()) {
    for (const auto& w : row.weights()) {
      if (w != 0 && w != 1) return false;
    }
  }
  return true;
}

inline PointFunction extract_function(const Kernel& k) {
  std::vector<std::size_t> assignment;
  assignment.reserve(k.rows().size());
  for (std::size_t x = 0; x < k.rows().size(); ++x) {
    const Dist& row = k.row(x);
    // Rows sum to 1, so a row with an entry equal to 1 is zero elsewhere.
    const auto w = row.weights();
    const auto it = std::find(w.begin(), w.end(), Rational(1));
    if (it == w.end()) {
      throw Error(ErrorKind::not_deterministic,
                  "row '" + k.source()->point(x) + "' is not a Dirac measure");
    }
    assignment.push_back(static_cast<std::size_t>(it - w.begin()));
  }
  return PointFunction(k.source(), k.target(), std::move(assignment));
}

/// T(fn)P = P . fn^{-1}.
inline Dist pushforward(const PointFunction& fn, const Dist& p) {
  require_same_space(fn.source(), p.space(), "pushforward");
  std::vector<Rational> w(fn.target()->size(), Rational(0));
  for (std::size_t x = 0; x < p.size(); ++x) w[fn(x)] += p[x];
  return Dist(fn.target(), std::move(w));
}

/// mu_X: averages a finitely supported mixture of distributions.
inline Dist monad_mu(const FinSuppMeasure<Dist>& q) {
  const SpaceRef& space = q.atoms().front().space();
  std::vector<Rational> w(space->size(), Rational(0));
  for (std::size_t i = 0; i < q.size(); ++i) {
    const Dist& atom = q.atoms()[i];
    require_same_space(space, atom.space(), "monad_mu");
    for (std::size_t a = 0; a < w.size(); ++a) w[a] += q.weights()[i] * atom[a];
  }
  return Dist(space, std::move(w));
}

/// f#(P) = integral of f(x) dP: the vector-matrix product P f.
class LiftedKernel {
 public:
  explicit LiftedKernel(Kernel f) : f_(std::move(f)) {}

  Dist operator()(const Dist& p) const {
    require_same_space(f_.source(), p.space(), "lifted kernel");
    std::vector<Rational> w(f_.target()->size(), Rational(0));
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (p[x] == 0) continue;
      for (std::size_t y = 0; y < w.size(); ++y) w[y] += p[x] * f_.at(x, y);
    }
    return Dist(f_.target(), std::move(w));
  }

  const Kernel& kernel() const noexcept { return f_; }

 private:
  Kernel f_;
};

inline LiftedKernel lift_kernel(Kernel f) { return LiftedKernel(std::move(f)); }

/// T(g)P for g viewed as a measurable map Y -> TZ: the image of P, a
/// finitely supported measure over the rows of g (equal rows merge).
inline FinSuppMeasure<Dist> push_through(const Kernel& g, const Dist& p) {
  require_same_space(g.source(), p.space(), "push_through");
  std::vector<std::pair<Dist, Rational>> terms;
  for (std::size_t y = 0; y < p.size(); ++y) {
    if (p[y] != 0) terms.emplace_back(g.row(y), p[y]);
  }
  return FinSuppMeasure<Dist>::collect(terms);
}

}  // namespace giryq
