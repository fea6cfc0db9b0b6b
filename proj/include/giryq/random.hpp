#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "giryq/kernel.hpp"
#include "giryq/lp.hpp"
#include "giryq/measure.hpp"
#include "giryq/predicate.hpp"
#include "giryq/rational.hpp"

namespace giryq {

/// Seeded generator of small random rational instances. Draws use plain
/// modular reduction of mt19937_64 output so sequences are identical on
/// every standard library.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  bool chance(int numerator, int denominator) { return integer(1, denominator) <= numerator; }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(n) - 1)); }

  SpaceRef space(const std::string& name, std::size_t min_size, std::size_t max_size) {
    const auto n = static_cast<std::size_t>(
        integer(static_cast<std::int64_t>(min_size), static_cast<std::int64_t>(max_size)));
    std::vector<std::string> points;
    for (std::size_t i = 0; i < n; ++i) points.push_back(name + std::to_string(i + 1));
    return make_space(name, std::move(points));
  }

  /// Random distribution with small integer weights, zeros included.
  Dist dist(const SpaceRef& space, std::int64_t max_weight = 6) {
    std::vector<Rational> w(space->size());
    Rational total = 0;
    for (auto& v : w) {
      v = chance(1, 4) ? 0 : integer(0, max_weight);
      total += v;
    }
    if (total == 0) {
      w[index(w.size())] = 1;
      total = 1;
    }
    for (auto& v : w) v /= total;
    return Dist(space, std::move(w));
  }

  /// Rows are random distributions, occasional Diracs, and occasional
  /// copies of earlier rows so that fibers have more than one point.
  Kernel kernel(const SpaceRef& source, const SpaceRef& target) {
    std::vector<Dist> rows;
    for (std::size_t x = 0; x < source->size(); ++x) {
      if (x > 0 && chance(1, 4)) {
        rows.push_back(rows[index(x)]);
      } else if (chance(1, 5)) {
        rows.push_back(Dist::dirac(target, index(target->size())));
      } else {
        rows.push_back(dist(target));
      }
    }
    return Kernel(source, target, std::move(rows));
  }

  PointFunction point_function(const SpaceRef& source, const SpaceRef& target) {
    std::vector<std::size_t> a(source->size());
    for (auto& y : a) y = index(target->size());
    return PointFunction(source, target, std::move(a));
  }

  Rational unit_value() {
    const auto d = integer(1, 10);
    return Rational(Integer(integer(0, d)), Integer(d));
  }

  Predicate predicate(const SpaceRef& space) {
    std::vector<Rational> v(space->size());
    for (auto& r : v) r = unit_value();
    return Predicate(space, std::move(v));
  }

  Rational small_rational(std::int64_t bound = 3) {
    const auto d = integer(1, 3);
    return Rational(Integer(integer(-bound * d, bound * d)), Integer(d));
  }

  /// Equality-form program of the given size; about half of the instances
  /// get a right-hand side from a nonnegative point so they are feasible.
  LinearProgram linear_program(std::size_t rows, std::size_t cols) {
    LinearProgram lp;
    lp.sense = chance(1, 2) ? Sense::minimize : Sense::maximize;
    for (std::size_t j = 0; j < cols; ++j) lp.objective.push_back(small_rational());
    for (std::size_t i = 0; i < rows; ++i) {
      std::vector<Rational> row(cols);
      for (auto& a : row) a = chance(1, 4) ? Rational(0) : small_rational();
      lp.constraints.push_back(std::move(row));
    }
    if (chance(1, 2)) {
      std::vector<Rational> x0(cols);
      for (auto& v : x0) v = chance(1, 3) ? Rational(0) : Rational(integer(0, 4));
      for (std::size_t i = 0; i < rows; ++i) {
        Rational b = 0;
        for (std::size_t j = 0; j < cols; ++j) b += lp.constraints[i][j] * x0[j];
        lp.rhs.push_back(b);
      }
    } else {
      for (std::size_t i = 0; i < rows; ++i) lp.rhs.push_back(small_rational());
    }
    return lp;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace giryq
