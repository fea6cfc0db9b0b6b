#pragma once

#include <span>
#include <string>

#include "giryq/kernel.hpp"
#include "giryq/measure.hpp"
#include "giryq/rational.hpp"

namespace giryq {

inline std::string format_vector(std::span<const Rational> values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += to_string(values[i]);
  }
  return out + ")";
}

inline std::string format_dist(const Dist& p) { return format_vector(p.weights()); }

inline std::string format_kernel(const Kernel& k) {
  std::string out = "[";
  for (std::size_t x = 0; x < k.rows().size(); ++x) {
    if (x) out += ", ";
    out += format_dist(k.row(x));
  }
  return out + "]";
}

}  // namespace giryq
