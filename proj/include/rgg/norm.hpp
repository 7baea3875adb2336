#ifndef RGG_NORM_HPP
#define RGG_NORM_HPP

#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

namespace rgg {

// l^p norm parameter, p in [1, inf]. p = infinity is the max norm.
struct LpNorm {
  double p = 2.0;

  LpNorm() = default;
  explicit LpNorm(double p_in) : p(p_in) {
    if (!(p >= 1.0))  // NaN rejected too
      throw std::invalid_argument("LpNorm: p must be >= 1, got " + std::to_string(p_in));
  }

  static LpNorm l1() { return LpNorm(1.0); }
  static LpNorm l2() { return LpNorm(2.0); }
  static LpNorm linf() { return LpNorm(std::numeric_limits<double>::infinity()); }

  bool is_inf() const { return std::isinf(p); }

  // "1" | "2" | "inf" | real >= 1
  static LpNorm parse(const std::string& s);
  std::string str() const;
};

// ||x - y||_p. Throws std::invalid_argument on dimension mismatch.
double lp_distance(std::span<const double> x, std::span<const double> y, LpNorm norm);

}  // namespace rgg

#endif  // RGG_NORM_HPP
