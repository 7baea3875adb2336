#include "rgg/norm.hpp"

#include <charconv>

namespace rgg {

LpNorm LpNorm::parse(const std::string& s) {
  if (s == "inf" || s == "infinity") return LpNorm::linf();
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("LpNorm: cannot parse p value '" + s + "'");
  return LpNorm(v);
}

std::string LpNorm::str() const {
  if (is_inf()) return "inf";
  if (p == static_cast<double>(static_cast<long long>(p)))
    return std::to_string(static_cast<long long>(p));
  return std::to_string(p);
}

double lp_distance(std::span<const double> x, std::span<const double> y, LpNorm norm) {
  if (x.size() != y.size())
    throw std::invalid_argument("lp_distance: dimension mismatch");
  const std::size_t d = x.size();
  if (norm.is_inf()) {
    double m = 0.0;
    for (std::size_t k = 0; k < d; ++k) m = std::max(m, std::abs(x[k] - y[k]));
    return m;
  }
  if (norm.p == 1.0) {
    double s = 0.0;
    for (std::size_t k = 0; k < d; ++k) s += std::abs(x[k] - y[k]);
    return s;
  }
  if (norm.p == 2.0) {
    double s = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      const double diff = x[k] - y[k];
      s += diff * diff;
    }
    return std::sqrt(s);
  }
  double s = 0.0;
  for (std::size_t k = 0; k < d; ++k) s += std::pow(std::abs(x[k] - y[k]), norm.p);
  return std::pow(s, 1.0 / norm.p);
}

}  // namespace rgg
