#include "rgg/theory.hpp"

#include <cmath>
#include <stdexcept>

namespace rgg {

double growth_scale(std::size_t n, double nrd) {
  if (n < 3) throw std::domain_error("growth_scale: n must be >= 3");
  const double ln_n = std::log(static_cast<double>(n));
  if (!(nrd > 0.0) || !(nrd < ln_n))
    throw std::domain_error("growth_scale: need 0 < n r^d < ln n");
  return ln_n / std::log(ln_n / nrd);
}

double rate_function(double x) {
  if (!(x > 0.0)) throw std::domain_error("rate_function: x must be > 0");
  return x * std::log(x) - x + 1.0;
}

double rate_function_inverse_upper(double c) {
  if (!(c >= 0.0)) throw std::domain_error("rate_function_inverse_upper: c must be >= 0");
  if (c == 0.0) return 1.0;

  double lo = 1.0;
  double hi = 2.0;
  while (rate_function(hi) < c) {
    lo = hi;
    hi *= 2.0;
    if (std::isinf(hi)) throw std::domain_error("rate_function_inverse_upper: c too large");
  }
  // strictly increasing on [1, inf), so the bracket is safe
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (rate_function(mid) < c)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double tilted_window_mass(double volume, double t, double f_max) {
  if (!(volume > 0.0)) throw std::domain_error("tilted_window_mass: volume must be > 0");
  if (!(f_max > 0.0)) throw std::domain_error("tilted_window_mass: f_max must be > 0");
  if (std::isinf(t)) return volume;
  if (!(t > 0.0)) throw std::domain_error("tilted_window_mass: t must be > 0 or infinity");
  const double tilt = rate_function_inverse_upper(1.0 / (t * f_max * volume));
  return volume * tilt;
}

double predicted_power_ratio(int l, int d, double t, double volume, double f_max) {
  if (l < 1) throw std::domain_error("predicted_power_ratio: l must be >= 1");
  if (d < 1) throw std::domain_error("predicted_power_ratio: d must be >= 1");
  const double scale = std::pow(static_cast<double>(l), d);
  return tilted_window_mass(volume, scale * t, f_max) / tilted_window_mass(volume, t, f_max);
}

std::vector<TheoryRow> theory_table(int l, int d, double volume, double f_max, double t_min,
                                    double t_max, int steps) {
  if (!(t_min > 0.0) || !(t_max > t_min)) throw std::domain_error("theory_table: need 0 < t_min < t_max");
  if (steps < 2) throw std::domain_error("theory_table: steps must be >= 2");
  std::vector<TheoryRow> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  const double log_lo = std::log(t_min);
  const double log_hi = std::log(t_max);
  for (int k = 0; k < steps; ++k) {
    const double t = std::exp(log_lo + (log_hi - log_lo) * k / (steps - 1));
    TheoryRow row;
    row.t = t;
    row.xi = tilted_window_mass(volume, t, f_max);
    row.c_ratio = predicted_power_ratio(l, d, t, volume, f_max);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace rgg
