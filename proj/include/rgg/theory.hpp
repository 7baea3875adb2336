#ifndef RGG_THEORY_HPP
#define RGG_THEORY_HPP

#include <cstddef>
#include <vector>

namespace rgg {

// ln n / ln(ln n / nrd): the scale that the clique number, chromatic number
// and maximum degree all track when n r^d is well below ln n. Requires
// n >= 3 and 0 < nrd < ln n (throws std::domain_error otherwise).
double growth_scale(std::size_t n, double nrd);

// x ln x - x + 1 for x > 0. Convex, zero at x = 1.
double rate_function(double x);

// The unique y >= 1 with rate_function(y) = c, for c >= 0. Bisection on a
// doubling bracket, absolute tolerance 1e-12 on y.
double rate_function_inverse_upper(double c);

// Mass of an indicator window of the given volume under the exponential
// tilt e^s calibrated so that volume * rate_function(e^s) = 1 / (t * f_max):
// returns volume * e^s. For t = infinity (the untilted limit) returns the
// volume itself. This is the window's contribution to the limiting value of
// chi / (n r^d); the supremum over all admissible windows is not computed,
// so the value is a lower-bound proxy for that limit.
double tilted_window_mass(double volume, double t, double f_max);

// Predicted limit of chi_l / (l^d chi) for an indicator window: the ratio of
// tilted masses at t * l^d and t. Always in [l^-d, 1]; tends to 1 as t grows
// and to l^-d as t vanishes.
double predicted_power_ratio(int l, int d, double t, double volume, double f_max);

struct TheoryRow {
  double t = 0.0;
  double xi = 0.0;
  double c_ratio = 0.0;
};

// log-spaced t grid from t_min to t_max inclusive, steps >= 2 rows
std::vector<TheoryRow> theory_table(int l, int d, double volume, double f_max, double t_min,
                                    double t_max, int steps);

}  // namespace rgg

#endif  // RGG_THEORY_HPP
