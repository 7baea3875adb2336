#ifndef RGG_SCHEDULE_HPP
#define RGG_SCHEDULE_HPP

#include <cstddef>
#include <string>

namespace rgg {

// Limiting regimes for the radius sequence r_n, parameterized so every
// experiment is reproducible from (regime, param) alone. target_nrd is the
// value of n * r^d the schedule aims for:
//   sub     n r^d = (ln n)^b          0 < b < 1, well below ln n
//   conn    n r^d = t ln n            t > 0
//   super   n r^d = (ln n)^(1+a)      a > 0, well above ln n
//   sparse  n r^d = n^(-eps)          eps > 0, vanishing edge density
enum class Regime { Sub, Conn, Super, Sparse };

struct RadiusSchedule {
  Regime regime = Regime::Conn;
  double param = 1.0;

  static RadiusSchedule sub(double b);
  static RadiusSchedule conn(double t);
  static RadiusSchedule super(double a);
  static RadiusSchedule sparse(double eps);

  double target_nrd(std::size_t n) const;
  // r with n * r^d equal to target_nrd(n). Requires n >= 3; for the sub
  // schedule additionally checks ln n / (n r^d) > 1 (throws std::domain_error).
  double radius_for(std::size_t n, int d) const;

  std::string regime_name() const;
  // "sub:b" | "conn:t" | "super:a" | "sparse:eps"
  static RadiusSchedule parse(const std::string& s);
};

}  // namespace rgg

#endif  // RGG_SCHEDULE_HPP
