#include "rgg/schedule.hpp"

#include <cmath>
#include <stdexcept>

namespace rgg {

RadiusSchedule RadiusSchedule::sub(double b) {
  if (!(b > 0.0 && b < 1.0)) throw std::invalid_argument("sub schedule: exponent b must be in (0,1)");
  return RadiusSchedule{Regime::Sub, b};
}

RadiusSchedule RadiusSchedule::conn(double t) {
  if (!(t > 0.0)) throw std::invalid_argument("conn schedule: t must be > 0");
  return RadiusSchedule{Regime::Conn, t};
}

RadiusSchedule RadiusSchedule::super(double a) {
  if (!(a > 0.0)) throw std::invalid_argument("super schedule: exponent a must be > 0");
  return RadiusSchedule{Regime::Super, a};
}

RadiusSchedule RadiusSchedule::sparse(double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("sparse schedule: eps must be > 0");
  return RadiusSchedule{Regime::Sparse, eps};
}

double RadiusSchedule::target_nrd(std::size_t n) const {
  const double ln_n = std::log(static_cast<double>(n));
  switch (regime) {
    case Regime::Sub:
      return std::pow(ln_n, param);
    case Regime::Conn:
      return param * ln_n;
    case Regime::Super:
      return std::pow(ln_n, 1.0 + param);
    case Regime::Sparse:
      return std::pow(static_cast<double>(n), -param);
  }
  throw std::logic_error("RadiusSchedule: bad regime");
}

double RadiusSchedule::radius_for(std::size_t n, int d) const {
  if (n < 3) throw std::domain_error("radius_for: n must be >= 3");
  if (d < 1) throw std::invalid_argument("radius_for: dimension must be >= 1");
  const double target = target_nrd(n);
  if (regime == Regime::Sub) {
    // ln n / (n r^d) > 1 keeps the growth scale ln n / ln(ln n / n r^d) defined
    if (!(std::log(static_cast<double>(n)) / target > 1.0))
      throw std::domain_error("radius_for: n too small for the sub schedule");
  }
  return std::pow(target / static_cast<double>(n), 1.0 / d);
}

std::string RadiusSchedule::regime_name() const {
  switch (regime) {
    case Regime::Sub:
      return "sub";
    case Regime::Conn:
      return "conn";
    case Regime::Super:
      return "super";
    case Regime::Sparse:
      return "sparse";
  }
  throw std::logic_error("RadiusSchedule: bad regime");
}

RadiusSchedule RadiusSchedule::parse(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("regime: want 'sub:b' | 'conn:t' | 'super:a' | 'sparse:eps'");
  const std::string kind = s.substr(0, colon);
  double v = 0.0;
  try {
    v = std::stod(s.substr(colon + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("regime: cannot parse parameter in '" + s + "'");
  }
  if (kind == "sub") return sub(v);
  if (kind == "conn") return conn(v);
  if (kind == "super") return super(v);
  if (kind == "sparse") return sparse(v);
  throw std::invalid_argument("regime: unknown kind '" + kind + "'");
}

}  // namespace rgg
