#include "rgg/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rgg {

DensitySpec DensitySpec::uniform_cube() { return DensitySpec{DensityKind::UniformCube, 1.0, 1.0}; }

DensitySpec DensitySpec::gaussian() { return DensitySpec{DensityKind::Gaussian, 0.0, 0.0}; }

DensitySpec DensitySpec::step_cube(double lo, double hi) {
  if (!(lo >= 0.0) || !(hi >= 0.0))
    throw std::invalid_argument("step-cube: levels must be nonnegative");
  if (std::abs(lo + hi - 2.0) > 1e-12)
    throw std::invalid_argument("step-cube: levels must sum to 2 so the density has mass 1");
  return DensitySpec{DensityKind::StepCube, lo, hi};
}

double DensitySpec::f_max(int d) const {
  switch (kind) {
    case DensityKind::UniformCube:
      return 1.0;
    case DensityKind::Gaussian:
      return std::pow(2.0 * M_PI, -0.5 * d);
    case DensityKind::StepCube:
      return std::max(level_lo, level_hi);
  }
  throw std::logic_error("DensitySpec: bad kind");
}

double DensitySpec::f_min(int d) const {
  switch (kind) {
    case DensityKind::UniformCube:
      return 1.0;
    case DensityKind::Gaussian:
      (void)d;
      return 0.0;
    case DensityKind::StepCube:
      return std::min(level_lo, level_hi);
  }
  throw std::logic_error("DensitySpec: bad kind");
}

std::string DensitySpec::name() const {
  switch (kind) {
    case DensityKind::UniformCube:
      return "uniform-cube";
    case DensityKind::Gaussian:
      return "gaussian";
    case DensityKind::StepCube:
      return "step-cube:" + std::to_string(level_lo) + "," + std::to_string(level_hi);
  }
  throw std::logic_error("DensitySpec: bad kind");
}

DensitySpec DensitySpec::parse(const std::string& s) {
  if (s == "uniform-cube") return uniform_cube();
  if (s == "gaussian") return gaussian();
  const std::string prefix = "step-cube:";
  if (s.rfind(prefix, 0) == 0) {
    const std::string rest = s.substr(prefix.size());
    const auto comma = rest.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("density: step-cube wants 'step-cube:lo,hi'");
    try {
      const double lo = std::stod(rest.substr(0, comma));
      const double hi = std::stod(rest.substr(comma + 1));
      return step_cube(lo, hi);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("density: cannot parse step-cube levels in '" + s + "'");
    }
  }
  throw std::invalid_argument("density: unknown kind '" + s + "'");
}

}  // namespace rgg
