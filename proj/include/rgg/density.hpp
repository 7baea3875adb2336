#ifndef RGG_DENSITY_HPP
#define RGG_DENSITY_HPP

#include <string>

namespace rgg {

enum class DensityKind { UniformCube, Gaussian, StepCube };

// Sampling density on R^d. Three bounded families:
//   uniform-cube  f = 1 on [0,1]^d
//   gaussian      standard normal product density
//   step-cube     two constant levels on [0,1]^d, split at coordinate 0 = 1/2
// level_lo/level_hi are the step-cube levels; mass 1 forces lo + hi = 2.
struct DensitySpec {
  DensityKind kind = DensityKind::UniformCube;
  double level_lo = 1.0;
  double level_hi = 1.0;

  static DensitySpec uniform_cube();
  static DensitySpec gaussian();
  static DensitySpec step_cube(double lo, double hi);

  // essential supremum of the density in dimension d
  double f_max(int d) const;
  // essential infimum over the support
  double f_min(int d) const;

  std::string name() const;
  // "uniform-cube" | "gaussian" | "step-cube:lo,hi"
  static DensitySpec parse(const std::string& s);
};

}  // namespace rgg

#endif  // RGG_DENSITY_HPP
