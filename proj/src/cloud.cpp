#include "rgg/cloud.hpp"

#include <stdexcept>

#include "rgg/rng.hpp"

namespace rgg {

namespace {

void fill_uniform_cube(std::span<double> coords, SplitMix64& rng) {
  for (double& c : coords) c = rng.uniform01();
}

// Inverse CDF along coordinate 0 for the two-level density, remaining
// coordinates uniform. F(x) = lo*x on [0,1/2], F(x) = lo/2 + hi*(x-1/2) above.
void fill_step_cube(std::span<double> coords, int d, double lo, double hi, SplitMix64& rng) {
  const double mass_lo = 0.5 * lo;
  for (std::size_t i = 0; i < coords.size(); i += static_cast<std::size_t>(d)) {
    const double u = rng.uniform01();
    if (lo > 0.0 && u < mass_lo)
      coords[i] = u / lo;
    else
      coords[i] = 0.5 + (u - mass_lo) / hi;
    for (int k = 1; k < d; ++k) coords[i + static_cast<std::size_t>(k)] = rng.uniform01();
  }
}

}  // namespace

PointCloud sample_points(std::size_t n, const DensitySpec& density, int d, std::uint64_t seed,
                         double radius, LpNorm norm) {
  if (n < 1) throw std::invalid_argument("sample_points: n must be >= 1");
  if (d < 1) throw std::invalid_argument("sample_points: dimension must be >= 1");

  PointCloud cloud;
  cloud.dim = d;
  cloud.radius = radius;
  cloud.norm = norm;
  cloud.coords.resize(n * static_cast<std::size_t>(d));

  SplitMix64 rng(seed);
  switch (density.kind) {
    case DensityKind::UniformCube:
      fill_uniform_cube(cloud.coords, rng);
      break;
    case DensityKind::Gaussian:
      rng.fill_gaussian(cloud.coords);
      break;
    case DensityKind::StepCube:
      fill_step_cube(cloud.coords, d, density.level_lo, density.level_hi, rng);
      break;
    default:
      throw std::invalid_argument("sample_points: unsupported density kind");
  }
  return cloud;
}

}  // namespace rgg
