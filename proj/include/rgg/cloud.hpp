#ifndef RGG_CLOUD_HPP
#define RGG_CLOUD_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "rgg/density.hpp"
#include "rgg/norm.hpp"

namespace rgg {

// A realization of the point process: n points in R^d stored row-major,
// together with the radius and norm that define the geometric graph on them.
struct PointCloud {
  int dim = 0;
  double radius = 0.0;
  LpNorm norm;
  std::vector<double> coords;  // size() == n * dim

  std::size_t size() const { return dim > 0 ? coords.size() / static_cast<std::size_t>(dim) : 0; }

  std::span<const double> point(std::size_t i) const {
    return {coords.data() + i * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)};
  }

  double distance(std::size_t i, std::size_t j) const {
    return lp_distance(point(i), point(j), norm);
  }
};

// n i.i.d. points from the density, bit-deterministic in (seed, n, d, density).
// radius and norm are carried through unchanged; they do not affect sampling.
PointCloud sample_points(std::size_t n, const DensitySpec& density, int d, std::uint64_t seed,
                         double radius, LpNorm norm);

}  // namespace rgg

#endif  // RGG_CLOUD_HPP
