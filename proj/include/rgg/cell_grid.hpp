#ifndef RGG_CELL_GRID_HPP
#define RGG_CELL_GRID_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "rgg/cloud.hpp"

namespace rgg {

// Uniform cell grid over the bounding box of a cloud, cell side equal to the
// query radius, bucketed CSR-style. Any two points at l^p distance < radius
// land in the same cell or in adjacent cells (every p-ball of radius r fits
// in the max-norm ball of radius r), so scanning the 3^d block around a
// point's cell sees all of its geometric neighbors for every p >= 1.
//
// If a literal side-r grid would exceed the cell budget the side grows until
// it fits; the scan block stays 3^d because the side never drops below r.
class CellGrid {
 public:
  CellGrid(const PointCloud& cloud, double radius)
      : dim_(cloud.dim), counts_(static_cast<std::size_t>(cloud.dim), 1) {
    const std::size_t n = cloud.size();
    const int d = dim_;
    lo_.assign(static_cast<std::size_t>(d), 0.0);
    std::vector<double> hi(static_cast<std::size_t>(d), 0.0);
    for (int k = 0; k < d; ++k) {
      lo_[k] = hi[k] = cloud.coords[static_cast<std::size_t>(k)];
    }
    for (std::size_t i = 1; i < n; ++i) {
      const auto p = cloud.point(i);
      for (int k = 0; k < d; ++k) {
        lo_[k] = std::min(lo_[k], p[k]);
        hi[k] = std::max(hi[k], p[k]);
      }
    }

    // tiny inflation so a pair at max-norm distance exactly r still lands in
    // adjacent cells after rounding
    side_ = radius * (1.0 + 1e-12);
    constexpr std::int64_t max_cells = std::int64_t{1} << 22;
    for (;;) {
      std::int64_t total = 1;
      bool overflow = false;
      for (int k = 0; k < d; ++k) {
        const double extent = hi[k] - lo_[k];
        const auto c = static_cast<std::int64_t>(std::floor(extent / side_)) + 1;
        counts_[k] = std::max<std::int64_t>(1, c);
        if (total > max_cells / counts_[k]) {
          overflow = true;
          break;
        }
        total *= counts_[k];
      }
      if (!overflow) break;
      side_ *= 2.0;
    }

    std::int64_t total = 1;
    for (int k = 0; k < d; ++k) total *= counts_[k];

    cell_of_.resize(n);
    std::vector<std::int32_t> bucket_size(static_cast<std::size_t>(total), 0);
    for (std::size_t i = 0; i < n; ++i) {
      cell_of_[i] = cell_index(cloud.point(i));
      ++bucket_size[static_cast<std::size_t>(cell_of_[i])];
    }
    offsets_.assign(static_cast<std::size_t>(total) + 1, 0);
    for (std::int64_t c = 0; c < total; ++c)
      offsets_[static_cast<std::size_t>(c) + 1] =
          offsets_[static_cast<std::size_t>(c)] + bucket_size[static_cast<std::size_t>(c)];
    ids_.resize(n);
    std::vector<std::int32_t> cursor(static_cast<std::size_t>(total), 0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto c = static_cast<std::size_t>(cell_of_[i]);
      ids_[static_cast<std::size_t>(offsets_[c]) + static_cast<std::size_t>(cursor[c]++)] =
          static_cast<std::int32_t>(i);
    }
  }

  // Calls f(j) for every point j in the 3^d cell block around point i,
  // including i itself. Candidate set; callers filter by true distance.
  template <class F>
  void visit_candidates(std::size_t i, F&& f) const {
    std::vector<std::int64_t> c(static_cast<std::size_t>(dim_));
    std::int64_t rem = cell_of_[i];
    for (int k = dim_ - 1; k >= 0; --k) {
      c[static_cast<std::size_t>(k)] = rem % counts_[static_cast<std::size_t>(k)];
      rem /= counts_[static_cast<std::size_t>(k)];
    }
    std::vector<std::int64_t> cur(static_cast<std::size_t>(dim_));
    scan_block(c, cur, 0, std::forward<F>(f));
  }

 private:
  template <class F>
  void scan_block(const std::vector<std::int64_t>& center, std::vector<std::int64_t>& cur,
                  int k, F&& f) const {
    if (k == dim_) {
      std::int64_t cell = 0;
      for (int t = 0; t < dim_; ++t)
        cell = cell * counts_[static_cast<std::size_t>(t)] + cur[static_cast<std::size_t>(t)];
      const auto b = static_cast<std::size_t>(cell);
      for (std::int64_t s = offsets_[b]; s < offsets_[b + 1]; ++s)
        f(static_cast<std::size_t>(ids_[static_cast<std::size_t>(s)]));
      return;
    }
    const std::int64_t from = std::max<std::int64_t>(0, center[static_cast<std::size_t>(k)] - 1);
    const std::int64_t to =
        std::min(counts_[static_cast<std::size_t>(k)] - 1, center[static_cast<std::size_t>(k)] + 1);
    for (std::int64_t v = from; v <= to; ++v) {
      cur[static_cast<std::size_t>(k)] = v;
      scan_block(center, cur, k + 1, std::forward<F>(f));
    }
  }

  std::int64_t cell_index(std::span<const double> p) const {
    std::int64_t cell = 0;
    for (int k = 0; k < dim_; ++k) {
      auto c = static_cast<std::int64_t>(std::floor((p[k] - lo_[k]) / side_));
      c = std::clamp<std::int64_t>(c, 0, counts_[static_cast<std::size_t>(k)] - 1);
      cell = cell * counts_[static_cast<std::size_t>(k)] + c;
    }
    return cell;
  }

  int dim_;
  double side_ = 0.0;
  std::vector<double> lo_;
  std::vector<std::int64_t> counts_;
  std::vector<std::int64_t> cell_of_;
  std::vector<std::int64_t> offsets_;
  std::vector<std::int32_t> ids_;
};

}  // namespace rgg

#endif  // RGG_CELL_GRID_HPP
