#include "nrcdt/cdt.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nrcdt {

QuantileGrid::QuantileGrid(int n) : n_t(n) {
  if (n < 1) throw std::invalid_argument("QuantileGrid: n_t must be positive");
}

double cdf_eval(const Measure1D& m, double s) {
  // index of the last atom <= s
  const Vec& a = m.atoms();
  auto it = std::upper_bound(a.data(), a.data() + a.size(), s);
  Eigen::Index idx = it - a.data();
  return idx == 0 ? 0.0 : m.cumulative()[idx - 1];
}

namespace {

// first atom index whose cumulative weight strictly exceeds t
Eigen::Index quantile_index(const Measure1D& m, double t) {
  const Vec& cum = m.cumulative();
  auto it = std::upper_bound(cum.data(), cum.data() + cum.size(), t);
  Eigen::Index idx = it - cum.data();
  return std::min(idx, m.size() - 1);
}

}  // namespace

double quantile_eval(const Measure1D& m, double t) {
  if (t <= 0.0 || t >= 1.0)
    throw std::invalid_argument("quantile_eval: t must lie in (0,1)");
  return m.atoms()[quantile_index(m, t)];
}

Vec cdt_sample(const Measure1D& m, const QuantileGrid& grid, CdtMode mode,
               std::optional<double> bin_width) {
  Vec out(grid.n_t);
  if (mode == CdtMode::Exact) {
    // both the grid points and the cumulative weights are sorted, so a
    // single forward sweep suffices
    Eigen::Index idx = 0;
    const Vec& cum = m.cumulative();
    for (int j = 0; j < grid.n_t; ++j) {
      double t = grid.t(j);
      while (idx < m.size() - 1 && cum[idx] <= t) ++idx;
      out[j] = m.atoms()[idx];
    }
  } else {
    if (!bin_width || *bin_width <= 0.0)
      throw std::invalid_argument("cdt_sample: linear-interp needs bin width");
    const double h = *bin_width;
    const Vec& cum = m.cumulative();
    Eigen::Index idx = 0;
    for (int j = 0; j < grid.n_t; ++j) {
      double t = grid.t(j);
      while (idx < m.size() - 1 && cum[idx] <= t) ++idx;
      double prev = idx == 0 ? 0.0 : cum[idx - 1];
      double w = cum[idx] - prev;
      // CDF rises linearly from prev to cum[idx] across the bin
      double frac = w > 0.0 ? (t - prev) / w : 0.5;
      out[j] = m.atoms()[idx] - 0.5 * h + frac * h;
    }
  }
  return out;
}

double wasserstein2(const Measure1D& m1, const Measure1D& m2,
                    const QuantileGrid& grid) {
  Vec a = cdt_sample(m1, grid, CdtMode::Exact);
  Vec b = cdt_sample(m2, grid, CdtMode::Exact);
  return std::sqrt((a - b).squaredNorm() / grid.n_t);
}

}  // namespace nrcdt
