#pragma once

#include <optional>

#include "nrcdt/measure.hpp"
#include "nrcdt/types.hpp"

namespace nrcdt {

// Midpoint grid t_j = (j - 1/2)/n_t in (0,1); symmetric: t_j + t_{n+1-j} = 1.
struct QuantileGrid {
  int n_t;

  explicit QuantileGrid(int n);
  double t(int j) const { return (j + 0.5) / n_t; }  // j = 0..n_t-1
};

enum class CdtMode {
  Exact,        // discrete quantile of the atomic measure
  LinearInterp  // piecewise-linear inverse of the stripe-histogram CDF
};

// F(s) = total weight of atoms <= s.
double cdf_eval(const Measure1D& m, double s);

// inf{s : F(s) > t}: position of the first atom whose cumulative weight
// strictly exceeds t.
double quantile_eval(const Measure1D& m, double t);

// Sampled transform values F^{[-1]}(t_j).  LinearInterp treats each atom as
// a histogram bin of the given width centered at the atom.
Vec cdt_sample(const Measure1D& m, const QuantileGrid& grid, CdtMode mode,
               std::optional<double> bin_width = std::nullopt);

// Midpoint-rule approximation of the quantile-function L2 distance.
double wasserstein2(const Measure1D& m1, const Measure1D& m2,
                    const QuantileGrid& grid);

}  // namespace nrcdt
