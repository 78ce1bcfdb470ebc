#pragma once

#include <string>

#include "nrcdt/cdt.hpp"
#include "nrcdt/radon.hpp"
#include "nrcdt/types.hpp"

namespace nrcdt {

// n_t x n_theta table of per-direction standardized CDTs; column i holds
// the transform along direction i with zero mean and unit standard
// deviation under the midpoint rule.
struct FeatureMatrix {
  Mat values;  // n_t x n_theta
  DirectionSet directions;
};

enum class HVariant { Max, Ha, Hb, Hc, Hd };

enum class FeatureMethod { Eucl, Rcdt, Mnrcdt, Ha, Hb, Hc, Hd, Tv };

FeatureMethod parse_method(const std::string& name);
std::string method_name(FeatureMethod m);

// Standardize each direction's CDT column (zero mean, unit std); throws if
// any direction's projection has vanishing spread.
FeatureMatrix normalize_family(const ProjectionFamily& family,
                               const QuantileGrid& grid, CdtMode mode);

// Rowwise reduction over directions: max, sup|.|, inf|.|, sup|.|-inf|.|,
// sup-inf.
Vec h_reduce(const FeatureMatrix& fm, HVariant variant);

// Rowwise cyclic total variation over the angle-sorted direction order
// (circle direction sets only).
Vec tv_reduce(const FeatureMatrix& fm);

// Unnormalized CDT columns concatenated in direction order (length
// n_t * n_theta).
Vec rcdt_flatten(const ProjectionFamily& family, const QuantileGrid& grid,
                 CdtMode mode);

// End-to-end feature extraction.
Vec feature_pipeline(const GridImage& img, FeatureMethod method,
                     const DirectionSet& directions, int n_radii,
                     const QuantileGrid& grid);
Vec feature_pipeline(const PointCloud& cloud, FeatureMethod method,
                     const DirectionSet& directions, const QuantileGrid& grid);

// One feature vector per row, prefixed by a header naming the method and
// the discretization sizes.
void write_features_csv(const std::string& path, const Mat& rows,
                        const std::string& method, Eigen::Index n_dir,
                        int n_radii, int n_t);

}  // namespace nrcdt
