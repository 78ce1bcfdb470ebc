#pragma once

#include <vector>

#include "nrcdt/types.hpp"

namespace nrcdt {

// Discrete probability measure on the real line: strictly increasing atoms
// with nonnegative weights summing to one.  Duplicate atom positions are
// merged at construction by summing their weights.
class Measure1D {
 public:
  Measure1D(Vec atoms, Vec weights);

  static Measure1D dirac(double position) {
    Vec a(1), w(1);
    a << position;
    w << 1.0;
    return Measure1D(std::move(a), std::move(w));
  }

  const Vec& atoms() const { return atoms_; }
  const Vec& weights() const { return weights_; }
  // cumulative()[i] = sum of weights up to and including atom i
  const Vec& cumulative() const { return cumulative_; }
  Eigen::Index size() const { return atoms_.size(); }

 private:
  Vec atoms_;
  Vec weights_;
  Vec cumulative_;
};

// Invertible affine map x -> A x + y on R^d.
struct AffineMap {
  Mat A;
  Vec y;

  AffineMap(Mat A_, Vec y_);
  int dim() const { return static_cast<int>(y.size()); }

  static AffineMap identity(int d) {
    return AffineMap(Mat::Identity(d, d), Vec::Zero(d));
  }
  // Composition: (*this) after other, i.e. x -> A (A' x + y') + y.
  AffineMap after(const AffineMap& other) const;
  AffineMap inverse() const;
};

// Weighted point set in R^d, or a weighted set of 3x3 rotation matrices.
class PointCloud {
 public:
  enum class Kind { Vector, Rotation };

  // points: d x K matrix, one point per column; weights normalized to one.
  PointCloud(Mat points, Vec weights);
  PointCloud(std::vector<Mat3> rotations, Vec weights);

  static PointCloud uniform(Mat points);
  static PointCloud uniform(std::vector<Mat3> rotations);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  Eigen::Index size() const { return weights_.size(); }
  const Mat& points() const;
  const std::vector<Mat3>& rotations() const;
  const Vec& weights() const { return weights_; }

 private:
  Kind kind_;
  int dim_;
  Mat points_;
  std::vector<Mat3> rotations_;
  Vec weights_;
};

PointCloud apply_affine_points(const PointCloud& cloud, const AffineMap& map);

// Left rotation (R x_k for every matrix/point); valid for both cloud kinds
// with d = 3.
PointCloud rotate_cloud(const PointCloud& cloud, const Mat3& rotation);

}  // namespace nrcdt
