#include "nrcdt/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace nrcdt {

Measure1D::Measure1D(Vec atoms, Vec weights) {
  if (atoms.size() != weights.size())
    throw std::invalid_argument("Measure1D: atoms/weights length mismatch");
  if (atoms.size() == 0) throw std::invalid_argument("Measure1D: empty");

  std::vector<Eigen::Index> order(atoms.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return atoms[a] < atoms[b];
  });

  std::vector<double> pos, wgt;
  pos.reserve(atoms.size());
  wgt.reserve(atoms.size());
  for (Eigen::Index idx : order) {
    double a = atoms[idx];
    double w = weights[idx];
    if (w < 0.0) throw std::invalid_argument("Measure1D: negative weight");
    // positions within 1e-12 * (1 + |pos|) are treated as the same atom
    if (!pos.empty() && a - pos.back() <= 1e-12 * (1.0 + std::abs(a))) {
      wgt.back() += w;
    } else {
      pos.push_back(a);
      wgt.push_back(w);
    }
  }

  double total = std::accumulate(wgt.begin(), wgt.end(), 0.0);
  if (total <= 0.0) throw std::invalid_argument("Measure1D: zero total mass");

  atoms_ = Eigen::Map<Vec>(pos.data(), static_cast<Eigen::Index>(pos.size()));
  weights_ =
      Eigen::Map<Vec>(wgt.data(), static_cast<Eigen::Index>(wgt.size())) / total;
  cumulative_.resize(weights_.size());
  double c = 0.0;
  for (Eigen::Index i = 0; i < weights_.size(); ++i) {
    c += weights_[i];
    cumulative_[i] = c;
  }
  cumulative_[weights_.size() - 1] = 1.0;
}

AffineMap::AffineMap(Mat A_, Vec y_) : A(std::move(A_)), y(std::move(y_)) {
  if (A.rows() != A.cols() || A.rows() != y.size())
    throw std::invalid_argument("AffineMap: dimension mismatch");
  if (std::abs(A.determinant()) <= 1e-12)
    throw std::invalid_argument("AffineMap: singular matrix");
}

AffineMap AffineMap::after(const AffineMap& other) const {
  if (dim() != other.dim())
    throw std::invalid_argument("AffineMap::after: dimension mismatch");
  return AffineMap(A * other.A, A * other.y + y);
}

AffineMap AffineMap::inverse() const {
  Mat Ainv = A.inverse();
  return AffineMap(Ainv, -(Ainv * y));
}

namespace {

void check_rotation(const Mat3& m) {
  if (((m.transpose() * m) - Mat3::Identity()).cwiseAbs().maxCoeff() > 1e-9 ||
      std::abs(m.determinant() - 1.0) > 1e-9)
    throw std::invalid_argument("PointCloud: matrix is not in SO(3)");
}

Vec normalized_weights(Vec w) {
  if (w.size() == 0) throw std::invalid_argument("PointCloud: empty");
  if ((w.array() < 0.0).any())
    throw std::invalid_argument("PointCloud: negative weight");
  double total = w.sum();
  if (total <= 0.0) throw std::invalid_argument("PointCloud: zero total mass");
  return w / total;
}

}  // namespace

PointCloud::PointCloud(Mat points, Vec weights)
    : kind_(Kind::Vector),
      dim_(static_cast<int>(points.rows())),
      points_(std::move(points)),
      weights_(normalized_weights(std::move(weights))) {
  if (points_.cols() != weights_.size())
    throw std::invalid_argument("PointCloud: points/weights mismatch");
}

PointCloud::PointCloud(std::vector<Mat3> rotations, Vec weights)
    : kind_(Kind::Rotation),
      dim_(3),
      rotations_(std::move(rotations)),
      weights_(normalized_weights(std::move(weights))) {
  if (static_cast<Eigen::Index>(rotations_.size()) != weights_.size())
    throw std::invalid_argument("PointCloud: rotations/weights mismatch");
  for (const Mat3& m : rotations_) check_rotation(m);
}

PointCloud PointCloud::uniform(Mat points) {
  Vec w = Vec::Constant(points.cols(), 1.0 / static_cast<double>(points.cols()));
  return PointCloud(std::move(points), std::move(w));
}

PointCloud PointCloud::uniform(std::vector<Mat3> rotations) {
  Vec w = Vec::Constant(static_cast<Eigen::Index>(rotations.size()),
                        1.0 / static_cast<double>(rotations.size()));
  return PointCloud(std::move(rotations), std::move(w));
}

const Mat& PointCloud::points() const {
  if (kind_ != Kind::Vector)
    throw std::logic_error("PointCloud: not in vector mode");
  return points_;
}

const std::vector<Mat3>& PointCloud::rotations() const {
  if (kind_ != Kind::Rotation)
    throw std::logic_error("PointCloud: not in rotation mode");
  return rotations_;
}

PointCloud apply_affine_points(const PointCloud& cloud, const AffineMap& map) {
  if (cloud.kind() != PointCloud::Kind::Vector)
    throw std::invalid_argument("apply_affine_points: cloud not in vector mode");
  if (map.dim() != cloud.dim())
    throw std::invalid_argument("apply_affine_points: dimension mismatch");
  Mat out = (map.A * cloud.points()).colwise() + map.y.head(map.dim());
  return PointCloud(std::move(out), cloud.weights());
}

PointCloud rotate_cloud(const PointCloud& cloud, const Mat3& rotation) {
  check_rotation(rotation);
  if (cloud.kind() == PointCloud::Kind::Vector) {
    if (cloud.dim() != 3)
      throw std::invalid_argument("rotate_cloud: expected 3-d cloud");
    return PointCloud(rotation * cloud.points(), cloud.weights());
  }
  std::vector<Mat3> out;
  out.reserve(cloud.rotations().size());
  for (const Mat3& m : cloud.rotations()) out.push_back(rotation * m);
  return PointCloud(std::move(out), cloud.weights());
}

}  // namespace nrcdt
