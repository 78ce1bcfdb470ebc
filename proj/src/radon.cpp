#include "nrcdt/radon.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace nrcdt {

Slicer Slicer::linear(Vec direction) {
  if (std::abs(direction.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("Slicer::linear: direction must be unit-norm");
  Slicer s;
  s.kind = Kind::Linear;
  s.theta = std::move(direction);
  return s;
}

Slicer Slicer::circular(Vec center) {
  Slicer s;
  s.kind = Kind::Circular;
  s.theta = std::move(center);
  return s;
}

Slicer Slicer::so3(Mat3 rotation) {
  if (((rotation.transpose() * rotation) - Mat3::Identity())
              .cwiseAbs()
              .maxCoeff() > 1e-12 ||
      std::abs(rotation.determinant() - 1.0) > 1e-12)
    throw std::invalid_argument("Slicer::so3: matrix is not a rotation");
  Slicer s;
  s.kind = Kind::SO3;
  s.theta_rot = std::move(rotation);
  return s;
}

double slice_point(const Vec& x, const Slicer& s) {
  switch (s.kind) {
    case Slicer::Kind::Linear:
      if (x.size() != s.theta.size())
        throw std::invalid_argument("slice_point: dimension mismatch");
      return x.dot(s.theta);
    case Slicer::Kind::Circular:
      if (x.size() != s.theta.size())
        throw std::invalid_argument("slice_point: dimension mismatch");
      return (x - s.theta).norm();
    default:
      throw std::invalid_argument("slice_point: vector with so3 slicer");
  }
}

double slice_point(const Mat3& x, const Slicer& s) {
  if (s.kind != Slicer::Kind::SO3)
    throw std::invalid_argument("slice_point: rotation needs an so3 slicer");
  double arg = 0.5 * ((s.theta_rot.transpose() * x).trace() - 1.0);
  return std::acos(std::clamp(arg, -1.0, 1.0));
}

namespace {

Measure1D project_cloud_linear(const PointCloud& cloud, const auto& dir) {
  Vec atoms = cloud.points().transpose() * dir;
  return Measure1D(std::move(atoms), cloud.weights());
}

}  // namespace

ProjectionFamily project_points(const PointCloud& cloud,
                                const DirectionSet& directions) {
  ProjectionFamily fam;
  fam.directions = directions;
  fam.projections.reserve(directions.size());
  if (cloud.kind() == PointCloud::Kind::Vector) {
    if (directions.kind == DirectionSet::Kind::SO3)
      throw std::invalid_argument(
          "project_points: vector cloud with so3 directions");
    if (cloud.dim() != directions.vectors.rows())
      throw std::invalid_argument("project_points: dimension mismatch");
    for (Eigen::Index k = 0; k < directions.size(); ++k)
      fam.projections.push_back(
          project_cloud_linear(cloud, directions.vectors.col(k)));
  } else {
    if (directions.kind != DirectionSet::Kind::SO3)
      throw std::invalid_argument(
          "project_points: rotation cloud needs so3 directions");
    for (const Mat3& theta : directions.matrices) {
      Slicer s = Slicer::so3(theta);
      Vec atoms(cloud.size());
      for (Eigen::Index i = 0; i < cloud.size(); ++i)
        atoms[i] = slice_point(cloud.rotations()[static_cast<size_t>(i)], s);
      fam.projections.emplace_back(std::move(atoms), cloud.weights());
    }
  }
  return fam;
}

ProjectionFamily project_points_circular(const PointCloud& cloud,
                                         const Mat& centers) {
  if (cloud.kind() != PointCloud::Kind::Vector)
    throw std::invalid_argument(
        "project_points_circular: cloud must be in vector mode");
  if (centers.rows() != cloud.dim())
    throw std::invalid_argument("project_points_circular: dimension mismatch");
  ProjectionFamily fam;
  fam.directions.kind = DirectionSet::Kind::Circle;  // placeholder kind
  fam.projections.reserve(centers.cols());
  for (Eigen::Index k = 0; k < centers.cols(); ++k) {
    Vec atoms =
        (cloud.points().colwise() - centers.col(k)).colwise().norm().transpose();
    fam.projections.emplace_back(std::move(atoms), cloud.weights());
  }
  return fam;
}

namespace {

struct Poly {
  std::array<double, 16> x, y;
  int n = 0;
  void push(double px, double py) {
    x[n] = px;
    y[n] = py;
    ++n;
  }
};

// keeps the part of poly with sign * <p, theta> <= sign * level
void clip_halfplane(const Poly& in, double cx, double cy, double level,
                    double sign, Poly& out) {
  out.n = 0;
  for (int i = 0; i < in.n; ++i) {
    int j = (i + 1) % in.n;
    double di = sign * (in.x[i] * cx + in.y[i] * cy - level);
    double dj = sign * (in.x[j] * cx + in.y[j] * cy - level);
    if (di <= 0.0) out.push(in.x[i], in.y[i]);
    if ((di < 0.0 && dj > 0.0) || (di > 0.0 && dj < 0.0)) {
      double t = di / (di - dj);
      out.push(in.x[i] + t * (in.x[j] - in.x[i]),
               in.y[i] + t * (in.y[j] - in.y[i]));
    }
  }
}

double poly_area(const Poly& p) {
  double a = 0.0;
  for (int i = 0; i < p.n; ++i) {
    int j = (i + 1) % p.n;
    a += p.x[i] * p.y[j] - p.x[j] * p.y[i];
  }
  return 0.5 * std::abs(a);
}

}  // namespace

namespace {

Vec stripe_masses_dir(const GridImage& img, double cx, double cy, int R) {
  const double bin = 2.0 / R;
  const double hx = 0.5 * img.pixelWidth();
  const double hy = 0.5 * img.pixelHeight();
  const double area = img.pixelArea();
  const double ext = hx * std::abs(cx) + hy * std::abs(cy);
  Vec mass = Vec::Zero(R);

  for (int r = 0; r < img.height(); ++r)
    for (int c = 0; c < img.width(); ++c) {
      double v = img.pixels()(r, c);
      if (v <= 0.0) continue;
      Vec2 pc = img.pixelCenter(r, c);
      double s = pc.x() * cx + pc.y() * cy;
      int lo = std::clamp(static_cast<int>(std::floor((s - ext + 1.0) / bin)),
                          0, R - 1);
      int hi = std::clamp(static_cast<int>(std::floor((s + ext + 1.0) / bin)),
                          0, R - 1);
      if (lo == hi) {
        mass[lo] += v * area;
        continue;
      }
      Poly sq, a, b;
      sq.push(pc.x() - hx, pc.y() - hy);
      sq.push(pc.x() + hx, pc.y() - hy);
      sq.push(pc.x() + hx, pc.y() + hy);
      sq.push(pc.x() - hx, pc.y() + hy);
      for (int i = lo; i <= hi; ++i) {
        double t = -1.0 + (2.0 * i + 1.0) / R;
        clip_halfplane(sq, cx, cy, t - 1.0 / R, -1.0, a);
        if (a.n < 3) continue;
        clip_halfplane(a, cx, cy, t + 1.0 / R, 1.0, b);
        if (b.n < 3) continue;
        mass[i] += v * poly_area(b);
      }
    }
  return mass;
}

}  // namespace

Vec stripe_masses_exact(const GridImage& img, double angle, int n_radii) {
  return stripe_masses_dir(img, std::cos(angle), std::sin(angle), n_radii);
}

ProjectionFamily project_image(const GridImage& img, const DirectionSet& angles,
                               int n_radii) {
  if (angles.kind != DirectionSet::Kind::Circle)
    throw std::invalid_argument("project_image: circle directions required");
  if (n_radii < 2) throw std::invalid_argument("project_image: n_radii < 2");
  if (std::abs(img.mass() - 1.0) > 1e-9)
    throw std::invalid_argument("project_image: image must be normalized");

  const int R = n_radii;
  ProjectionFamily fam;
  fam.directions = angles;
  fam.bin_width = 2.0 / R;
  fam.projections.reserve(angles.size());

  Vec centers(R);
  for (int i = 0; i < R; ++i) centers[i] = -1.0 + (2.0 * i + 1.0) / R;

  for (Eigen::Index k = 0; k < angles.size(); ++k) {
    Vec mass = stripe_masses_dir(img, angles.vectors(0, k),
                                 angles.vectors(1, k), R);
    fam.projections.emplace_back(centers, std::move(mass));
  }
  return fam;
}

Vec stripe_masses_supersampled(const GridImage& img, double angle, int n_radii,
                               int k) {
  const int R = n_radii;
  const double bin = 2.0 / R;
  const double cx = std::cos(angle), cy = std::sin(angle);
  const double sub_area = img.pixelArea() / (k * k);
  Vec mass = Vec::Zero(R);
  for (int r = 0; r < img.height(); ++r)
    for (int c = 0; c < img.width(); ++c) {
      double v = img.pixels()(r, c);
      if (v <= 0.0) continue;
      Vec2 pc = img.pixelCenter(r, c);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          double px = pc.x() + ((j + 0.5) / k - 0.5) * img.pixelWidth();
          double py = pc.y() + ((i + 0.5) / k - 0.5) * img.pixelHeight();
          double s = px * cx + py * cy;
          int idx = std::clamp(static_cast<int>(std::floor((s + 1.0) / bin)),
                               0, R - 1);
          mass[idx] += v * sub_area;
        }
    }
  return mass;
}

void write_projection_csv(const std::string& path,
                          const ProjectionFamily& fam) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.precision(17);
  for (size_t k = 0; k < fam.projections.size(); ++k) {
    const Measure1D& m = fam.projections[k];
    for (Eigen::Index i = 0; i < m.size(); ++i)
      out << k << "," << m.atoms()[i] << "," << m.weights()[i] << "\n";
  }
}

}  // namespace nrcdt
