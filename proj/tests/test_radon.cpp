#include <doctest.h>

#include <cmath>

#include "nrcdt/datasets.hpp"
#include "nrcdt/radon.hpp"
#include "nrcdt/rng.hpp"

using namespace nrcdt;

namespace {

PointCloud random_cloud(int d, int k, Rng& rng) {
  Mat pts(d, k);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < k; ++j) pts(i, j) = rng.uniform(-1.0, 1.0);
  return PointCloud::uniform(pts);
}

GridImage disk_image(int side, double radius) {
  GridImage img(side, side);
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c)
      if (img.pixelCenter(r, c).norm() <= radius) img.pixels()(r, c) = 1.0;
  return img.normalize();
}

}  // namespace

TEST_CASE("slice_point evaluates the three slicers") {
  Vec x(2);
  x << 3.0, 4.0;
  Vec e1(2);
  e1 << 1.0, 0.0;
  CHECK(slice_point(x, Slicer::linear(e1)) == 3.0);
  CHECK(slice_point(x, Slicer::circular(Vec::Zero(2))) == 5.0);

  Mat3 half_turn = Mat3::Identity();
  half_turn(0, 0) = half_turn(1, 1) = -1.0;
  Mat3 eye = Mat3::Identity();
  CHECK(slice_point(eye, Slicer::so3(eye)) == 0.0);
  CHECK(slice_point(half_turn, Slicer::so3(Mat3::Identity())) ==
        doctest::Approx(M_PI));
  CHECK_THROWS_AS(Slicer::linear(x), std::invalid_argument);
}

TEST_CASE("project_points pushes atoms through the linear slicer") {
  Mat pts(2, 2);
  pts << 1.0, 0.0, 0.0, 1.0;
  ProjectionFamily fam =
      project_points(PointCloud::uniform(pts), equispaced_s1(1));
  REQUIRE(fam.projections.size() == 1);
  const Measure1D& m = fam.projections[0];
  REQUIRE(m.size() == 2);
  CHECK(m.atoms()[0] == 0.0);
  CHECK(m.atoms()[1] == 1.0);
  CHECK(m.weights()[0] == 0.5);
  CHECK(m.weights()[1] == 0.5);
}

TEST_CASE("point projections preserve mass in every direction") {
  Rng rng(5);
  PointCloud c = random_cloud(3, 17, rng);
  ProjectionFamily fam = project_points(c, fibonacci_s2(16));
  for (const Measure1D& m : fam.projections)
    CHECK(m.weights().sum() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("affine transformation law for the restricted Radon transform") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    PointCloud c = random_cloud(2, 9, rng);
    Mat2 a;
    a << rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
        rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0);
    if (std::abs(a.determinant()) < 0.1) continue;
    Vec2 y(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    Vec2 theta(std::cos(rng.uniform(0.0, 2.0 * M_PI)),
               std::sin(rng.uniform(0.0, 2.0 * M_PI)));

    // left side: project the transformed cloud at theta
    PointCloud ct = apply_affine_points(c, AffineMap(a, y));
    Vec left = ct.points().transpose() * theta;
    std::sort(left.data(), left.data() + left.size());

    // right side: scaled projection of the original at A^T theta normalized
    Vec2 at = a.transpose() * theta;
    double scale = at.norm();
    Vec right = (c.points().transpose() * (at / scale)) * scale;
    right.array() += y.dot(theta);
    std::sort(right.data(), right.data() + right.size());

    CHECK((left - right).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("circular slicer isometry law") {
  Rng rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    PointCloud c = random_cloud(3, 8, rng);
    double s = rng.uniform(0.2, 2.0);
    Mat3 q = random_rotation(rng);
    Vec3 y(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
           rng.uniform(-1.0, 1.0));
    Vec3 center(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                rng.uniform(-1.0, 1.0));

    AffineMap map(s * q, y);
    PointCloud ct = apply_affine_points(c, map);
    Mat centers_l(3, 1);
    centers_l.col(0) = center;
    Vec left = project_points_circular(ct, centers_l).projections[0].atoms();

    Mat centers_r(3, 1);
    centers_r.col(0) = q.transpose() * (center - y) / s;
    Vec right =
        project_points_circular(c, centers_r).projections[0].atoms() * s;

    CHECK((left - right).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("SO(3) slicer rotation law") {
  Rng rng(91);
  for (int trial = 0; trial < 100; ++trial) {
    PointCloud c = sample_uniform_so3(6, derive_seed(404, trial));
    Mat3 r = random_rotation(rng);
    Mat3 theta = random_rotation(rng);

    PointCloud rc = rotate_cloud(c, r);
    Slicer left_s = Slicer::so3(theta);
    Slicer right_s = Slicer::so3(r.transpose() * theta);
    for (Eigen::Index i = 0; i < c.size(); ++i) {
      double left = slice_point(rc.rotations()[static_cast<size_t>(i)], left_s);
      double right = slice_point(c.rotations()[static_cast<size_t>(i)], right_s);
      CHECK(std::abs(left - right) < 1e-10);
    }
  }
}

TEST_CASE("stripe masses of a single interior pixel match the closed form") {
  GridImage img(16, 16);
  img.pixels()(8, 10) = 1.0;
  img.normalize();
  const int R = 40;
  Vec mass = stripe_masses_exact(img, 0.0, R);
  // at angle 0 the stripes partition the x-extent of the pixel
  Vec2 pc = img.pixelCenter(8, 10);
  double hw = 0.5 * img.pixelWidth();
  double x0 = pc.x() - hw, x1 = pc.x() + hw;
  for (int i = 0; i < R; ++i) {
    double lo = -1.0 + 2.0 * i / R;
    double hi = lo + 2.0 / R;
    double overlap =
        std::max(0.0, std::min(hi, x1) - std::max(lo, x0)) / (x1 - x0);
    CHECK(mass[i] == doctest::Approx(overlap).epsilon(1e-9));
  }
  CHECK(mass.sum() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("image projections preserve mass and see symmetry") {
  GridImage img = disk_image(64, 0.4);
  DirectionSet dirs = equispaced_s1(12);
  ProjectionFamily fam = project_image(img, dirs, 120);
  REQUIRE(fam.projections.size() == 12);
  CHECK(fam.bin_width == doctest::Approx(2.0 / 120));
  Vec ref = stripe_masses_exact(img, 0.0, 120);
  for (Eigen::Index k = 0; k < 12; ++k) {
    Vec raw = stripe_masses_exact(img, dirs.angles[k], 120);
    CHECK(raw.sum() == doctest::Approx(1.0).epsilon(1e-9));
    // the rasterized disk is exactly symmetric under quarter turns of the
    // pixel grid; at other angles only up to the rasterization error
    double quarter = dirs.angles[k] / M_PI_2;
    bool grid_angle = std::abs(quarter - std::round(quarter)) < 1e-12;
    CHECK((raw - ref).cwiseAbs().maxCoeff() < (grid_angle ? 1e-9 : 5e-3));
  }
}

TEST_CASE("evenness: the projection at angle+pi is the reflection") {
  GridImage img = disk_image(48, 0.35);
  img.pixels()(30, 12) += 40.0;  // break the symmetry
  img.normalize();
  const int R = 90;
  for (double ang : {0.3, 1.2, 2.0}) {
    Vec a = stripe_masses_exact(img, ang, R);
    Vec b = stripe_masses_exact(img, ang + M_PI, R);
    for (int i = 0; i < R; ++i)
      CHECK(std::abs(a[i] - b[R - 1 - i]) < 1e-9);
  }
}

TEST_CASE("polygon clipping agrees with dense supersampling") {
  Rng rng(12);
  const int side = 512;
  GridImage img(side, side);
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c)
      if (img.pixelCenter(r, c).norm() < 0.6)
        img.pixels()(r, c) = rng.uniform(0.0, 1.0);
  img.normalize();
  for (double ang : {0.0, 0.7, 1.9}) {
    Vec exact = stripe_masses_exact(img, ang, 50);
    Vec approx = stripe_masses_supersampled(img, ang, 50, 32);
    CHECK((exact - approx).cwiseAbs().maxCoeff() < 1e-4);
  }
}

TEST_CASE("project_image validates its inputs") {
  GridImage img = disk_image(16, 0.4);
  CHECK_THROWS_AS(project_image(img, fibonacci_s2(4), 50),
                  std::invalid_argument);
  CHECK_THROWS_AS(project_image(img, equispaced_s1(4), 1),
                  std::invalid_argument);
  GridImage unnormalized(16, 16, Mat::Constant(16, 16, 1.0));
  CHECK_THROWS_AS(project_image(unnormalized, equispaced_s1(4), 50),
                  std::invalid_argument);
}
