#pragma once

#include <string>
#include <vector>

#include "nrcdt/types.hpp"

namespace nrcdt {

// Finite set of slicing directions with uniform gluing weights 1/n.
struct DirectionSet {
  enum class Kind { Circle, Sphere2, SO3 };

  Kind kind;
  // Circle: sorted angles in [0, 2pi) plus the matching unit vectors.
  Vec angles;      // n (circle only)
  Mat vectors;     // 2 x n (circle) or 3 x n (sphere2)
  std::vector<Mat3> matrices;  // n (so3 only)

  Eigen::Index size() const;
  double weight() const { return 1.0 / static_cast<double>(size()); }
};

// Angles 2*pi*k/n for k = 0..n-1, covering the full circle.
DirectionSet equispaced_s1(int n);

// Fibonacci sphere points: z_k = 1 - (2k+1)/n, azimuth k * pi*(3 - sqrt 5),
// radius sqrt(1 - z_k^2).
DirectionSet fibonacci_s2(int n);

// Super-Fibonacci rotations: structured unit quaternions with irrationalities
// phi1 = sqrt(2) and phi2 the positive root of x^4 = x + 4, mapped to SO(3)
// by the Euler-Rodrigues formula.
DirectionSet super_fibonacci_so3(int n);

// Positive real solution of x^4 = x + 4 (bisection, cached).
double super_fibonacci_phi2();

// One direction per line (angle, vector components, or row-major matrix).
void write_directions_csv(const std::string& path, const DirectionSet& ds);

// Rotation matrix of the unit quaternion (a, b, c, d) via Euler-Rodrigues.
Mat3 quaternion_to_matrix(double a, double b, double c, double d);

}  // namespace nrcdt
