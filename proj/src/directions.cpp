#include "nrcdt/directions.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace nrcdt {

Eigen::Index DirectionSet::size() const {
  switch (kind) {
    case Kind::Circle:
      return angles.size();
    case Kind::Sphere2:
      return vectors.cols();
    default:
      return static_cast<Eigen::Index>(matrices.size());
  }
}

DirectionSet equispaced_s1(int n) {
  if (n < 1) throw std::invalid_argument("equispaced_s1: n must be positive");
  DirectionSet ds;
  ds.kind = DirectionSet::Kind::Circle;
  ds.angles.resize(n);
  ds.vectors.resize(2, n);
  for (int k = 0; k < n; ++k) {
    double a = 2.0 * M_PI * k / n;
    ds.angles[k] = a;
    ds.vectors(0, k) = std::cos(a);
    ds.vectors(1, k) = std::sin(a);
  }
  return ds;
}

DirectionSet fibonacci_s2(int n) {
  if (n < 1) throw std::invalid_argument("fibonacci_s2: n must be positive");
  DirectionSet ds;
  ds.kind = DirectionSet::Kind::Sphere2;
  ds.vectors.resize(3, n);
  const double golden = M_PI * (3.0 - std::sqrt(5.0));
  for (int k = 0; k < n; ++k) {
    double z = 1.0 - (2.0 * k + 1.0) / n;
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    ds.vectors(0, k) = r * std::cos(k * golden);
    ds.vectors(1, k) = r * std::sin(k * golden);
    ds.vectors(2, k) = z;
  }
  return ds;
}

double super_fibonacci_phi2() {
  static const double phi2 = [] {
    auto f = [](double x) { return x * x * x * x - x - 4.0; };
    double lo = 1.0, hi = 2.0;
    while (hi - lo > 1e-15) {
      double mid = 0.5 * (lo + hi);
      (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }();
  return phi2;
}

Mat3 quaternion_to_matrix(double a, double b, double c, double d) {
  Mat3 m;
  m << 1 - 2 * (c * c + d * d), 2 * (b * c - a * d), 2 * (b * d + a * c),
      2 * (b * c + a * d), 1 - 2 * (b * b + d * d), 2 * (c * d - a * b),
      2 * (b * d - a * c), 2 * (c * d + a * b), 1 - 2 * (b * b + c * c);
  return m;
}

DirectionSet super_fibonacci_so3(int n) {
  if (n < 1)
    throw std::invalid_argument("super_fibonacci_so3: n must be positive");
  DirectionSet ds;
  ds.kind = DirectionSet::Kind::SO3;
  ds.matrices.reserve(n);
  const double phi1 = std::sqrt(2.0);
  const double phi2 = super_fibonacci_phi2();
  for (int k = 0; k < n; ++k) {
    double s = (2.0 * k + 1.0) / (2.0 * n);
    double r = std::sqrt(s);
    double q = std::sqrt(1.0 - s);
    double alpha = M_PI * (2.0 * k + 1.0) / phi1;
    double beta = M_PI * (2.0 * k + 1.0) / phi2;
    double a = r * std::sin(alpha);
    double b = r * std::cos(alpha);
    double c = q * std::cos(beta);
    double d = q * std::sin(beta);
    ds.matrices.push_back(quaternion_to_matrix(a, b, c, d));
  }
  return ds;
}

void write_directions_csv(const std::string& path, const DirectionSet& ds) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.precision(17);
  switch (ds.kind) {
    case DirectionSet::Kind::Circle:
      for (Eigen::Index k = 0; k < ds.size(); ++k) out << ds.angles[k] << "\n";
      break;
    case DirectionSet::Kind::Sphere2:
      for (Eigen::Index k = 0; k < ds.size(); ++k)
        out << ds.vectors(0, k) << "," << ds.vectors(1, k) << ","
            << ds.vectors(2, k) << "\n";
      break;
    case DirectionSet::Kind::SO3:
      for (const Mat3& m : ds.matrices) {
        for (int i = 0; i < 9; ++i) out << m(i / 3, i % 3) << (i < 8 ? ',' : '\n');
      }
      break;
  }
}

}  // namespace nrcdt
