#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nrcdt/directions.hpp"
#include "nrcdt/image.hpp"
#include "nrcdt/measure.hpp"
#include "nrcdt/types.hpp"

namespace nrcdt {

// Slicing map x -> phi(x, theta) whose pushforward defines the restricted
// Radon transform.
struct Slicer {
  enum class Kind { Linear, Circular, SO3 };

  Kind kind;
  Vec theta;        // linear: unit direction; circular: center point
  Mat3 theta_rot;   // so3 only

  static Slicer linear(Vec direction);
  static Slicer circular(Vec center);
  static Slicer so3(Mat3 rotation);
};

double slice_point(const Vec& x, const Slicer& s);
double slice_point(const Mat3& x, const Slicer& s);

// One 1-D projection per direction, in DirectionSet order.
struct ProjectionFamily {
  DirectionSet directions;
  std::vector<Measure1D> projections;
  // stripe width of an image projection (2/R); empty for point projections
  std::optional<double> bin_width;
};

// Analytic pushforward of an empirical measure: one Dirac per point at
// phi(x_k, theta), duplicates merged.  Vector clouds with circle/sphere2
// direction sets use the linear slicer <x, theta>; the circular slicer takes
// explicit centers instead of a DirectionSet.
ProjectionFamily project_points(const PointCloud& cloud,
                                const DirectionSet& directions);
ProjectionFamily project_points_circular(const PointCloud& cloud,
                                         const Mat& centers);

// Stripe projection of a grid image: mass of each rotated slab
// {x : t_i - 1/R <= <x, theta> < t_i + 1/R}, t_i = -1 + (2i+1)/R, computed
// by exact pixel-square clipping.
ProjectionFamily project_image(const GridImage& img,
                               const DirectionSet& angles, int n_radii);

// Raw (unnormalized) stripe masses of one direction, by exact pixel-square
// clipping; sums to the image mass.  project_image wraps these per angle.
Vec stripe_masses_exact(const GridImage& img, double angle, int n_radii);

// Supersampling cross-check of one direction's stripe masses (k x k subpixel
// midpoints per pixel); validation only, not used in the pipeline.
Vec stripe_masses_supersampled(const GridImage& img, double angle, int n_radii,
                               int k);

// direction index, atom, weight per line
void write_projection_csv(const std::string& path,
                          const ProjectionFamily& fam);

}  // namespace nrcdt
