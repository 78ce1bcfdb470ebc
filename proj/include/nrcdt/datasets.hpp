#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nrcdt/image.hpp"
#include "nrcdt/measure.hpp"
#include "nrcdt/rng.hpp"
#include "nrcdt/types.hpp"

namespace nrcdt {

using Json = nlohmann::json;

struct LabeledImageSet {
  std::vector<GridImage> items;
  std::vector<int> labels;
  // one untransformed template per class, for nearest-template classification
  std::vector<GridImage> templates;
  Json provenance;
};

struct LabeledCloudSet {
  std::vector<PointCloud> items;
  std::vector<int> labels;
  std::vector<PointCloud> templates;
  Json provenance;
  // transforms applied per item (affine classes) or rotations (so3 classes)
  std::vector<AffineMap> transforms;
  std::vector<Mat3> rotations_applied;
};

// ---- procedural templates -------------------------------------------------

// cross, annulus, triangle-with-hole (in that order), rasterized on a
// side x side grid, unit mass
GridImage academic_template(int index, int side = 256);

// nine shapes: regular polygons with 3..7 vertices, then 5/6/7/8-pointed
// stars
GridImage polygon_template(int index, int side = 256);

// simple vertex clouds in R^3 (tetrahedron, cube, octahedron, icosahedron,
// ...), uniform weights; index in [0, 5)
PointCloud cloud3d_template(int index);

// ---- affine classes -------------------------------------------------------

struct AffineImageParams {
  double shift_px = 40.0;      // translation, uniform per axis in pixels
  double rot_min = 0.0;        // rotation angle range [rot_min, rot_max)
  double rot_max = 2.0 * M_PI;
  int snap_angles = 0;         // > 0: rotation snapped to multiples of 2pi/n
  double scale_min = 0.75;     // anisotropic scaling per axis
  double scale_max = 1.0;
  double shear_deg = 30.0;     // shear angle, uniform in +-shear_deg
  bool warp = false;           // apply the wave warp before the affine map
  double warp_f_min = 1.5, warp_f_max = 2.5;
  double warp_a_min = 0.5, warp_a_max = 2.0;
};

// n transformed copies (order: scale, shear, rotate, translate); draws come
// from one substream per sample index; support failures are redrawn up to
// 100 times
LabeledImageSet gen_affine_image_class(const GridImage& tmpl, int n,
                                       const AffineImageParams& params,
                                       std::uint64_t seed, int label = 0);

struct AffineCloudParams {
  double scale_min = 0.5, scale_max = 1.0;
  double shear_deg = 15.0;  // one shear angle per coordinate pair
  bool rotate = true;       // uniform random 3-d rotation
  double shift = 25.0;      // translation, uniform per axis in [-shift, shift]
};

LabeledCloudSet gen_affine_pointcloud_class(const PointCloud& tmpl, int n,
                                            const AffineCloudParams& params,
                                            std::uint64_t seed, int label = 0);

// ---- rotation data --------------------------------------------------------

// Haar-uniform rotations via normalized Gaussian quaternions.
PointCloud sample_uniform_so3(int n, std::uint64_t seed);
Mat3 random_rotation(Rng& rng);

// Density proportional to exp(kappa * tr R), by rejection from the uniform
// sampler; kappa = 0 reproduces the uniform stream exactly.
PointCloud sample_matrix_fisher(double kappa, int n, std::uint64_t seed);

// Three classes of SO(3) point sets (Matrix-Fisher kappa=10 around I,
// equator-axis rotations, QR of Gaussian matrices), each left-rotated by a
// recorded uniform rotation per sample.
LabeledCloudSet gen_rotation_dataset(int n_per_class, int n_points,
                                     std::uint64_t seed);

// ---- external data --------------------------------------------------------

struct IdxOptions {
  int resolution = 128;          // output side length
  bool center = true;            // shift the intensity centroid to the middle
  std::vector<int> classes = {}; // empty = keep all labels
};

LabeledImageSet load_idx(const std::string& images_path,
                         const std::string& labels_path,
                         const IdxOptions& opts = {});
void write_idx(const std::string& images_path, const std::string& labels_path,
               const std::vector<GridImage>& images,
               const std::vector<int>& labels);

// CSV with d columns per line, or OBJ "v x y z" lines; uniform weights
PointCloud load_pointcloud(const std::string& path);
void write_pointcloud_csv(const std::string& path, const PointCloud& cloud);

// SO(3) clouds: 9 row-major entries per CSV line
PointCloud load_rotations_csv(const std::string& path);
void write_rotations_csv(const std::string& path, const PointCloud& cloud);

// ---- dataset directories ----------------------------------------------------

// manifest.json (generator, params, seed, labels, item files) plus one
// PGM/CSV per item
void save_dataset(const std::string& dir, const LabeledImageSet& set);
void save_dataset(const std::string& dir, const LabeledCloudSet& set);
LabeledImageSet load_dataset_images(const std::string& dir);
LabeledCloudSet load_dataset_clouds(const std::string& dir);
Json read_manifest(const std::string& dir);

}  // namespace nrcdt
