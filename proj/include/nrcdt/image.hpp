#pragma once

#include <string>

#include "nrcdt/measure.hpp"
#include "nrcdt/types.hpp"

namespace nrcdt {

// Nonnegative gray-value grid interpreted as a piecewise constant density
// with support in the square [-1/sqrt(2), 1/sqrt(2)]^2, which sits inside
// the closed unit disk.  Pixel values are densities; after normalize() the
// total mass sum(value * pixelArea) equals one.
class GridImage {
 public:
  GridImage(int width, int height);
  GridImage(int width, int height, Mat pixels);

  int width() const { return width_; }
  int height() const { return height_; }
  // pixels()(row, col); row 0 is the bottom of the frame
  const Mat& pixels() const { return pixels_; }
  Mat& pixels() { return pixels_; }

  double pixelWidth() const { return frame_side() / width_; }
  double pixelHeight() const { return frame_side() / height_; }
  double pixelArea() const { return pixelWidth() * pixelHeight(); }
  static double frame_side() { return M_SQRT2; }
  static double frame_min() { return -M_SQRT1_2; }

  Vec2 pixelCenter(int row, int col) const {
    return Vec2(frame_min() + (col + 0.5) * pixelWidth(),
                frame_min() + (row + 0.5) * pixelHeight());
  }

  double mass() const { return pixels_.sum() * pixelArea(); }
  // Rescales pixel values so that the total mass is one.
  GridImage& normalize();

  // Bilinear sample of the density at a frame coordinate; zero outside.
  double sampleBilinear(const Vec2& p) const;

 private:
  int width_;
  int height_;
  Mat pixels_;  // height x width
};

// Pull-back resampling under x -> A x + y; the transformed support must stay
// inside the representable frame.  Output is renormalized to unit mass.
GridImage apply_affine_image(const GridImage& img, const AffineMap& map);

// Non-affine wave deformation: output pixel (j, k) takes the bi-quadratically
// interpolated value at (j + a1 sin(2 pi f1 k / H), k + a2 cos(2 pi f2 j / W))
// in pixel index coordinates (k = column, j = row).  Samples falling outside
// the grid are clamped to the boundary.  Output is renormalized.
GridImage warp_image(const GridImage& img, double f1, double f2, double a1,
                     double a2);

// PGM (P2 ASCII / P5 binary, maxval 255 or 65535).  Written images scale
// densities to the full 16-bit range; loaded images are renormalized.
GridImage read_pgm(const std::string& path);
void write_pgm(const std::string& path, const GridImage& img,
               bool binary = true);

}  // namespace nrcdt
