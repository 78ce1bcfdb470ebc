#include "nrcdt/image.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nrcdt {

GridImage::GridImage(int width, int height)
    : width_(width), height_(height), pixels_(Mat::Zero(height, width)) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("GridImage: invalid size");
}

GridImage::GridImage(int width, int height, Mat pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width < 1 || height < 1 || pixels_.rows() != height ||
      pixels_.cols() != width)
    throw std::invalid_argument("GridImage: size mismatch");
  if ((pixels_.array() < 0.0).any())
    throw std::invalid_argument("GridImage: negative pixel value");
}

GridImage& GridImage::normalize() {
  double m = mass();
  if (m <= 0.0) throw std::invalid_argument("GridImage: zero total mass");
  pixels_ /= m;
  return *this;
}

double GridImage::sampleBilinear(const Vec2& p) const {
  // continuous pixel coordinates; pixel centers at integer + 0.5
  double cx = (p.x() - frame_min()) / pixelWidth() - 0.5;
  double cy = (p.y() - frame_min()) / pixelHeight() - 0.5;
  int c0 = static_cast<int>(std::floor(cx));
  int r0 = static_cast<int>(std::floor(cy));
  double fx = cx - c0;
  double fy = cy - r0;
  auto at = [&](int r, int c) -> double {
    if (r < 0 || r >= height_ || c < 0 || c >= width_) return 0.0;
    return pixels_(r, c);
  };
  return (1 - fy) * ((1 - fx) * at(r0, c0) + fx * at(r0, c0 + 1)) +
         fy * ((1 - fx) * at(r0 + 1, c0) + fx * at(r0 + 1, c0 + 1));
}

GridImage apply_affine_image(const GridImage& img, const AffineMap& map) {
  if (map.dim() != 2)
    throw std::invalid_argument("apply_affine_image: map must be 2-d");

  // forward-check the support before resampling
  double tol = 0.5 * std::max(img.pixelWidth(), img.pixelHeight());
  double limit = M_SQRT1_2 + tol;
  for (int r = 0; r < img.height(); ++r)
    for (int c = 0; c < img.width(); ++c) {
      if (img.pixels()(r, c) <= 0.0) continue;
      Vec2 q = map.A * img.pixelCenter(r, c) + map.y.head<2>();
      if (std::abs(q.x()) > limit || std::abs(q.y()) > limit) {
        std::ostringstream os;
        os << "apply_affine_image: transformed support leaves the unit-disk "
              "frame (pixel maps to ("
           << q.x() << ", " << q.y() << "); A = [" << map.A(0, 0) << ", "
           << map.A(0, 1) << "; " << map.A(1, 0) << ", " << map.A(1, 1)
           << "], y = (" << map.y(0) << ", " << map.y(1) << "))";
        throw std::domain_error(os.str());
      }
    }

  AffineMap inv = map.inverse();
  GridImage out(img.width(), img.height());
  for (int r = 0; r < out.height(); ++r)
    for (int c = 0; c < out.width(); ++c) {
      Vec2 src = inv.A * out.pixelCenter(r, c) + inv.y.head<2>();
      out.pixels()(r, c) = img.sampleBilinear(src);
    }
  return out.normalize();
}

namespace {

// tensor-product quadratic Lagrange interpolation on the 3x3 stencil around
// the nearest pixel; stencil indices clamped at the boundary
double sample_biquadratic(const GridImage& img, double row, double col) {
  int r1 = static_cast<int>(std::lround(row));
  int c1 = static_cast<int>(std::lround(col));
  r1 = std::clamp(r1, 1, img.height() - 2);
  c1 = std::clamp(c1, 1, img.width() - 2);
  double dr = row - r1;
  double dc = col - c1;
  auto w = [](double d, int o) {
    switch (o) {
      case -1:
        return 0.5 * d * (d - 1.0);
      case 0:
        return (1.0 - d) * (1.0 + d);
      default:
        return 0.5 * d * (d + 1.0);
    }
  };
  double v = 0.0;
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j)
      v += w(dr, i) * w(dc, j) * img.pixels()(r1 + i, c1 + j);
  return v;
}

}  // namespace

GridImage warp_image(const GridImage& img, double f1, double f2, double a1,
                     double a2) {
  const int h = img.height();
  const int wdt = img.width();
  GridImage out(wdt, h);
  for (int j = 0; j < h; ++j)
    for (int k = 0; k < wdt; ++k) {
      double row = j + a1 * std::sin(2.0 * M_PI * f1 * k / h);
      double col = k + a2 * std::cos(2.0 * M_PI * f2 * j / wdt);
      row = std::clamp(row, 0.0, static_cast<double>(h - 1));
      col = std::clamp(col, 0.0, static_cast<double>(wdt - 1));
      out.pixels()(j, k) = std::max(0.0, sample_biquadratic(img, row, col));
    }
  return out.normalize();
}

namespace {

int read_pnm_token(std::istream& in) {
  // skips whitespace and '#' comments
  while (true) {
    int ch = in.peek();
    if (ch == '#') {
      std::string line;
      std::getline(in, line);
    } else if (std::isspace(ch)) {
      in.get();
    } else {
      break;
    }
  }
  int value;
  if (!(in >> value)) throw std::runtime_error("PGM: truncated header");
  return value;
}

}  // namespace

GridImage read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("PGM: cannot open " + path);
  std::string magic;
  in >> magic;
  if (magic != "P2" && magic != "P5")
    throw std::runtime_error("PGM: bad magic in " + path);
  int w = read_pnm_token(in);
  int h = read_pnm_token(in);
  int maxval = read_pnm_token(in);
  if (maxval != 255 && maxval != 65535)
    throw std::runtime_error("PGM: unsupported maxval in " + path);
  Mat pix(h, w);
  if (magic == "P2") {
    for (int r = 0; r < h; ++r)
      for (int c = 0; c < w; ++c) pix(h - 1 - r, c) = read_pnm_token(in);
  } else {
    in.get();  // single whitespace after maxval
    const int bytes = maxval > 255 ? 2 : 1;
    std::vector<unsigned char> buf(static_cast<size_t>(w) * h * bytes);
    in.read(reinterpret_cast<char*>(buf.data()),
            static_cast<std::streamsize>(buf.size()));
    if (!in) throw std::runtime_error("PGM: truncated data in " + path);
    size_t idx = 0;
    for (int r = 0; r < h; ++r)
      for (int c = 0; c < w; ++c) {
        int v = buf[idx++];
        if (bytes == 2) v = (v << 8) | buf[idx++];  // big-endian
        pix(h - 1 - r, c) = v;
      }
  }
  return GridImage(w, h, std::move(pix)).normalize();
}

void write_pgm(const std::string& path, const GridImage& img, bool binary) {
  double peak = img.pixels().maxCoeff();
  if (peak <= 0.0) throw std::invalid_argument("write_pgm: empty image");
  const int maxval = 65535;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("PGM: cannot write " + path);
  out << (binary ? "P5" : "P2") << "\n"
      << img.width() << " " << img.height() << "\n"
      << maxval << "\n";
  const int h = img.height(), w = img.width();
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c) {
      int v = static_cast<int>(
          std::lround(img.pixels()(h - 1 - r, c) / peak * maxval));
      v = std::clamp(v, 0, maxval);
      if (binary) {
        unsigned char b[2] = {static_cast<unsigned char>(v >> 8),
                              static_cast<unsigned char>(v & 0xff)};
        out.write(reinterpret_cast<char*>(b), 2);
      } else {
        out << v << (c + 1 == w ? '\n' : ' ');
      }
    }
}

}  // namespace nrcdt
