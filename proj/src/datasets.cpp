#include "nrcdt/datasets.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <Eigen/QR>

#include "nrcdt/directions.hpp"

namespace nrcdt {

namespace fs = std::filesystem;

// ---- procedural templates -------------------------------------------------

namespace {

bool point_in_polygon(double x, double y, const std::vector<Vec2>& poly) {
  // even-odd rule
  bool inside = false;
  size_t n = poly.size();
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    double xi = poly[i].x(), yi = poly[i].y();
    double xj = poly[j].x(), yj = poly[j].y();
    if ((yi > y) != (yj > y) &&
        x < (xj - xi) * (y - yi) / (yj - yi) + xi)
      inside = !inside;
  }
  return inside;
}

GridImage rasterize(int side, const std::function<bool(double, double)>& in) {
  GridImage img(side, side);
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c) {
      Vec2 p = img.pixelCenter(r, c);
      if (in(p.x(), p.y())) img.pixels()(r, c) = 1.0;
    }
  return img.normalize();
}

std::vector<Vec2> regular_vertices(int m, double radius, double phase) {
  std::vector<Vec2> v;
  v.reserve(m);
  for (int k = 0; k < m; ++k) {
    double a = phase + 2.0 * M_PI * k / m;
    v.emplace_back(radius * std::cos(a), radius * std::sin(a));
  }
  return v;
}

std::vector<Vec2> star_vertices(int m, double r_out, double r_in,
                                double phase) {
  std::vector<Vec2> v;
  v.reserve(2 * m);
  for (int k = 0; k < 2 * m; ++k) {
    double a = phase + M_PI * k / m;
    double r = (k % 2 == 0) ? r_out : r_in;
    v.emplace_back(r * std::cos(a), r * std::sin(a));
  }
  return v;
}

}  // namespace

GridImage academic_template(int index, int side) {
  switch (index) {
    case 0:  // cross
      return rasterize(side, [](double x, double y) {
        return (std::abs(x) <= 0.45 && std::abs(y) <= 0.12) ||
               (std::abs(y) <= 0.45 && std::abs(x) <= 0.12);
      });
    case 1:  // annulus
      return rasterize(side, [](double x, double y) {
        double r = std::hypot(x, y);
        return r >= 0.25 && r <= 0.45;
      });
    case 2: {  // triangle with a triangular hole
      auto outer = regular_vertices(3, 0.50, M_PI_2);
      auto inner = regular_vertices(3, 0.22, M_PI_2);
      return rasterize(side, [outer, inner](double x, double y) {
        return point_in_polygon(x, y, outer) && !point_in_polygon(x, y, inner);
      });
    }
    default:
      throw std::invalid_argument("academic_template: index out of range");
  }
}

GridImage polygon_template(int index, int side) {
  if (index < 0 || index >= 9)
    throw std::invalid_argument("polygon_template: index out of range");
  std::vector<Vec2> poly =
      index < 5 ? regular_vertices(index + 3, 0.45, M_PI_2)
                : star_vertices(index, 0.45, 0.20, M_PI_2);
  return rasterize(side, [poly](double x, double y) {
    return point_in_polygon(x, y, poly);
  });
}

PointCloud cloud3d_template(int index) {
  auto make = [](std::vector<Vec3> pts) {
    Mat m(3, static_cast<Eigen::Index>(pts.size()));
    for (size_t i = 0; i < pts.size(); ++i)
      m.col(static_cast<Eigen::Index>(i)) = pts[i];
    return PointCloud::uniform(std::move(m));
  };
  const double g = (1.0 + std::sqrt(5.0)) / 2.0;
  switch (index) {
    case 0:  // tetrahedron
      return make({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}});
    case 1: {  // cube
      std::vector<Vec3> v;
      for (int s = 0; s < 8; ++s)
        v.emplace_back(s & 1 ? 1 : -1, s & 2 ? 1 : -1, s & 4 ? 1 : -1);
      return make(v);
    }
    case 2:  // octahedron
      return make({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                   {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
    case 3: {  // icosahedron
      std::vector<Vec3> v;
      for (double a : {1.0, -1.0})
        for (double b : {g, -g}) {
          v.emplace_back(0, a, b);
          v.emplace_back(a, b, 0);
          v.emplace_back(b, 0, a);
        }
      return make(v);
    }
    case 4: {  // triangular prism
      std::vector<Vec3> v;
      for (double z : {-1.0, 1.0})
        for (int k = 0; k < 3; ++k) {
          double a = M_PI_2 + 2.0 * M_PI * k / 3;
          v.emplace_back(std::cos(a), std::sin(a), z);
        }
      return make(v);
    }
    default:
      throw std::invalid_argument("cloud3d_template: index out of range");
  }
}

// ---- affine classes -------------------------------------------------------

namespace {

Json image_params_json(const AffineImageParams& p) {
  return Json{{"shift_px", p.shift_px},
              {"rot_min", p.rot_min},
              {"rot_max", p.rot_max},
              {"snap_angles", p.snap_angles},
              {"scale_min", p.scale_min},
              {"scale_max", p.scale_max},
              {"shear_deg", p.shear_deg},
              {"warp", p.warp},
              {"warp_f_min", p.warp_f_min},
              {"warp_f_max", p.warp_f_max},
              {"warp_a_min", p.warp_a_min},
              {"warp_a_max", p.warp_a_max}};
}

}  // namespace

LabeledImageSet gen_affine_image_class(const GridImage& tmpl, int n,
                                       const AffineImageParams& params,
                                       std::uint64_t seed, int label) {
  LabeledImageSet set;
  set.provenance = Json{{"generator", "affine_image_class"},
                        {"seed", seed},
                        {"label", label},
                        {"params", image_params_json(params)}};
  double px = tmpl.pixelWidth();
  double py = tmpl.pixelHeight();
  for (int i = 0; i < n; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    bool done = false;
    for (int attempt = 0; attempt < 100 && !done; ++attempt) {
      double sx = rng.uniform(params.scale_min, params.scale_max);
      double sy = rng.uniform(params.scale_min, params.scale_max);
      double shear =
          rng.uniform(-params.shear_deg, params.shear_deg) * M_PI / 180.0;
      double rot = rng.uniform(params.rot_min, params.rot_max);
      if (params.snap_angles > 0) {
        double step = 2.0 * M_PI / params.snap_angles;
        rot = step * std::floor(rot / step);
      }
      double tx = rng.uniform(-params.shift_px, params.shift_px) * px;
      double ty = rng.uniform(-params.shift_px, params.shift_px) * py;

      Mat2 scale;
      scale << sx, 0, 0, sy;
      Mat2 sh;
      sh << 1, std::tan(shear), 0, 1;
      Mat2 ro;
      ro << std::cos(rot), -std::sin(rot), std::sin(rot), std::cos(rot);
      AffineMap map(ro * sh * scale, Vec2(tx, ty));

      GridImage base = tmpl;
      if (params.warp) {
        double f1 = rng.uniform(params.warp_f_min, params.warp_f_max);
        double f2 = rng.uniform(params.warp_f_min, params.warp_f_max);
        double a1 = rng.uniform(params.warp_a_min, params.warp_a_max);
        double a2 = rng.uniform(params.warp_a_min, params.warp_a_max);
        base = warp_image(base, f1, f2, a1, a2);
      }
      try {
        set.items.push_back(apply_affine_image(base, map));
        set.labels.push_back(label);
        done = true;
      } catch (const std::domain_error&) {
        // support left the frame; redraw from the same substream
      }
    }
    if (!done)
      throw std::runtime_error(
          "gen_affine_image_class: no support-safe transform in 100 draws "
          "(sample " +
          std::to_string(i) + ")");
  }
  return set;
}

LabeledCloudSet gen_affine_pointcloud_class(const PointCloud& tmpl, int n,
                                            const AffineCloudParams& params,
                                            std::uint64_t seed, int label) {
  if (tmpl.kind() != PointCloud::Kind::Vector || tmpl.dim() != 3)
    throw std::invalid_argument(
        "gen_affine_pointcloud_class: template must be a 3-d vector cloud");
  LabeledCloudSet set;
  set.provenance = Json{{"generator", "affine_pointcloud_class"},
                        {"seed", seed},
                        {"label", label},
                        {"params",
                         {{"scale_min", params.scale_min},
                          {"scale_max", params.scale_max},
                          {"shear_deg", params.shear_deg},
                          {"rotate", params.rotate},
                          {"shift", params.shift}}}};
  for (int i = 0; i < n; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    Mat3 scale = Mat3::Zero();
    for (int d = 0; d < 3; ++d)
      scale(d, d) = rng.uniform(params.scale_min, params.scale_max);
    Mat3 sh = Mat3::Identity();
    sh(0, 1) = std::tan(rng.uniform(-params.shear_deg, params.shear_deg) *
                        M_PI / 180.0);
    sh(0, 2) = std::tan(rng.uniform(-params.shear_deg, params.shear_deg) *
                        M_PI / 180.0);
    sh(1, 2) = std::tan(rng.uniform(-params.shear_deg, params.shear_deg) *
                        M_PI / 180.0);
    Mat3 rot = params.rotate ? random_rotation(rng) : Mat3::Identity();
    Vec3 y(rng.uniform(-params.shift, params.shift),
           rng.uniform(-params.shift, params.shift),
           rng.uniform(-params.shift, params.shift));
    AffineMap map(rot * sh * scale, y);
    set.items.push_back(apply_affine_points(tmpl, map));
    set.labels.push_back(label);
    set.transforms.push_back(map);
  }
  return set;
}

// ---- rotation data --------------------------------------------------------

Mat3 random_rotation(Rng& rng) {
  double a, b, c, d, norm;
  do {
    a = rng.normal();
    b = rng.normal();
    c = rng.normal();
    d = rng.normal();
    norm = std::sqrt(a * a + b * b + c * c + d * d);
  } while (norm < 1e-12);
  return quaternion_to_matrix(a / norm, b / norm, c / norm, d / norm);
}

PointCloud sample_uniform_so3(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Mat3> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(random_rotation(rng));
  return PointCloud::uniform(std::move(out));
}

PointCloud sample_matrix_fisher(double kappa, int n, std::uint64_t seed) {
  if (kappa < 0.0)
    throw std::invalid_argument("sample_matrix_fisher: kappa must be >= 0");
  Rng rng(seed);
  std::vector<Mat3> out;
  out.reserve(n);
  while (static_cast<int>(out.size()) < n) {
    Mat3 r = random_rotation(rng);
    // accept with probability exp(kappa (tr R - 3)); the uniform draw is
    // skipped entirely at kappa = 0 so that stream matches the plain sampler
    if (kappa == 0.0 ||
        rng.uniform() < std::exp(kappa * (r.trace() - 3.0)))
      out.push_back(r);
  }
  return PointCloud::uniform(std::move(out));
}

namespace {

PointCloud sample_equator_rotations(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Mat3> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    double psi = rng.uniform(0.0, 2.0 * M_PI);   // axis direction in x-y plane
    double omega = rng.uniform(0.0, 2.0 * M_PI); // rotation angle
    double s = std::sin(0.5 * omega);
    out.push_back(quaternion_to_matrix(std::cos(0.5 * omega),
                                       s * std::cos(psi), s * std::sin(psi),
                                       0.0));
  }
  return PointCloud::uniform(std::move(out));
}

PointCloud sample_qr_gaussian(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Mat3> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    Mat3 g;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) g(r, c) = rng.normal();
    Eigen::HouseholderQR<Mat3> qr(g);
    Mat3 q = qr.householderQ();
    Mat3 rr = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int d = 0; d < 3; ++d)
      if (rr(d, d) < 0.0) q.col(d) = -q.col(d);
    if (q.determinant() < 0.0) q.col(2) = -q.col(2);
    out.push_back(q);
  }
  return PointCloud::uniform(std::move(out));
}

}  // namespace

LabeledCloudSet gen_rotation_dataset(int n_per_class, int n_points,
                                     std::uint64_t seed) {
  LabeledCloudSet set;
  set.provenance =
      Json{{"generator", "rotation_dataset"},
           {"seed", seed},
           {"n_per_class", n_per_class},
           {"n_points", n_points},
           {"classes",
            {"matrix_fisher_kappa10", "equator_axis_uniform_angle_uniform",
             "qr_gaussian"}}};
  set.templates.push_back(
      sample_matrix_fisher(10.0, n_points, derive_seed(seed, 1000)));
  set.templates.push_back(
      sample_equator_rotations(n_points, derive_seed(seed, 1001)));
  set.templates.push_back(sample_qr_gaussian(n_points, derive_seed(seed, 1002)));

  for (int cls = 0; cls < 3; ++cls) {
    for (int i = 0; i < n_per_class; ++i) {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(cls) * 100000 + i));
      Mat3 r = random_rotation(rng);
      set.items.push_back(
          rotate_cloud(set.templates[static_cast<size_t>(cls)], r));
      set.labels.push_back(cls);
      set.rotations_applied.push_back(r);
    }
  }
  return set;
}

// ---- IDX ------------------------------------------------------------------

namespace {

std::uint32_t read_be32(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  if (!in) throw std::runtime_error("IDX: truncated file");
  return (std::uint32_t(b[0]) << 24) | (std::uint32_t(b[1]) << 16) |
         (std::uint32_t(b[2]) << 8) | std::uint32_t(b[3]);
}

void write_be32(std::ostream& out, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v >> 24),
                        static_cast<unsigned char>(v >> 16),
                        static_cast<unsigned char>(v >> 8),
                        static_cast<unsigned char>(v)};
  out.write(reinterpret_cast<char*>(b), 4);
}

// bilinear rescale of raw gray values onto a side x side grid
Mat rescale_bilinear(const Mat& src, int side) {
  const int h = static_cast<int>(src.rows());
  const int w = static_cast<int>(src.cols());
  Mat out(side, side);
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c) {
      double sr = (r + 0.5) * h / side - 0.5;
      double sc = (c + 0.5) * w / side - 0.5;
      int r0 = static_cast<int>(std::floor(sr));
      int c0 = static_cast<int>(std::floor(sc));
      double fr = sr - r0, fc = sc - c0;
      auto at = [&](int rr, int cc) -> double {
        if (rr < 0 || rr >= h || cc < 0 || cc >= w) return 0.0;
        return src(rr, cc);
      };
      out(r, c) = (1 - fr) * ((1 - fc) * at(r0, c0) + fc * at(r0, c0 + 1)) +
                  fr * ((1 - fc) * at(r0 + 1, c0) + fc * at(r0 + 1, c0 + 1));
    }
  return out;
}

}  // namespace

LabeledImageSet load_idx(const std::string& images_path,
                         const std::string& labels_path,
                         const IdxOptions& opts) {
  std::ifstream imgs(images_path, std::ios::binary);
  if (!imgs) throw std::runtime_error("IDX: cannot open " + images_path);
  if (read_be32(imgs) != 0x00000803u)
    throw std::runtime_error("IDX: bad image magic in " + images_path);
  int count = static_cast<int>(read_be32(imgs));
  int h = static_cast<int>(read_be32(imgs));
  int w = static_cast<int>(read_be32(imgs));

  std::ifstream lbls(labels_path, std::ios::binary);
  if (!lbls) throw std::runtime_error("IDX: cannot open " + labels_path);
  if (read_be32(lbls) != 0x00000801u)
    throw std::runtime_error("IDX: bad label magic in " + labels_path);
  if (static_cast<int>(read_be32(lbls)) != count)
    throw std::runtime_error("IDX: image/label count mismatch");

  LabeledImageSet set;
  set.provenance = Json{{"generator", "idx_loader"},
                        {"images", images_path},
                        {"labels", labels_path},
                        {"resolution", opts.resolution},
                        {"center", opts.center}};
  std::vector<unsigned char> buf(static_cast<size_t>(h) * w);
  for (int i = 0; i < count; ++i) {
    imgs.read(reinterpret_cast<char*>(buf.data()),
              static_cast<std::streamsize>(buf.size()));
    int label = lbls.get();
    if (!imgs || label == EOF) throw std::runtime_error("IDX: truncated data");
    if (!opts.classes.empty() &&
        std::find(opts.classes.begin(), opts.classes.end(), label) ==
            opts.classes.end())
      continue;
    // IDX stores rows top-to-bottom; flip to the bottom-up pixel layout
    Mat raw(h, w);
    for (int r = 0; r < h; ++r)
      for (int c = 0; c < w; ++c)
        raw(h - 1 - r, c) = buf[static_cast<size_t>(r) * w + c];
    if (raw.sum() <= 0.0) throw std::runtime_error("IDX: empty image");
    Mat scaled = opts.resolution == h && opts.resolution == w
                     ? raw
                     : rescale_bilinear(raw, opts.resolution);
    GridImage img(opts.resolution, opts.resolution, scaled);
    img.normalize();
    if (opts.center) {
      // integer-pixel shift moving the intensity centroid to the middle
      double mr = 0.0, mc = 0.0;
      for (int r = 0; r < opts.resolution; ++r)
        for (int c = 0; c < opts.resolution; ++c) {
          mr += r * img.pixels()(r, c);
          mc += c * img.pixels()(r, c);
        }
      double total = img.pixels().sum();
      int dr = static_cast<int>(std::lround((opts.resolution - 1) / 2.0 -
                                            mr / total));
      int dc = static_cast<int>(std::lround((opts.resolution - 1) / 2.0 -
                                            mc / total));
      if (dr != 0 || dc != 0) {
        Mat shifted = Mat::Zero(opts.resolution, opts.resolution);
        for (int r = 0; r < opts.resolution; ++r)
          for (int c = 0; c < opts.resolution; ++c) {
            int rr = r + dr, cc = c + dc;
            if (rr >= 0 && rr < opts.resolution && cc >= 0 &&
                cc < opts.resolution)
              shifted(rr, cc) = img.pixels()(r, c);
          }
        img = GridImage(opts.resolution, opts.resolution, shifted);
        img.normalize();
      }
    }
    set.items.push_back(std::move(img));
    set.labels.push_back(label);
  }
  if (!opts.classes.empty() && set.items.empty())
    throw std::runtime_error("IDX: class filter matched no samples");
  return set;
}

void write_idx(const std::string& images_path, const std::string& labels_path,
               const std::vector<GridImage>& images,
               const std::vector<int>& labels) {
  if (images.empty() || images.size() != labels.size())
    throw std::invalid_argument("write_idx: bad inputs");
  const int h = images[0].height(), w = images[0].width();
  std::ofstream imgs(images_path, std::ios::binary);
  std::ofstream lbls(labels_path, std::ios::binary);
  if (!imgs || !lbls) throw std::runtime_error("IDX: cannot write output");
  write_be32(imgs, 0x00000803u);
  write_be32(imgs, static_cast<std::uint32_t>(images.size()));
  write_be32(imgs, static_cast<std::uint32_t>(h));
  write_be32(imgs, static_cast<std::uint32_t>(w));
  write_be32(lbls, 0x00000801u);
  write_be32(lbls, static_cast<std::uint32_t>(labels.size()));
  for (size_t i = 0; i < images.size(); ++i) {
    const GridImage& img = images[i];
    double peak = img.pixels().maxCoeff();
    for (int r = 0; r < h; ++r)
      for (int c = 0; c < w; ++c) {
        int v = static_cast<int>(
            std::lround(img.pixels()(h - 1 - r, c) / peak * 255.0));
        imgs.put(static_cast<char>(std::clamp(v, 0, 255)));
      }
    lbls.put(static_cast<char>(labels[i]));
  }
}

// ---- point-cloud files ------------------------------------------------------

PointCloud load_pointcloud(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  bool obj = path.size() >= 4 && path.substr(path.size() - 4) == ".obj";
  std::vector<std::vector<double>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (obj) {
      std::string tag;
      ls >> tag;
      if (tag != "v") continue;
      double x, y, z;
      if (!(ls >> x >> y >> z))
        throw std::runtime_error(path + ": unparsable vertex at line " +
                                 std::to_string(lineno));
      rows.push_back({x, y, z});
    } else {
      std::vector<double> vals;
      std::string tok;
      while (std::getline(ls, tok, ',')) {
        try {
          vals.push_back(std::stod(tok));
        } catch (const std::exception&) {
          throw std::runtime_error(path + ": unparsable value at line " +
                                   std::to_string(lineno));
        }
      }
      if (vals.empty())
        throw std::runtime_error(path + ": empty row at line " +
                                 std::to_string(lineno));
      rows.push_back(std::move(vals));
    }
  }
  if (rows.empty()) throw std::runtime_error(path + ": no vertices");
  size_t d = rows[0].size();
  Mat pts(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(rows.size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != d)
      throw std::runtime_error(path + ": inconsistent column count");
    for (size_t j = 0; j < d; ++j)
      pts(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) =
          rows[i][j];
  }
  return PointCloud::uniform(std::move(pts));
}

void write_pointcloud_csv(const std::string& path, const PointCloud& cloud) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.precision(17);
  const Mat& p = cloud.points();
  for (Eigen::Index i = 0; i < p.cols(); ++i)
    for (Eigen::Index j = 0; j < p.rows(); ++j)
      out << p(j, i) << (j + 1 == p.rows() ? '\n' : ',');
}

PointCloud load_rotations_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<Mat3> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    Mat3 m;
    std::string tok;
    for (int k = 0; k < 9; ++k) {
      if (!std::getline(ls, tok, ','))
        throw std::runtime_error(path + ": expected 9 entries at line " +
                                 std::to_string(lineno));
      m(k / 3, k % 3) = std::stod(tok);
    }
    out.push_back(m);
  }
  if (out.empty()) throw std::runtime_error(path + ": no rotations");
  return PointCloud::uniform(std::move(out));
}

void write_rotations_csv(const std::string& path, const PointCloud& cloud) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.precision(17);
  for (const Mat3& m : cloud.rotations())
    for (int k = 0; k < 9; ++k)
      out << m(k / 3, k % 3) << (k == 8 ? '\n' : ',');
}

// ---- dataset directories ----------------------------------------------------

void save_dataset(const std::string& dir, const LabeledImageSet& set) {
  fs::create_directories(dir);
  Json manifest = set.provenance;
  manifest["kind"] = "images";
  manifest["labels"] = set.labels;
  Json files = Json::array();
  for (size_t i = 0; i < set.items.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "item_%05zu.pgm", i);
    write_pgm((fs::path(dir) / name).string(), set.items[i]);
    files.push_back(name);
  }
  manifest["files"] = files;
  Json tmpl = Json::array();
  for (size_t i = 0; i < set.templates.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "template_%02zu.pgm", i);
    write_pgm((fs::path(dir) / name).string(), set.templates[i]);
    tmpl.push_back(name);
  }
  manifest["template_files"] = tmpl;
  std::ofstream out(fs::path(dir) / "manifest.json");
  out << manifest.dump(2) << "\n";
}

void save_dataset(const std::string& dir, const LabeledCloudSet& set) {
  fs::create_directories(dir);
  Json manifest = set.provenance;
  manifest["labels"] = set.labels;
  Json files = Json::array();
  bool so3 = !set.items.empty() &&
             set.items[0].kind() == PointCloud::Kind::Rotation;
  manifest["kind"] = so3 ? "rotations" : "clouds";
  for (size_t i = 0; i < set.items.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "item_%05zu.csv", i);
    std::string p = (fs::path(dir) / name).string();
    if (so3)
      write_rotations_csv(p, set.items[i]);
    else
      write_pointcloud_csv(p, set.items[i]);
    files.push_back(name);
  }
  manifest["files"] = files;
  Json tmpl = Json::array();
  for (size_t i = 0; i < set.templates.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "template_%02zu.csv", i);
    std::string p = (fs::path(dir) / name).string();
    if (so3)
      write_rotations_csv(p, set.templates[i]);
    else
      write_pointcloud_csv(p, set.templates[i]);
    tmpl.push_back(name);
  }
  manifest["template_files"] = tmpl;
  std::ofstream out(fs::path(dir) / "manifest.json");
  out << manifest.dump(2) << "\n";
}

Json read_manifest(const std::string& dir) {
  std::ifstream in(fs::path(dir) / "manifest.json");
  if (!in)
    throw std::runtime_error("dataset: missing manifest.json in " + dir);
  Json m;
  in >> m;
  return m;
}

LabeledImageSet load_dataset_images(const std::string& dir) {
  Json m = read_manifest(dir);
  if (m.value("kind", "") != "images")
    throw std::runtime_error("dataset: " + dir + " does not hold images");
  LabeledImageSet set;
  set.provenance = m;
  set.labels = m.at("labels").get<std::vector<int>>();
  for (const auto& f : m.at("files"))
    set.items.push_back(read_pgm((fs::path(dir) / f.get<std::string>()).string()));
  if (m.contains("template_files"))
    for (const auto& f : m.at("template_files"))
      set.templates.push_back(
          read_pgm((fs::path(dir) / f.get<std::string>()).string()));
  if (set.items.size() != set.labels.size())
    throw std::runtime_error("dataset: item/label count mismatch in " + dir);
  return set;
}

LabeledCloudSet load_dataset_clouds(const std::string& dir) {
  Json m = read_manifest(dir);
  std::string kind = m.value("kind", "");
  if (kind != "clouds" && kind != "rotations")
    throw std::runtime_error("dataset: " + dir + " does not hold point sets");
  LabeledCloudSet set;
  set.provenance = m;
  set.labels = m.at("labels").get<std::vector<int>>();
  for (const auto& f : m.at("files")) {
    std::string p = (fs::path(dir) / f.get<std::string>()).string();
    set.items.push_back(kind == "rotations" ? load_rotations_csv(p)
                                            : load_pointcloud(p));
  }
  if (m.contains("template_files"))
    for (const auto& f : m.at("template_files")) {
      std::string p = (fs::path(dir) / f.get<std::string>()).string();
      set.templates.push_back(kind == "rotations" ? load_rotations_csv(p)
                                                  : load_pointcloud(p));
    }
  if (set.items.size() != set.labels.size())
    throw std::runtime_error("dataset: item/label count mismatch in " + dir);
  return set;
}

}  // namespace nrcdt
