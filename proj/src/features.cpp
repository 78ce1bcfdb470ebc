#include "nrcdt/features.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>

namespace nrcdt {

FeatureMethod parse_method(const std::string& name) {
  if (name == "eucl") return FeatureMethod::Eucl;
  if (name == "rcdt") return FeatureMethod::Rcdt;
  if (name == "mnrcdt") return FeatureMethod::Mnrcdt;
  if (name == "ha") return FeatureMethod::Ha;
  if (name == "hb") return FeatureMethod::Hb;
  if (name == "hc") return FeatureMethod::Hc;
  if (name == "hd") return FeatureMethod::Hd;
  if (name == "tv") return FeatureMethod::Tv;
  throw std::invalid_argument("unknown feature method: " + name);
}

std::string method_name(FeatureMethod m) {
  switch (m) {
    case FeatureMethod::Eucl:
      return "eucl";
    case FeatureMethod::Rcdt:
      return "rcdt";
    case FeatureMethod::Mnrcdt:
      return "mnrcdt";
    case FeatureMethod::Ha:
      return "ha";
    case FeatureMethod::Hb:
      return "hb";
    case FeatureMethod::Hc:
      return "hc";
    case FeatureMethod::Hd:
      return "hd";
    default:
      return "tv";
  }
}

FeatureMatrix normalize_family(const ProjectionFamily& family,
                               const QuantileGrid& grid, CdtMode mode) {
  const Eigen::Index n_dir =
      static_cast<Eigen::Index>(family.projections.size());
  if (n_dir == 0) throw std::invalid_argument("normalize_family: empty family");
  FeatureMatrix fm;
  fm.directions = family.directions;
  fm.values.resize(grid.n_t, n_dir);
  for (Eigen::Index i = 0; i < n_dir; ++i) {
    Vec col = cdt_sample(family.projections[static_cast<size_t>(i)], grid,
                         mode, family.bin_width);
    double mean = col.mean();
    col.array() -= mean;
    double sd = std::sqrt(col.squaredNorm() / grid.n_t);
    if (sd < 1e-10)
      throw std::domain_error(
          "degenerate projection: support on a hyperplane (direction " +
          std::to_string(i) + " has vanishing spread)");
    fm.values.col(i) = col / sd;
  }
  return fm;
}

Vec h_reduce(const FeatureMatrix& fm, HVariant variant) {
  if (fm.values.size() == 0)
    throw std::invalid_argument("h_reduce: empty matrix");
  switch (variant) {
    case HVariant::Max:
      return fm.values.rowwise().maxCoeff();
    case HVariant::Ha:
      return fm.values.cwiseAbs().rowwise().maxCoeff();
    case HVariant::Hb:
      return fm.values.cwiseAbs().rowwise().minCoeff();
    case HVariant::Hc:
      return fm.values.cwiseAbs().rowwise().maxCoeff() -
             fm.values.cwiseAbs().rowwise().minCoeff();
    default:
      return fm.values.rowwise().maxCoeff() - fm.values.rowwise().minCoeff();
  }
}

Vec tv_reduce(const FeatureMatrix& fm) {
  if (fm.directions.kind != DirectionSet::Kind::Circle)
    throw std::invalid_argument(
        "tv_reduce: defined for circle direction sets only");
  const Eigen::Index n = fm.values.cols();
  // directions sorted by angle; equispaced_s1 already emits them in order
  std::vector<Eigen::Index> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return fm.directions.angles[a] < fm.directions.angles[b];
  });
  Vec out = Vec::Zero(fm.values.rows());
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index i = order[static_cast<size_t>(k)];
    Eigen::Index j = order[static_cast<size_t>((k + 1) % n)];
    out += (fm.values.col(j) - fm.values.col(i)).cwiseAbs();
  }
  return out;
}

Vec rcdt_flatten(const ProjectionFamily& family, const QuantileGrid& grid,
                 CdtMode mode) {
  const Eigen::Index n_dir =
      static_cast<Eigen::Index>(family.projections.size());
  Vec out(grid.n_t * n_dir);
  for (Eigen::Index i = 0; i < n_dir; ++i)
    out.segment(i * grid.n_t, grid.n_t) = cdt_sample(
        family.projections[static_cast<size_t>(i)], grid, mode,
        family.bin_width);
  return out;
}

namespace {

Vec reduce_family(const ProjectionFamily& family, FeatureMethod method,
                  const QuantileGrid& grid, CdtMode mode) {
  if (method == FeatureMethod::Rcdt) return rcdt_flatten(family, grid, mode);
  FeatureMatrix fm = normalize_family(family, grid, mode);
  switch (method) {
    case FeatureMethod::Mnrcdt:
      return h_reduce(fm, HVariant::Max);
    case FeatureMethod::Ha:
      return h_reduce(fm, HVariant::Ha);
    case FeatureMethod::Hb:
      return h_reduce(fm, HVariant::Hb);
    case FeatureMethod::Hc:
      return h_reduce(fm, HVariant::Hc);
    case FeatureMethod::Hd:
      return h_reduce(fm, HVariant::Hd);
    case FeatureMethod::Tv:
      return tv_reduce(fm);
    default:
      throw std::logic_error("reduce_family: unexpected method");
  }
}

}  // namespace

Vec feature_pipeline(const GridImage& img, FeatureMethod method,
                     const DirectionSet& directions, int n_radii,
                     const QuantileGrid& grid) {
  if (method == FeatureMethod::Eucl)
    return Eigen::Map<const Vec>(img.pixels().data(), img.pixels().size());
  ProjectionFamily fam = project_image(img, directions, n_radii);
  return reduce_family(fam, method, grid, CdtMode::LinearInterp);
}

Vec feature_pipeline(const PointCloud& cloud, FeatureMethod method,
                     const DirectionSet& directions, const QuantileGrid& grid) {
  if (method == FeatureMethod::Eucl) {
    if (cloud.kind() == PointCloud::Kind::Vector)
      return Eigen::Map<const Vec>(cloud.points().data(),
                                   cloud.points().size());
    Vec out(9 * static_cast<Eigen::Index>(cloud.rotations().size()));
    for (size_t i = 0; i < cloud.rotations().size(); ++i)
      out.segment(static_cast<Eigen::Index>(9 * i), 9) =
          Eigen::Map<const Vec>(cloud.rotations()[i].data(), 9);
    return out;
  }
  ProjectionFamily fam = project_points(cloud, directions);
  return reduce_family(fam, method, grid, CdtMode::Exact);
}

void write_features_csv(const std::string& path, const Mat& rows,
                        const std::string& method, Eigen::Index n_dir,
                        int n_radii, int n_t) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.precision(17);
  out << "# method=" << method << " n_dir=" << n_dir << " n_radii=" << n_radii
      << " n_t=" << n_t << "\n";
  for (Eigen::Index r = 0; r < rows.rows(); ++r) {
    for (Eigen::Index c = 0; c < rows.cols(); ++c)
      out << rows(r, c) << (c + 1 == rows.cols() ? '\n' : ',');
  }
}

}  // namespace nrcdt
