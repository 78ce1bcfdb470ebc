#include "nrcdt/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace nrcdt {

int nearest_template(const Vec& query, const Mat& templates, Norm norm) {
  if (templates.rows() == 0)
    throw std::invalid_argument("nearest_template: no templates");
  if (templates.cols() != query.size())
    throw std::invalid_argument("nearest_template: dimension mismatch");
  int best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < templates.rows(); ++i) {
    Vec diff = templates.row(i).transpose() - query;
    double d = norm == Norm::L2 ? diff.norm() : diff.cwiseAbs().maxCoeff();
    if (d < best_d) {
      best_d = d;
      best = static_cast<int>(i);
    }
  }
  return best;
}

int knn_classify(const Mat& train, const std::vector<int>& labels,
                 const Vec& query, int k) {
  const Eigen::Index n = train.rows();
  if (n == 0) throw std::invalid_argument("knn_classify: empty training set");
  if (k < 1 || k > n) throw std::invalid_argument("knn_classify: bad k");
  if (static_cast<size_t>(n) != labels.size())
    throw std::invalid_argument("knn_classify: label count mismatch");

  std::vector<std::pair<double, Eigen::Index>> dist(static_cast<size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i)
    dist[static_cast<size_t>(i)] = {
        (train.row(i).transpose() - query).squaredNorm(), i};
  std::partial_sort(dist.begin(), dist.begin() + k, dist.end());

  std::map<int, int> votes;
  for (int i = 0; i < k; ++i)
    ++votes[labels[static_cast<size_t>(dist[static_cast<size_t>(i)].second)]];
  int best_label = votes.begin()->first;
  int best_count = votes.begin()->second;
  for (const auto& [label, count] : votes)
    if (count > best_count) {
      best_count = count;
      best_label = label;
    }
  return best_label;
}

namespace {

// dual coordinate descent for min_w 1/2 |w|^2 + (C/n) sum hinge(y_i w.x_i);
// x includes an appended constant-1 component for the bias
Vec dcd_binary(const Mat& x, const std::vector<double>& y, double C,
               int epochs, Rng& rng) {
  const Eigen::Index n = x.rows();
  const double cap = C / static_cast<double>(n);
  Vec alpha = Vec::Zero(n);
  Vec w = Vec::Zero(x.cols());
  Vec qdiag(n);
  for (Eigen::Index i = 0; i < n; ++i)
    qdiag[i] = std::max(x.row(i).squaredNorm(), 1e-12);

  std::vector<Eigen::Index> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int e = 0; e < epochs; ++e) {
    // Fisher-Yates with the seeded generator
    for (size_t i = order.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(rng.next_u64() % i);
      std::swap(order[i - 1], order[j]);
    }
    double max_step = 0.0;
    for (Eigen::Index i : order) {
      double g = y[static_cast<size_t>(i)] * x.row(i).dot(w) - 1.0;
      double a_old = alpha[i];
      double a_new =
          std::clamp(a_old - g / qdiag[i], 0.0, cap);
      if (a_new != a_old) {
        w += (a_new - a_old) * y[static_cast<size_t>(i)] *
             x.row(i).transpose();
        alpha[i] = a_new;
        max_step = std::max(max_step, std::abs(a_new - a_old));
      }
    }
    if (max_step < 1e-12 * cap) break;
  }
  return w;
}

}  // namespace

LinearModel svm_train(const Mat& train, const std::vector<int>& labels,
                      double C, int epochs, std::uint64_t seed) {
  const Eigen::Index n = train.rows();
  if (n == 0 || static_cast<size_t>(n) != labels.size())
    throw std::invalid_argument("svm_train: bad inputs");
  std::set<int> cls(labels.begin(), labels.end());
  if (cls.size() < 2)
    throw std::invalid_argument("svm_train: needs at least two classes");

  LinearModel model;
  model.classes.assign(cls.begin(), cls.end());
  model.C = C;
  model.epochs = epochs;
  model.seed = seed;
  model.mean = train.colwise().mean();
  Mat centered = train.rowwise() - model.mean.transpose();
  model.stddev = (centered.array().square().colwise().mean()).sqrt();
  for (Eigen::Index j = 0; j < model.stddev.size(); ++j)
    if (model.stddev[j] < 1e-12) model.stddev[j] = 1.0;

  Mat x(n, train.cols() + 1);
  x.leftCols(train.cols()) =
      centered.array().rowwise() / model.stddev.transpose().array();
  x.col(train.cols()).setOnes();

  model.weights.resize(static_cast<Eigen::Index>(model.classes.size()),
                       x.cols());
  for (size_t c = 0; c < model.classes.size(); ++c) {
    std::vector<double> y(static_cast<size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i)
      y[static_cast<size_t>(i)] =
          labels[static_cast<size_t>(i)] == model.classes[c] ? 1.0 : -1.0;
    Rng rng(derive_seed(seed, c));
    model.weights.row(static_cast<Eigen::Index>(c)) =
        dcd_binary(x, y, C, epochs, rng).transpose();
  }
  return model;
}

int svm_predict(const LinearModel& model, const Vec& query) {
  Vec z(query.size() + 1);
  z.head(query.size()) =
      (query - model.mean).cwiseQuotient(model.stddev);
  z[query.size()] = 1.0;
  Vec scores = model.weights * z;
  Eigen::Index best;
  scores.maxCoeff(&best);
  return model.classes[static_cast<size_t>(best)];
}

double svm_objective(const LinearModel& model, const Mat& train,
                     const std::vector<int>& labels, int c) {
  const Eigen::Index n = train.rows();
  Vec w = model.weights.row(c).transpose();
  double obj = 0.5 * w.squaredNorm();
  for (Eigen::Index i = 0; i < n; ++i) {
    Vec z(train.cols() + 1);
    z.head(train.cols()) = (train.row(i).transpose() - model.mean)
                               .cwiseQuotient(model.stddev);
    z[train.cols()] = 1.0;
    double y = labels[static_cast<size_t>(i)] ==
                       model.classes[static_cast<size_t>(c)]
                   ? 1.0
                   : -1.0;
    obj += (model.C / n) * std::max(0.0, 1.0 - y * w.dot(z));
  }
  return obj;
}

namespace {

double lloyd(const Mat& f, int k, Rng& rng, int max_iter, Mat& centers) {
  const Eigen::Index n = f.rows();
  // k-means++ seeding
  centers.resize(k, f.cols());
  Eigen::Index first = static_cast<Eigen::Index>(
      rng.next_u64() % static_cast<std::uint64_t>(n));
  centers.row(0) = f.row(first);
  Vec d2 = (f.rowwise() - centers.row(0)).rowwise().squaredNorm();
  for (int c = 1; c < k; ++c) {
    double total = d2.sum();
    Eigen::Index pick = 0;
    if (total > 0.0) {
      double target = rng.uniform() * total;
      double acc = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        acc += d2[i];
        if (acc >= target) {
          pick = i;
          break;
        }
      }
    } else {
      pick = static_cast<Eigen::Index>(rng.next_u64() %
                                       static_cast<std::uint64_t>(n));
    }
    centers.row(c) = f.row(pick);
    d2 = d2.cwiseMin((f.rowwise() - centers.row(c)).rowwise().squaredNorm());
  }

  std::vector<int> assign(static_cast<size_t>(n), -1);
  for (int it = 0; it < max_iter; ++it) {
    bool changed = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      int best = 0;
      double best_d = (f.row(i) - centers.row(0)).squaredNorm();
      for (int c = 1; c < k; ++c) {
        double d = (f.row(i) - centers.row(c)).squaredNorm();
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      if (assign[static_cast<size_t>(i)] != best) {
        assign[static_cast<size_t>(i)] = best;
        changed = true;
      }
    }
    if (!changed) break;
    Mat sums = Mat::Zero(k, f.cols());
    std::vector<int> counts(static_cast<size_t>(k), 0);
    for (Eigen::Index i = 0; i < n; ++i) {
      sums.row(assign[static_cast<size_t>(i)]) += f.row(i);
      ++counts[static_cast<size_t>(assign[static_cast<size_t>(i)])];
    }
    for (int c = 0; c < k; ++c)
      if (counts[static_cast<size_t>(c)] > 0)
        centers.row(c) = sums.row(c) / counts[static_cast<size_t>(c)];
  }

  double inertia = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    inertia += (f.row(i) - centers.row(assign[static_cast<size_t>(i)]))
                   .squaredNorm();
  return inertia;
}

}  // namespace

KMeansModel kmeans_fit(const Mat& features, int k, int restarts,
                       std::uint64_t seed, int max_iter) {
  if (features.rows() == 0) throw std::invalid_argument("kmeans_fit: empty");
  if (k < 1 || k > features.rows())
    throw std::invalid_argument("kmeans_fit: bad k");
  KMeansModel best;
  best.inertia = std::numeric_limits<double>::infinity();
  for (int r = 0; r < std::max(restarts, 1); ++r) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    Mat centers;
    double inertia = lloyd(features, k, rng, max_iter, centers);
    if (inertia < best.inertia) {
      best.inertia = inertia;
      best.centers = std::move(centers);
    }
  }
  return best;
}

Partition kmeans_assign(const KMeansModel& model, const Mat& features) {
  Partition out(static_cast<size_t>(features.rows()));
  for (Eigen::Index i = 0; i < features.rows(); ++i) {
    int best = 0;
    double best_d = (features.row(i) - model.centers.row(0)).squaredNorm();
    for (Eigen::Index c = 1; c < model.centers.rows(); ++c) {
      double d = (features.row(i) - model.centers.row(c)).squaredNorm();
      if (d < best_d) {
        best_d = d;
        best = static_cast<int>(c);
      }
    }
    out[static_cast<size_t>(i)] = best;
  }
  return out;
}

double rand_index(const Partition& u, const Partition& v) {
  if (u.size() != v.size() || u.empty())
    throw std::invalid_argument("rand_index: partition size mismatch");
  const size_t n = u.size();
  std::uint64_t agree = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      bool same_u = u[i] == u[j];
      bool same_v = v[i] == v[j];
      if (same_u == same_v) ++agree;
    }
  double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  return pairs == 0.0 ? 1.0 : static_cast<double>(agree) / pairs;
}

double variation_information(const Partition& u, const Partition& v) {
  if (u.size() != v.size() || u.empty())
    throw std::invalid_argument(
        "variation_information: partition size mismatch");
  const double n = static_cast<double>(u.size());
  std::map<int, double> pu, pv;
  std::map<std::pair<int, int>, double> puv;
  for (size_t i = 0; i < u.size(); ++i) {
    pu[u[i]] += 1.0 / n;
    pv[v[i]] += 1.0 / n;
    puv[{u[i], v[i]}] += 1.0 / n;
  }
  auto entropy = [](const std::map<int, double>& p) {
    double h = 0.0;
    for (const auto& [key, prob] : p)
      if (prob > 0.0) h -= prob * std::log(prob);
    return h;
  };
  double mutual = 0.0;
  for (const auto& [st, prob] : puv)
    if (prob > 0.0)
      mutual += prob * std::log(prob / (pu[st.first] * pv[st.second]));
  return entropy(pu) + entropy(pv) - 2.0 * mutual;
}

PcaResult pca_project(const Mat& features, int dims) {
  const Eigen::Index n = features.rows();
  const Eigen::Index d = features.cols();
  if (n < dims) throw std::invalid_argument("pca_project: too few samples");
  Vec mean = features.colwise().mean();
  Mat centered = features.rowwise() - mean.transpose();

  Mat components(dims, d);
  Vec variances(dims);
  double total;

  if (d <= n) {
    Mat cov = centered.transpose() * centered / static_cast<double>(n);
    Eigen::SelfAdjointEigenSolver<Mat> es(cov);
    total = std::max(es.eigenvalues().sum(), 0.0);
    for (int c = 0; c < dims; ++c) {
      Eigen::Index src = d - 1 - c;  // eigenvalues ascend
      variances[c] = std::max(es.eigenvalues()[src], 0.0);
      components.row(c) = es.eigenvectors().col(src).transpose();
    }
  } else {
    // Gram trick: eigenvectors of X X^T / n lift to covariance eigenvectors
    Mat gram = centered * centered.transpose() / static_cast<double>(n);
    Eigen::SelfAdjointEigenSolver<Mat> es(gram);
    total = std::max(es.eigenvalues().sum(), 0.0);
    for (int c = 0; c < dims; ++c) {
      Eigen::Index src = n - 1 - c;
      double lam = std::max(es.eigenvalues()[src], 0.0);
      variances[c] = lam;
      if (lam > 1e-14) {
        Vec lifted = centered.transpose() * es.eigenvectors().col(src);
        components.row(c) = (lifted / lifted.norm()).transpose();
      } else {
        components.row(c).setZero();
      }
    }
  }

  for (int c = 0; c < dims; ++c) {
    for (Eigen::Index j = 0; j < d; ++j) {
      if (std::abs(components(c, j)) > 1e-12) {
        if (components(c, j) < 0.0) components.row(c) = -components.row(c);
        break;
      }
    }
  }

  PcaResult res;
  res.components = components;
  res.variances = variances;
  res.total_variance = total;
  res.coordinates = centered * components.transpose();
  return res;
}

double accuracy(const std::vector<int>& predicted,
                const std::vector<int>& truth) {
  if (predicted.size() != truth.size() || predicted.empty())
    throw std::invalid_argument("accuracy: length mismatch");
  size_t hits = 0;
  for (size_t i = 0; i < predicted.size(); ++i)
    if (predicted[i] == truth[i]) ++hits;
  return static_cast<double>(hits) / static_cast<double>(predicted.size());
}

}  // namespace nrcdt
