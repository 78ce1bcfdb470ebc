#pragma once

#include <cstdint>
#include <vector>

#include "nrcdt/rng.hpp"
#include "nrcdt/types.hpp"

namespace nrcdt {

// assignment of every item to a cluster/class id in [0, k)
using Partition = std::vector<int>;

enum class Norm { L2, Linf };

// argmin over templates of the chosen norm distance; ties go to the lowest
// index
int nearest_template(const Vec& query, const Mat& templates, Norm norm);

// majority label among the k nearest training rows (Euclidean); ties go to
// the smallest label
int knn_classify(const Mat& train, const std::vector<int>& labels,
                 const Vec& query, int k);

// One-vs-rest L2-regularized hinge-loss linear classifiers, trained by dual
// coordinate descent with seeded shuffling.  Features are standardized per
// dimension from the training split; per-sample cost is C/n so duplicating
// the training set leaves the decision boundary unchanged.
struct LinearModel {
  Mat weights;  // n_classes x (dim + 1), last column = bias
  Vec mean;     // standardization, per feature
  Vec stddev;
  std::vector<int> classes;
  double C = 1.0;
  int epochs = 0;
  std::uint64_t seed = 0;
};

LinearModel svm_train(const Mat& train, const std::vector<int>& labels,
                      double C = 1.0, int epochs = 200,
                      std::uint64_t seed = 0);
int svm_predict(const LinearModel& model, const Vec& query);
// primal objective of the one-vs-rest problem for class index c
double svm_objective(const LinearModel& model, const Mat& train,
                     const std::vector<int>& labels, int c);

struct KMeansModel {
  Mat centers;  // k x dim
  double inertia = 0.0;
};

// Lloyd iterations from k-means++ seeding; best inertia over restarts with
// substream seeds, so more restarts never increase the returned inertia
KMeansModel kmeans_fit(const Mat& features, int k, int restarts,
                       std::uint64_t seed, int max_iter = 300);
Partition kmeans_assign(const KMeansModel& model, const Mat& features);

// pair-counting agreement (a + b) / C(n,2)
double rand_index(const Partition& u, const Partition& v);

// H(U) + H(V) - 2 I(U,V), natural logarithm, 0 log 0 = 0
double variation_information(const Partition& u, const Partition& v);

struct PcaResult {
  Mat coordinates;     // n x dims
  Vec variances;       // explained variance per component
  Mat components;      // dims x dim, orthonormal rows
  double total_variance = 0.0;
};

// top-dims eigenvectors of the covariance matrix; sign convention: first
// nonzero coordinate of each component positive
PcaResult pca_project(const Mat& features, int dims);

double accuracy(const std::vector<int>& predicted,
                const std::vector<int>& truth);

}  // namespace nrcdt
