#include <doctest.h>

#include <cmath>

#include "nrcdt/analysis.hpp"
#include "nrcdt/rng.hpp"

using namespace nrcdt;

namespace {

Mat random_blobs(int per_class, int k, double spread, Rng& rng,
                 std::vector<int>* labels) {
  Mat x(per_class * k, 2);
  for (int c = 0; c < k; ++c) {
    double cx = 10.0 * c, cy = 5.0 * (c % 2);
    for (int i = 0; i < per_class; ++i) {
      int row = c * per_class + i;
      x(row, 0) = cx + spread * rng.normal();
      x(row, 1) = cy + spread * rng.normal();
      if (labels) labels->push_back(c);
    }
  }
  return x;
}

}  // namespace

TEST_CASE("nearest_template picks the closest row, ties to lowest index") {
  Mat templates(2, 2);
  templates << 0.0, 0.0, 2.0, 2.0;
  Vec q(2);
  q << 1.5, 1.5;
  CHECK(nearest_template(q, templates, Norm::L2) == 1);
  CHECK(nearest_template(q, templates, Norm::Linf) == 1);
  q << 0.4, 0.0;
  CHECK(nearest_template(q, templates, Norm::L2) == 0);
  // exact tie: both templates at L2 distance sqrt(2)
  q << 1.0, 1.0;
  CHECK(nearest_template(q, templates, Norm::L2) == 0);
  // the two norms can disagree: offsets (1,1) vs (1.2,0.1)
  Mat t2(2, 2);
  t2 << 0.0, 0.0, -0.2, 0.9;
  q << 1.0, 1.0;
  CHECK(nearest_template(q, t2, Norm::L2) == 1);
  CHECK(nearest_template(q, t2, Norm::Linf) == 0);
}

TEST_CASE("knn_classify majority vote with tie rules") {
  Mat train(4, 1);
  train << 0.0, 0.1, 1.0, 1.1;
  std::vector<int> labels = {0, 0, 1, 1};
  Vec q(1);
  q << 0.05;
  CHECK(knn_classify(train, labels, q, 1) == 0);
  CHECK(knn_classify(train, labels, q, 3) == 0);
  q << 1.05;
  CHECK(knn_classify(train, labels, q, 3) == 1);
  // 2-2 split: smallest label wins
  q << 0.55;
  CHECK(knn_classify(train, labels, q, 4) == 0);
  CHECK_THROWS_AS(knn_classify(train, labels, q, 0), std::invalid_argument);
  CHECK_THROWS_AS(knn_classify(train, labels, q, 5), std::invalid_argument);
}

TEST_CASE("svm separates well-separated blobs") {
  Rng rng(17);
  std::vector<int> labels;
  Mat x = random_blobs(20, 3, 0.5, rng, &labels);
  LinearModel model = svm_train(x, labels, 1.0, 200, 11);
  std::vector<int> pred;
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    pred.push_back(svm_predict(model, x.row(i).transpose()));
  CHECK(accuracy(pred, labels) == 1.0);
}

TEST_CASE("svm cannot solve XOR with a linear boundary") {
  Mat x(40, 2);
  std::vector<int> labels;
  Rng rng(3);
  for (int i = 0; i < 40; ++i) {
    double a = (i % 2) ? 1.0 : -1.0;
    double b = (i % 4 < 2) ? 1.0 : -1.0;
    x(i, 0) = a + 0.05 * rng.normal();
    x(i, 1) = b + 0.05 * rng.normal();
    labels.push_back(a * b > 0 ? 1 : 0);
  }
  LinearModel model = svm_train(x, labels, 1.0, 100, 5);
  std::vector<int> pred;
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    pred.push_back(svm_predict(model, x.row(i).transpose()));
  CHECK(accuracy(pred, labels) <= 0.75);
}

TEST_CASE("svm training is invariant to duplicating the training set") {
  Rng rng(23);
  std::vector<int> labels;
  Mat x = random_blobs(15, 2, 1.0, rng, &labels);
  LinearModel base = svm_train(x, labels, 2.0, 400, 9);

  Mat xx(x.rows() * 2, x.cols());
  xx << x, x;
  std::vector<int> ll = labels;
  ll.insert(ll.end(), labels.begin(), labels.end());
  LinearModel doubled = svm_train(xx, ll, 2.0, 400, 9);

  for (size_t c = 0; c < base.classes.size(); ++c) {
    Vec w1 = base.weights.row(static_cast<Eigen::Index>(c)).transpose();
    Vec w2 = doubled.weights.row(static_cast<Eigen::Index>(c)).transpose();
    CHECK((w1 - w2).cwiseAbs().maxCoeff() < 1e-6);
  }
}

TEST_CASE("svm objective does not degrade with longer training") {
  Rng rng(29);
  std::vector<int> labels;
  Mat x = random_blobs(25, 2, 2.0, rng, &labels);
  double prev = 1e300;
  for (int epochs : {5, 50, 500}) {
    LinearModel m = svm_train(x, labels, 1.0, epochs, 13);
    double obj = svm_objective(m, x, labels, 0);
    CHECK(obj <= prev + 1e-8);
    prev = obj;
  }
}

TEST_CASE("k-means basics: k = n gives zero inertia, pairs give means") {
  Mat x(4, 1);
  x << 0.0, 1.0, 10.0, 11.0;
  KMeansModel exact = kmeans_fit(x, 4, 5, 1);
  CHECK(exact.inertia == doctest::Approx(0.0).epsilon(1e-12));

  KMeansModel pairs = kmeans_fit(x, 2, 5, 1);
  CHECK(pairs.inertia == doctest::Approx(1.0).epsilon(1e-9));  // 4 * 0.5^2
  Vec centers = pairs.centers.col(0);
  std::sort(centers.data(), centers.data() + 2);
  CHECK(centers[0] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(centers[1] == doctest::Approx(10.5).epsilon(1e-9));

  Partition part = kmeans_assign(pairs, x);
  CHECK(part[0] == part[1]);
  CHECK(part[2] == part[3]);
  CHECK(part[0] != part[2]);
}

TEST_CASE("k-means inertia is monotone in the number of restarts") {
  Rng rng(41);
  Mat x = random_blobs(30, 4, 2.5, rng, nullptr);
  double prev = 1e300;
  for (int restarts : {1, 3, 10, 20}) {
    double inertia = kmeans_fit(x, 4, restarts, 6).inertia;
    CHECK(inertia <= prev);
    prev = inertia;
  }
  // determinism
  CHECK(kmeans_fit(x, 4, 5, 6).inertia == kmeans_fit(x, 4, 5, 6).inertia);
}

TEST_CASE("rand_index on known partitions") {
  CHECK(rand_index({0, 0, 1, 1}, {1, 1, 0, 0}) == 1.0);
  CHECK(rand_index({0, 0, 0}, {0, 1, 2}) == 0.0);
  // {a,b | c} vs {a | b,c}: agree on pair (a,c) only, 1 of 3 pairs
  CHECK(rand_index({0, 0, 1}, {0, 1, 1}) == doctest::Approx(1.0 / 3));
  CHECK_THROWS_AS(rand_index({0}, {0, 1}), std::invalid_argument);
}

TEST_CASE("variation_information on known partitions") {
  CHECK(variation_information({0, 0, 1, 1}, {1, 1, 0, 0}) ==
        doctest::Approx(0.0).epsilon(1e-15));
  // all-in-one vs two equal halves: VI = ln 2
  CHECK(std::abs(variation_information({0, 0, 0, 0}, {0, 0, 1, 1}) -
                 std::log(2.0)) < 1e-12);
  CHECK(variation_information({0, 1, 0, 1}, {2, 2, 3, 3}) ==
        doctest::Approx(variation_information({2, 2, 3, 3}, {0, 1, 0, 1})));
}

TEST_CASE("variation_information satisfies the triangle inequality") {
  Rng rng(53);
  const int n = 30;
  for (int trial = 0; trial < 100; ++trial) {
    Partition u(n), v(n), w(n);
    for (int i = 0; i < n; ++i) {
      u[i] = static_cast<int>(rng.next_u64() % 4);
      v[i] = static_cast<int>(rng.next_u64() % 3);
      w[i] = static_cast<int>(rng.next_u64() % 5);
    }
    double uv = variation_information(u, v);
    double vw = variation_information(v, w);
    double uw = variation_information(u, w);
    CHECK(uw <= uv + vw + 1e-12);
  }
}

TEST_CASE("pca: collinear data has one nonzero component") {
  Mat x(5, 3);
  Vec3 dir(1.0, 2.0, -1.0);
  for (int i = 0; i < 5; ++i) x.row(i) = (i - 2.0) * dir.transpose();
  PcaResult p = pca_project(x, 2);
  CHECK(p.variances[0] > 0.0);
  CHECK(p.variances[1] == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(p.variances[0] == doctest::Approx(p.total_variance).epsilon(1e-10));
  // component aligned with the generating direction, first coordinate positive
  Vec c0 = p.components.row(0).transpose();
  CHECK((c0 - dir.normalized()).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("pca components are orthonormal and reconstruct 2-d data") {
  Rng rng(61);
  Mat x(40, 2);
  for (int i = 0; i < 40; ++i) {
    x(i, 0) = 3.0 * rng.normal();
    x(i, 1) = 0.5 * rng.normal() + 0.2 * x(i, 0);
  }
  PcaResult p = pca_project(x, 2);
  Mat gram = p.components * p.components.transpose();
  CHECK((gram - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-10);
  // full-rank projection loses nothing
  Vec mean = x.colwise().mean().transpose();
  Mat rebuilt = p.coordinates * p.components;
  rebuilt.rowwise() += mean.transpose();
  CHECK((rebuilt - x).cwiseAbs().maxCoeff() < 1e-9);
  CHECK(p.variances[0] >= p.variances[1]);
}

TEST_CASE("pca uses the Gram trick consistently when dim exceeds n") {
  Rng rng(67);
  Mat x(6, 50);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 50; ++j) x(i, j) = rng.normal();
  PcaResult p = pca_project(x, 3);
  Mat gram = p.components * p.components.transpose();
  CHECK((gram - Mat::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-9);
  // projecting centered data onto the components reproduces the coordinates
  Vec mean = x.colwise().mean().transpose();
  Mat centered = x.rowwise() - mean.transpose();
  CHECK((centered * p.components.transpose() - p.coordinates)
            .cwiseAbs()
            .maxCoeff() < 1e-9);
}

TEST_CASE("accuracy counts matches") {
  CHECK(accuracy({1, 2, 3}, {1, 2, 3}) == 1.0);
  CHECK(accuracy({1, 0, 3}, {1, 2, 3}) == doctest::Approx(2.0 / 3));
  CHECK_THROWS_AS(accuracy({1}, {1, 2}), std::invalid_argument);
}
