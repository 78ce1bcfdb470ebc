// Command-line front end: dataset generation, feature extraction, and the
// classification/clustering experiments, all reproducible from a single seed.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nrcdt/analysis.hpp"
#include "nrcdt/datasets.hpp"
#include "nrcdt/features.hpp"
#include "nrcdt/parallel.hpp"

namespace fs = std::filesystem;
using nrcdt::Json;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitNumeric = 4;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// FNV-1a over the raw manifest bytes
std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::string manifest_hash(const std::string& dir) {
  std::ifstream in(fs::path(dir) / "manifest.json", std::ios::binary);
  if (!in) throw std::runtime_error("missing manifest.json in " + dir);
  std::ostringstream ss;
  ss << in.rdbuf();
  return fnv1a_hex(ss.str());
}

// JSON config file whose keys mirror the long option names; explicit flags
// win over file values, unknown keys are rejected
void apply_config_file(CLI::App* cmd, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  Json cfg;
  try {
    in >> cfg;
  } catch (const Json::exception& e) {
    throw ConfigError("config parse error: " + std::string(e.what()));
  }
  if (!cfg.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, value] : cfg.items()) {
    CLI::Option* opt = cmd->get_option_no_throw("--" + key);
    if (opt == nullptr)
      throw ConfigError("unknown config key: " + key);
    if (opt->count() > 0) continue;  // flag wins
    std::string text = value.is_string() ? value.get<std::string>()
                                         : value.dump();
    opt->add_result(text);
    opt->run_callback();
  }
}

struct FeatureOptions {
  std::string method = "mnrcdt";
  int angles = 32;   // direction count for every domain
  int radii = 850;   // image stripe count
  int grid = 256;    // quantile samples n_t
  int threads = nrcdt::default_thread_count();
};

void add_feature_options(CLI::App* cmd, FeatureOptions& o) {
  cmd->add_option("--method", o.method,
                  "feature method: eucl|rcdt|mnrcdt|ha|hb|hc|hd|tv");
  cmd->add_option("--angles", o.angles, "number of directions");
  cmd->add_option("--radii", o.radii, "number of image stripes");
  cmd->add_option("--grid", o.grid, "quantile grid size");
  cmd->add_option("--threads", o.threads, "worker thread bound");
}

Json feature_config_json(const FeatureOptions& o) {
  // thread count deliberately omitted: reports are thread-count independent
  return Json{{"method", o.method},
              {"angles", o.angles},
              {"radii", o.radii},
              {"grid", o.grid}};
}

struct LoadedData {
  bool images = false;
  nrcdt::LabeledImageSet image_set;
  nrcdt::LabeledCloudSet cloud_set;

  size_t count() const {
    return images ? image_set.items.size() : cloud_set.items.size();
  }
  const std::vector<int>& labels() const {
    return images ? image_set.labels : cloud_set.labels;
  }
  size_t template_count() const {
    return images ? image_set.templates.size() : cloud_set.templates.size();
  }
};

LoadedData load_any(const std::string& dir) {
  LoadedData d;
  Json m = nrcdt::read_manifest(dir);
  std::string kind = m.value("kind", "");
  if (kind == "images") {
    d.images = true;
    d.image_set = nrcdt::load_dataset_images(dir);
  } else {
    d.cloud_set = nrcdt::load_dataset_clouds(dir);
  }
  return d;
}

nrcdt::DirectionSet directions_for(const LoadedData& d, int n) {
  if (d.images) return nrcdt::equispaced_s1(n);
  const nrcdt::PointCloud& first =
      d.cloud_set.items.empty() ? d.cloud_set.templates.front()
                                : d.cloud_set.items.front();
  if (first.kind() == nrcdt::PointCloud::Kind::Rotation)
    return nrcdt::super_fibonacci_so3(n);
  if (first.dim() == 2) return nrcdt::equispaced_s1(n);
  return nrcdt::fibonacci_s2(n);
}

nrcdt::Vec one_feature(const LoadedData& d, bool is_template, size_t idx,
                       nrcdt::FeatureMethod method,
                       const nrcdt::DirectionSet& dirs, int radii,
                       const nrcdt::QuantileGrid& grid) {
  if (d.images) {
    const nrcdt::GridImage& img =
        is_template ? d.image_set.templates[idx] : d.image_set.items[idx];
    return nrcdt::feature_pipeline(img, method, dirs, radii, grid);
  }
  const nrcdt::PointCloud& cloud =
      is_template ? d.cloud_set.templates[idx] : d.cloud_set.items[idx];
  return nrcdt::feature_pipeline(cloud, method, dirs, grid);
}

nrcdt::Mat featurize_all(const LoadedData& d, bool templates,
                         const FeatureOptions& o) {
  nrcdt::FeatureMethod method = nrcdt::parse_method(o.method);
  nrcdt::DirectionSet dirs = directions_for(d, o.angles);
  nrcdt::QuantileGrid grid(o.grid);
  int n = static_cast<int>(templates ? d.template_count() : d.count());
  if (n == 0)
    throw std::runtime_error(templates ? "dataset has no templates"
                                       : "dataset is empty");
  nrcdt::Vec probe = one_feature(d, templates, 0, method, dirs, o.radii, grid);
  nrcdt::Mat out(n, probe.size());
  out.row(0) = probe.transpose();
  nrcdt::parallel_for(n - 1, o.threads, [&](int i) {
    out.row(i + 1) =
        one_feature(d, templates, static_cast<size_t>(i + 1), method, dirs,
                    o.radii, grid)
            .transpose();
  });
  return out;
}

void write_report(const std::string& path, const Json& report) {
  fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write report " + path);
  out << report.dump(2) << "\n";
}

// deterministic train/test split: per-class index shuffle from a derived seed
void split_per_class(const std::vector<int>& labels, int train_per_class,
                     std::uint64_t seed, std::vector<int>& train_idx,
                     std::vector<int>& test_idx, bool shuffle) {
  std::map<int, std::vector<int>> by_class;
  for (size_t i = 0; i < labels.size(); ++i)
    by_class[labels[i]].push_back(static_cast<int>(i));
  for (auto& [cls, idx] : by_class) {
    if (shuffle) {
      nrcdt::Rng rng(nrcdt::derive_seed(seed, static_cast<std::uint64_t>(cls)));
      for (size_t i = idx.size(); i > 1; --i)
        std::swap(idx[i - 1], idx[rng.next_u64() % i]);
    }
    if (train_per_class > static_cast<int>(idx.size()))
      throw std::runtime_error("train split larger than class " +
                               std::to_string(cls));
    for (size_t i = 0; i < idx.size(); ++i)
      (static_cast<int>(i) < train_per_class ? train_idx : test_idx)
          .push_back(idx[i]);
  }
}

// ---- subcommand payloads --------------------------------------------------

struct GenOptions {
  std::string dataset;
  int classes = 3;
  int per_class = 10;
  std::uint64_t seed = 0;
  std::string out;
  int snap_angles = 0;
  int side = 256;
  int points = 1000;
  bool warp = false;
  bool no_rotate = false;
};

int run_gen(const GenOptions& o) {
  if (o.dataset == "academic" || o.dataset == "polygon") {
    int max_classes = o.dataset == "academic" ? 3 : 9;
    if (o.classes < 1 || o.classes > max_classes)
      throw ConfigError("--classes out of range for dataset " + o.dataset);
    nrcdt::AffineImageParams params;
    params.snap_angles = o.snap_angles;
    if (o.dataset == "polygon") {
      params.scale_min = 0.5;
      params.scale_max = 1.25;
      params.warp = true;
    }
    if (o.warp) params.warp = true;
    nrcdt::LabeledImageSet all;
    all.provenance = Json{{"generator", o.dataset},
                          {"seed", o.seed},
                          {"classes", o.classes},
                          {"per_class", o.per_class},
                          {"side", o.side},
                          {"snap_angles", o.snap_angles},
                          {"warp", params.warp}};
    for (int cls = 0; cls < o.classes; ++cls) {
      nrcdt::GridImage tmpl = o.dataset == "academic"
                                  ? nrcdt::academic_template(cls, o.side)
                                  : nrcdt::polygon_template(cls, o.side);
      nrcdt::LabeledImageSet part = nrcdt::gen_affine_image_class(
          tmpl, o.per_class, params,
          nrcdt::derive_seed(o.seed, static_cast<std::uint64_t>(cls)), cls);
      all.templates.push_back(std::move(tmpl));
      for (size_t i = 0; i < part.items.size(); ++i) {
        all.items.push_back(std::move(part.items[i]));
        all.labels.push_back(cls);
      }
    }
    nrcdt::save_dataset(o.out, all);
  } else if (o.dataset == "clouds3d") {
    if (o.classes < 1 || o.classes > 5)
      throw ConfigError("--classes out of range for dataset clouds3d");
    nrcdt::AffineCloudParams params;
    params.rotate = !o.no_rotate;
    nrcdt::LabeledCloudSet all;
    all.provenance = Json{{"generator", "clouds3d"},
                          {"seed", o.seed},
                          {"classes", o.classes},
                          {"per_class", o.per_class},
                          {"rotate", params.rotate}};
    for (int cls = 0; cls < o.classes; ++cls) {
      nrcdt::PointCloud tmpl = nrcdt::cloud3d_template(cls);
      nrcdt::LabeledCloudSet part = nrcdt::gen_affine_pointcloud_class(
          tmpl, o.per_class, params,
          nrcdt::derive_seed(o.seed, static_cast<std::uint64_t>(cls)), cls);
      all.templates.push_back(std::move(tmpl));
      for (size_t i = 0; i < part.items.size(); ++i) {
        all.items.push_back(std::move(part.items[i]));
        all.labels.push_back(cls);
      }
    }
    nrcdt::save_dataset(o.out, all);
  } else if (o.dataset == "rotation") {
    nrcdt::LabeledCloudSet set =
        nrcdt::gen_rotation_dataset(o.per_class, o.points, o.seed);
    nrcdt::save_dataset(o.out, set);
  } else {
    throw ConfigError("unknown dataset: " + o.dataset);
  }
  std::cout << "wrote dataset to " << o.out << "\n";
  return 0;
}

struct FeaturizeOptions {
  FeatureOptions feat;
  std::string data;
  std::string out;
};

int run_featurize(const FeaturizeOptions& o) {
  LoadedData d = load_any(o.data);
  nrcdt::Mat rows = featurize_all(d, false, o.feat);
  nrcdt::write_features_csv(o.out, rows, o.feat.method, o.feat.angles,
                            o.feat.radii, o.feat.grid);
  std::cout << "wrote " << rows.rows() << " feature rows to " << o.out << "\n";
  return 0;
}

struct ClassifyOptions {
  FeatureOptions feat;
  std::string data;
  std::string report;
  std::string mode = "nt";
  std::string norm = "l2";
  int k = 1;
  int train_per_class = 1;
  int repeats = 1;
  double svm_c = 1.0;
  int svm_epochs = 200;
  std::uint64_t seed = 0;
};

int run_classify(const ClassifyOptions& o) {
  LoadedData d = load_any(o.data);
  Json report{{"command", "classify"},
              {"mode", o.mode},
              {"config", feature_config_json(o.feat)},
              {"dataset", o.data},
              {"dataset_manifest_hash", manifest_hash(o.data)},
              {"seed", o.seed}};

  if (o.mode == "nt") {
    if (o.norm != "l2" && o.norm != "linf")
      throw ConfigError("--norm must be l2 or linf");
    nrcdt::Mat tmpl = featurize_all(d, true, o.feat);
    nrcdt::Mat feats = featurize_all(d, false, o.feat);
    nrcdt::Norm norm = o.norm == "l2" ? nrcdt::Norm::L2 : nrcdt::Norm::Linf;
    std::vector<int> pred(d.count());
    for (size_t i = 0; i < d.count(); ++i)
      pred[i] = nrcdt::nearest_template(feats.row(static_cast<Eigen::Index>(i))
                                            .transpose(),
                                        tmpl, norm);
    report["norm"] = o.norm;
    report["accuracy"] = nrcdt::accuracy(pred, d.labels());
  } else if (o.mode == "knn" || o.mode == "svm") {
    nrcdt::Mat feats = featurize_all(d, false, o.feat);
    std::vector<double> accs;
    for (int rep = 0; rep < o.repeats; ++rep) {
      std::vector<int> train_idx, test_idx;
      split_per_class(d.labels(), o.train_per_class,
                      nrcdt::derive_seed(o.seed, static_cast<std::uint64_t>(rep)),
                      train_idx, test_idx, true);
      if (test_idx.empty())
        throw std::runtime_error("no test samples left after the split");
      nrcdt::Mat train(static_cast<Eigen::Index>(train_idx.size()),
                       feats.cols());
      std::vector<int> train_labels;
      for (size_t i = 0; i < train_idx.size(); ++i) {
        train.row(static_cast<Eigen::Index>(i)) = feats.row(train_idx[i]);
        train_labels.push_back(d.labels()[static_cast<size_t>(train_idx[i])]);
      }
      std::vector<int> pred, truth;
      if (o.mode == "knn") {
        for (int idx : test_idx) {
          pred.push_back(nrcdt::knn_classify(train, train_labels,
                                             feats.row(idx).transpose(), o.k));
          truth.push_back(d.labels()[static_cast<size_t>(idx)]);
        }
      } else {
        nrcdt::LinearModel model = nrcdt::svm_train(
            train, train_labels, o.svm_c, o.svm_epochs,
            nrcdt::derive_seed(o.seed, 7000 + static_cast<std::uint64_t>(rep)));
        for (int idx : test_idx) {
          pred.push_back(nrcdt::svm_predict(model, feats.row(idx).transpose()));
          truth.push_back(d.labels()[static_cast<size_t>(idx)]);
        }
      }
      accs.push_back(nrcdt::accuracy(pred, truth));
    }
    double mean = std::accumulate(accs.begin(), accs.end(), 0.0) /
                  static_cast<double>(accs.size());
    double var = 0.0;
    for (double a : accs) var += (a - mean) * (a - mean);
    var /= static_cast<double>(accs.size());
    report["train_per_class"] = o.train_per_class;
    report["repeats"] = o.repeats;
    if (o.mode == "knn") report["k"] = o.k;
    report["accuracy_mean"] = mean;
    report["accuracy_std"] = std::sqrt(var);
  } else {
    throw ConfigError("unknown mode: " + o.mode);
  }
  write_report(o.report, report);
  std::cout << report.dump(2) << "\n";
  return 0;
}

struct ClusterOptions {
  FeatureOptions feat;
  std::string data;
  std::string report;
  int k = 3;
  int train_per_class = 50;
  int restarts = 20;
  std::uint64_t seed = 0;
};

int run_cluster(const ClusterOptions& o) {
  LoadedData d = load_any(o.data);
  nrcdt::Mat feats = featurize_all(d, false, o.feat);
  std::vector<int> train_idx, test_idx;
  split_per_class(d.labels(), o.train_per_class, o.seed, train_idx, test_idx,
                  false);
  nrcdt::Mat train(static_cast<Eigen::Index>(train_idx.size()), feats.cols());
  nrcdt::Partition truth_train, truth_test;
  for (size_t i = 0; i < train_idx.size(); ++i) {
    train.row(static_cast<Eigen::Index>(i)) = feats.row(train_idx[i]);
    truth_train.push_back(d.labels()[static_cast<size_t>(train_idx[i])]);
  }
  nrcdt::KMeansModel model =
      nrcdt::kmeans_fit(train, o.k, o.restarts, o.seed);
  nrcdt::Partition assign_train = nrcdt::kmeans_assign(model, train);

  Json report{{"command", "cluster"},
              {"config", feature_config_json(o.feat)},
              {"dataset", o.data},
              {"dataset_manifest_hash", manifest_hash(o.data)},
              {"seed", o.seed},
              {"k", o.k},
              {"train_per_class", o.train_per_class},
              {"inertia", model.inertia},
              {"ri_train", nrcdt::rand_index(assign_train, truth_train)},
              {"vi_train",
               nrcdt::variation_information(assign_train, truth_train)}};
  if (!test_idx.empty()) {
    nrcdt::Mat test(static_cast<Eigen::Index>(test_idx.size()), feats.cols());
    for (size_t i = 0; i < test_idx.size(); ++i) {
      test.row(static_cast<Eigen::Index>(i)) = feats.row(test_idx[i]);
      truth_test.push_back(d.labels()[static_cast<size_t>(test_idx[i])]);
    }
    nrcdt::Partition assign_test = nrcdt::kmeans_assign(model, test);
    report["ri_test"] = nrcdt::rand_index(assign_test, truth_test);
    report["vi_test"] = nrcdt::variation_information(assign_test, truth_test);
  }
  write_report(o.report, report);
  std::cout << report.dump(2) << "\n";
  return 0;
}

struct PcaOptions {
  FeatureOptions feat;
  std::string data;
  std::string out;
  int dims = 2;
  int k = 0;  // optional cluster column via k-means
  std::uint64_t seed = 0;
};

int run_pca(const PcaOptions& o) {
  if (o.dims != 2 && o.dims != 3) throw ConfigError("--dims must be 2 or 3");
  LoadedData d = load_any(o.data);
  nrcdt::Mat feats = featurize_all(d, false, o.feat);
  nrcdt::PcaResult pca = nrcdt::pca_project(feats, o.dims);
  nrcdt::Partition clusters(d.count(), -1);
  if (o.k > 0) {
    nrcdt::KMeansModel model = nrcdt::kmeans_fit(feats, o.k, 20, o.seed);
    clusters = nrcdt::kmeans_assign(model, feats);
  }
  fs::path p(o.out);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(o.out);
  if (!out) throw std::runtime_error("cannot write " + o.out);
  out.precision(17);
  out << "id,label,cluster";
  for (int c = 0; c < o.dims; ++c) out << "," << char('x' + c);
  out << "\n";
  for (size_t i = 0; i < d.count(); ++i) {
    out << i << "," << d.labels()[i] << "," << clusters[i];
    for (int c = 0; c < o.dims; ++c)
      out << "," << pca.coordinates(static_cast<Eigen::Index>(i), c);
    out << "\n";
  }
  std::cout << "wrote PCA coordinates to " << o.out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normalized Radon-CDT feature extraction and experiments"};
  app.require_subcommand(1);

  GenOptions gen;
  std::string gen_config;
  CLI::App* cmd_gen = app.add_subcommand("gen", "generate a dataset");
  cmd_gen->add_option("--config", gen_config, "JSON config file");
  cmd_gen->add_option("--dataset", gen.dataset,
                      "academic|polygon|clouds3d|rotation")
      ->required();
  cmd_gen->add_option("--classes", gen.classes, "number of classes");
  cmd_gen->add_option("--per-class", gen.per_class, "samples per class");
  cmd_gen->add_option("--seed", gen.seed, "master seed");
  cmd_gen->add_option("--out", gen.out, "output directory")->required();
  cmd_gen->add_option("--snap-angles", gen.snap_angles,
                      "snap rotations to multiples of 2pi/n (0 = off)");
  cmd_gen->add_option("--side", gen.side, "image side length");
  cmd_gen->add_option("--points", gen.points,
                      "points per rotation-dataset template");
  cmd_gen->add_flag("--warp", gen.warp, "enable the wave warp");
  cmd_gen->add_flag("--no-rotate", gen.no_rotate,
                    "disable random rotations (clouds3d)");

  FeaturizeOptions feat;
  std::string feat_config;
  CLI::App* cmd_feat = app.add_subcommand("featurize", "export feature CSV");
  cmd_feat->add_option("--config", feat_config, "JSON config file");
  add_feature_options(cmd_feat, feat.feat);
  cmd_feat->add_option("--data", feat.data, "dataset directory")->required();
  cmd_feat->add_option("--out", feat.out, "output CSV")->required();

  ClassifyOptions cls;
  std::string cls_config;
  CLI::App* cmd_cls = app.add_subcommand("classify", "run a classifier");
  cmd_cls->add_option("--config", cls_config, "JSON config file");
  add_feature_options(cmd_cls, cls.feat);
  cmd_cls->add_option("--data", cls.data, "dataset directory")->required();
  cmd_cls->add_option("--report", cls.report, "output JSON report")->required();
  cmd_cls->add_option("--mode", cls.mode, "nt|knn|svm");
  cmd_cls->add_option("--norm", cls.norm, "nt norm: l2|linf");
  cmd_cls->add_option("--k", cls.k, "neighbour count for knn");
  cmd_cls->add_option("--train-per-class", cls.train_per_class,
                      "training samples per class (knn/svm)");
  cmd_cls->add_option("--repeats", cls.repeats, "repeat count (knn/svm)");
  cmd_cls->add_option("--svm-c", cls.svm_c, "SVM regularization");
  cmd_cls->add_option("--svm-epochs", cls.svm_epochs, "SVM training epochs");
  cmd_cls->add_option("--seed", cls.seed, "master seed");

  ClusterOptions clu;
  std::string clu_config;
  CLI::App* cmd_clu = app.add_subcommand("cluster", "run k-means");
  cmd_clu->add_option("--config", clu_config, "JSON config file");
  add_feature_options(cmd_clu, clu.feat);
  cmd_clu->add_option("--data", clu.data, "dataset directory")->required();
  cmd_clu->add_option("--report", clu.report, "output JSON report")->required();
  cmd_clu->add_option("--k", clu.k, "cluster count");
  cmd_clu->add_option("--train-per-class", clu.train_per_class,
                      "training samples per class");
  cmd_clu->add_option("--restarts", clu.restarts, "k-means restarts");
  cmd_clu->add_option("--seed", clu.seed, "master seed");

  PcaOptions pca;
  std::string pca_config;
  CLI::App* cmd_pca = app.add_subcommand("pca", "export PCA coordinates");
  cmd_pca->add_option("--config", pca_config, "JSON config file");
  add_feature_options(cmd_pca, pca.feat);
  cmd_pca->add_option("--data", pca.data, "dataset directory")->required();
  cmd_pca->add_option("--out", pca.out, "output CSV")->required();
  cmd_pca->add_option("--dims", pca.dims, "2 or 3 components");
  cmd_pca->add_option("--k", pca.k, "optional k-means cluster column");
  cmd_pca->add_option("--seed", pca.seed, "master seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (cmd_gen->parsed()) {
      if (!gen_config.empty()) apply_config_file(cmd_gen, gen_config);
      return run_gen(gen);
    }
    if (cmd_feat->parsed()) {
      if (!feat_config.empty()) apply_config_file(cmd_feat, feat_config);
      return run_featurize(feat);
    }
    if (cmd_cls->parsed()) {
      if (!cls_config.empty()) apply_config_file(cmd_cls, cls_config);
      return run_classify(cls);
    }
    if (cmd_clu->parsed()) {
      if (!clu_config.empty()) apply_config_file(cmd_clu, clu_config);
      return run_cluster(clu);
    }
    if (cmd_pca->parsed()) {
      if (!pca_config.empty()) apply_config_file(cmd_pca, pca_config);
      return run_pca(pca);
    }
  } catch (const ConfigError& e) {
    std::cerr << Json{{"error", "config"}, {"message", e.what()}}.dump()
              << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << Json{{"error", "config"}, {"message", e.what()}}.dump()
              << "\n";
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << Json{{"error", "numerical"}, {"message", e.what()}}.dump()
              << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", "data"}, {"message", e.what()}}.dump() << "\n";
    return kExitData;
  }
  return 0;
}
