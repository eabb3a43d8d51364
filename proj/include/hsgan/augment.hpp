#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hsgan/errors.hpp"
#include "hsgan/gan.hpp"
#include "hsgan/nn1d.hpp"
#include "hsgan/rng.hpp"
#include "hsgan/spectra.hpp"
#include "hsgan/split.hpp"

namespace hsgan::augment {

enum class Strategy { None, Gan, SsGan };

inline const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::None: return "none";
    case Strategy::Gan: return "gan";
    case Strategy::SsGan: return "ss-gan";
  }
  return "?";
}

inline Strategy parse_strategy(const std::string& s) {
  if (s == "none") return Strategy::None;
  if (s == "gan") return Strategy::Gan;
  if (s == "ss-gan" || s == "ssgan") return Strategy::SsGan;
  throw ConfigError("unknown augmentation strategy `" + s + "` (none|gan|ss-gan)");
}

struct AugmentConfig {
  Strategy strategy = Strategy::None;
  double fake_ratio = 0.5;  // generated rows per real training row
  Nn1dConfig classifier;
  std::uint64_t seed = 0;  // master seed; stage seeds derive from it

  void validate() const {
    if (fake_ratio < 0.0) throw ConfigError("augment config: fake_ratio must be >= 0");
    if (strategy == Strategy::None && fake_ratio != 0.0) {
      throw ConfigError("augment config: strategy `none` forces fake_ratio 0");
    }
    classifier.validate();
  }
};

// Appends round(fake_ratio * n_real) generated rows, class-proportional to
// the real label histogram (largest-remainder apportionment). Generated rows
// carry origin flag 1.
inline SpectraTable augment_table(const SpectraTable& real_train, const gan::GanCheckpoint& ckpt,
                                  double fake_ratio, std::uint64_t seed) {
  if (fake_ratio < 0.0) throw ContractError("augment_table: fake_ratio must be >= 0");
  real_train.validate();
  if (real_train.bands() != ckpt.n_bands) {
    throw ShapeError("augment_table: table has " + std::to_string(real_train.bands()) +
                     " bands, checkpoint " + std::to_string(ckpt.n_bands));
  }
  const std::vector<std::uint16_t> classes = dataio::present_classes(real_train);
  if (classes.empty()) throw ContractError("augment_table: no labeled rows to mirror");
  if (classes.back() > ckpt.n_classes) {
    throw LabelError("augment_table: class " + std::to_string(classes.back()) +
                     " missing from the checkpoint vocabulary (1.." +
                     std::to_string(ckpt.n_classes) + ")");
  }

  const std::size_t n_real = real_train.rows();
  const std::size_t total = static_cast<std::size_t>(
      std::llround(fake_ratio * static_cast<double>(n_real)));
  if (total == 0) return real_train;

  // Largest-remainder apportionment of `total` over the class histogram.
  std::map<std::uint16_t, std::size_t> histogram;
  for (std::uint16_t l : real_train.labels) {
    if (l != 0) ++histogram[l];
  }
  const double n_labeled =
      static_cast<double>(dataio::labeled_row_indices(real_train).size());
  std::vector<std::pair<double, std::uint16_t>> remainders;  // (-fraction, class)
  std::map<std::uint16_t, std::size_t> quota;
  std::size_t assigned = 0;
  for (const auto& [cls, count] : histogram) {
    const double share = static_cast<double>(total) * static_cast<double>(count) / n_labeled;
    const std::size_t base = static_cast<std::size_t>(share);
    quota[cls] = base;
    assigned += base;
    remainders.push_back({-(share - static_cast<double>(base)), cls});
  }
  std::sort(remainders.begin(), remainders.end());  // largest remainder first, ties by class id
  for (std::size_t k = 0; assigned < total; ++k, ++assigned) {
    ++quota[remainders[k % remainders.size()].second];
  }

  SpectraTable out = real_train;
  if (out.origin.empty()) out.origin.assign(out.rows(), 0);
  for (const auto& [cls, count] : quota) {
    if (count == 0) continue;
    const SpectraTable fakes = gan::sample(ckpt, cls, count, derive_seed(seed, cls));
    out = dataio::concat_tables(out, fakes);
  }
  return out;
}

// One Table-3 cell: dataset x split x strategy.
struct EvalReport {
  std::string dataset;
  std::string split_desc;
  Strategy strategy = Strategy::None;
  double overall_accuracy = 0.0;
  std::map<std::uint16_t, double> per_class;
  std::size_t n_real_train = 0;
  std::size_t n_fake_train = 0;
  std::uint64_t master_seed = 0;
};

inline constexpr const char* kEvalCsvHeader = "dataset,split,strategy,oa";

inline std::string eval_csv_row(const EvalReport& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", r.overall_accuracy);
  return r.dataset + "," + r.split_desc + "," + to_string(r.strategy) + "," + buf;
}

inline std::string describe_split(const dataio::SplitSpec& spec) {
  if (const auto* rf = std::get_if<dataio::RandomFraction>(&spec)) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "random-%g", rf->fraction);
    return buf;
  }
  const auto& sh = std::get<dataio::SpatialHalves>(spec);
  return std::string("spatial-") + (sh.axis == dataio::SplitAxis::Col ? "col" : "row") + "-" +
         std::to_string(sh.boundary);
}

// The full 5-stage pipeline for one cell: split, optionally train a GAN on
// the training side, augment, train the classifier, evaluate. The master
// seed in `config.seed` derives the per-stage seeds (split, gan, augment,
// classifier), overriding any seed in `split_spec`.
inline EvalReport run_experiment(const SpectraTable& table, const dataio::SplitSpec& split_spec,
                                 const AugmentConfig& config, const gan::GanConfig& gan_config,
                                 const std::string& dataset_name = "dataset") {
  config.validate();
  const std::uint64_t s_split = derive_seed(config.seed, 0);
  const std::uint64_t s_gan = derive_seed(config.seed, 1);
  const std::uint64_t s_augment = derive_seed(config.seed, 2);
  const std::uint64_t s_classifier = derive_seed(config.seed, 3);

  dataio::SplitSpec effective = split_spec;
  if (auto* rf = std::get_if<dataio::RandomFraction>(&effective)) rf->seed = s_split;
  const dataio::SplitResult split_result = dataio::split(table, effective);

  const SpectraTable train_labeled =
      dataio::take_rows(split_result.train, dataio::labeled_row_indices(split_result.train));
  if (train_labeled.rows() == 0) throw ContractError("run_experiment: empty training split");

  SpectraTable augmented = train_labeled;
  if (config.strategy != Strategy::None) {
    gan::GanConfig gc = gan_config;
    gc.seed = s_gan;
    gc.mode = config.strategy == Strategy::SsGan ? gan::TrainMode::SemiSupervised
                                                 : gan::TrainMode::Supervised;
    SpectraTable gan_table = train_labeled;
    if (config.strategy == Strategy::SsGan) {
      // Unlabeled spectra outside the test side feed the critic: the whole
      // unlabeled pool for a random split, the train half for a spatial one.
      const SpectraTable& extra_pool = std::get_if<dataio::RandomFraction>(&effective)
                                           ? split_result.unlabeled
                                           : split_result.train;
      const std::vector<std::size_t> extra = dataio::unlabeled_row_indices(extra_pool);
      if (!extra.empty()) {
        gan_table = dataio::concat_tables(gan_table, dataio::take_rows(extra_pool, extra));
      }
    }
    const gan::GanCheckpoint ckpt = gan::train(gan_table, gc);
    augmented = augment_table(train_labeled, ckpt, config.fake_ratio, s_augment);
  }

  // Fake rows must never reach the evaluation side.
  for (std::size_t i = 0; i < split_result.test.rows(); ++i) {
    if (split_result.test.row_is_fake(i)) {
      throw ContractError("run_experiment: synthetic row leaked into the test split");
    }
  }

  Nn1dConfig clf_config = config.classifier;
  clf_config.seed = s_classifier;
  const MlpParams classifier = train_nn1d(augmented, clf_config);

  const SpectraTable test_labeled =
      dataio::take_rows(split_result.test, dataio::labeled_row_indices(split_result.test));

  EvalReport report;
  report.dataset = dataset_name;
  report.split_desc = describe_split(split_spec);
  report.strategy = config.strategy;
  report.overall_accuracy = overall_accuracy(classifier, test_labeled);
  report.per_class = per_class_accuracy(classifier, test_labeled);
  report.n_real_train = train_labeled.rows();
  report.n_fake_train = augmented.rows() - train_labeled.rows();
  report.master_seed = config.seed;
  return report;
}

}  // namespace hsgan::augment
