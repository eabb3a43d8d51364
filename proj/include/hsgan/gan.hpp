#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "hsgan/errors.hpp"
#include "hsgan/gradient_penalty.hpp"
#include "hsgan/losses.hpp"
#include "hsgan/matrix.hpp"
#include "hsgan/mlp.hpp"
#include "hsgan/rmsprop.hpp"
#include "hsgan/rng.hpp"
#include "hsgan/spectra.hpp"

namespace hsgan::gan {

using dataio::SpectraTable;

enum class TrainMode { Supervised, SemiSupervised };

inline const char* to_string(TrainMode m) {
  return m == TrainMode::Supervised ? "supervised" : "semi-supervised";
}

struct GanConfig {
  std::size_t latent_dim = 64;
  std::size_t hidden_width = 512;
  std::size_t n_layers = 4;
  double gp_coefficient = 10.0;
  double class_loss_weight = 1.0;
  std::size_t iterations = 100000;
  std::size_t inner_steps = 2;  // critic and classifier updates per iteration
  std::size_t batch_size = 64;
  double learning_rate = 5e-5;
  double rmsprop_decay = 0.99;
  double rmsprop_epsilon = 1e-8;
  TrainMode mode = TrainMode::Supervised;
  std::uint64_t seed = 0;

  void validate() const {
    if (latent_dim == 0) throw ConfigError("gan config: latent_dim must be > 0");
    if (hidden_width == 0) throw ConfigError("gan config: hidden_width must be > 0");
    if (n_layers == 0) throw ConfigError("gan config: n_layers must be > 0");
    if (batch_size == 0) throw ConfigError("gan config: batch_size must be > 0");
    if (inner_steps == 0) throw ConfigError("gan config: inner_steps must be >= 1");
    if (!(gp_coefficient > 0.0)) throw ConfigError("gan config: gp_coefficient must be > 0");
    if (class_loss_weight < 0.0) throw ConfigError("gan config: class_loss_weight must be >= 0");
    if (!(learning_rate >= 0.0)) throw ConfigError("gan config: learning_rate must be >= 0");
    if (!(rmsprop_decay > 0.0 && rmsprop_decay < 1.0)) {
      throw ConfigError("gan config: rmsprop_decay must be in (0,1)");
    }
    if (!(rmsprop_epsilon > 0.0)) throw ConfigError("gan config: rmsprop_epsilon must be > 0");
  }
};

// The three trained networks plus everything needed to reproduce them.
struct GanCheckpoint {
  MlpParams generator;   // (latent + classes) -> bands, sigmoid output
  MlpParams critic;      // bands -> 1, identity output
  MlpParams classifier;  // bands -> classes, logits output
  GanConfig config;
  std::uint64_t iteration = 0;
  std::size_t n_bands = 0;
  std::size_t n_classes = 0;

  void validate() const {
    config.validate();
    if (n_bands == 0 || n_classes == 0) {
      throw ContractError("checkpoint: n_bands and n_classes must be > 0");
    }
    generator.validate();
    critic.validate();
    classifier.validate();
    if (generator.input_dim() != config.latent_dim + n_classes) {
      throw ShapeError("checkpoint: generator input " + std::to_string(generator.input_dim()) +
                       " != latent+classes " + std::to_string(config.latent_dim + n_classes));
    }
    if (generator.output_dim() != n_bands || generator.output != OutputActivation::Sigmoid) {
      throw ShapeError("checkpoint: generator must emit " + std::to_string(n_bands) +
                       " bands through a sigmoid");
    }
    if (critic.input_dim() != n_bands || critic.output_dim() != 1 ||
        critic.output != OutputActivation::Identity) {
      throw ShapeError("checkpoint: critic must map bands to one identity output");
    }
    if (classifier.input_dim() != n_bands || classifier.output_dim() != n_classes ||
        classifier.output != OutputActivation::Logits) {
      throw ShapeError("checkpoint: classifier must map bands to class logits");
    }
  }
};

namespace detail {

inline std::vector<std::size_t> layer_dims(std::size_t in, std::size_t hidden,
                                           std::size_t n_layers, std::size_t out) {
  std::vector<std::size_t> dims;
  dims.push_back(in);
  for (std::size_t i = 0; i + 1 < n_layers; ++i) dims.push_back(hidden);
  dims.push_back(out);
  return dims;
}

}  // namespace detail

inline GanCheckpoint init_networks(std::size_t n_bands, std::size_t n_classes,
                                   const GanConfig& config) {
  config.validate();
  if (n_bands == 0 || n_classes == 0) {
    throw ContractError("init_networks: n_bands and n_classes must be > 0");
  }
  GanCheckpoint ckpt;
  ckpt.config = config;
  ckpt.n_bands = n_bands;
  ckpt.n_classes = n_classes;
  Rng rng_g(derive_seed(config.seed, 0));
  Rng rng_d(derive_seed(config.seed, 1));
  Rng rng_c(derive_seed(config.seed, 2));
  ckpt.generator =
      make_mlp(detail::layer_dims(config.latent_dim + n_classes, config.hidden_width,
                                  config.n_layers, n_bands),
               0.2, OutputActivation::Sigmoid, rng_g);
  ckpt.critic = make_mlp(
      detail::layer_dims(n_bands, config.hidden_width, config.n_layers, 1), 0.2,
      OutputActivation::Identity, rng_d);
  ckpt.classifier = make_mlp(
      detail::layer_dims(n_bands, config.hidden_width, config.n_layers, n_classes), 0.2,
      OutputActivation::Logits, rng_c);
  ckpt.validate();
  return ckpt;
}

// ---------------------------------------------------------------------------
// Pure objective functions. The trainer samples batches and feeds them here;
// tests drive them directly with fixed inputs.
// ---------------------------------------------------------------------------

// G(z, y) for explicit latent rows and class ids. Row-independent arithmetic,
// so a batched call is bit-equal to generating row by row.
inline Matrix generate(const GanCheckpoint& ckpt, const Matrix& latent,
                       std::span<const std::uint16_t> class_ids) {
  if (latent.cols != ckpt.config.latent_dim) {
    throw ShapeError("generate: latent " + shape_str(latent) + " vs latent_dim " +
                     std::to_string(ckpt.config.latent_dim));
  }
  if (class_ids.size() != latent.rows) {
    throw ShapeError("generate: " + std::to_string(class_ids.size()) + " class ids for " +
                     std::to_string(latent.rows) + " latent rows");
  }
  Matrix input(latent.rows, ckpt.config.latent_dim + ckpt.n_classes);
  for (std::size_t b = 0; b < latent.rows; ++b) {
    const std::uint16_t c = class_ids[b];
    if (c == 0 || c > ckpt.n_classes) {
      throw LabelError("generate: class " + std::to_string(c) + " outside 1.." +
                       std::to_string(ckpt.n_classes));
    }
    double* row = input.row(b);
    const double* z = latent.row(b);
    for (std::size_t j = 0; j < latent.cols; ++j) row[j] = z[j];
    row[latent.cols + (c - 1)] = 1.0;
  }
  return mlp_output(ckpt.generator, input);
}

struct CriticObjective {
  double wasserstein = 0.0;  // mean D(real) - mean D(fake)
  double penalty = 0.0;      // gp_coefficient * mean (||grad|| - 1)^2
  double loss = 0.0;         // mean D(fake) - mean D(real) + penalty
  ParamGrads critic_grads;
};

// Critic loss and gradients for explicit real/fake/interpolate batches.
inline CriticObjective critic_objective(const MlpParams& critic, const Matrix& real,
                                        const Matrix& fake, const Matrix& interpolates,
                                        double gp_coefficient) {
  if (!real.same_shape(fake) || !real.same_shape(interpolates)) {
    throw ShapeError("critic_objective: real " + shape_str(real) + ", fake " + shape_str(fake) +
                     ", interpolates " + shape_str(interpolates) + " must share a shape");
  }
  const double batch = static_cast<double>(real.rows);
  const auto fwd_real = mlp_forward(critic, real);
  const auto fwd_fake = mlp_forward(critic, fake);
  double mean_real = 0.0, mean_fake = 0.0;
  for (double v : fwd_real.output.values) mean_real += v;
  for (double v : fwd_fake.output.values) mean_fake += v;
  mean_real /= batch;
  mean_fake /= batch;

  CriticObjective obj;
  obj.wasserstein = mean_real - mean_fake;

  Matrix grad_fake(fake.rows, 1);
  for (double& v : grad_fake.values) v = 1.0 / batch;
  Matrix grad_real(real.rows, 1);
  for (double& v : grad_real.values) v = -1.0 / batch;

  auto bwd_fake = mlp_backward(critic, fwd_fake.cache, grad_fake);
  const auto bwd_real = mlp_backward(critic, fwd_real.cache, grad_real);
  obj.critic_grads = std::move(bwd_fake.param_grads);
  accumulate(obj.critic_grads, bwd_real.param_grads);

  if (gp_coefficient != 0.0) {  // zero coefficient degenerates to plain WGAN
    const auto gp = gradient_penalty_param_grads(critic, interpolates, gp_coefficient);
    obj.penalty = gp.penalty;
    accumulate(obj.critic_grads, gp.param_grads);
  }

  obj.loss = mean_fake - mean_real + obj.penalty;
  return obj;
}

struct GeneratorObjective {
  double adv_loss = 0.0;   // -mean D(G(z,y))
  double cond_loss = 0.0;  // cross-entropy of C(G(z,y)) against y
  double total = 0.0;      // adv + weight * cond
  ParamGrads generator_grads;
};

// Generator loss and gradients for an explicit latent/conditioning batch,
// backpropagated through the frozen critic and classifier.
inline GeneratorObjective generator_objective(const GanCheckpoint& ckpt, const Matrix& latent,
                                              std::span<const std::uint16_t> class_ids) {
  const double weight = ckpt.config.class_loss_weight;
  Matrix input(latent.rows, ckpt.config.latent_dim + ckpt.n_classes);
  for (std::size_t b = 0; b < latent.rows; ++b) {
    const std::uint16_t c = class_ids[b];
    if (c == 0 || c > ckpt.n_classes) {
      throw LabelError("generator_objective: class " + std::to_string(c) + " outside 1.." +
                       std::to_string(ckpt.n_classes));
    }
    double* row = input.row(b);
    const double* z = latent.row(b);
    for (std::size_t j = 0; j < latent.cols; ++j) row[j] = z[j];
    row[latent.cols + (c - 1)] = 1.0;
  }

  const double batch = static_cast<double>(latent.rows);
  const auto fwd_g = mlp_forward(ckpt.generator, input);

  // Adversarial term through the critic.
  const auto fwd_d = mlp_forward(ckpt.critic, fwd_g.output);
  GeneratorObjective obj;
  for (double v : fwd_d.output.values) obj.adv_loss -= v;
  obj.adv_loss /= batch;
  Matrix d_out_grad(latent.rows, 1);
  for (double& v : d_out_grad.values) v = -1.0 / batch;
  Matrix fake_grad = mlp_input_gradient(ckpt.critic, fwd_d.cache, d_out_grad);

  // Conditional term through the classifier.
  std::vector<std::size_t> label_idx(latent.rows);
  for (std::size_t b = 0; b < latent.rows; ++b) label_idx[b] = class_ids[b] - 1;
  const auto fwd_c = mlp_forward(ckpt.classifier, fwd_g.output);
  const auto ce = softmax_cross_entropy(fwd_c.output, label_idx);
  obj.cond_loss = ce.loss;
  if (weight != 0.0) {
    const Matrix cls_grad = mlp_input_gradient(ckpt.classifier, fwd_c.cache, ce.logits_grad);
    for (std::size_t i = 0; i < fake_grad.values.size(); ++i) {
      fake_grad.values[i] += weight * cls_grad.values[i];
    }
  }

  obj.total = obj.adv_loss + weight * obj.cond_loss;
  obj.generator_grads = mlp_backward(ckpt.generator, fwd_g.cache, fake_grad).param_grads;
  return obj;
}

// ---------------------------------------------------------------------------
// Trainer
// ---------------------------------------------------------------------------

struct CriticStepResult {
  double wasserstein = 0.0;
  double penalty = 0.0;
};

struct GeneratorStepResult {
  double adv_loss = 0.0;
  double cond_loss = 0.0;
};

// Optional capture of a critic step's synthetic inputs, for audits.
struct CriticStepTrace {
  Matrix fakes;
  Matrix interpolates;
};

// Owns the checkpoint, the three optimizer states and the step RNG. Each step
// updates exactly one network. Step order and RNG draws are fixed, so a given
// (checkpoint, seed) replays bit-identically.
class GanTrainer {
 public:
  explicit GanTrainer(GanCheckpoint ckpt, std::vector<std::uint16_t> condition_classes = {})
      : ckpt_(std::move(ckpt)),
        opt_g_(make_rmsprop_state(ckpt_.generator, ckpt_.config.learning_rate,
                                  ckpt_.config.rmsprop_decay, ckpt_.config.rmsprop_epsilon)),
        opt_d_(make_rmsprop_state(ckpt_.critic, ckpt_.config.learning_rate,
                                  ckpt_.config.rmsprop_decay, ckpt_.config.rmsprop_epsilon)),
        opt_c_(make_rmsprop_state(ckpt_.classifier, ckpt_.config.learning_rate,
                                  ckpt_.config.rmsprop_decay, ckpt_.config.rmsprop_epsilon)),
        rng_(derive_seed(ckpt_.config.seed, 3)),
        classes_(std::move(condition_classes)) {
    ckpt_.validate();
    if (classes_.empty()) {
      for (std::uint16_t c = 1; c <= ckpt_.n_classes; ++c) classes_.push_back(c);
    }
    for (std::uint16_t c : classes_) {
      if (c == 0 || c > ckpt_.n_classes) {
        throw LabelError("trainer: conditioning class " + std::to_string(c) + " outside 1.." +
                         std::to_string(ckpt_.n_classes));
      }
    }
  }

  const GanCheckpoint& checkpoint() const { return ckpt_; }
  GanCheckpoint take_checkpoint() && { return std::move(ckpt_); }
  void set_iteration(std::uint64_t it) { ckpt_.iteration = it; }

  // One RMSprop update of the critic on a real batch vs freshly sampled
  // fakes, with the gradient penalty on per-row random interpolates.
  CriticStepResult critic_step(const Matrix& real_batch, CriticStepTrace* trace = nullptr) {
    if (real_batch.rows < 2) {
      throw ContractError("critic_step: need at least 2 rows, got " +
                          std::to_string(real_batch.rows));
    }
    if (real_batch.cols != ckpt_.n_bands) {
      throw ShapeError("critic_step: batch " + shape_str(real_batch) + " vs " +
                       std::to_string(ckpt_.n_bands) + " bands");
    }
    const std::size_t batch = real_batch.rows;
    const auto labels = sample_condition_labels(batch);
    const Matrix latent = sample_latent(batch);
    const Matrix fakes = generate(ckpt_, latent, labels);

    Matrix interpolates(batch, ckpt_.n_bands);
    for (std::size_t b = 0; b < batch; ++b) {
      const double eps = rng_.uniform();
      const double* r = real_batch.row(b);
      const double* f = fakes.row(b);
      double* x = interpolates.row(b);
      for (std::size_t j = 0; j < ckpt_.n_bands; ++j) {
        x[j] = eps * r[j] + (1.0 - eps) * f[j];
      }
    }

    const CriticObjective obj =
        critic_objective(ckpt_.critic, real_batch, fakes, interpolates, ckpt_.config.gp_coefficient);
    rmsprop_step(ckpt_.critic, obj.critic_grads, opt_d_);
    if (trace) {
      trace->fakes = fakes;
      trace->interpolates = interpolates;
    }
    return CriticStepResult{obj.wasserstein, obj.penalty};
  }

  // One RMSprop update of the classifier on real labeled spectra.
  double classifier_step(const Matrix& spectra, std::span<const std::uint16_t> labels) {
    if (spectra.rows == 0) throw ContractError("classifier_step: empty batch");
    if (labels.size() != spectra.rows) {
      throw ShapeError("classifier_step: " + std::to_string(labels.size()) + " labels for " +
                       std::to_string(spectra.rows) + " rows");
    }
    std::vector<std::size_t> idx(labels.size());
    for (std::size_t b = 0; b < labels.size(); ++b) {
      if (labels[b] == 0) {
        throw ContractError("classifier_step: unlabeled row in classifier batch");
      }
      if (labels[b] > ckpt_.n_classes) {
        throw LabelError("classifier_step: label " + std::to_string(labels[b]) + " outside 1.." +
                         std::to_string(ckpt_.n_classes));
      }
      idx[b] = labels[b] - 1;
    }
    const auto fwd = mlp_forward(ckpt_.classifier, spectra);
    const auto ce = softmax_cross_entropy(fwd.output, idx);
    const auto bwd = mlp_backward(ckpt_.classifier, fwd.cache, ce.logits_grad);
    rmsprop_step(ckpt_.classifier, bwd.param_grads, opt_c_);
    return ce.loss;
  }

  // One RMSprop update of the generator against the frozen critic/classifier.
  GeneratorStepResult generator_step() {
    const std::size_t batch = ckpt_.config.batch_size;
    const auto labels = sample_condition_labels(batch);
    const Matrix latent = sample_latent(batch);
    const GeneratorObjective obj = generator_objective(ckpt_, latent, labels);
    rmsprop_step(ckpt_.generator, obj.generator_grads, opt_g_);
    return GeneratorStepResult{obj.adv_loss, obj.cond_loss};
  }

  Rng& rng() { return rng_; }

 private:
  std::vector<std::uint16_t> sample_condition_labels(std::size_t n) {
    std::vector<std::uint16_t> labels(n);
    for (auto& l : labels) l = classes_[rng_.index(classes_.size())];
    return labels;
  }

  Matrix sample_latent(std::size_t n) {
    Matrix z(n, ckpt_.config.latent_dim);
    for (double& v : z.values) v = rng_.normal();
    return z;
  }

  GanCheckpoint ckpt_;
  RmspropState opt_g_, opt_d_, opt_c_;
  Rng rng_;
  std::vector<std::uint16_t> classes_;
};

// ---------------------------------------------------------------------------
// Training loop
// ---------------------------------------------------------------------------

struct LossRecord {
  std::uint64_t iteration = 0;
  double wasserstein = 0.0;
  double penalty = 0.0;
  double class_loss = 0.0;
  double adv_loss = 0.0;
};

inline constexpr const char* kLossCsvHeader = "iteration,wasserstein,penalty,class_loss,adv_loss";

inline void append_loss_csv(std::ostream& out, const LossRecord& r) {
  char buf[192];
  std::snprintf(buf, sizeof buf, "%llu,%.17g,%.17g,%.17g,%.17g",
                static_cast<unsigned long long>(r.iteration), r.wasserstein, r.penalty,
                r.class_loss, r.adv_loss);
  out << buf << '\n';
}

// Which original-table rows fed the critic at one inner step.
struct CriticBatchInfo {
  std::uint64_t iteration = 0;
  std::size_t inner_step = 0;
  std::vector<std::size_t> table_rows;
};

struct TrainHooks {
  std::function<void(const LossRecord&)> on_iteration;
  std::function<void(const GanCheckpoint&)> on_checkpoint;
  std::size_t checkpoint_every = 5000;
  std::function<void(const CriticBatchInfo&)> on_critic_batch;
};

// Full training schedule: per iteration, inner_steps critic updates and
// inner_steps classifier updates, then one generator update. Supervised mode
// feeds only labeled rows everywhere; semi-supervised mode additionally feeds
// unlabeled rows to the critic.
inline GanCheckpoint train(const SpectraTable& table, const GanConfig& config,
                           const TrainHooks& hooks = {}) {
  config.validate();
  table.validate();
  if (table.rows() == 0) throw ContractError("train: empty table");
  const std::vector<std::size_t> labeled = labeled_row_indices(table);
  if (labeled.empty()) throw ContractError("train: no labeled rows");

  std::vector<std::size_t> critic_pool = labeled;
  if (config.mode == TrainMode::SemiSupervised) {
    critic_pool.resize(table.rows());
    for (std::size_t i = 0; i < table.rows(); ++i) critic_pool[i] = i;
  }

  const std::size_t n_classes = table.num_classes();
  if (n_classes == 0) throw ContractError("train: no classes declared");

  GanTrainer trainer(init_networks(table.bands(), n_classes, config), present_classes(table));
  Rng batch_rng(derive_seed(config.seed, 4));

  const auto gather = [&table](const std::vector<std::size_t>& rows) {
    Matrix m(rows.size(), table.bands());
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const double* src = table.spectra.row(rows[k]);
      std::copy(src, src + table.bands(), m.row(k));
    }
    return m;
  };

  const auto sample_rows = [&batch_rng](const std::vector<std::size_t>& pool, std::size_t n) {
    std::vector<std::size_t> rows(n);
    for (auto& r : rows) r = pool[batch_rng.index(pool.size())];
    return rows;
  };

  bool emitted_final = false;
  for (std::uint64_t iter = 1; iter <= config.iterations; ++iter) {
    CriticStepResult critic_result{};
    for (std::size_t s = 0; s < config.inner_steps; ++s) {
      const auto rows = sample_rows(critic_pool, config.batch_size);
      if (hooks.on_critic_batch) {
        hooks.on_critic_batch(CriticBatchInfo{iter, s, rows});
      }
      critic_result = trainer.critic_step(gather(rows));
    }
    double class_loss = 0.0;
    for (std::size_t s = 0; s < config.inner_steps; ++s) {
      const auto rows = sample_rows(labeled, config.batch_size);
      std::vector<std::uint16_t> labels(rows.size());
      for (std::size_t k = 0; k < rows.size(); ++k) labels[k] = table.labels[rows[k]];
      class_loss = trainer.classifier_step(gather(rows), labels);
    }
    const GeneratorStepResult gen = trainer.generator_step();
    trainer.set_iteration(iter);

    if (hooks.on_iteration) {
      hooks.on_iteration(LossRecord{iter, critic_result.wasserstein, critic_result.penalty,
                                    class_loss, gen.adv_loss});
    }
    if (hooks.on_checkpoint && hooks.checkpoint_every > 0 &&
        iter % hooks.checkpoint_every == 0) {
      hooks.on_checkpoint(trainer.checkpoint());
      emitted_final = iter == config.iterations;
    }
  }
  if (hooks.on_checkpoint && !emitted_final) {
    hooks.on_checkpoint(trainer.checkpoint());
  }
  return std::move(trainer).take_checkpoint();
}

// ---------------------------------------------------------------------------
// Sampling and interpolation
// ---------------------------------------------------------------------------

// n spectra of one class; deterministic in (checkpoint, class, n, seed).
inline SpectraTable sample(const GanCheckpoint& ckpt, std::uint16_t class_id, std::size_t n,
                           std::uint64_t seed) {
  ckpt.validate();
  if (class_id == 0 || class_id > ckpt.n_classes) {
    throw LabelError("sample: class " + std::to_string(class_id) + " outside 1.." +
                     std::to_string(ckpt.n_classes));
  }
  SpectraTable t;
  if (n == 0) {
    t.spectra = Matrix(0, ckpt.n_bands);
    return t;
  }
  Rng rng(seed);
  Matrix latent(n, ckpt.config.latent_dim);
  for (double& v : latent.values) v = rng.normal();
  const std::vector<std::uint16_t> ids(n, class_id);
  t.spectra = generate(ckpt, latent, ids);
  t.labels.assign(n, class_id);
  t.origin.assign(n, 1);
  return t;
}

// Row k is G((1-a_k) z0 + a_k z1, (1-a_k) onehot(y0) + a_k onehot(y1)) with
// a_k = k/(steps-1). Endpoint rows are bit-equal to direct generation.
inline SpectraTable interpolate(const GanCheckpoint& ckpt, std::span<const double> z0,
                                std::span<const double> z1, std::uint16_t y0, std::uint16_t y1,
                                std::size_t steps) {
  ckpt.validate();
  if (steps < 2) throw ContractError("interpolate: steps must be >= 2");
  if (z0.size() != ckpt.config.latent_dim || z1.size() != ckpt.config.latent_dim) {
    throw ContractError("interpolate: latent vectors must have length " +
                        std::to_string(ckpt.config.latent_dim));
  }
  for (std::uint16_t y : {y0, y1}) {
    if (y == 0 || y > ckpt.n_classes) {
      throw LabelError("interpolate: class " + std::to_string(y) + " outside 1.." +
                       std::to_string(ckpt.n_classes));
    }
  }
  const std::size_t latent_dim = ckpt.config.latent_dim;
  Matrix input(steps, latent_dim + ckpt.n_classes);
  for (std::size_t k = 0; k < steps; ++k) {
    const double a = static_cast<double>(k) / static_cast<double>(steps - 1);
    double* row = input.row(k);
    for (std::size_t j = 0; j < latent_dim; ++j) {
      row[j] = (1.0 - a) * z0[j] + a * z1[j];
    }
    row[latent_dim + (y0 - 1)] += 1.0 - a;
    row[latent_dim + (y1 - 1)] += a;
  }
  SpectraTable t;
  t.spectra = mlp_output(ckpt.generator, input);
  t.labels.assign(steps, y0 == y1 ? y0 : 0);  // cross-class rows are intermediate
  t.origin.assign(steps, 1);
  return t;
}

inline std::vector<double> interpolation_alphas(std::size_t steps) {
  std::vector<double> a(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    a[k] = static_cast<double>(k) / static_cast<double>(steps - 1);
  }
  return a;
}

}  // namespace hsgan::gan
