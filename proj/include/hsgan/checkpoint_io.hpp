#pragma once

#include <string>

#include "hsgan/gan.hpp"
#include "hsgan/serialize.hpp"

namespace hsgan::gan {

// .hsgn checkpoint file: magic HSGN, version u16, config block, the three
// networks as little-endian 64-bit floats, trailing CRC-32.
inline constexpr std::uint16_t kCheckpointFormatVersion = 1;

namespace detail {

inline void write_mlp(hsgan::detail::ByteWriter& w, const MlpParams& p) {
  w.f64(p.leaky_slope);
  w.u8(static_cast<std::uint8_t>(p.output));
  w.u64(p.layers.size());
  for (const Layer& l : p.layers) {
    w.u64(l.weight.rows);
    w.u64(l.weight.cols);
    for (double v : l.weight.values) w.f64(v);
    for (double v : l.bias) w.f64(v);
  }
}

inline MlpParams read_mlp(hsgan::detail::ByteReader& r) {
  MlpParams p;
  p.leaky_slope = r.f64();
  const std::uint8_t act = r.u8();
  if (act > 2) throw FormatError("checkpoint: unknown activation tag " + std::to_string(act));
  p.output = static_cast<OutputActivation>(act);
  const std::uint64_t n_layers = r.u64();
  for (std::uint64_t l = 0; l < n_layers; ++l) {
    const std::uint64_t rows = r.u64();
    const std::uint64_t cols = r.u64();
    Layer layer{Matrix(rows, cols), std::vector<double>(cols, 0.0)};
    for (double& v : layer.weight.values) v = r.f64();
    for (double& v : layer.bias) v = r.f64();
    p.layers.push_back(std::move(layer));
  }
  return p;
}

}  // namespace detail

inline void write_checkpoint(const GanCheckpoint& ckpt, const std::string& path) {
  ckpt.validate();
  hsgan::detail::ByteWriter w;
  w.bytes("HSGN", 4);
  w.u16(kCheckpointFormatVersion);
  const GanConfig& c = ckpt.config;
  w.u64(c.latent_dim);
  w.u64(c.hidden_width);
  w.u64(c.n_layers);
  w.f64(c.gp_coefficient);
  w.f64(c.class_loss_weight);
  w.u64(c.iterations);
  w.u64(c.inner_steps);
  w.u64(c.batch_size);
  w.f64(c.learning_rate);
  w.f64(c.rmsprop_decay);
  w.f64(c.rmsprop_epsilon);
  w.u8(c.mode == TrainMode::Supervised ? 0 : 1);
  w.u64(c.seed);
  w.u64(ckpt.iteration);
  w.u64(ckpt.n_bands);
  w.u64(ckpt.n_classes);
  detail::write_mlp(w, ckpt.generator);
  detail::write_mlp(w, ckpt.critic);
  detail::write_mlp(w, ckpt.classifier);
  w.append_crc32();
  w.write_file(path);
}

inline GanCheckpoint read_checkpoint(const std::string& path) {
  auto r = hsgan::detail::ByteReader::from_file(path);
  r.check_crc32();
  r.expect_magic("HSGN");
  const std::uint16_t version = r.u16();
  if (version != kCheckpointFormatVersion) {
    throw VersionError("unsupported .hsgn version " + std::to_string(version));
  }
  GanCheckpoint ckpt;
  GanConfig& c = ckpt.config;
  c.latent_dim = r.u64();
  c.hidden_width = r.u64();
  c.n_layers = r.u64();
  c.gp_coefficient = r.f64();
  c.class_loss_weight = r.f64();
  c.iterations = r.u64();
  c.inner_steps = r.u64();
  c.batch_size = r.u64();
  c.learning_rate = r.f64();
  c.rmsprop_decay = r.f64();
  c.rmsprop_epsilon = r.f64();
  c.mode = r.u8() == 0 ? TrainMode::Supervised : TrainMode::SemiSupervised;
  c.seed = r.u64();
  ckpt.iteration = r.u64();
  ckpt.n_bands = r.u64();
  ckpt.n_classes = r.u64();
  ckpt.generator = detail::read_mlp(r);
  ckpt.critic = detail::read_mlp(r);
  ckpt.classifier = detail::read_mlp(r);
  if (!r.exhausted()) throw FormatError(".hsgn file has trailing bytes");
  ckpt.validate();
  return ckpt;
}

}  // namespace hsgan::gan
