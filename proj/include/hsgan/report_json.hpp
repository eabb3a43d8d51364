#pragma once

#include <json.hpp>

#include <fstream>
#include <vector>

#include "hsgan/augment.hpp"

// Detailed experiment reports as JSON, alongside the Table-3 style CSV.

namespace hsgan::augment {

inline nlohmann::json report_to_json(const EvalReport& r) {
  nlohmann::json per_class = nlohmann::json::object();
  for (const auto& [cls, acc] : r.per_class) {
    per_class[std::to_string(cls)] = acc;
  }
  return nlohmann::json{{"dataset", r.dataset},
                        {"split", r.split_desc},
                        {"strategy", to_string(r.strategy)},
                        {"overall_accuracy", r.overall_accuracy},
                        {"per_class_accuracy", per_class},
                        {"n_real_train", r.n_real_train},
                        {"n_fake_train", r.n_fake_train},
                        {"master_seed", r.master_seed}};
}

inline void write_reports_json(const std::vector<EvalReport>& reports, const std::string& path) {
  nlohmann::json arr = nlohmann::json::array();
  for (const EvalReport& r : reports) arr.push_back(report_to_json(r));
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << arr.dump(2) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

inline void write_reports_csv(const std::vector<EvalReport>& reports, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << kEvalCsvHeader << '\n';
  for (const EvalReport& r : reports) out << eval_csv_row(r) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace hsgan::augment
