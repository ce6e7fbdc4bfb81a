#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropsem/directed_metric.hpp"
#include "tropsem/ext_real.hpp"
#include "tropsem/plm.hpp"

namespace tropsem {

/// A model file parsed either as a Plm or as a bare directed metric.
///
/// Plm files: {"texts": [["red"], ...], "orderMode": "two-sided",
///   "pr": [{"from": 0, "to": 2, "p": "1/2"}, ...], "includeEmpty": false}
/// Metric files: {"labels": [...], "distances": [["0", "1", "inf"], ...],
///   "surrogates": [["1", "1/3", "0"], ...]} with surrogates optional.
struct ModelInput {
  std::optional<Plm> plm;
  DirectedMetric metric;
};

ModelInput parse_model_input(const std::string& json_text);
ModelInput read_model_input(const std::string& path);

Plm parse_plm(const std::string& json_text);
std::string plm_to_json(const Plm& m, int indent = 2);

/// Array of numbers or strings, with "inf" and "-inf" sentinels.
ExtVector parse_ext_vector(const std::string& json_text);
/// Array of such arrays.
std::vector<ExtVector> parse_ext_vectors(const std::string& json_text);

std::string read_file(const std::string& path);
/// Writes via a temporary file in the same directory and a rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace tropsem
