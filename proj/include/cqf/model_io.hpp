#pragma once

#include <string>

#include <json.hpp>

#include "cqf/model.hpp"

namespace cqf {

/// Model file schema: top-level objects `plant {n, m, theta, R, N}`,
/// `observer {nu, p, mu, vartheta, r, N1, N2, pi_columns}`, `cost {F, G}`.
/// Matrices are row-major nested arrays of numbers; pi_columns is a list of
/// 1-based output channel indices.
nlohmann::json model_to_json(const Model& model);
Model model_from_json(const nlohmann::json& j);

Model load_model(const std::string& path);
void save_model(const Model& model, const std::string& path);

nlohmann::json mat_to_json(const Mat& m);
Mat mat_from_json(const nlohmann::json& j, const std::string& name);

}  // namespace cqf
