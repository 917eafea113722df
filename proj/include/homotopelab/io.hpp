#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "homotopelab/algebra.hpp"
#include "homotopelab/tensor.hpp"

namespace homotopelab {

inline constexpr const char* format_version = "homotopelab/1";

// Readers throw Errc::parse_error on malformed documents. Units read from
// files are re-verified by the Algebra constructor.

nlohmann::json algebra_to_json(const Algebra& A);
Algebra algebra_from_json(const nlohmann::json& doc);

nlohmann::json tensor_to_json(const Trilinear& t);
Trilinear tensor_from_json(const nlohmann::json& doc);

/// Matrices are nested arrays of scalar strings.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& doc, const FieldSpec& field);

nlohmann::json vector_to_json(const Vector& v);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& doc);

}  // namespace homotopelab
