#pragma once

// Canonical JSON file formats. Indices are 1-based, values are reduced
// rational strings, omitted entries are zero, and writers emit nonzero
// entries in lexicographic index order so identical values give identical
// bytes.

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ldend/algebra.hpp"
#include "ldend/matrix.hpp"
#include "ldend/report.hpp"
#include "ldend/representations.hpp"
#include "ldend/tensor.hpp"

namespace ldend::io {

using json = nlohmann::json;

// Each from_json reports the offending field path in FormatError::where().

json to_json(const Algebra& alg);
Algebra algebra_from_json(const json& doc, const std::string& where = "");

json to_json(const Matrix& m);
Matrix matrix_from_json(const json& doc, const std::string& where = "");

json to_json(const Tensor2& t);
json to_json(const Tensor3& t);
Tensor2 tensor2_from_json(const json& doc, const std::string& where = "");
Tensor3 tensor3_from_json(const json& doc, const std::string& where = "");

/// {"gram": <map layout>}
json to_json(const BilinearForm& form);
BilinearForm form_from_json(const json& doc, const std::string& where = "");

json to_json(const PreLieModule& m);
json to_json(const LDendModule& m);
json to_json(const LieModule& m);
PreLieModule prelie_module_from_json(const json& doc, const std::string& where = "");
LDendModule ldend_module_from_json(const json& doc, const std::string& where = "");
LieModule lie_module_from_json(const json& doc, const std::string& where = "");

enum class ModuleKind { pre_lie, l_dendriform, lie };
/// Decided by which family keys are present. Throws FormatError.
ModuleKind module_kind(const json& doc);

json to_json(const CheckReport& report);
json to_json(const Vector& v);

/// Canonical text: compact JSON followed by a newline.
std::string dump(const json& doc);

/// Parses text; syntax errors become FormatError with line/column.
json parse(std::string_view text, const std::string& source);
/// Throws FormatError if the file cannot be read or parsed.
json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const json& doc);

}  // namespace ldend::io
