#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include "json.hpp"

#include "hpa/actions.hpp"
#include "hpa/coactions.hpp"

namespace hpa::io {

using json = nlohmann::json;

// Scalars travel as strings: "p/q", "n", or "r mod p".
json to_json(Field f);
Field field_from_json(const json& j);
json to_json(const Scalar& s);
json to_json(const Vec& v);
json to_json(const Matrix& m);  // list of rows
Vec vec_from_json(Field f, const json& j, std::size_t expected);
Matrix matrix_from_json(Field f, const json& j, std::size_t rows, std::size_t cols);

json to_json(const AlgebraPresentation& a);
json to_json(const CoalgebraPresentation& c);
json to_json(const BialgebraPresentation& b);
json to_json(const HopfPresentation& h);

using AnyPresentation = std::variant<AlgebraPresentation, CoalgebraPresentation, BialgebraPresentation, HopfPresentation>;

// `base` resolves relative paths of referenced files.
AnyPresentation presentation_from_json(const json& j);
AlgebraPresentation algebra_from_json(const json& j, const std::filesystem::path& base = {});
BialgebraPresentation bialgebra_from_json(const json& j, const std::filesystem::path& base = {});

json to_json(const CoactionMap& c);
json to_json(const ActionMap& a);
json to_json(const PartialGroupAction& p);

using AnyMap = std::variant<CoactionMap, ActionMap, PartialGroupAction>;
AnyMap map_from_json(const json& j, const std::filesystem::path& base = {});

bool is_map_document(const json& j);

json to_json(const AxiomReport& r);
json to_json(const ClassificationVerdict& v);

json read_file(const std::filesystem::path& p);
// Sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);

}  // namespace hpa::io
