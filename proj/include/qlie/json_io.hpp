#pragma once

#include <string>

#include <json.hpp>

#include "qlie/envelope.hpp"
#include "qlie/lifted.hpp"

namespace qlie::json_io {

using Json = nlohmann::json;
using OJson = nlohmann::ordered_json;

// Readers throw Error(Errc::Parse) with a JSON pointer to the offending value.

Field field_from_json(const Json& j, const std::string& path);
Scalar scalar_from_json(Field f, const Json& j, const std::string& path);
Mat mat_from_json(Field f, const Json& j, std::size_t rows, std::size_t cols, const std::string& path);

/// {"field": "Q", "dim": 2, "c": [[...], ...]}. The braid relation is not checked here.
BraidedSpace space_from_json(const Json& j, const std::string& path = "");
/// {"space": {...}, "beta": [[...], ...]}.
LiftedQLie lifted_from_json(const Json& j, const std::string& path = "");
/// [{"word": [1, 2], "coeff": "1/2"}, ...] with letters numbered from 1.
TensorElem tensor_from_json(Field f, std::size_t dim, const Json& j, const std::string& path);
/// {"space": {...}, "relations": [...]}.
Presentation presentation_from_json(const Json& j, const std::string& path = "");

/// Rationals as strings, GF(p) residues as integers.
OJson to_json(const Scalar& s);
OJson to_json(const Mat& m);
OJson to_json(const Poly& p);
OJson to_json(const BraidedSpace& b);
OJson to_json(const LiftedQLie& q);
OJson to_json(const TensorElem& t);

/// Reads a file, or parses the argument itself when it starts with '{'.
Json load(const std::string& path_or_inline);

}  // namespace qlie::json_io
