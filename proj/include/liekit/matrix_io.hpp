#pragma once

// JSON file formats shared by the modules:
//   matrix:          {"dim": n, "entries": [[[re, im], ...], ...]}   (row-major)
//   generator basis: {"name": ..., "generators": [matrix, ...]}
// Parsers reject non-square, ragged or non-finite input with FormatError.

#include "liekit/numkernel.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace liekit {

class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace liekit
