#pragma once

#include <map>
#include <optional>
#include <string>

#include "hqds/tensor.hpp"

namespace hqds {

// JSON interchange format for an algebra / quadratic system:
// {
//   "format_version": 1,
//   "products": { "11": ["0","0","0"], "12": ..., "13", "22", "23", "33" },
//   "metadata": { ... }   (optional, string-valued)
// }
// Product key "ij" (i <= j) lists the coefficients of e_i e_j as exact
// rational strings.
struct AlgebraDocument {
  StructureTensorQ tensor;
  std::map<std::string, std::string> metadata;
};

inline constexpr int kDocumentFormatVersion = 1;

std::string document_to_json(const AlgebraDocument& doc);

// Returns nullopt and fills *error on malformed input.
std::optional<AlgebraDocument> document_from_json(const std::string& text,
                                                  std::string* error);

}  // namespace hqds
