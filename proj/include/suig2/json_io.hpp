#pragma once

#include <string>

#include "suig2/geometry.hpp"

namespace suig2 {

class JsonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Stable schema "suig2/v1": rationals as {num, den}, squares as an array
// ordered by vertex id. Output is byte-deterministic.
std::string emit_json(const Representation& r);

// Inverse of emit_json; throws JsonError on malformed documents.
Representation parse_representation_json(const std::string& text);

}  // namespace suig2
