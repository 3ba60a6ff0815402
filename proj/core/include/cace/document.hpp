#pragma once

#include <string>

#include "cace/code.hpp"

namespace cace {

/// Parses the canonical code document: a JSON object with exactly the fields
/// n (integer), omega (integer) and generators (strictly ascending integer
/// array). Unknown fields, out-of-range generators and duplicate expansions
/// are rejected with MalformedDocument.
Code parse_code(const std::string& text);

/// Canonical serialization; parse_code(serialize_code(c)) reproduces c and
/// serialize_code(parse_code(d)) reproduces canonical documents byte for byte.
std::string serialize_code(const Code& code);

}  // namespace cace
