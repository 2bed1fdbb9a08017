#pragma once

#include <json.hpp>
#include <string>

#include "ela/closure.hpp"
#include "ela/reps.hpp"
#include "ela/verify.hpp"

namespace ela {

using Json = nlohmann::ordered_json;

inline constexpr int kSchema = 1;

Json to_json(const StructureTable& t);
Json to_json(const Representation& rho);
Json to_json(const Certificate& c);

// Inverse of to_json(StructureTable); throws ParseError or BasisMismatch.
StructureTable table_from_json(const Json& j);

// Stable text: two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace ela
