#pragma once

// Assembly file format and analysis reports.

#include "foliate/tautness.hpp"

#include "json.hpp"

#include <string>

namespace foliate {

using json = nlohmann::ordered_json;

json block_to_json(const Block& b);
// `path` prefixes diagnostics, e.g. "blocks[2].params".
Block block_from_json(const json& j, const std::string& path);

json assembly_to_json(const Assembly& a);
Assembly assembly_from_json(const json& j);

std::string emit_assembly(const Assembly& a);
// Throws Error(ParseError) with line/column or field path.
Assembly parse_assembly(const std::string& text);

Assembly load_assembly(const std::string& path);
void save_text(const std::string& path, const std::string& text);

json verdict_to_json(const Assembly& a, const TautnessVerdict& v);
json check_report(const Assembly& a);

}  // namespace foliate
