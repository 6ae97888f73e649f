#pragma once

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>

namespace gqforge::cli {

/// Indented "key: value" rendering of a JSON document.
void render_text(const nlohmann::json& j, std::ostream& out);

/// Single-line "key=value" rendering, for streamed records.
std::string render_line(const nlohmann::json& j);

}  // namespace gqforge::cli
