#include "render.hpp"

#include <ostream>

namespace gqforge::cli {

namespace {

using nlohmann::json;

bool is_flat(const json& j) {
  if (j.is_primitive()) return true;
  if (!j.is_array()) return false;
  for (const auto& item : j) {
    if (!item.is_primitive()) return false;
  }
  return true;
}

std::string scalar(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

std::string flat(const json& j) {
  if (j.is_primitive()) return scalar(j);
  std::string text;
  for (const auto& item : j) {
    if (!text.empty()) text += ' ';
    text += scalar(item);
  }
  return text.empty() ? "(none)" : text;
}

void render(const json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_flat(value)) {
        out << pad << key << ": " << flat(value) << '\n';
      } else {
        out << pad << key << ":\n";
        render(value, out, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (is_flat(item)) {
        out << pad << "- " << flat(item) << '\n';
      } else {
        out << pad << "-\n";
        render(item, out, indent + 2);
      }
    }
  } else {
    out << pad << scalar(j) << '\n';
  }
}

std::string compact(const json& j) {
  if (j.is_primitive()) return scalar(j);
  std::string text;
  for (const auto& item : j) {
    if (!text.empty()) text += ',';
    text += item.is_primitive() ? scalar(item) : compact(item);
  }
  return "[" + text + "]";
}

}  // namespace

void render_text(const json& j, std::ostream& out) { render(j, out, 0); }

std::string render_line(const json& j) {
  if (!j.is_object()) return compact(j);
  std::string text;
  for (const auto& [key, value] : j.items()) {
    if (!text.empty()) text += ' ';
    text += key + "=" + compact(value);
  }
  return text;
}

}  // namespace gqforge::cli
