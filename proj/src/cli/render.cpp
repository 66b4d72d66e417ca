#include "locan/cli/report.hpp"

#include <sstream>

namespace locan::cli {

namespace {

using json = nlohmann::ordered_json;

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_inline_list(const json& v) {
  for (const auto& e : v) {
    if (e.is_structured()) return false;
    if (e.is_string()) {
      const auto& s = e.get_ref<const std::string&>();
      if (s.empty() || s.find_first_of(" ,") != std::string::npos) return false;
    }
  }
  return true;
}

void emit(std::ostringstream& out, const json& v, int indent);

void emit_entry(std::ostringstream& out, const std::string& key, const json& v, int indent) {
  const std::string pad(indent, ' ');
  if (v.is_object()) {
    out << pad << key << ":\n";
    emit(out, v, indent + 2);
  } else if (v.is_array()) {
    if (is_inline_list(v)) {
      out << pad << key << ": [";
      bool first = true;
      for (const auto& e : v) {
        out << (first ? "" : ", ") << scalar_text(e);
        first = false;
      }
      out << "]\n";
    } else {
      out << pad << key << ":\n";
      emit(out, v, indent + 2);
    }
  } else {
    out << pad << key << ": " << scalar_text(v) << "\n";
  }
}

void emit(std::ostringstream& out, const json& v, int indent) {
  const std::string pad(indent, ' ');
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) emit_entry(out, key, value, indent);
    return;
  }
  // Block list: objects open with "- " on their first key.
  for (const auto& e : v) {
    if (e.is_object()) {
      std::ostringstream item;
      emit(item, e, indent + 2);
      std::string text = item.str();
      text.replace(indent, 2, "- ");
      out << text;
    } else if (e.is_array()) {
      out << pad << "-\n";
      emit(out, e, indent + 2);
    } else {
      out << pad << "- " << scalar_text(e) << "\n";
    }
  }
}

}  // namespace

std::string render(const Report& report, Format format) {
  if (format == Format::Machine) return report.body.dump(2) + "\n";
  std::ostringstream out;
  bool first = true;
  for (const auto& [section, value] : report.body.items()) {
    if (!first) out << "\n";
    first = false;
    out << "[" << section << "]\n";
    emit(out, value, 0);
  }
  return out.str();
}

}  // namespace locan::cli
