#include "scltwist/reports.hpp"

namespace scltwist::cli {

namespace {

std::string scalar_text(const Json& value) {
  if (value.is_string()) {
    return value.get<std::string>();
  }
  if (value.is_null()) {
    return "none";
  }
  return value.dump();
}

void render_value(std::string& out, const std::string& indent, const std::string& key, const Json& value) {
  if (value.is_object() && !value.empty()) {
    out += indent + key + ":\n";
    for (const auto& [k, v] : value.items()) {
      render_value(out, indent + "  ", k, v);
    }
    return;
  }
  if (value.is_array() && !value.empty() && (value.front().is_object() || value.front().is_array())) {
    out += indent + key + ":\n";
    std::size_t i = 0;
    for (const Json& v : value) {
      render_value(out, indent + "  ", "[" + std::to_string(i++) + "]", v);
    }
    return;
  }
  if (value.is_array() && value.size() > 8) {
    out += indent + key + ":\n";
    for (const Json& v : value) {
      out += indent + "  " + scalar_text(v) + "\n";
    }
    return;
  }
  if (value.is_array()) {
    std::string joined;
    for (const Json& v : value) {
      joined += (joined.empty() ? "" : ", ") + scalar_text(v);
    }
    out += indent + key + ": [" + joined + "]\n";
    return;
  }
  out += indent + key + ": " + scalar_text(value) + "\n";
}

}  // namespace

std::string_view to_string(Status status) {
  switch (status) {
    case Status::ok: return "ok";
    case Status::fail: return "fail";
    case Status::refused: return "refused";
  }
  return "unknown";
}

Json Report::to_json() const {
  Json out = Json::object();
  out["command"] = command;
  out["status"] = std::string(to_string(status));
  out["details"] = details;
  if (failure) {
    out["failure"] = *failure;
  }
  if (certificate) {
    out["certificate"] = *certificate;
  }
  return out;
}

std::string render_json(const Report& report) { return report.to_json().dump(); }

std::string render_text(const Report& report) {
  std::string out = "[" + std::string(to_string(report.status)) + "] " + report.command + "\n";
  for (const auto& [k, v] : report.details.items()) {
    render_value(out, "  ", k, v);
  }
  if (report.failure) {
    render_value(out, "  ", "failure", *report.failure);
  }
  if (report.certificate) {
    render_value(out, "  ", "certificate", *report.certificate);
  }
  return out;
}

}  // namespace scltwist::cli
