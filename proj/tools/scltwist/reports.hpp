#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace scltwist::cli {

using Json = nlohmann::ordered_json;

enum class Status { ok, fail, refused };

std::string_view to_string(Status status);

/// One line of output. `failure` is present whenever status is not ok.
struct Report {
  std::string command;
  Status status = Status::ok;
  Json details = Json::object();
  std::optional<Json> failure;
  std::optional<Json> certificate;

  /// Fields in the order command, status, details, failure, certificate.
  Json to_json() const;
};

/// Compact single-line JSON.
std::string render_json(const Report& report);

/// Indented key: value lines for people.
std::string render_text(const Report& report);

}  // namespace scltwist::cli
