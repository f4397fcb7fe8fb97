#pragma once

#include <string>

#include <json.hpp>

#include "sections/verify.hpp"
#include "sections/zoo.hpp"

namespace sections {

inline constexpr const char* kSchemaVersion = "1";

/// On-disk form of a report: schema version, payload and generation time.
struct ReportFile {
  std::string schema_version = kSchemaVersion;
  VerificationReport report;
  std::string generated_at;
};

nlohmann::json to_json(const VerificationItem& item);
nlohmann::json to_json(const ReportFile& file);
nlohmann::json to_json(const HerglotzSpec& spec);

/// Throws ValidationError on a schema mismatch or missing field.
VerificationItem item_from_json(const nlohmann::json& j);
ReportFile report_file_from_json(const nlohmann::json& j);
HerglotzSpec spec_from_json(const nlohmann::json& j);

/// Current UTC time, e.g. 2026-10-19T08:30:00Z.
std::string iso8601_now();

}  // namespace sections
