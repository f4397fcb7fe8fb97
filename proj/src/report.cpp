#include "sections/report.hpp"

#include <chrono>
#include <ctime>

#include "sections/errors.hpp"

namespace sections {

using nlohmann::json;

namespace {

template <typename T>
T required(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad field '") + key + "': " + e.what());
  }
}

}  // namespace

json to_json(const VerificationItem& item) {
  json j;
  j["name"] = item.name;
  j["expected"] = item.expected ? json(*item.expected) : json(nullptr);
  j["computed"] = item.computed;
  j["tolerance"] = item.tolerance;
  j["pass"] = item.pass;
  j["witness"] = item.witness ? json{{"r", item.witness->r}, {"theta", item.witness->theta}}
                              : json(nullptr);
  return j;
}

json to_json(const ReportFile& file) {
  json items = json::array();
  for (const auto& item : file.report.items) {
    items.push_back(to_json(item));
  }
  json j;
  j["schema_version"] = file.schema_version;
  j["seed"] = file.report.seed;
  j["generator_name"] = file.report.generator_name;
  j["parameters"] = file.report.parameters;
  j["items"] = std::move(items);
  j["generated_at"] = file.generated_at;
  return j;
}

json to_json(const HerglotzSpec& spec) {
  json atoms = json::array();
  for (const auto& a : spec.atoms) {
    atoms.push_back({{"weight", a.weight}, {"re", a.point.real()}, {"im", a.point.imag()}});
  }
  json j;
  j["atoms"] = std::move(atoms);
  j["seed"] = spec.seed ? json(*spec.seed) : json(nullptr);
  return j;
}

VerificationItem item_from_json(const json& j) {
  VerificationItem item;
  item.name = required<std::string>(j, "name");
  const json& expected = j.at("expected");
  if (!expected.is_null()) {
    item.expected = expected.get<double>();
  }
  item.computed = required<double>(j, "computed");
  item.tolerance = required<double>(j, "tolerance");
  item.pass = required<bool>(j, "pass");
  const json& w = j.at("witness");
  if (!w.is_null()) {
    item.witness = Witness{required<double>(w, "r"), required<double>(w, "theta")};
  }
  return item;
}

ReportFile report_file_from_json(const json& j) {
  ReportFile file;
  file.schema_version = required<std::string>(j, "schema_version");
  if (file.schema_version != kSchemaVersion) {
    throw ValidationError("unsupported report schema version " + file.schema_version);
  }
  file.report.seed = required<std::uint64_t>(j, "seed");
  file.report.generator_name = required<std::string>(j, "generator_name");
  file.report.parameters = required<std::map<std::string, std::string>>(j, "parameters");
  for (const auto& item : required<json>(j, "items")) {
    file.report.items.push_back(item_from_json(item));
  }
  file.generated_at = required<std::string>(j, "generated_at");
  return file;
}

HerglotzSpec spec_from_json(const json& j) {
  HerglotzSpec spec;
  for (const auto& a : required<json>(j, "atoms")) {
    spec.atoms.push_back(
        {required<double>(a, "weight"), Complex{required<double>(a, "re"), required<double>(a, "im")}});
  }
  if (j.contains("seed") && !j.at("seed").is_null()) {
    spec.seed = j.at("seed").get<std::uint64_t>();
  }
  spec.validate();
  return spec;
}

std::string iso8601_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

}  // namespace sections
