#ifndef YX_REPORT_HPP
#define YX_REPORT_HPP

// Machine-readable check reports: one RelationReport per relation spec and
// configuration, serialized as the JSON array emitted by the CLI.

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

namespace yx {

struct RelationReport {
  std::string id;
  std::string anchor;
  std::string config;
  std::string engine;                      // "symbolic" | "oracle"
  std::array<int, 4> window{-1, -1, -1, -1};  // trusted order per variable, -1 = n/a
  std::string status;                      // "pass" | "fail" | "skip"
  std::vector<std::string> failures;
  long long millis = 0;
};

inline nlohmann::json toJson(const RelationReport& r) {
  return nlohmann::json{{"id", r.id},
                        {"anchor", r.anchor},
                        {"config", r.config},
                        {"engine", r.engine},
                        {"window", r.window},
                        {"status", r.status},
                        {"failures", r.failures},
                        {"millis", r.millis}};
}

inline nlohmann::json toJson(const std::vector<RelationReport>& rs) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& r : rs) a.push_back(toJson(r));
  return a;
}

inline RelationReport reportFromJson(const nlohmann::json& j) {
  RelationReport r;
  r.id = j.at("id").get<std::string>();
  r.anchor = j.at("anchor").get<std::string>();
  r.config = j.at("config").get<std::string>();
  r.engine = j.at("engine").get<std::string>();
  r.window = j.at("window").get<std::array<int, 4>>();
  r.status = j.at("status").get<std::string>();
  r.failures = j.at("failures").get<std::vector<std::string>>();
  r.millis = j.at("millis").get<long long>();
  return r;
}

// Schema validation used by tests and the CLI round-trip check.
inline bool validReportJson(const nlohmann::json& j, std::string* why = nullptr) {
  auto bad = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (!j.is_array()) return bad("report is not an array");
  for (const auto& e : j) {
    for (const char* f : {"id", "anchor", "config", "engine", "status"})
      if (!e.contains(f) || !e[f].is_string()) return bad(std::string("missing string field ") + f);
    if (!e.contains("window") || !e["window"].is_array() || e["window"].size() != 4)
      return bad("window must be a 4-array");
    if (!e.contains("failures") || !e["failures"].is_array()) return bad("failures must be an array");
    if (!e.contains("millis") || !e["millis"].is_number()) return bad("millis must be a number");
    const std::string st = e["status"].get<std::string>();
    if (st != "pass" && st != "fail" && st != "skip") return bad("bad status " + st);
    if ((st == "pass" || st == "skip") != e["failures"].empty())
      return bad("status/failures mismatch for " + e["id"].get<std::string>());
  }
  return true;
}

}  // namespace yx

#endif  // YX_REPORT_HPP
