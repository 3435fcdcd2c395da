#include <sstream>

#include "m21/scenario.hpp"

namespace m21::suite {

namespace {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Report: return "REPORT";
  }
  return "?";
}

std::string paint(const char* text, const char* code, bool color) {
  if (!color) return text;
  return std::string("\033[") + code + "m" + text + "\033[0m";
}

} // namespace

std::string report_text(const Report& r, bool color) {
  std::ostringstream out;
  out << "scenario " << r.scenario << " (toolkit " << r.version << ")\n";
  for (const auto& c : r.results) {
    const char* code = c.status == Status::Pass ? "32" : c.status == Status::Fail ? "31" : "36";
    out << "[" << paint(status_name(c.status), code, color) << "] " << c.name << " ("
        << kind_name(c.kind) << ") " << c.ms << "ms\n";
    if (!c.witness.empty() && c.status != Status::Pass) {
      std::istringstream lines(c.witness);
      std::string line;
      while (std::getline(lines, line)) out << "    " << line << "\n";
    }
  }
  out << "summary: passed: " << r.passed << ", failed: " << r.failed
      << ", reports: " << r.reports << "\n";
  return out.str();
}

Json report_json(const Report& r) {
  Json j;
  j["scenario"] = r.scenario;
  j["version"] = r.version;
  Json results = Json::array();
  for (const auto& c : r.results) {
    Json e;
    e["name"] = c.name;
    e["kind"] = kind_name(c.kind);
    e["status"] = status_name(c.status);
    if (!c.witness.empty()) e["witness"] = c.witness;
    e["ms"] = c.ms;
    results.push_back(std::move(e));
  }
  j["results"] = std::move(results);
  j["summary"] = Json{{"passed", r.passed}, {"failed", r.failed}, {"reports", r.reports}};
  return j;
}

} // namespace m21::suite
