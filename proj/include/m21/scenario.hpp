#ifndef M21_SCENARIO_HPP
#define M21_SCENARIO_HPP

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "m21/chow.hpp"

namespace m21::suite {

using Json = nlohmann::ordered_json;

enum class CheckKind {
  IdealEqual,
  Member,
  NotMember,
  PatchingDerive,
  MapValid,
  Nzd,
  PushforwardEq,
  ClassConsistency,
  GradedComponent,
  IdentityEq,
  ContainmentReport,
};

const char* kind_name(CheckKind k);
std::optional<CheckKind> kind_from(const std::string& s);

/// A declarative verification scenario: named presentations, maps, classes
/// and pushforward operators, plus an ordered list of checks over them.
/// Everything is resolved at load time; references only point backwards.
struct Scenario {
  std::string id;
  std::string description;
  std::vector<std::string> datasets;

  std::vector<chow::ChowPresentation> rings;

  struct NamedMap {
    chow::RingMap map;
    IdealPresentation source_relations; // empty for free sources
  };
  std::vector<NamedMap> maps;

  struct NamedClass {
    std::string name;
    std::string ring_name;
    Polynomial value;
  };
  std::vector<NamedClass> classes;

  struct NamedOperator {
    std::string name;
    chow::PushforwardOperator op;
  };
  std::vector<NamedOperator> operators;

  struct Check {
    std::string name;
    CheckKind kind;
    Json args;
  };
  std::vector<Check> checks;

  const chow::ChowPresentation* find_ring(const std::string& name) const;
  const NamedMap* find_map(const std::string& name) const;
  const NamedClass* find_class(const std::string& name) const;
  const NamedOperator* find_operator(const std::string& name) const;
};

Scenario load_scenario(const std::string& path);
Scenario load_scenario_json(const Json& doc, const std::string& origin);

enum class Status { Pass, Fail, Report };

struct CheckResult {
  std::string name;
  CheckKind kind = CheckKind::IdealEqual;
  Status status = Status::Fail;
  std::string witness; // required for FAIL, informative for REPORT
  double ms = 0.0;
};

struct Report {
  std::string scenario;
  std::string version;
  std::vector<CheckResult> results;
  int passed = 0, failed = 0, reports = 0;
};

/// Runs the selected checks (simple glob on names); checks are independent
/// and run in parallel, results are collected in declaration order.
Report run_checks(const Scenario& s, const std::string& filter = "*");

/// Runs one check (used by the runner and by targeted harnesses).
CheckResult run_check(const Scenario& s, const Scenario::Check& c);

std::string report_text(const Report& r, bool color);
Json report_json(const Report& r);

bool glob_match(std::string_view pattern, std::string_view text);

} // namespace m21::suite

#endif
