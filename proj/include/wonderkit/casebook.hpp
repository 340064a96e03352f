#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wonderkit/json_io.hpp"

namespace wk {

/// Where an expected value comes from: a published statement, a direct
/// construction, or an independent computation inside the case.
enum class Source { reference, elementary, cross_check };

std::string to_string(Source s);

struct CaseCheck {
  std::string name;
  Json computed;
  Json expected;
  Source source = Source::reference;

  bool pass() const { return computed == expected; }
};

struct CaseReport {
  std::string case_id;
  std::string statement;
  Json inputs;
  std::vector<CaseCheck> checks;

  bool pass() const;
};

struct CaseInfo {
  std::string id;
  std::string statement;
};

/// Catalog order.
std::vector<CaseInfo> list_cases();

/// Deterministic for a fixed seed; the seed only affects sampled cases.
/// Throws InvalidInput for an unknown id.
CaseReport run_case(const std::string& case_id, std::uint64_t seed = 0);

std::vector<CaseReport> run_all(std::uint64_t seed = 0);

/// One header line "PASS id: statement" or "FAIL ...", then one line per check.
std::string to_text(const CaseReport& r);
Json to_json(const CaseReport& r);

struct IhssRow {
  std::string space;
  std::string vmrt;
  std::string embedding;
  std::string rank;
};

const std::vector<IhssRow>& ihss_table();
/// Throws InvalidInput when no row has this space.
const IhssRow& ihss_lookup(const std::string& space);

}  // namespace wk
