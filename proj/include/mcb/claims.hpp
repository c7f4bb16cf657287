#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mcb/jsonio.hpp"

namespace mcb {

// One record per claim id C1..C12. Statuses: VERIFIED (exact agreement on
// every instance), REFUTED (carries at least one re-runnable
// counterexample in witnesses), PARTIAL (data recorded, no pass/fail
// asserted), OUT_OF_SCOPE (nothing computable here).
struct ClaimRecord {
  std::string id;
  std::string anchor;  // the statement under test, formulas only
  std::string status;
  int instances_tested = 0;
  Json witnesses = Json::array();
  std::vector<std::array<std::string, 3>> rows;  // (instance, result, detail)
};

struct ClaimsReport {
  std::vector<ClaimRecord> records;
  Json json;        // {"seed": ..., "claims": [...]}
  std::string tsv;  // claim / instance / result / detail
};

// selection empty = all twelve. Unknown ids raise UnknownClaimId. The seed
// is echoed into the report; evaluation itself is deterministic, so equal
// invocations produce byte-identical reports.
ClaimsReport run_claims(const std::vector<std::string>& selection, std::uint64_t seed);

}  // namespace mcb
