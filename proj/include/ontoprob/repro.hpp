#pragma once

/**
 * The claim harness: every headline number or existence statement the
 * library is built around, recomputed from scratch and compared against its
 * stated source value.  Each claim carries a self-describing source string
 * (the closed form or construction it traces to), the computed values, the
 * expected values, a tolerance, and a verdict — so reports are auditable
 * without rerunning anything.
 */

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace ontoprob::repro {

struct ReproReport {
  std::string claim_id;
  std::string paper_ref;  // provenance: the formula or construction behind `expected`
  std::string computed;   // space-separated key=value pairs
  std::string expected;
  double tolerance;
  bool pass;
};

// Claim ids in report order.
std::vector<std::string> claim_ids();

// Throws std::invalid_argument for an unknown id.
ReproReport run_claim(const std::string& id, std::uint64_t seed);

std::vector<ReproReport> repro_all(std::uint64_t seed);

bool all_pass(const std::vector<ReproReport>& reports);

// claim_id,paper_ref,computed,expected,tolerance,pass — one row per claim.
// Field values never contain commas, so no quoting is needed.
std::string to_csv(const std::vector<ReproReport>& reports);
nlohmann::ordered_json to_json(const std::vector<ReproReport>& reports);

// %.17g rendering used across all report output (round-trip exact).
std::string format_double(double v);

}  // namespace ontoprob::repro
