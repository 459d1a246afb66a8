#pragma once

/// \file
/// Recomputes each published estimate from the library and compares it with
/// the quoted figure. Findings are informational; nothing here throws on a
/// mismatch.

#include "spindeph/units.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace spindeph {

enum class Verdict { Match, Approx, Discrepant, TypoSuspected };

std::string_view to_string(Verdict v);

/// ratio = computed / quoted:
///   |ratio - 1| <= 0.15                         -> Match
///   0.5 <= ratio <= 2                           -> Approx
///   ratio within 15% of 10^k for |k| >= 3       -> TypoSuspected
///   anything else (including non-finite)        -> Discrepant
Verdict classify(double ratio);

struct AuditEntry {
  std::string claim_id;
  std::string description;
  double quoted_value;
  double computed_value;
  std::string units;
  double ratio;
  Verdict verdict;
};

AuditEntry make_entry(std::string claim_id, std::string description, double quoted,
                      double computed, std::string units);

std::vector<AuditEntry> run_audit(const PhysicalConstants& c = PhysicalConstants::standard());

const AuditEntry* find_entry(const std::vector<AuditEntry>& entries, std::string_view claim_id);

void write_text(std::ostream& os, const std::vector<AuditEntry>& entries);
nlohmann::json to_json(const std::vector<AuditEntry>& entries);

}  // namespace spindeph
