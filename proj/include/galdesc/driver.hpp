#pragma once

// Command layer shared by the CLI binary and the python bindings: each
// command takes parsed inputs and produces a Report of named checks plus
// an optional machine-readable artifact.

#include <cstdint>

#include "galdesc/io.hpp"
#include "galdesc/tannaka.hpp"

namespace galdesc {

inline constexpr const char* kToolVersion = "0.1.0";

struct Report {
  std::string command;
  uint32_t seed = 0;
  std::vector<CheckResult> checks;
  json artifact;  // null unless the command produces an output object

  bool pass() const {
    for (const CheckResult& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// elapsed_ms < 0 omits the timing key (used when comparing reports).
json report_to_json(const Report& r, double elapsed_ms = -1);
std::string report_to_text(const Report& r);

// Setting validation: adjunction triangle identities, cartesianity,
// trace axiom, weak projection, and (when a datum is present) the
// cocycle conditions with a (g, h) witness. An explicit empty check
// list runs nothing.
Report cmd_verify(const Problem& p);

// Runs descent on the problem's datum and re-verifies the round trip;
// the artifact carries the descended object, the isomorphism pair and
// the averaging idempotent. Throws CocycleViolation for invalid data.
Report cmd_descend(const Problem& p);

// Applies the inverse Artin construction to the problem's
// Gamma-representation and round-trips it; the artifact carries the
// resulting object and the splitting witness. Throws NotArtin when the
// matrices do not form a representation.
Report cmd_artin(const Problem& p);

// Exact-sequence diagnostics for a normal-subgroup pair.
Report cmd_exactseq(const std::shared_ptr<GroupRepSetting>& pair);

// Deterministic property-suite run over the shipped settings; `cases`
// random descent data per setting, zero cases giving an empty report.
Report cmd_selftest(uint32_t seed, int cases);

}  // namespace galdesc
