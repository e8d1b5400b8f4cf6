#pragma once
// Top-level decision engine: validate a coefficient triple, try the
// elementary descent, reduce to S-unit obligations, certify them with the
// congruence sieves, and report a verdict carrying a machine-readable trace
// and the certificates it rests on.

#include <string>
#include <vector>

#include "af/fkm.hpp"
#include "af/sieves.hpp"
#include "af/terns.hpp"

namespace af {

enum class VerdictKind {
  Finite,                 // only trivial solutions for all large exponents
  FiniteDescent,          // same conclusion via the elementary descent
  ConditionalUnresolved,  // primary obligations certified, residual assumed
  Unknown,                // some obligation lacks a certificate
  Invalid                 // malformed input triple
};

std::string to_string(VerdictKind k);

struct TraceStep {
  std::string rule;    // stable rule id, e.g. "reduction/16-exact"
  std::string detail;  // human-readable specifics
  bool operator==(const TraceStep&) const = default;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  Tern input;
  std::vector<TraceStep> trace;
  std::vector<Certificate> certificates;
  // True when some primality decision along the way exceeded the
  // deterministic witness range and fell back to a probable-prime test.
  bool probabilistic = false;
  std::string reason;  // one-line summary of why the verdict holds
  bool operator==(const Verdict&) const = default;
};

Verdict decide(const Tern& t, Mode mode);

}  // namespace af
