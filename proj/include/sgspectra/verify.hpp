#pragma once

#include <string>

namespace spectra {

/// Outcome of the desk-scale verification suite: one PASS/FAIL line per
/// instance, a trailing SUMMARY line, and no volatile content (no
/// timestamps, no floating point), so reruns are byte-identical.
struct VerifyReport {
  std::string text;
  int passes = 0;
  int failures = 0;
};

/// Runs every verified statement at scales up to max_n (3 <= max_n <= 6):
/// the class-union spectrum oracle, integrality of the cy(r) and nicely
/// separated families, the arrangement-graph quotient identities, the
/// eigenvalue lift, the unique-neighbor quotient, and the known eigenvalue
/// bounds for cy(2).
VerifyReport run_verify(int max_n);

}  // namespace spectra
