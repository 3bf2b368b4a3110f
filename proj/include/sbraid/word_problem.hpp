#pragma once

// Equality of singular braid words. Words are moved into the pure singular
// group by a Schreier representative, rewritten as Britton forms over the
// stable letters X_{k,j}, and compared by peeling one stable letter at a
// time: the last letter of the first word must pinch against the last
// letter of the same label in the second, with the letters in between
// commuting past it.

#include <string>
#include <vector>

#include "sbraid/singular.hpp"

namespace sbraid {

enum class Certificate {
  braid_match,
  recursion_success,
  braid_mismatch,
  permutation_mismatch,
  degree_mismatch,
  trace_mismatch,
  strand_clash,
  condition1_failure,
  condition2_failure,
  condition3_failure,
};

std::string to_string(Certificate c);
/// Whether a certificate proves equality.
bool certifies_equal(Certificate c);

struct Verdict {
  bool equal = false;
  Certificate certificate = Certificate::braid_mismatch;
  int steps = 0;  // stable letters peeled off

  /// {"equal": bool, "certificate": string, "steps": int}
  std::string to_json() const;
};

struct DecideOptions {
  /// Degree, per-label degree, trace and strand-clash rejections. Turning
  /// them off never changes a verdict; it only makes rejections slower.
  bool filters = true;
};

/// xy = yx in SG_n, decided in ZB_n. Both products may carry at most two
/// singular letters.
bool check_commutation_eta(const SingularWord& x, const SingularWord& y);

/// σ_j β = β σ_k, equivalently τ_j β = β τ_k.
bool commutes_via_frz(const BraidWord& beta, int j, int k);

/// w·X_L = X_L·w for a pure braid w.
bool x_commutes_with_pure(const XLabel& label, const BraidWord& w);

/// Lexicographic normal form of a label sequence in the trace monoid where
/// labels with disjoint strand pairs commute.
std::vector<XLabel> trace_normal_form(const std::vector<XLabel>& labels);

/// Equality of the label sequences in that trace monoid. A false result
/// proves the Britton forms represent different elements.
bool trace_filter(const BrittonForm& b1, const BrittonForm& b2);

Verdict decide_sgp(const BrittonForm& b1, const BrittonForm& b2,
                   const DecideOptions& options = {});

Verdict decide_equal(const SingularWord& w1, const SingularWord& w2,
                     const DecideOptions& options = {});

}  // namespace sbraid
