// Three-valued unit propagation and the arc-consistency test harness for
// half-encoded selection networks.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "cardnet/cnf.hpp"

namespace cardnet {

enum class TriValue : unsigned char { False = 0, True = 1, Undef = 2 };

struct TrailEntry {
  int var = 0;
  bool value = false;
  int cause_clause = -1;  // clause index, or -1 for an assumption
};

struct TriAssignment {
  std::vector<TriValue> values;  // index 0 unused
  std::vector<TrailEntry> trail;
  bool conflict = false;
  int conflict_clause = -1;  // -1 when assumptions clash directly

  TriValue value(int var) const { return values[static_cast<std::size_t>(var)]; }
};

// Least fixpoint of unit propagation from the given assumption literals.
// Clauses are scanned in order until no assignment fires; the fixpoint is
// independent of that order.
TriAssignment unit_propagate(const CnfFormula& f, const std::vector<Lit>& assumptions);

std::string format_trail(const std::vector<TrailEntry>& trail);

struct UpCheckResult {
  bool passed = false;
  std::string reason;             // empty when passed
  std::vector<TrailEntry> trail;  // full propagation trail for diagnostics
};

// With k-1 inputs true and everything else undefined, propagation must set
// outputs y_1..y_{k-1} true and must not touch any other input.
// `true_inputs` holds distinct 1-based input positions; phi must come from
// a half encoding of a k-selection network.
UpCheckResult forward_propagation_check(const CnfFormula& phi, int k,
                                        const std::vector<int>& true_inputs);

// Forward propagation, then the unit -y_k: every input outside true_inputs
// must end up false with no conflict.
UpCheckResult arc_consistency_check(const CnfFormula& phi, int k,
                                    const std::vector<int>& true_inputs);

// The chain of variables that setting undefined input x to 1 would force to
// 1 (on a scratch copy of the forward-propagated state), starting with x
// itself. Ends at the variable of y_k.
std::vector<int> extract_propagation_path(const CnfFormula& phi, int k,
                                          const std::vector<int>& true_inputs,
                                          int x_input_index);

// Union of the propagation paths of all undefined inputs. `next` maps each
// variable to its unique successor toward the root.
struct PropagationTree {
  std::map<int, int> next;
  int root = 0;
  bool consistent = false;  // false if two paths disagreed on a successor

  // True when consistent, the root has no successor, and every recorded
  // edge chain terminates at the root.
  bool rooted_tree() const;
};

PropagationTree build_propagation_tree(const CnfFormula& phi, int k,
                                       const std::vector<int>& true_inputs);

}  // namespace cardnet
