#include "cardnet/up.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cardnet {

namespace {

class Engine {
 public:
  explicit Engine(const CnfFormula& f) : formula_(&f) {
    state_.values.assign(static_cast<std::size_t>(f.num_vars) + 1, TriValue::Undef);
  }

  const TriAssignment& state() const { return state_; }

  bool assign(Lit l, int cause) {
    const int var = std::abs(l);
    const TriValue want = l > 0 ? TriValue::True : TriValue::False;
    const TriValue have = state_.values[static_cast<std::size_t>(var)];
    if (have == want) return true;
    if (have != TriValue::Undef) {
      state_.conflict = true;
      state_.conflict_clause = cause;
      return false;
    }
    state_.values[static_cast<std::size_t>(var)] = want;
    state_.trail.push_back({var, l > 0, cause});
    return true;
  }

  // Plain scan to fixpoint; formulas here are small enough that watched
  // literals would buy nothing and the scan keeps replays bit-identical.
  bool propagate() {
    if (state_.conflict) return false;
    bool changed = true;
    while (changed) {
      changed = false;
      const auto& clauses = formula_->clauses;
      for (std::size_t ci = 0; ci < clauses.size(); ++ci) {
        const Clause& clause = clauses[ci];
        bool satisfied = false;
        int undef_count = 0;
        Lit unit = 0;
        for (Lit l : clause) {
          const TriValue v = state_.values[static_cast<std::size_t>(std::abs(l))];
          if (v == TriValue::Undef) {
            ++undef_count;
            unit = l;
          } else if ((v == TriValue::True) == (l > 0)) {
            satisfied = true;
            break;
          }
        }
        if (satisfied) continue;
        if (undef_count == 0) {
          state_.conflict = true;
          state_.conflict_clause = static_cast<int>(ci);
          return false;
        }
        if (undef_count == 1) {
          assign(unit, static_cast<int>(ci));
          changed = true;
        }
      }
    }
    return true;
  }

  bool assume_all(const std::vector<Lit>& assumptions) {
    for (Lit l : assumptions)
      if (!assign(l, -1)) return false;
    return propagate();
  }

 private:
  const CnfFormula* formula_;
  TriAssignment state_;
};

void check_inputs(const CnfFormula& phi, int k, const std::vector<int>& true_inputs) {
  if (k < 1 || static_cast<std::size_t>(k) > phi.output_vars.size())
    throw std::invalid_argument("k out of range for the encoded network");
  if (true_inputs.size() != static_cast<std::size_t>(k) - 1)
    throw std::invalid_argument("expected exactly k-1 true inputs");
  std::set<int> seen;
  for (int idx : true_inputs) {
    if (idx < 1 || static_cast<std::size_t>(idx) > phi.input_vars.size())
      throw std::invalid_argument("true input index out of range");
    if (!seen.insert(idx).second)
      throw std::invalid_argument("duplicate true input index");
  }
}

std::vector<Lit> input_assumptions(const CnfFormula& phi, const std::vector<int>& true_inputs) {
  std::vector<Lit> lits;
  lits.reserve(true_inputs.size());
  for (int idx : true_inputs)
    lits.push_back(phi.input_vars[static_cast<std::size_t>(idx) - 1]);
  return lits;
}

// Forward propagation plus the contract checks shared by the harness
// entry points. Returns the engine for further use.
bool run_forward(Engine& engine, const CnfFormula& phi, int k,
                 const std::vector<int>& true_inputs, std::string& reason) {
  if (!engine.assume_all(input_assumptions(phi, true_inputs))) {
    reason = "conflict during forward propagation";
    return false;
  }
  const TriAssignment& st = engine.state();
  for (int j = 1; j < k; ++j) {
    const int yv = phi.output_vars[static_cast<std::size_t>(j) - 1];
    if (yv == 0 || st.value(yv) != TriValue::True) {
      std::ostringstream msg;
      msg << "output y" << j << " not propagated to 1";
      reason = msg.str();
      return false;
    }
  }
  std::set<int> wanted(true_inputs.begin(), true_inputs.end());
  for (std::size_t i = 0; i < phi.input_vars.size(); ++i) {
    if (wanted.count(static_cast<int>(i) + 1)) continue;
    if (st.value(phi.input_vars[i]) != TriValue::Undef) {
      std::ostringstream msg;
      msg << "input x" << i + 1 << " was assigned by forward propagation";
      reason = msg.str();
      return false;
    }
  }
  return true;
}

}  // namespace

TriAssignment unit_propagate(const CnfFormula& f, const std::vector<Lit>& assumptions) {
  Engine engine(f);
  engine.assume_all(assumptions);
  return engine.state();
}

std::string format_trail(const std::vector<TrailEntry>& trail) {
  std::ostringstream out;
  for (const TrailEntry& e : trail) {
    out << "var " << e.var << " := " << (e.value ? 1 : 0) << " by ";
    if (e.cause_clause < 0)
      out << "assumption";
    else
      out << "clause " << e.cause_clause;
    out << "\n";
  }
  return out.str();
}

UpCheckResult forward_propagation_check(const CnfFormula& phi, int k,
                                        const std::vector<int>& true_inputs) {
  check_inputs(phi, k, true_inputs);
  Engine engine(phi);
  UpCheckResult result;
  result.passed = run_forward(engine, phi, k, true_inputs, result.reason);
  result.trail = engine.state().trail;
  return result;
}

UpCheckResult arc_consistency_check(const CnfFormula& phi, int k,
                                    const std::vector<int>& true_inputs) {
  check_inputs(phi, k, true_inputs);
  Engine engine(phi);
  UpCheckResult result;
  if (!run_forward(engine, phi, k, true_inputs, result.reason)) {
    result.trail = engine.state().trail;
    return result;
  }

  const int yk = phi.output_vars[static_cast<std::size_t>(k) - 1];
  if (yk == 0) {
    result.reason = "output y_k carries no variable";
    result.trail = engine.state().trail;
    return result;
  }
  if (!engine.assign(-yk, -1) || !engine.propagate()) {
    result.reason = "conflict after asserting -y_k";
    result.trail = engine.state().trail;
    return result;
  }

  std::set<int> wanted(true_inputs.begin(), true_inputs.end());
  const TriAssignment& st = engine.state();
  for (std::size_t i = 0; i < phi.input_vars.size(); ++i) {
    if (wanted.count(static_cast<int>(i) + 1)) continue;
    if (st.value(phi.input_vars[i]) != TriValue::False) {
      std::ostringstream msg;
      msg << "input x" << i + 1 << " not forced to 0";
      result.reason = msg.str();
      result.trail = st.trail;
      return result;
    }
  }
  result.passed = true;
  result.trail = st.trail;
  return result;
}

namespace {

std::vector<int> probe_path(const Engine& forward, int x_var) {
  Engine probe = forward;  // scratch copy; diagnostics never disturb the main state
  const std::size_t mark = probe.state().trail.size();
  if (!probe.assign(x_var, -1) || !probe.propagate())
    throw std::runtime_error("propagation path probe hit a conflict");
  std::vector<int> path;
  path.reserve(probe.state().trail.size() - mark);
  for (std::size_t i = mark; i < probe.state().trail.size(); ++i) {
    const TrailEntry& e = probe.state().trail[i];
    if (e.value) path.push_back(e.var);
  }
  return path;
}

}  // namespace

std::vector<int> extract_propagation_path(const CnfFormula& phi, int k,
                                          const std::vector<int>& true_inputs,
                                          int x_input_index) {
  check_inputs(phi, k, true_inputs);
  if (x_input_index < 1 ||
      static_cast<std::size_t>(x_input_index) > phi.input_vars.size())
    throw std::invalid_argument("input index out of range");
  if (std::find(true_inputs.begin(), true_inputs.end(), x_input_index) != true_inputs.end())
    throw std::invalid_argument("requested input is not undefined");

  Engine engine(phi);
  std::string reason;
  if (!run_forward(engine, phi, k, true_inputs, reason))
    throw std::invalid_argument("forward propagation failed: " + reason);
  return probe_path(engine, phi.input_vars[static_cast<std::size_t>(x_input_index) - 1]);
}

PropagationTree build_propagation_tree(const CnfFormula& phi, int k,
                                       const std::vector<int>& true_inputs) {
  check_inputs(phi, k, true_inputs);
  Engine engine(phi);
  std::string reason;
  if (!run_forward(engine, phi, k, true_inputs, reason))
    throw std::invalid_argument("forward propagation failed: " + reason);

  PropagationTree tree;
  tree.root = phi.output_vars[static_cast<std::size_t>(k) - 1];
  tree.consistent = true;

  std::set<int> wanted(true_inputs.begin(), true_inputs.end());
  for (std::size_t i = 0; i < phi.input_vars.size(); ++i) {
    if (wanted.count(static_cast<int>(i) + 1)) continue;
    const std::vector<int> path = probe_path(engine, phi.input_vars[i]);
    for (std::size_t j = 0; j + 1 < path.size(); ++j) {
      auto [it, inserted] = tree.next.emplace(path[j], path[j + 1]);
      if (!inserted && it->second != path[j + 1]) tree.consistent = false;
    }
  }
  return tree;
}

bool PropagationTree::rooted_tree() const {
  if (!consistent || root == 0) return false;
  if (next.count(root)) return false;  // the root must be terminal
  for (const auto& [from, unused] : next) {
    int cur = from;
    std::size_t steps = 0;
    while (cur != root) {
      auto it = next.find(cur);
      if (it == next.end() || ++steps > next.size()) return false;
      cur = it->second;
    }
  }
  return true;
}

}  // namespace cardnet
