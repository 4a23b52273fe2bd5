// CNF compilation of comparator networks and cardinality constraints,
// plus DIMACS reading and writing.
//
// A comparator with inputs (a, b) and outputs (c, d) encodes as
//   half: (-a c) (-b c) (-a -b d)
//   full: the above plus (-c a b) (-d a) (-d b)
// Fresh variables are allocated in comparator emission order, c before d.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cardnet/network.hpp"

namespace cardnet {

using Lit = int;                 // nonzero; sign is the polarity
using Clause = std::vector<Lit>;

enum class EncodingKind { Half, Full };
enum class Relation { LessThan, LessEqual };

struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;
  // input_vars[i] is the variable of x_{i+1} (always ids 1..n);
  // output_vars[i] is the variable of y_{i+1}, or 0 for a wire folded to
  // constant false during cardinality encoding.
  std::vector<int> input_vars;
  std::vector<int> output_vars;
  bool trivially_true = false;  // set when the constraint imposes nothing

  // Validates ids, drops duplicate literals, rejects tautologies.
  void add_clause(Clause c);
};

// Wires variables 1..n to the inputs, threads two fresh variables through
// every comparator and records the final wire of each channel as output.
CnfFormula encode_network(const ComparatorNetwork& f, EncodingKind kind);

// CNF of x_1 + ... + x_n < bound (or <= bound): an improved pairwise
// selection network over the width padded to a power of two, constant-false
// padding folded away, with the unit clause -y_bound appended. Out-of-range
// bounds yield the trivially-true formula or a single empty clause.
CnfFormula encode_cardinality(int n_vars, long long bound, Relation rel,
                              EncodingKind kind);

// DIMACS with "c input x<i> = <id>" / "c output y<i> = <id>" comments.
void write_dimacs(const CnfFormula& f, std::ostream& out);
std::string to_dimacs(const CnfFormula& f);

// Throws std::runtime_error with a line number on malformed input.
CnfFormula read_dimacs(std::istream& in);
CnfFormula read_dimacs(const std::string& text);

}  // namespace cardnet
