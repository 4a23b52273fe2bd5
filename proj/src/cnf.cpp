#include "cardnet/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cardnet/constructions.hpp"

namespace cardnet {

void CnfFormula::add_clause(Clause c) {
  Clause seen;
  for (Lit l : c) {
    if (l == 0 || std::abs(l) > num_vars)
      throw std::invalid_argument("clause literal out of variable range");
    if (std::find(seen.begin(), seen.end(), -l) != seen.end())
      throw std::invalid_argument("tautological clause");
    if (std::find(seen.begin(), seen.end(), l) == seen.end()) seen.push_back(l);
  }
  clauses.push_back(std::move(seen));
}

namespace {

void emit_comparator_clauses(CnfFormula& f, int a, int b, int c, int d, EncodingKind kind) {
  f.add_clause({-a, c});
  f.add_clause({-b, c});
  f.add_clause({-a, -b, d});
  if (kind == EncodingKind::Full) {
    f.add_clause({-c, a, b});
    f.add_clause({-d, a});
    f.add_clause({-d, b});
  }
}

// Encodes `net` with the first `real_inputs` channels carrying variables
// 1..real_inputs and the remaining channels held constant false. Comparators
// with a constant input are folded: the variable wire passes to the upper
// output, the lower output stays constant, and no clause is emitted.
CnfFormula encode_with_padding(const ComparatorNetwork& net, int real_inputs,
                               EncodingKind kind) {
  CnfFormula f;
  f.num_vars = real_inputs;
  f.input_vars.resize(static_cast<std::size_t>(real_inputs));
  for (int i = 0; i < real_inputs; ++i) f.input_vars[static_cast<std::size_t>(i)] = i + 1;

  std::vector<int> wire(static_cast<std::size_t>(net.channels()) + 1, 0);
  for (int ch = 1; ch <= real_inputs; ++ch) wire[static_cast<std::size_t>(ch)] = ch;

  for (const Comparator& c : net.comparators()) {
    int& a = wire[static_cast<std::size_t>(c.hi)];
    int& b = wire[static_cast<std::size_t>(c.lo)];
    if (a != 0 && b != 0) {
      const int out_hi = ++f.num_vars;
      const int out_lo = ++f.num_vars;
      emit_comparator_clauses(f, a, b, out_hi, out_lo, kind);
      a = out_hi;
      b = out_lo;
    } else if (b != 0) {
      a = b;   // max(x, false) = x
      b = 0;
    } else if (a != 0) {
      b = 0;   // already holds: min(x, false) = false
    }
  }

  f.output_vars.assign(wire.begin() + 1, wire.end());
  return f;
}

}  // namespace

CnfFormula encode_network(const ComparatorNetwork& f, EncodingKind kind) {
  return encode_with_padding(f, f.channels(), kind);
}

CnfFormula encode_cardinality(int n_vars, long long bound, Relation rel,
                              EncodingKind kind) {
  if (n_vars < 1) throw std::invalid_argument("cardinality constraint needs variables");

  // The constraint imposes nothing once the bound admits all n variables;
  // handling this first also keeps bound+1 below from overflowing.
  if (rel == Relation::LessEqual ? bound >= n_vars : bound > n_vars) {
    CnfFormula f;
    f.trivially_true = true;
    return f;
  }
  const long long k = rel == Relation::LessEqual ? bound + 1 : bound;
  if (k <= 0) {
    // No assignment has a negative count of true variables.
    CnfFormula f;
    f.clauses.push_back({});
    return f;
  }

  int width = 1;
  while (width < n_vars) width *= 2;
  int select = 1;
  while (select < k) select *= 2;

  const ComparatorNetwork net = make_pw_hbit_sel(width, select);
  CnfFormula f = encode_with_padding(net, n_vars, kind);
  const int yk = f.output_vars[static_cast<std::size_t>(k) - 1];
  if (yk != 0) f.add_clause({-yk});
  // A constant-false k-th output would make the constraint vacuous; with
  // k <= n_vars that wire always carries a variable.
  return f;
}

void write_dimacs(const CnfFormula& f, std::ostream& out) {
  for (std::size_t i = 0; i < f.input_vars.size(); ++i)
    out << "c input x" << i + 1 << " = " << f.input_vars[i] << "\n";
  for (std::size_t i = 0; i < f.output_vars.size(); ++i)
    out << "c output y" << i + 1 << " = " << f.output_vars[i] << "\n";
  out << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
  for (const Clause& clause : f.clauses) {
    for (Lit l : clause) out << l << " ";
    out << "0\n";
  }
}

std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  write_dimacs(f, out);
  return out.str();
}

CnfFormula read_dimacs(std::istream& in) {
  CnfFormula f;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  std::size_t declared_clauses = 0;
  Clause current;

  auto fail = [&](const std::string& what) {
    std::ostringstream msg;
    msg << "line " << line_no << ": " << what;
    throw std::runtime_error(msg.str());
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == 'c') {
      std::istringstream ls(line);
      std::string tag, kind;
      ls >> tag >> kind;
      if (kind == "input" || kind == "output") {
        std::string name;
        ls >> name;
        // names look like x3 / y7
        std::istringstream num(name.substr(1) );
        std::size_t index = 0;
        if ((name.size() > 1) && (num >> index) && index >= 1) {
          std::string eq;
          int id;
          if (ls >> eq >> id; eq == "=") {
            auto& vars = kind == "input" ? f.input_vars : f.output_vars;
            if (vars.size() < index) vars.resize(index, 0);
            vars[index - 1] = id;
          }
        }
      }
      continue;
    }
    std::istringstream ls(line);
    if (!have_header) {
      std::string p, cnf;
      long long vars, clauses;
      if (!(ls >> p >> cnf >> vars >> clauses) || p != "p" || cnf != "cnf" || vars < 0 ||
          clauses < 0 || vars > std::numeric_limits<int>::max())
        fail("expected header \"p cnf <vars> <clauses>\"");
      f.num_vars = static_cast<int>(vars);
      declared_clauses = static_cast<std::size_t>(clauses);
      have_header = true;
      continue;
    }
    Lit l;
    while (ls >> l) {
      if (l == 0) {
        try {
          f.add_clause(current);  // validates range and tautology
        } catch (const std::invalid_argument& e) {
          fail(e.what());
        }
        current.clear();
      } else if (std::abs(l) > f.num_vars) {
        fail("literal outside declared variable range");
      } else {
        current.push_back(l);
      }
    }
    if (!ls.eof()) fail("malformed literal");
  }
  if (!have_header) fail("missing \"p cnf\" header");
  if (!current.empty()) fail("clause not terminated by 0");
  if (f.clauses.size() != declared_clauses) fail("clause count differs from header");
  return f;
}

CnfFormula read_dimacs(const std::string& text) {
  std::istringstream in(text);
  return read_dimacs(in);
}

}  // namespace cardnet
