#include "crbr/sat.hpp"

#include <atomic>
#include <cstdint>
#include <map>
#include <string>

#include "crbr/errors.hpp"

namespace crbr {

namespace {

void check_var_cap(std::size_t var_count, const Limits& limits) {
  if (static_cast<int>(var_count) > limits.max_vars) {
    throw CapExceeded("query uses " + std::to_string(var_count) +
                      " variables, cap is " + std::to_string(limits.max_vars));
  }
}

std::map<std::string, int> index_variables(const std::set<std::string>& names) {
  std::map<std::string, int> index;
  int next = 0;
  for (const std::string& name : names) index.emplace(name, next++);
  return index;
}

// --- DPLL over a Tseitin translation ---------------------------------------

struct Cnf {
  int var_count = 0;
  std::vector<std::vector<int>> clauses;

  int fresh() { return ++var_count; }
  void add(std::vector<int> clause) { clauses.push_back(std::move(clause)); }
};

// Returns the literal defined to be equivalent to `f`.
int tseitin(const Formula& f, Cnf& cnf,
            const std::map<std::string, int>& var_index) {
  switch (f.kind()) {
    case Connective::kAtom:
      return var_index.at(f.atom_name()) + 1;  // DIMACS-style 1-based
    case Connective::kTop: {
      const int x = cnf.fresh();
      cnf.add({x});
      return x;
    }
    case Connective::kBottom: {
      const int x = cnf.fresh();
      cnf.add({-x});
      return x;
    }
    case Connective::kNot: {
      const int a = tseitin(f.left(), cnf, var_index);
      const int x = cnf.fresh();
      cnf.add({x, a});
      cnf.add({-x, -a});
      return x;
    }
    default:
      break;
  }

  const int a = tseitin(f.left(), cnf, var_index);
  const int b = tseitin(f.right(), cnf, var_index);
  const int x = cnf.fresh();
  switch (f.kind()) {
    case Connective::kAnd:
      cnf.add({-x, a});
      cnf.add({-x, b});
      cnf.add({x, -a, -b});
      break;
    case Connective::kOr:
      cnf.add({x, -a});
      cnf.add({x, -b});
      cnf.add({-x, a, b});
      break;
    case Connective::kXor:
      cnf.add({-x, a, b});
      cnf.add({-x, -a, -b});
      cnf.add({x, -a, b});
      cnf.add({x, a, -b});
      break;
    case Connective::kImplies:
      cnf.add({-x, -a, b});
      cnf.add({x, a});
      cnf.add({x, -b});
      break;
    case Connective::kIff:
      cnf.add({-x, -a, b});
      cnf.add({-x, a, -b});
      cnf.add({x, a, b});
      cnf.add({x, -a, -b});
      break;
    default:
      break;
  }
  return x;
}

// values: 0 unassigned, +1 true, -1 false (index 1..var_count).
bool dpll(const std::vector<std::vector<int>>& clauses,
          std::vector<std::int8_t>& values) {
  // Unit propagation to fixpoint by plain clause scanning; clause sets here
  // are small enough that watched literals would be overkill.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& clause : clauses) {
      bool satisfied = false;
      int unassigned = 0;
      int unit = 0;
      for (int lit : clause) {
        const std::int8_t v = values[std::abs(lit)];
        if (v == 0) {
          ++unassigned;
          unit = lit;
        } else if ((v > 0) == (lit > 0)) {
          satisfied = true;
          break;
        }
      }
      if (satisfied) continue;
      if (unassigned == 0) return false;  // conflict
      if (unassigned == 1) {
        values[std::abs(unit)] = unit > 0 ? 1 : -1;
        changed = true;
      }
    }
  }

  // Deterministic branching: lowest unassigned variable, false first.
  int branch = 0;
  for (int v = 1; v < static_cast<int>(values.size()); ++v) {
    if (values[v] == 0) {
      branch = v;
      break;
    }
  }
  if (branch == 0) return true;  // every clause satisfied

  std::vector<std::int8_t> saved = values;
  values[branch] = -1;
  if (dpll(clauses, values)) return true;
  values = std::move(saved);
  values[branch] = 1;
  return dpll(clauses, values);
}

// --- Flat evaluation programs for the truth-table scans ---------------------

struct Program {
  struct Op {
    Connective kind;
    int a = -1;  // operand slot, or variable bit for kAtom
    int b = -1;
  };
  std::vector<Op> ops;    // children always precede parents
  std::vector<int> roots;
  int var_count = 0;
};

int compile_node(const Formula& f, Program& prog,
                 const std::map<std::string, int>& var_index) {
  Program::Op op;
  op.kind = f.kind();
  switch (f.kind()) {
    case Connective::kAtom:
      op.a = var_index.at(f.atom_name());
      break;
    case Connective::kTop:
    case Connective::kBottom:
      break;
    case Connective::kNot:
      op.a = compile_node(f.left(), prog, var_index);
      break;
    default:
      op.a = compile_node(f.left(), prog, var_index);
      op.b = compile_node(f.right(), prog, var_index);
      break;
  }
  prog.ops.push_back(op);
  return static_cast<int>(prog.ops.size()) - 1;
}

Program compile(const std::vector<Formula>& formulas,
                const std::map<std::string, int>& var_index) {
  Program prog;
  prog.var_count = static_cast<int>(var_index.size());
  for (const Formula& f : formulas)
    prog.roots.push_back(compile_node(f, prog, var_index));
  return prog;
}

bool eval_program(const Program& prog, std::uint64_t assignment,
                  std::vector<unsigned char>& scratch) {
  for (std::size_t i = 0; i < prog.ops.size(); ++i) {
    const Program::Op& op = prog.ops[i];
    switch (op.kind) {
      case Connective::kAtom:
        scratch[i] = (assignment >> op.a) & 1u;
        break;
      case Connective::kTop:
        scratch[i] = 1;
        break;
      case Connective::kBottom:
        scratch[i] = 0;
        break;
      case Connective::kNot:
        scratch[i] = !scratch[op.a];
        break;
      case Connective::kAnd:
        scratch[i] = scratch[op.a] && scratch[op.b];
        break;
      case Connective::kOr:
        scratch[i] = scratch[op.a] || scratch[op.b];
        break;
      case Connective::kXor:
        scratch[i] = scratch[op.a] != scratch[op.b];
        break;
      case Connective::kImplies:
        scratch[i] = !scratch[op.a] || scratch[op.b];
        break;
      case Connective::kIff:
        scratch[i] = scratch[op.a] == scratch[op.b];
        break;
    }
  }
  for (int root : prog.roots) {
    if (!scratch[root]) return false;
  }
  return true;
}

}  // namespace

bool is_satisfiable(const std::vector<Formula>& formulas,
                    const Limits& limits) {
  const auto names = variables(formulas);
  check_var_cap(names.size(), limits);
  const auto var_index = index_variables(names);

  Cnf cnf;
  cnf.var_count = static_cast<int>(names.size());
  for (const Formula& f : formulas) cnf.add({tseitin(f, cnf, var_index)});

  std::vector<std::int8_t> values(cnf.var_count + 1, 0);
  return dpll(cnf.clauses, values);
}

bool truth_table_satisfiable(const std::vector<Formula>& formulas,
                             ScanMode mode, const Limits& limits) {
  const auto names = variables(formulas);
  check_var_cap(names.size(), limits);
  const Program prog = compile(formulas, index_variables(names));

  const std::int64_t total = std::int64_t{1} << prog.var_count;
  const bool parallel = mode == ScanMode::kParallel;
  std::atomic<bool> found{false};

#pragma omp parallel if (parallel)
  {
    std::vector<unsigned char> scratch(prog.ops.size());
#pragma omp for schedule(static)
    for (std::int64_t m = 0; m < total; ++m) {
      if (found.load(std::memory_order_relaxed)) continue;
      if (eval_program(prog, static_cast<std::uint64_t>(m), scratch))
        found.store(true, std::memory_order_relaxed);
    }
  }
  return found.load();
}

bool entails(const std::vector<Formula>& premises, const Formula& conclusion,
             const Limits& limits) {
  std::vector<Formula> query = premises;
  query.push_back(Formula::negation(conclusion));
  return !is_satisfiable(query, limits);
}

bool equivalent(const Formula& lhs, const Formula& rhs, const Limits& limits) {
  return !is_satisfiable({Formula::exclusive_or(lhs, rhs)}, limits);
}

}  // namespace crbr
