#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arsat/clause.hpp"

namespace arsat {

enum class SatVerdict { Satisfiable, Unsatisfiable };

/// Propositional literal over variables 0..n-1: 2*var + (negated ? 1 : 0).
using Literal = std::uint32_t;

inline Literal positive(std::uint32_t var) { return 2 * var; }
inline Literal negative(std::uint32_t var) { return 2 * var + 1; }

/// DPLL with unit propagation over two watched literals. Branches on the
/// lowest unassigned variable, false first.
class DpllSolver {
 public:
  explicit DpllSolver(std::uint32_t num_vars);

  void add_clause(std::vector<Literal> lits);
  SatVerdict solve();

  /// Value of `var` in the model found by the last satisfiable solve().
  bool model_value(std::uint32_t var) const { return value_[var] == 1; }
  std::uint64_t decisions() const { return decisions_; }

 private:
  bool enqueue(Literal lit);
  bool propagate();
  void undo_to(std::size_t trail_size);
  std::int8_t lit_value(Literal lit) const;

  std::uint32_t num_vars_;
  std::vector<std::vector<Literal>> clauses_;
  std::vector<std::vector<std::size_t>> watches_;
  std::vector<Literal> units_;
  bool trivially_unsat_ = false;

  std::vector<std::int8_t> value_;  // -1 unassigned, 0 false, 1 true
  std::vector<Literal> trail_;
  std::size_t propagated_ = 0;
  std::uint64_t decisions_ = 0;
};

struct GroundSatResult {
  SatVerdict verdict = SatVerdict::Satisfiable;
  /// On satisfiable: the atoms assigned true.
  std::vector<Atom> true_atoms;
};

/// Satisfiability of a set of ground clauses. Throws std::invalid_argument on
/// a non-ground clause.
GroundSatResult ground_sat(const std::vector<Clause>& clauses);

}  // namespace arsat
