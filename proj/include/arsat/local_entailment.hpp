#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arsat/clause.hpp"
#include "arsat/resolution.hpp"
#include "arsat/rewriting.hpp"

namespace arsat {

/// Evidence for S ⊢_𝒜 C: ground instances of S-clauses and the unit clauses
/// of ¬C, all with atoms in `atom_universe`, that are jointly unsatisfiable.
struct LocalCertificate {
  AtomSet atom_universe;
  std::vector<Clause> instances;
  std::vector<Clause> negated_goal;

  /// Re-checks locality, groundness and unsatisfiability. Does not check that
  /// the instances come from any particular clause set; see instances_from.
  bool validate() const;
  /// Every instance is a ground instance of some clause of `clauses`.
  bool instances_from(const std::vector<Clause>& clauses) const;
};

/// Ground instances Dσ of clauses D ∈ S with Atoms(Dσ) ⊆ universe.
std::vector<Clause> enumerate_local_instances(const std::vector<Clause>& clauses,
                                              const AtomSet& universe);

/// S ⊢_universe goal, decided as unsatisfiability of the local instances
/// together with ¬goal. Returns the certificate when it holds.
/// Throws std::invalid_argument if the goal is not ground or has an atom
/// outside the universe.
std::optional<LocalCertificate> decide_local(const std::vector<Clause>& clauses,
                                             const AtomSet& universe, const Clause& goal);

/// Decides R-redundancy of c in S through a frozen generic instance of c.
/// Sound: true means every ground instance of c is R-redundant.
bool clause_redundant(const std::vector<Clause>& clauses, const RewriteSystem& rules,
                      const Clause& c);

/// Conclusion test alone: S ⊢_{C̄↓R} C̄ for the frozen conclusion C̄.
bool conclusion_redundant(const std::vector<Clause>& clauses, const RewriteSystem& rules,
                          const Inference& inf);

/// Redundancy of a premise with respect to the other clauses of S. Against S
/// itself every member would qualify through its own instance.
bool premise_redundant(const std::vector<Clause>& clauses, const RewriteSystem& rules,
                       const Clause& premise);

/// Full inference redundancy: a premise is redundant, or the conclusion is.
bool inference_redundant(const std::vector<Clause>& clauses, const RewriteSystem& rules,
                         const Inference& inf);

/// ∃σ: antecedent(d)σ ⊆ antecedent(c) and succedent(d)σ ⊆ succedent(c).
bool subsumes(const Clause& d, const Clause& c);
/// Subsumption where σ keeps the atoms of d distinct.
bool subsumes_injectively(const Clause& d, const Clause& c);

}  // namespace arsat
