#pragma once

#include <vector>

#include "arsat/clause.hpp"
#include "arsat/ordering.hpp"
#include "arsat/substitution.hpp"

namespace arsat {

enum class InferenceKind { Resolution, Factoring };

/// A resolution or factoring step.
///
/// Resolution: premises[0] = Γ → Δ, A and premises[1] = A', Γ' → Δ' (already
/// renamed apart), unifier = mgu(A, A'). Factoring: premises[0] = Γ → Δ, A, A'.
/// The side vectors hold Γα, Δα (and Γ'α, Δ'α) without the resolved or
/// factored occurrences, which is what the post-unification maximality
/// conditions range over.
struct Inference {
  InferenceKind kind = InferenceKind::Resolution;
  std::vector<Clause> premises;
  Substitution unifier;
  Atom resolved_atom;
  /// A and A' as they occur in the premises, before unification.
  Atom left_atom;
  Atom right_atom;
  std::vector<Clause> premise_instances;
  Clause conclusion;

  std::vector<Atom> left_antecedent;
  std::vector<Atom> left_succedent;
  std::vector<Atom> right_antecedent;
  std::vector<Atom> right_succedent;

  /// Factoring of two antecedent atoms: A, A', Γ → Δ.
  bool antecedent_factor = false;
};

/// Unrestricted resolution of a succedent atom of c1 against an antecedent
/// atom of c2. c2 is renamed apart from c1 first.
std::vector<Inference> plain_resolvents(const Clause& c1, const Clause& c2);
/// Unrestricted factoring of two distinct succedent atoms.
std::vector<Inference> plain_factors(const Clause& c);
/// The same on the antecedent side.
std::vector<Inference> plain_antecedent_factors(const Clause& c);

/// Resolution where both resolved atoms are maximal in their premise before
/// unification.
std::vector<Inference> a_priori_resolvents(const OrderingContext& ctx, const Clause& c1,
                                           const Clause& c2);
/// Factoring where the kept atom is maximal in the premise before unification.
std::vector<Inference> a_priori_factors(const OrderingContext& ctx, const Clause& c);
std::vector<Inference> a_priori_antecedent_factors(const OrderingContext& ctx, const Clause& c);
/// Both of the above.
std::vector<Inference> all_a_priori_factors(const OrderingContext& ctx, const Clause& c);

/// Whether the ordering conditions still hold after unification:
/// resolution needs Aα strictly maximal in Γα, Δα and maximal in Γ'α, Δ'α;
/// factoring needs Aα strictly maximal in Γα and maximal in Δα (sides swapped
/// for antecedent factoring).
bool is_a_posteriori(const OrderingContext& ctx, const Inference& inf);

/// The pre-unification side condition of the a priori rules.
bool satisfies_a_priori(const OrderingContext& ctx, const Inference& inf);

}  // namespace arsat
