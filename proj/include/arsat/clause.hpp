#pragma once

#include <vector>

#include "arsat/term.hpp"

namespace arsat {

/// A clause Γ → Δ. Both sides are atom sets kept sorted and deduplicated, so
/// two clauses compare equal iff they have the same literals.
class Clause {
 public:
  Clause() = default;
  Clause(std::vector<Atom> antecedent, std::vector<Atom> succedent);

  const std::vector<Atom>& antecedent() const { return antecedent_; }
  const std::vector<Atom>& succedent() const { return succedent_; }

  /// Antecedent ∪ succedent, sorted.
  std::vector<Atom> atoms() const;

  bool is_empty() const { return antecedent_.empty() && succedent_.empty(); }
  bool is_ground() const;
  bool is_tautology() const;
  std::size_t literal_count() const { return antecedent_.size() + succedent_.size(); }

  auto operator<=>(const Clause&) const = default;
  bool operator==(const Clause&) const = default;

  /// "p(X), q -> r(a)"; empty sides print nothing around the arrow.
  std::string to_string() const;

 private:
  std::vector<Atom> antecedent_;
  std::vector<Atom> succedent_;
};

VarSet vars(const Clause& c);

/// ¬C as unit clauses: → A for each antecedent atom, B → for each succedent atom.
std::vector<Clause> negate(const Clause& c);

}  // namespace arsat
