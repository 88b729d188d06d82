#pragma once

#include <map>
#include <optional>
#include <string>

#include "arsat/clause.hpp"
#include "arsat/term.hpp"

namespace arsat {

/// Finite map from variable names to terms, applied simultaneously.
class Substitution {
 public:
  using Map = std::map<std::string, Term>;

  Substitution() = default;
  explicit Substitution(Map bindings);

  /// Adds var ↦ t. Identity bindings are dropped.
  void bind(const std::string& var, Term t);
  const Term* lookup(const std::string& var) const;

  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }
  const Map& bindings() const { return bindings_; }
  auto begin() const { return bindings_.begin(); }
  auto end() const { return bindings_.end(); }

  /// No domain variable occurs in a range term.
  bool is_idempotent() const;

  bool operator==(const Substitution&) const = default;
  std::string to_string() const;

 private:
  Map bindings_;
};

Term apply(const Substitution& s, const Term& t);
Atom apply(const Substitution& s, const Atom& a);
Clause apply(const Substitution& s, const Clause& c);
std::vector<Atom> apply_all(const Substitution& s, const std::vector<Atom>& atoms);

/// σ1 then σ2: apply(compose(s1, s2), e) == apply(s2, apply(s1, e)).
Substitution compose(const Substitution& s1, const Substitution& s2);

/// Most general unifier with occurs check. Variable-variable pairs bind the
/// lexicographically smaller name to the larger one. The result is idempotent.
std::optional<Substitution> mgu(const Term& a, const Term& b);
std::optional<Substitution> mgu(const Atom& a, const Atom& b);

/// One-sided unification: σ with apply(σ, pattern) == target, dom(σ) ⊆ vars(pattern).
std::optional<Substitution> match_onto(const Term& pattern, const Term& target);
std::optional<Substitution> match_onto(const Atom& pattern, const Atom& target);

/// Extends `acc` so that pattern under acc equals target. Identity bindings
/// are kept in the map, so pattern and target may share variable names. On
/// failure `acc` may hold partial bindings; callers that backtrack pass a copy.
bool match_into(const Term& pattern, const Term& target, Substitution::Map& acc);
bool match_into(const Atom& pattern, const Atom& target, Substitution::Map& acc);

/// Variant of c with variables V0, V1, ... that avoid `forbidden`.
Clause rename_apart(const Clause& c, const VarSet& forbidden);

/// Renames the variables of c to X0, X1, ... by first occurrence in its
/// canonical literal order. Variants usually, but not always, map to the same
/// result; use is_variant for an exact test.
Clause normalize_variables(const Clause& c);

/// True iff a and b are equal up to a bijective variable renaming.
bool is_variant(const Clause& a, const Clause& b);

/// Replacement of a clause's variables by fresh frozen constants #1, #2, ...
class FreezeMap {
 public:
  const std::map<std::string, Term>& assignment() const { return assignment_; }
  Substitution as_substitution() const;
  /// Replaces frozen constants back by their variables.
  Term thaw(const Term& t) const;
  Atom thaw(const Atom& a) const;
  Clause thaw(const Clause& c) const;

 private:
  friend std::pair<Clause, FreezeMap> freeze(const Clause& c);
  std::map<std::string, Term> assignment_;
  std::map<std::uint32_t, std::string> inverse_;
};

std::pair<Clause, FreezeMap> freeze(const Clause& c);

}  // namespace arsat
