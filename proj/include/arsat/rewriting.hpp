#pragma once

#include <set>
#include <vector>

#include "arsat/clause.hpp"
#include "arsat/ordering.hpp"

namespace arsat {

/// Atom rule lhs → rhs with lhs ≻_a rhs. Variables are renamed to X0, X1, ...
/// in order of first occurrence in lhs, which makes variant rules identical.
struct RewriteRule {
  Atom lhs;
  Atom rhs;

  RewriteRule() = default;
  RewriteRule(Atom l, Atom r);

  auto operator<=>(const RewriteRule&) const = default;
  bool operator==(const RewriteRule&) const = default;
  std::string to_string() const;
};

class RewriteSystem {
 public:
  RewriteSystem() = default;

  /// Returns true if the rule was new. Identity rules are ignored.
  bool insert(const Atom& lhs, const Atom& rhs);
  bool insert(const RewriteRule& rule) { return insert(rule.lhs, rule.rhs); }
  /// Number of rules added.
  std::size_t merge(const RewriteSystem& other);

  bool contains(const RewriteRule& rule) const;
  bool includes(const RewriteSystem& other) const;

  bool empty() const { return rules_.empty(); }
  std::size_t size() const { return rules_.size(); }
  auto begin() const { return rules_.begin(); }
  auto end() const { return rules_.end(); }

  bool operator==(const RewriteSystem&) const = default;

 private:
  std::set<RewriteRule> rules_;
};

/// Rules L → R for distinct atoms L, R of one clause with L ≻_a R.
RewriteSystem rules_of(const OrderingContext& ctx, const std::vector<Clause>& clauses);
RewriteSystem rules_of(const OrderingContext& ctx, const Clause& clause);

/// One-step successors of `atom`.
AtomSet rewrite_one(const RewriteSystem& rules, const Atom& atom);

/// All atoms reachable from a ground atom, the atom itself included.
/// Throws std::invalid_argument on a non-ground atom.
AtomSet reach(const RewriteSystem& rules, const Atom& atom);

/// Union of reach over the atoms of a ground clause.
AtomSet reach_clause(const RewriteSystem& rules, const Clause& clause);

/// a ≺_R b: a is reachable from b and differs from it.
bool r_less(const RewriteSystem& rules, const Atom& a, const Atom& b);

}  // namespace arsat
