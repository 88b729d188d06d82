#include "arsat/rewriting.hpp"

#include <cassert>
#include <deque>
#include <map>
#include <stdexcept>

#include "arsat/substitution.hpp"

namespace arsat {

namespace {

void number_variables(const Term& t, std::map<std::string, Term>& renaming) {
  if (t.is_variable()) {
    if (!renaming.count(t.name())) {
      renaming.emplace(t.name(), Term::variable("X" + std::to_string(renaming.size())));
    }
    return;
  }
  for (const auto& a : t.args()) number_variables(a, renaming);
}

}  // namespace

RewriteRule::RewriteRule(Atom l, Atom r) {
  std::map<std::string, Term> renaming;
  for (const auto& t : l.args) number_variables(t, renaming);
  for (const auto& t : r.args) number_variables(t, renaming);
  Substitution sigma(std::move(renaming));
  lhs = apply(sigma, l);
  rhs = apply(sigma, r);
}

std::string RewriteRule::to_string() const { return lhs.to_string() + " -> " + rhs.to_string(); }

bool RewriteSystem::insert(const Atom& lhs, const Atom& rhs) {
  if (lhs == rhs) return false;
  return rules_.emplace(lhs, rhs).second;
}

std::size_t RewriteSystem::merge(const RewriteSystem& other) {
  std::size_t added = 0;
  for (const auto& r : other.rules_) added += rules_.insert(r).second ? 1 : 0;
  return added;
}

bool RewriteSystem::contains(const RewriteRule& rule) const {
  return rules_.count(RewriteRule(rule.lhs, rule.rhs)) != 0;
}

bool RewriteSystem::includes(const RewriteSystem& other) const {
  for (const auto& r : other.rules_) {
    if (!rules_.count(r)) return false;
  }
  return true;
}

RewriteSystem rules_of(const OrderingContext& ctx, const Clause& clause) {
  RewriteSystem out;
  std::vector<Atom> atoms = clause.atoms();
  for (const auto& l : atoms) {
    for (const auto& r : atoms) {
      if (atom_greater(ctx, l, r)) out.insert(l, r);
    }
  }
  return out;
}

RewriteSystem rules_of(const OrderingContext& ctx, const std::vector<Clause>& clauses) {
  RewriteSystem out;
  for (const auto& c : clauses) out.merge(rules_of(ctx, c));
  return out;
}

AtomSet rewrite_one(const RewriteSystem& rules, const Atom& atom) {
  AtomSet out;
  for (const auto& rule : rules) {
    if (auto sigma = match_onto(rule.lhs, atom)) out.insert(apply(*sigma, rule.rhs));
  }
  return out;
}

AtomSet reach(const RewriteSystem& rules, const Atom& atom) {
  if (!atom.is_ground()) {
    throw std::invalid_argument("reach expects a ground atom, got " + atom.to_string());
  }
  AtomSet visited{atom};
  std::deque<Atom> frontier{atom};
  while (!frontier.empty()) {
    Atom current = std::move(frontier.front());
    frontier.pop_front();
    for (auto& next : rewrite_one(rules, current)) {
      assert(next.is_ground());
      if (visited.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return visited;
}

AtomSet reach_clause(const RewriteSystem& rules, const Clause& clause) {
  if (!clause.is_ground()) {
    throw std::invalid_argument("reach_clause expects a ground clause, got " + clause.to_string());
  }
  AtomSet out;
  for (const auto& a : clause.atoms()) {
    if (out.count(a)) continue;
    out.merge(reach(rules, a));
  }
  return out;
}

bool r_less(const RewriteSystem& rules, const Atom& a, const Atom& b) {
  if (!a.is_ground() || !b.is_ground()) {
    throw std::invalid_argument("r_less expects ground atoms");
  }
  if (a == b) return false;
  return reach(rules, b).count(a) != 0;
}

}  // namespace arsat
