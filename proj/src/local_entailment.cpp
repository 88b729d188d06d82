#include "arsat/local_entailment.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "arsat/ground_sat.hpp"
#include "arsat/substitution.hpp"

namespace arsat {

namespace {

using AtomIndex = std::map<std::pair<std::string, std::size_t>, std::vector<const Atom*>>;

AtomIndex index_universe(const AtomSet& universe) {
  AtomIndex index;
  for (const auto& a : universe) index[{a.predicate, a.arity()}].push_back(&a);
  return index;
}

void join(const std::vector<const Atom*>& pattern, std::size_t k, const Substitution::Map& acc,
          const AtomIndex& index, const AtomSet& universe, const Clause& clause,
          std::set<Clause>& out) {
  if (k == pattern.size()) {
    out.insert(apply(Substitution(acc), clause));
    return;
  }
  const Atom& atom = *pattern[k];
  if (atom.is_ground()) {
    if (universe.count(atom)) join(pattern, k + 1, acc, index, universe, clause, out);
    return;
  }
  auto it = index.find({atom.predicate, atom.arity()});
  if (it == index.end()) return;
  for (const Atom* candidate : it->second) {
    Substitution::Map extended = acc;
    if (match_into(atom, *candidate, extended)) {
      join(pattern, k + 1, extended, index, universe, clause, out);
    }
  }
}

}  // namespace

std::vector<Clause> enumerate_local_instances(const std::vector<Clause>& clauses,
                                              const AtomSet& universe) {
  AtomIndex index = index_universe(universe);
  std::set<Clause> out;
  for (const auto& clause : clauses) {
    std::vector<Atom> atoms = clause.atoms();
    std::vector<std::pair<std::size_t, const Atom*>> keyed;
    for (const auto& a : atoms) keyed.emplace_back(vars(a).size(), &a);
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<const Atom*> pattern;
    for (const auto& [n, a] : keyed) {
      (void)n;
      pattern.push_back(a);
    }
    join(pattern, 0, {}, index, universe, clause, out);
  }
  return {out.begin(), out.end()};
}

std::optional<LocalCertificate> decide_local(const std::vector<Clause>& clauses,
                                             const AtomSet& universe, const Clause& goal) {
  if (!goal.is_ground()) {
    throw std::invalid_argument("local entailment needs a ground goal, got " + goal.to_string());
  }
  for (const auto& a : goal.atoms()) {
    if (!universe.count(a)) {
      throw std::invalid_argument("goal atom " + a.to_string() + " is outside the universe");
    }
  }
  LocalCertificate cert;
  cert.instances = enumerate_local_instances(clauses, universe);
  cert.negated_goal = negate(goal);
  std::vector<Clause> all = cert.instances;
  all.insert(all.end(), cert.negated_goal.begin(), cert.negated_goal.end());
  if (ground_sat(all).verdict != SatVerdict::Unsatisfiable) return std::nullopt;
  cert.atom_universe = universe;
  return cert;
}

bool LocalCertificate::validate() const {
  std::vector<Clause> all = instances;
  all.insert(all.end(), negated_goal.begin(), negated_goal.end());
  for (const auto& c : all) {
    if (!c.is_ground()) return false;
    for (const auto& a : c.atoms()) {
      if (!atom_universe.count(a)) return false;
    }
  }
  return ground_sat(all).verdict == SatVerdict::Unsatisfiable;
}

bool LocalCertificate::instances_from(const std::vector<Clause>& clauses) const {
  return std::all_of(instances.begin(), instances.end(), [&](const Clause& inst) {
    auto atoms = inst.atoms();
    AtomSet own(atoms.begin(), atoms.end());
    return std::any_of(clauses.begin(), clauses.end(), [&](const Clause& c) {
      auto found = enumerate_local_instances({c}, own);
      return std::find(found.begin(), found.end(), inst) != found.end();
    });
  });
}

bool clause_redundant(const std::vector<Clause>& clauses, const RewriteSystem& rules,
                      const Clause& c) {
  auto [frozen, map] = freeze(c);
  (void)map;
  return decide_local(clauses, reach_clause(rules, frozen), frozen).has_value();
}

bool conclusion_redundant(const std::vector<Clause>& clauses, const RewriteSystem& rules,
                          const Inference& inf) {
  return clause_redundant(clauses, rules, inf.conclusion);
}

bool premise_redundant(const std::vector<Clause>& clauses, const RewriteSystem& rules,
                       const Clause& premise) {
  std::vector<Clause> others;
  for (const auto& c : clauses) {
    if (!is_variant(c, premise)) others.push_back(c);
  }
  return clause_redundant(others, rules, premise);
}

bool inference_redundant(const std::vector<Clause>& clauses, const RewriteSystem& rules,
                         const Inference& inf) {
  for (const auto& premise : inf.premises) {
    if (premise_redundant(clauses, rules, premise)) return true;
  }
  return conclusion_redundant(clauses, rules, inf);
}

namespace {

bool subsume_side(const std::vector<Atom>& from, std::size_t k, const std::vector<Atom>& into,
                  Substitution::Map& acc, const std::function<bool(Substitution::Map&)>& rest) {
  if (k == from.size()) return rest(acc);
  for (const auto& target : into) {
    Substitution::Map extended = acc;
    if (match_into(from[k], target, extended) && subsume_side(from, k + 1, into, extended, rest)) {
      return true;
    }
  }
  return false;
}

}  // namespace

bool subsumes(const Clause& d, const Clause& c) {
  Substitution::Map acc;
  return subsume_side(d.antecedent(), 0, c.antecedent(), acc, [&](Substitution::Map& m) {
    return subsume_side(d.succedent(), 0, c.succedent(), m,
                        [](Substitution::Map&) { return true; });
  });
}

bool subsumes_injectively(const Clause& d, const Clause& c) {
  const std::size_t n = d.antecedent().size() + d.succedent().size();
  Substitution::Map acc;
  return subsume_side(d.antecedent(), 0, c.antecedent(), acc, [&](Substitution::Map& m) {
    return subsume_side(d.succedent(), 0, c.succedent(), m, [&](Substitution::Map& full) {
      Clause image = apply(Substitution(full), d);
      return image.antecedent().size() + image.succedent().size() == n;
    });
  });
}

}  // namespace arsat
