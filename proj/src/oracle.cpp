#include "arsat/oracle.hpp"

#include <set>
#include <stdexcept>

#include "arsat/ground_sat.hpp"
#include "arsat/substitution.hpp"

namespace arsat {

namespace {

void collect(const Term& t, Signature& sig) {
  if (!t.is_function()) return;
  sig.emplace(t.name(), t.arity());
  for (const auto& a : t.args()) collect(a, sig);
}

void collect(const Clause& c, Signature& sig) {
  for (const auto* side : {&c.antecedent(), &c.succedent()}) {
    for (const auto& atom : *side) {
      for (const auto& t : atom.args) collect(t, sig);
    }
  }
}

// Every argument tuple over `pool` of length n, applied to `name`.
void extend_level(const std::string& name, std::size_t arity, const std::vector<Term>& pool,
                  std::set<Term>& out) {
  std::vector<std::size_t> odometer(arity, 0);
  for (;;) {
    std::vector<Term> args;
    args.reserve(arity);
    for (auto i : odometer) args.push_back(pool[i]);
    out.insert(Term::function(name, std::move(args)));
    std::size_t k = 0;
    while (k < arity && ++odometer[k] == pool.size()) odometer[k++] = 0;
    if (k == arity) break;
  }
}

}  // namespace

Signature signature_of(const std::vector<Clause>& clauses) {
  Signature sig;
  for (const auto& c : clauses) collect(c, sig);
  return sig;
}

std::vector<Term> herbrand_terms(const Signature& signature, const HerbrandBound& bound) {
  std::set<Term> terms;
  for (const auto& [name, arity] : signature) {
    if (arity == 0) terms.insert(Term::function(name));
  }
  for (const auto& c : bound.extra_constants) terms.insert(c);
  if (terms.empty()) {
    std::size_t n = 0;
    while (signature.count("c" + std::to_string(n))) ++n;
    terms.insert(Term::function("c" + std::to_string(n)));
  }
  for (std::size_t d = 0; d < bound.depth; ++d) {
    std::vector<Term> pool(terms.begin(), terms.end());
    std::set<Term> next = terms;
    for (const auto& [name, arity] : signature) {
      if (arity > 0) extend_level(name, arity, pool, next);
    }
    if (next.size() == terms.size()) break;
    terms = std::move(next);
  }
  return {terms.begin(), terms.end()};
}

OracleResult oracle_entails(const std::vector<Clause>& clauses, const Clause& query,
                            const HerbrandBound& bound, std::size_t budget) {
  if (!query.is_ground()) {
    throw std::invalid_argument("oracle query must be ground: " + query.to_string());
  }
  std::vector<Clause> all = clauses;
  all.push_back(query);
  Signature sig = signature_of(all);
  std::vector<Term> universe = herbrand_terms(sig, bound);

  OracleResult result;
  result.exhaustive = true;
  for (const auto& [name, arity] : sig) {
    if (arity > 0) result.exhaustive = false;
  }

  std::size_t total = 0;
  for (const auto& c : clauses) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < vars(c).size(); ++i) {
      if (count > budget / std::max<std::size_t>(universe.size(), 1)) {
        result.verdict = OracleVerdict::Budget;
        return result;
      }
      count *= universe.size();
    }
    total += count;
    if (total > budget) {
      result.verdict = OracleVerdict::Budget;
      return result;
    }
  }

  std::vector<Clause> ground;
  ground.reserve(total + query.literal_count());
  for (const auto& c : clauses) {
    VarSet vs = vars(c);
    std::vector<std::string> names(vs.begin(), vs.end());
    std::vector<std::size_t> odometer(names.size(), 0);
    for (;;) {
      Substitution sigma;
      for (std::size_t i = 0; i < names.size(); ++i) sigma.bind(names[i], universe[odometer[i]]);
      ground.push_back(apply(sigma, c));
      std::size_t k = 0;
      while (k < names.size() && ++odometer[k] == universe.size()) odometer[k++] = 0;
      if (k == names.size()) break;
    }
  }
  result.ground_clauses = ground.size();
  for (auto& unit : negate(query)) ground.push_back(std::move(unit));
  result.verdict = ground_sat(ground).verdict == SatVerdict::Unsatisfiable
                       ? OracleVerdict::Entailed
                       : OracleVerdict::Unknown;
  return result;
}

const char* to_string(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::Entailed:
      return "entailed";
    case OracleVerdict::Unknown:
      return "unknown";
    case OracleVerdict::Budget:
      return "unknown: budget";
  }
  return "?";
}

}  // namespace arsat
