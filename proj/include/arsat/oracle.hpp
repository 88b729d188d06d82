#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "arsat/clause.hpp"

namespace arsat {

/// Function symbols with their arities; constants have arity 0.
using Signature = std::map<std::string, std::size_t>;

Signature signature_of(const std::vector<Clause>& clauses);

struct HerbrandBound {
  std::size_t depth = 0;
  std::vector<Term> extra_constants;
};

/// Ground terms of height ≤ depth. If the signature has no constant, "c0"
/// (or the first free "cN") is injected.
std::vector<Term> herbrand_terms(const Signature& signature, const HerbrandBound& bound);

enum class OracleVerdict {
  Entailed,
  /// The bounded instantiation is satisfiable.
  Unknown,
  /// Instantiation would exceed the ground clause budget.
  Budget,
};

struct OracleResult {
  OracleVerdict verdict = OracleVerdict::Unknown;
  std::size_t ground_clauses = 0;
  /// The Herbrand universe is finite and fully enumerated, so Unknown means
  /// the query is not entailed.
  bool exhaustive = false;
};

inline constexpr std::size_t kDefaultOracleBudget = 1'000'000;

/// Brute-force check of S ⊨ C: all instances of S over the bounded Herbrand
/// universe plus ¬C, tested for unsatisfiability.
OracleResult oracle_entails(const std::vector<Clause>& clauses, const Clause& query,
                            const HerbrandBound& bound,
                            std::size_t budget = kDefaultOracleBudget);

const char* to_string(OracleVerdict v);

}  // namespace arsat
