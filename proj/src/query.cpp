#include "arsat/query.hpp"

namespace arsat {

QueryResult entails(const SaturationState& state, const Clause& query, QueryOptions options) {
  auto start = std::chrono::steady_clock::now();
  if (!query.is_ground()) {
    throw std::invalid_argument("query must be ground: " + query.to_string());
  }
  bool saturated = state.status == SaturationStatus::Saturated;
  if (!saturated && !options.allow_unsaturated) {
    throw QueryRefused("state is not saturated; entailment cannot be decided");
  }
  QueryResult result;
  result.universe = reach_clause(state.rules, query);
  result.certificate = decide_local(state.clauses, result.universe, query);
  if (result.certificate) {
    result.verdict = QueryVerdict::Entailed;
  } else {
    result.verdict = saturated ? QueryVerdict::NotEntailed : QueryVerdict::LocallyNotProvable;
  }
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

const char* to_string(QueryVerdict v) {
  switch (v) {
    case QueryVerdict::Entailed:
      return "entailed";
    case QueryVerdict::NotEntailed:
      return "not-entailed";
    case QueryVerdict::LocallyNotProvable:
      return "locally-not-provable";
  }
  return "?";
}

}  // namespace arsat
