#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>

#include "arsat/clause.hpp"
#include "arsat/local_entailment.hpp"
#include "arsat/saturation.hpp"

namespace arsat {

enum class QueryVerdict {
  Entailed,
  NotEntailed,
  /// Answer from a state that did not reach saturation: no local proof
  /// exists, which says nothing about entailment.
  LocallyNotProvable,
};

struct QueryOptions {
  /// Run the local check on a limit-reached state instead of refusing.
  bool allow_unsaturated = false;
};

struct QueryResult {
  QueryVerdict verdict = QueryVerdict::NotEntailed;
  std::optional<LocalCertificate> certificate;
  AtomSet universe;
  std::chrono::nanoseconds elapsed{0};

  std::size_t universe_size() const { return universe.size(); }
};

/// Thrown for queries against a state without a saturation guarantee.
class QueryRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decides S ⊨ C for a ground clause C as S ⊢_{C↓R} C. Throws
/// std::invalid_argument for a non-ground query and QueryRefused when the
/// state is not saturated (unless allowed by `options`).
QueryResult entails(const SaturationState& state, const Clause& query, QueryOptions options = {});

const char* to_string(QueryVerdict v);

}  // namespace arsat
