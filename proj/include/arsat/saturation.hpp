#pragma once

#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "arsat/clause.hpp"
#include "arsat/ordering.hpp"
#include "arsat/resolution.hpp"
#include "arsat/rewriting.hpp"

namespace arsat {

enum class SaturationStatus { Running, Saturated, LimitReached };

/// How the loop classified one a priori inference.
enum class InferenceCase { NonMaximality, Redundancy, Discovery };

struct Limits {
  std::optional<std::size_t> max_clauses;
  std::optional<std::size_t> max_steps;
};

/// Pending premise combination. Pair items resolve in both directions.
struct WorkItem {
  enum class Kind { Pair, Factor };
  Kind kind = Kind::Pair;
  std::size_t first = 0;
  std::size_t second = 0;
};

struct SaturationStats {
  std::size_t work_items = 0;
  std::size_t inferences = 0;
  std::size_t non_maximality = 0;
  std::size_t redundancy = 0;
  /// Redundancy decided by the subsumption fast path (counted in `redundancy` too).
  std::size_t subsumed = 0;
  std::size_t discovery = 0;
  std::size_t skipped_tautologies = 0;
};

struct TraceEntry {
  InferenceKind kind = InferenceKind::Resolution;
  std::size_t first = 0;
  std::size_t second = 0;
  InferenceCase outcome = InferenceCase::Discovery;
  Clause conclusion;
  std::size_t clauses_after = 0;
  std::size_t rules_after = 0;
};

struct SaturationState {
  OrderingContext ordering;
  std::vector<Clause> clauses;
  RewriteSystem rules;
  std::deque<WorkItem> queue;
  SaturationStats stats;
  SaturationStatus status = SaturationStatus::Running;
  std::vector<TraceEntry> trace;
};

/// Runs the transformation steps one inference at a time.
class Saturator {
 public:
  /// Input clauses are normalized and deduplicated modulo renaming. The
  /// precedence is extended with any undeclared function symbols.
  Saturator(OrderingContext ctx, const std::vector<Clause>& input, Limits limits = {},
            bool record_trace = false);

  /// Classifies the next inference. Returns false once the status is final.
  bool step();
  const SaturationState& run();

  const SaturationState& state() const { return state_; }
  SaturationState release() { return std::move(state_); }

 private:
  bool refill();
  void classify(const Inference& inf, const WorkItem& item);
  void discover(const Clause& conclusion);
  void enqueue_for(std::size_t index);
  bool limit_hit() const;

  SaturationState state_;
  Limits limits_;
  bool record_trace_;
  std::deque<std::pair<Inference, WorkItem>> pending_;
};

SaturationState saturate(const OrderingContext& ctx, const std::vector<Clause>& input,
                         const Limits& limits = {}, bool record_trace = false);

struct Violation {
  /// 1: a non-redundant inference; 2: a rule of R(S) missing;
  /// 3: a rule from a non-maximal inference instance missing;
  /// 4: an a posteriori factor with no clause of S covering it injectively.
  int condition = 0;
  std::string detail;
};

struct VerificationReport {
  std::vector<Violation> violations;
  std::size_t inferences_checked = 0;
  bool ok() const { return violations.empty(); }
};

/// Re-enumerates every a priori inference among `clauses` and checks the
/// saturation conditions against `rules`.
VerificationReport verify_saturated(const OrderingContext& ctx, const std::vector<Clause>& clauses,
                                    const RewriteSystem& rules);

/// Some clause of S subsumes the factor without merging atoms.
bool factor_covered(const std::vector<Clause>& clauses, const Clause& factor);

std::string describe(const Inference& inf);
const char* to_string(InferenceCase c);
const char* to_string(SaturationStatus s);

}  // namespace arsat
