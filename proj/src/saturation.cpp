#include "arsat/saturation.hpp"

#include <algorithm>

#include "arsat/local_entailment.hpp"
#include "arsat/substitution.hpp"

namespace arsat {

namespace {

std::vector<Inference> inferences_of(const OrderingContext& ctx, const std::vector<Clause>& clauses,
                                     const WorkItem& item) {
  if (item.kind == WorkItem::Kind::Factor) return all_a_priori_factors(ctx, clauses[item.first]);
  const Clause& a = clauses[item.first];
  const Clause& b = clauses[item.second];
  std::vector<Inference> out = a_priori_resolvents(ctx, a, b);
  if (item.first != item.second) {
    auto reverse = a_priori_resolvents(ctx, b, a);
    std::move(reverse.begin(), reverse.end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace

bool factor_covered(const std::vector<Clause>& clauses, const Clause& factor) {
  return std::any_of(clauses.begin(), clauses.end(),
                     [&](const Clause& d) { return subsumes_injectively(d, factor); });
}

Saturator::Saturator(OrderingContext ctx, const std::vector<Clause>& input, Limits limits,
                     bool record_trace)
    : limits_(limits), record_trace_(record_trace) {
  ctx.precedence.extend_with(input);
  state_.ordering = std::move(ctx);
  for (const auto& c : input) {
    Clause normal = normalize_variables(c);
    bool known = std::any_of(state_.clauses.begin(), state_.clauses.end(),
                             [&](const Clause& d) { return is_variant(d, normal); });
    if (!known) state_.clauses.push_back(std::move(normal));
  }
  state_.rules = rules_of(state_.ordering, state_.clauses);
  for (std::size_t i = 0; i < state_.clauses.size(); ++i) enqueue_for(i);
}

void Saturator::enqueue_for(std::size_t index) {
  state_.queue.push_back({WorkItem::Kind::Factor, index, index});
  for (std::size_t k = 0; k <= index; ++k) {
    state_.queue.push_back({WorkItem::Kind::Pair, k, index});
  }
}

bool Saturator::limit_hit() const {
  return limits_.max_steps && state_.stats.inferences >= *limits_.max_steps;
}

bool Saturator::refill() {
  while (pending_.empty()) {
    if (state_.queue.empty()) return false;
    WorkItem item = state_.queue.front();
    state_.queue.pop_front();
    ++state_.stats.work_items;
    const auto& clauses = state_.clauses;
    bool tautology = clauses[item.first].is_tautology() || clauses[item.second].is_tautology();
    if (tautology) ++state_.stats.skipped_tautologies;
    for (auto& inf : inferences_of(state_.ordering, clauses, item)) {
      // Tautologies still owe the rules of their non-maximal instances.
      if (tautology && is_a_posteriori(state_.ordering, inf)) continue;
      pending_.emplace_back(std::move(inf), item);
    }
  }
  return true;
}

bool Saturator::step() {
  if (state_.status != SaturationStatus::Running) return false;
  if (limit_hit()) {
    state_.status = SaturationStatus::LimitReached;
    return false;
  }
  if (!refill()) {
    state_.status = SaturationStatus::Saturated;
    return false;
  }
  auto [inf, item] = std::move(pending_.front());
  pending_.pop_front();
  classify(inf, item);
  return state_.status == SaturationStatus::Running;
}

const SaturationState& Saturator::run() {
  while (step()) {
  }
  return state_;
}

void Saturator::classify(const Inference& inf, const WorkItem& item) {
  ++state_.stats.inferences;
  InferenceCase outcome;
  if (!is_a_posteriori(state_.ordering, inf)) {
    outcome = InferenceCase::NonMaximality;
    ++state_.stats.non_maximality;
    state_.rules.merge(rules_of(state_.ordering, inf.premise_instances));
  } else {
    const Clause& conclusion = inf.conclusion;
    bool redundant;
    bool subsumed;
    if (inf.kind == InferenceKind::Factoring) {
      // The premise proves every factor through a collapsed instance, so only a
      // clause with no collapse counts.
      subsumed = conclusion.is_tautology() || factor_covered(state_.clauses, conclusion);
      redundant = subsumed;
    } else {
      subsumed = conclusion.is_tautology() ||
                 std::any_of(state_.clauses.begin(), state_.clauses.end(),
                             [&](const Clause& d) { return subsumes(d, conclusion); });
      redundant = subsumed || clause_redundant(state_.clauses, state_.rules, conclusion);
    }
    if (redundant) {
      outcome = InferenceCase::Redundancy;
      ++state_.stats.redundancy;
      if (subsumed) ++state_.stats.subsumed;
    } else if (limits_.max_clauses && state_.clauses.size() >= *limits_.max_clauses) {
      state_.status = SaturationStatus::LimitReached;
      return;
    } else {
      outcome = InferenceCase::Discovery;
      ++state_.stats.discovery;
      discover(conclusion);
    }
  }
  if (record_trace_) {
    state_.trace.push_back({inf.kind, item.first, item.second, outcome, inf.conclusion,
                            state_.clauses.size(), state_.rules.size()});
  }
}

void Saturator::discover(const Clause& conclusion) {
  state_.clauses.push_back(normalize_variables(conclusion));
  state_.rules.merge(rules_of(state_.ordering, state_.clauses.back()));
  enqueue_for(state_.clauses.size() - 1);
}

SaturationState saturate(const OrderingContext& ctx, const std::vector<Clause>& input,
                         const Limits& limits, bool record_trace) {
  Saturator saturator(ctx, input, limits, record_trace);
  saturator.run();
  return saturator.release();
}

std::string describe(const Inference& inf) {
  std::string out = inf.kind == InferenceKind::Resolution ? "resolution "
                    : inf.antecedent_factor                  ? "antecedent factoring "
                                                             : "factoring ";
  for (std::size_t i = 0; i < inf.premises.size(); ++i) {
    if (i) out += " , ";
    out += "[" + inf.premises[i].to_string() + "]";
  }
  out += " on " + inf.resolved_atom.to_string() + " => [" + inf.conclusion.to_string() + "]";
  return out;
}

VerificationReport verify_saturated(const OrderingContext& ctx, const std::vector<Clause>& clauses,
                                    const RewriteSystem& rules) {
  VerificationReport report;
  RewriteSystem own = rules_of(ctx, clauses);
  for (const auto& rule : own) {
    if (!rules.contains(rule)) {
      report.violations.push_back({2, "missing rule " + rule.to_string()});
    }
  }

  auto check = [&](const Inference& inf) {
    ++report.inferences_checked;
    if (!inference_redundant(clauses, rules, inf)) {
      report.violations.push_back({1, "not redundant: " + describe(inf)});
    }
    if (inf.kind == InferenceKind::Resolution && !is_a_posteriori(ctx, inf)) {
      RewriteSystem needed = rules_of(ctx, inf.premise_instances);
      for (const auto& rule : needed) {
        if (!rules.contains(rule)) {
          report.violations.push_back(
              {3, "missing rule " + rule.to_string() + " from " + describe(inf)});
        }
      }
    }
  };

  for (std::size_t i = 0; i < clauses.size(); ++i) {
    for (const auto& inf : all_a_priori_factors(ctx, clauses[i])) {
      check(inf);
      if (!clauses[i].is_tautology() && is_a_posteriori(ctx, inf) && !inf.conclusion.is_tautology() &&
          !factor_covered(clauses, inf.conclusion)) {
        report.violations.push_back({4, "factor not in S: " + describe(inf)});
      }
    }
    for (std::size_t j = 0; j < clauses.size(); ++j) {
      for (const auto& inf : a_priori_resolvents(ctx, clauses[i], clauses[j])) check(inf);
    }
  }
  return report;
}

const char* to_string(InferenceCase c) {
  switch (c) {
    case InferenceCase::NonMaximality:
      return "non-maximality";
    case InferenceCase::Redundancy:
      return "redundancy";
    case InferenceCase::Discovery:
      return "discovery";
  }
  return "?";
}

const char* to_string(SaturationStatus s) {
  switch (s) {
    case SaturationStatus::Running:
      return "running";
    case SaturationStatus::Saturated:
      return "saturated";
    case SaturationStatus::LimitReached:
      return "limit";
  }
  return "?";
}

}  // namespace arsat
