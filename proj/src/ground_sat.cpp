#include "arsat/ground_sat.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace arsat {

DpllSolver::DpllSolver(std::uint32_t num_vars)
    : num_vars_(num_vars), watches_(2 * std::size_t{num_vars}), value_(num_vars, -1) {}

std::int8_t DpllSolver::lit_value(Literal lit) const {
  std::int8_t v = value_[lit >> 1];
  if (v < 0) return v;
  return (lit & 1) ? static_cast<std::int8_t>(1 - v) : v;
}

void DpllSolver::add_clause(std::vector<Literal> lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (std::size_t i = 0; i + 1 < lits.size(); ++i) {
    if ((lits[i] ^ 1) == lits[i + 1]) return;  // tautology
  }
  if (lits.empty()) {
    trivially_unsat_ = true;
    return;
  }
  if (lits.size() == 1) {
    units_.push_back(lits[0]);
    return;
  }
  std::size_t index = clauses_.size();
  watches_[lits[0]].push_back(index);
  watches_[lits[1]].push_back(index);
  clauses_.push_back(std::move(lits));
}

bool DpllSolver::enqueue(Literal lit) {
  std::int8_t v = lit_value(lit);
  if (v == 1) return true;
  if (v == 0) return false;
  value_[lit >> 1] = (lit & 1) ? 0 : 1;
  trail_.push_back(lit);
  return true;
}

bool DpllSolver::propagate() {
  while (propagated_ < trail_.size()) {
    Literal falsified = trail_[propagated_++] ^ 1;
    auto& watching = watches_[falsified];
    std::size_t keep = 0;
    bool conflict = false;
    for (std::size_t w = 0; w < watching.size(); ++w) {
      std::size_t ci = watching[w];
      if (conflict) {
        watching[keep++] = ci;
        continue;
      }
      auto& lits = clauses_[ci];
      if (lits[0] == falsified) std::swap(lits[0], lits[1]);
      if (lit_value(lits[0]) == 1) {
        watching[keep++] = ci;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < lits.size(); ++k) {
        if (lit_value(lits[k]) != 0) {
          std::swap(lits[1], lits[k]);
          watches_[lits[1]].push_back(ci);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      watching[keep++] = ci;
      if (!enqueue(lits[0])) conflict = true;
    }
    watching.resize(keep);
    if (conflict) return false;
  }
  return true;
}

void DpllSolver::undo_to(std::size_t trail_size) {
  while (trail_.size() > trail_size) {
    value_[trail_.back() >> 1] = -1;
    trail_.pop_back();
  }
  propagated_ = trail_size;
}

SatVerdict DpllSolver::solve() {
  std::fill(value_.begin(), value_.end(), -1);
  trail_.clear();
  propagated_ = 0;
  if (trivially_unsat_) return SatVerdict::Unsatisfiable;
  for (Literal u : units_) {
    if (!enqueue(u)) return SatVerdict::Unsatisfiable;
  }

  struct Decision {
    std::size_t trail_size;
    std::uint32_t var;
    bool flipped;
  };
  std::vector<Decision> decisions;
  std::uint32_t next_var = 0;

  for (;;) {
    if (!propagate()) {
      for (;;) {
        if (decisions.empty()) return SatVerdict::Unsatisfiable;
        Decision& d = decisions.back();
        undo_to(d.trail_size);
        if (!d.flipped) {
          d.flipped = true;
          enqueue(positive(d.var));
          next_var = d.var + 1;
          break;
        }
        next_var = d.var;
        decisions.pop_back();
      }
      continue;
    }
    while (next_var < num_vars_ && value_[next_var] >= 0) ++next_var;
    if (next_var == num_vars_) return SatVerdict::Satisfiable;
    ++decisions_;
    decisions.push_back({trail_.size(), next_var, false});
    enqueue(negative(next_var));
  }
}

GroundSatResult ground_sat(const std::vector<Clause>& clauses) {
  std::unordered_map<Atom, std::uint32_t> index;
  std::vector<const Atom*> atoms;
  auto intern = [&](const Atom& a) {
    auto [it, inserted] = index.try_emplace(a, static_cast<std::uint32_t>(atoms.size()));
    if (inserted) atoms.push_back(&it->first);
    return it->second;
  };
  std::vector<std::vector<Literal>> encoded;
  encoded.reserve(clauses.size());
  for (const auto& c : clauses) {
    if (!c.is_ground()) throw std::invalid_argument("ground_sat got " + c.to_string());
    std::vector<Literal> lits;
    for (const auto& a : c.antecedent()) lits.push_back(negative(intern(a)));
    for (const auto& b : c.succedent()) lits.push_back(positive(intern(b)));
    encoded.push_back(std::move(lits));
  }
  DpllSolver solver(static_cast<std::uint32_t>(atoms.size()));
  for (auto& lits : encoded) solver.add_clause(std::move(lits));

  GroundSatResult result;
  result.verdict = solver.solve();
  if (result.verdict == SatVerdict::Satisfiable) {
    for (std::uint32_t v = 0; v < atoms.size(); ++v) {
      if (solver.model_value(v)) result.true_atoms.push_back(*atoms[v]);
    }
    std::sort(result.true_atoms.begin(), result.true_atoms.end());
  }
  return result;
}

}  // namespace arsat
