#include "arsat/substitution.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace arsat {

Substitution::Substitution(Map bindings) {
  for (auto& [v, t] : bindings) bind(v, std::move(t));
}

void Substitution::bind(const std::string& var, Term t) {
  if (t.is_variable() && t.name() == var) {
    bindings_.erase(var);
    return;
  }
  bindings_.insert_or_assign(var, std::move(t));
}

const Term* Substitution::lookup(const std::string& var) const {
  auto it = bindings_.find(var);
  return it == bindings_.end() ? nullptr : &it->second;
}

bool Substitution::is_idempotent() const {
  for (const auto& [v, t] : bindings_) {
    (void)v;
    VarSet range_vars = vars(t);
    for (const auto& rv : range_vars) {
      if (bindings_.count(rv)) return false;
    }
  }
  return true;
}

std::string Substitution::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, t] : bindings_) {
    if (!first) out += ", ";
    first = false;
    out += v + " -> " + t.to_string();
  }
  return out + "}";
}

Term apply(const Substitution& s, const Term& t) {
  if (s.empty()) return t;
  if (t.is_variable()) {
    const Term* bound = s.lookup(t.name());
    return bound ? *bound : t;
  }
  if (t.arity() == 0) return t;
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const auto& a : t.args()) args.push_back(apply(s, a));
  return Term::function(t.name(), std::move(args));
}

Atom apply(const Substitution& s, const Atom& a) {
  Atom out{a.predicate, {}};
  out.args.reserve(a.arity());
  for (const auto& t : a.args) out.args.push_back(apply(s, t));
  return out;
}

std::vector<Atom> apply_all(const Substitution& s, const std::vector<Atom>& atoms) {
  std::vector<Atom> out;
  out.reserve(atoms.size());
  for (const auto& a : atoms) out.push_back(apply(s, a));
  return out;
}

Clause apply(const Substitution& s, const Clause& c) {
  return Clause(apply_all(s, c.antecedent()), apply_all(s, c.succedent()));
}

Substitution compose(const Substitution& s1, const Substitution& s2) {
  Substitution out;
  for (const auto& [v, t] : s1) out.bind(v, apply(s2, t));
  for (const auto& [v, t] : s2) {
    if (!s1.lookup(v)) out.bind(v, t);
  }
  return out;
}

namespace {

// Keeps `s` idempotent: the new binding is pushed into every existing range.
void bind_eliminating(Substitution& s, const std::string& var, const Term& t) {
  Substitution single;
  single.bind(var, t);
  Substitution::Map updated;
  for (const auto& [v, r] : s) updated.emplace(v, apply(single, r));
  updated.insert_or_assign(var, t);
  s = Substitution(std::move(updated));
}

bool unify_into(const Term& a, const Term& b, Substitution& s) {
  std::vector<std::pair<Term, Term>> work{{a, b}};
  while (!work.empty()) {
    auto [l, r] = std::move(work.back());
    work.pop_back();
    l = apply(s, l);
    r = apply(s, r);
    if (l == r) continue;
    if (l.is_variable() && r.is_variable()) {
      if (l.name() < r.name()) {
        bind_eliminating(s, l.name(), r);
      } else {
        bind_eliminating(s, r.name(), l);
      }
      continue;
    }
    if (r.is_variable()) std::swap(l, r);
    if (l.is_variable()) {
      if (r.contains_variable(l.name())) return false;
      bind_eliminating(s, l.name(), r);
      continue;
    }
    if (l.kind() != r.kind() || l.name() != r.name() || l.arity() != r.arity()) return false;
    // Reverse push keeps left-to-right argument processing.
    for (std::size_t i = l.arity(); i-- > 0;) work.emplace_back(l.args()[i], r.args()[i]);
  }
  return true;
}

}  // namespace

std::optional<Substitution> mgu(const Term& a, const Term& b) {
  Substitution s;
  if (!unify_into(a, b, s)) return std::nullopt;
  return s;
}

std::optional<Substitution> mgu(const Atom& a, const Atom& b) {
  if (a.predicate != b.predicate || a.arity() != b.arity()) return std::nullopt;
  Substitution s;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!unify_into(a.args[i], b.args[i], s)) return std::nullopt;
  }
  return s;
}

bool match_into(const Term& pattern, const Term& target, Substitution::Map& acc) {
  if (pattern.is_variable()) {
    auto [it, inserted] = acc.try_emplace(pattern.name(), target);
    return inserted || it->second == target;
  }
  if (pattern.kind() != target.kind() || pattern.name() != target.name() ||
      pattern.arity() != target.arity()) {
    return false;
  }
  for (std::size_t i = 0; i < pattern.arity(); ++i) {
    if (!match_into(pattern.args()[i], target.args()[i], acc)) return false;
  }
  return true;
}

bool match_into(const Atom& pattern, const Atom& target, Substitution::Map& acc) {
  if (pattern.predicate != target.predicate || pattern.arity() != target.arity()) return false;
  for (std::size_t i = 0; i < pattern.arity(); ++i) {
    if (!match_into(pattern.args[i], target.args[i], acc)) return false;
  }
  return true;
}

std::optional<Substitution> match_onto(const Term& pattern, const Term& target) {
  Substitution::Map m;
  if (!match_into(pattern, target, m)) return std::nullopt;
  return Substitution(std::move(m));
}

std::optional<Substitution> match_onto(const Atom& pattern, const Atom& target) {
  Substitution::Map m;
  if (!match_into(pattern, target, m)) return std::nullopt;
  return Substitution(std::move(m));
}

Clause rename_apart(const Clause& c, const VarSet& forbidden) {
  VarSet own = vars(c);
  Substitution renaming;
  std::size_t counter = 0;
  for (const auto& v : own) {
    std::string fresh;
    do {
      fresh = "V" + std::to_string(counter++);
    } while (forbidden.count(fresh) || own.count(fresh));
    renaming.bind(v, Term::variable(fresh));
  }
  return apply(renaming, c);
}

namespace {

void first_occurrence(const Term& t, std::vector<std::string>& order, VarSet& seen) {
  if (t.is_variable()) {
    if (seen.insert(t.name()).second) order.push_back(t.name());
    return;
  }
  for (const auto& a : t.args()) first_occurrence(a, order, seen);
}

Clause rename_by_occurrence(const Clause& c) {
  std::vector<std::string> order;
  VarSet seen;
  for (const auto& side : {&c.antecedent(), &c.succedent()}) {
    for (const auto& atom : *side) {
      for (const auto& t : atom.args) first_occurrence(t, order, seen);
    }
  }
  Substitution renaming;
  for (std::size_t i = 0; i < order.size(); ++i) {
    renaming.bind(order[i], Term::variable("X" + std::to_string(i)));
  }
  return apply(renaming, c);
}

}  // namespace

Clause normalize_variables(const Clause& c) {
  Clause current = rename_by_occurrence(c);
  // Renaming can reorder literals; a few rounds reach a fixed point in practice.
  for (int round = 0; round < 4; ++round) {
    Clause next = rename_by_occurrence(current);
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

namespace {

// Backtracking search for a bijective variable renaming mapping `from` onto `to`.
class VariantSearch {
 public:
  VariantSearch(const std::vector<Atom>& from_ante, const std::vector<Atom>& from_succ,
                const std::vector<Atom>& to_ante, const std::vector<Atom>& to_succ) {
    for (const auto& a : from_ante) pending_.push_back({&a, &to_ante});
    for (const auto& a : from_succ) pending_.push_back({&a, &to_succ});
    ante_used_.assign(to_ante.size(), false);
    succ_used_.assign(to_succ.size(), false);
    to_ante_ = &to_ante;
  }

  bool run() { return search(0); }

 private:
  struct Item {
    const Atom* atom;
    const std::vector<Atom>* side;
  };

  bool map_term(const Term& a, const Term& b) {
    if (a.is_variable() != b.is_variable()) return false;
    if (a.is_variable()) {
      auto fwd = forward_.find(a.name());
      auto bwd = backward_.find(b.name());
      if (fwd != forward_.end() || bwd != backward_.end()) {
        return fwd != forward_.end() && bwd != backward_.end() && fwd->second == b.name() &&
               bwd->second == a.name();
      }
      forward_.emplace(a.name(), b.name());
      backward_.emplace(b.name(), a.name());
      return true;
    }
    if (a.kind() != b.kind() || a.name() != b.name() || a.arity() != b.arity()) return false;
    for (std::size_t i = 0; i < a.arity(); ++i) {
      if (!map_term(a.args()[i], b.args()[i])) return false;
    }
    return true;
  }

  bool search(std::size_t k) {
    if (k == pending_.size()) return true;
    const Item& item = pending_[k];
    auto& used = item.side == to_ante_ ? ante_used_ : succ_used_;
    for (std::size_t j = 0; j < item.side->size(); ++j) {
      if (used[j]) continue;
      const Atom& target = (*item.side)[j];
      if (target.predicate != item.atom->predicate || target.arity() != item.atom->arity()) {
        continue;
      }
      auto saved_fwd = forward_;
      auto saved_bwd = backward_;
      bool ok = true;
      for (std::size_t i = 0; ok && i < target.arity(); ++i) {
        ok = map_term(item.atom->args[i], target.args[i]);
      }
      if (ok) {
        used[j] = true;
        if (search(k + 1)) return true;
        used[j] = false;
      }
      forward_ = std::move(saved_fwd);
      backward_ = std::move(saved_bwd);
    }
    return false;
  }

  std::vector<Item> pending_;
  std::vector<bool> ante_used_;
  std::vector<bool> succ_used_;
  const std::vector<Atom>* to_ante_ = nullptr;
  std::map<std::string, std::string> forward_;
  std::map<std::string, std::string> backward_;
};

}  // namespace

bool is_variant(const Clause& a, const Clause& b) {
  if (a.antecedent().size() != b.antecedent().size() ||
      a.succedent().size() != b.succedent().size()) {
    return false;
  }
  if (a == b) return true;
  return VariantSearch(a.antecedent(), a.succedent(), b.antecedent(), b.succedent()).run();
}

Substitution FreezeMap::as_substitution() const { return Substitution(assignment_); }

Term FreezeMap::thaw(const Term& t) const {
  if (t.is_frozen()) {
    auto it = inverse_.find(t.frozen_index());
    return it == inverse_.end() ? t : Term::variable(it->second);
  }
  if (t.arity() == 0) return t;
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const auto& a : t.args()) args.push_back(thaw(a));
  return Term::function(t.name(), std::move(args));
}

Atom FreezeMap::thaw(const Atom& a) const {
  Atom out{a.predicate, {}};
  for (const auto& t : a.args) out.args.push_back(thaw(t));
  return out;
}

Clause FreezeMap::thaw(const Clause& c) const {
  std::vector<Atom> ante, succ;
  for (const auto& a : c.antecedent()) ante.push_back(thaw(a));
  for (const auto& a : c.succedent()) succ.push_back(thaw(a));
  return Clause(std::move(ante), std::move(succ));
}

std::pair<Clause, FreezeMap> freeze(const Clause& c) {
  FreezeMap map;
  std::uint32_t next = 1;
  for (const auto& v : vars(c)) {
    map.assignment_.emplace(v, Term::frozen(next));
    map.inverse_.emplace(next, v);
    ++next;
  }
  return {apply(map.as_substitution(), c), std::move(map)};
}

}  // namespace arsat
