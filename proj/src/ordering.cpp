#include "arsat/ordering.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace arsat {

Precedence::Precedence(std::vector<std::string> symbols) {
  for (auto& s : symbols) {
    if (contains(s)) throw std::invalid_argument("symbol '" + s + "' listed twice in precedence");
    append(s);
  }
}

void Precedence::append(const std::string& symbol) {
  if (contains(symbol)) return;
  position_.emplace(symbol, symbols_.size());
  symbols_.push_back(symbol);
}

namespace {
void append_functions(Precedence& p, const Term& t) {
  if (t.is_function()) p.append(t.name());
  for (const auto& a : t.args()) append_functions(p, a);
}
}  // namespace

void Precedence::extend_with(const std::vector<Clause>& clauses) {
  for (const auto& c : clauses) {
    for (const auto* side : {&c.antecedent(), &c.succedent()}) {
      for (const auto& atom : *side) {
        for (const auto& t : atom.args) append_functions(*this, t);
      }
    }
  }
}

std::int64_t Precedence::rank(const Term& head) const {
  constexpr std::int64_t kFrozenBase = -(std::int64_t{1} << 40);
  if (head.is_frozen()) return kFrozenBase + head.frozen_index();
  auto it = position_.find(head.name());
  if (it == position_.end()) {
    throw std::out_of_range("symbol '" + head.name() + "' has no precedence");
  }
  return static_cast<std::int64_t>(symbols_.size() - it->second);
}

namespace {

bool same_head(const Term& s, const Term& t) {
  return s.kind() == t.kind() && s.name() == t.name() && s.arity() == t.arity();
}

// LPO comparison that memoizes on subterm addresses once the inputs are large
// enough for the plain recursion to repeat work.
class LpoComparer {
 public:
  LpoComparer(const OrderingContext& ctx, bool memoize) : ctx_(ctx), memoize_(memoize) {}

  bool greater(const Term& s, const Term& t) {
    if (s.is_variable()) return false;
    if (t.is_variable()) return s.contains_variable(t.name());
    if (!memoize_) return compute(s, t);
    auto key = std::make_pair(&s, &t);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    bool result = compute(s, t);
    cache_.emplace(key, result);
    return result;
  }

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<const Term*, const Term*>& p) const noexcept {
      return std::hash<const void*>{}(p.first) * 31 + std::hash<const void*>{}(p.second);
    }
  };

  // Some argument of s is ⪰ t.
  bool subterm_case(const Term& s, const Term& t) {
    for (const auto& si : s.args()) {
      if (si == t || greater(si, t)) return true;
    }
    return false;
  }

  bool dominates_args(const Term& s, std::span<const Term> args) {
    for (const auto& tj : args) {
      if (!greater(s, tj)) return false;
    }
    return true;
  }

  // When the precedence or lexicographic case applies but s fails to dominate
  // some argument tj, the subterm case cannot hold either (it would give
  // s ≻ t ≻ tj), so it is only tried when the other cases do not apply.
  bool compute(const Term& s, const Term& t) {
    if (same_head(s, t)) {
      std::size_t i = 0;
      while (i < s.arity() && s.args()[i] == t.args()[i]) ++i;
      if (i == s.arity()) return false;
      if (greater(s.args()[i], t.args()[i])) return dominates_args(s, t.args().subspan(i + 1));
      return subterm_case(s, t);
    }
    if (ctx_.precedence.rank(s) > ctx_.precedence.rank(t)) return dominates_args(s, t.args());
    return subterm_case(s, t);
  }

  const OrderingContext& ctx_;
  bool memoize_;
  std::unordered_map<std::pair<const Term*, const Term*>, bool, PairHash> cache_;
};

}  // namespace

bool lpo_greater(const OrderingContext& ctx, const Term& s, const Term& t) {
  if (s.is_variable()) return false;
  if (t.is_variable()) return s.contains_variable(t.name());
  bool memoize = s.size() * t.size() > 64;
  return LpoComparer(ctx, memoize).greater(s, t);
}

bool atom_greater(const OrderingContext& ctx, const Atom& b, const Atom& a) {
  if (a == b) return false;
  if (a.args.empty() && b.args.empty()) return false;
  bool result = std::all_of(a.args.begin(), a.args.end(), [&](const Term& s) {
    return std::any_of(b.args.begin(), b.args.end(),
                       [&](const Term& t) { return lpo_greater(ctx, t, s); });
  });
#ifndef NDEBUG
  if (result) {
    VarSet big = vars(b);
    for (const auto& v : vars(a)) assert(big.count(v) && "atom ordering broke Var(B) ⊆ Var(A)");
  }
#endif
  return result;
}

bool set_greater(const OrderingContext& ctx, const AtomSet& eta1, const AtomSet& eta2) {
  if (eta1 == eta2) return false;
  std::vector<Atom> only1, only2;
  std::set_difference(eta1.begin(), eta1.end(), eta2.begin(), eta2.end(),
                      std::back_inserter(only1));
  std::set_difference(eta2.begin(), eta2.end(), eta1.begin(), eta1.end(),
                      std::back_inserter(only2));
  return std::all_of(only2.begin(), only2.end(), [&](const Atom& e) {
    return std::any_of(only1.begin(), only1.end(),
                       [&](const Atom& big) { return atom_greater(ctx, big, e); });
  });
}

bool is_maximal(const OrderingContext& ctx, const Atom& a, const std::vector<Atom>& others) {
  return std::none_of(others.begin(), others.end(),
                      [&](const Atom& e) { return atom_greater(ctx, e, a); });
}

bool is_strictly_maximal(const OrderingContext& ctx, const Atom& a,
                         const std::vector<Atom>& others) {
  return std::find(others.begin(), others.end(), a) == others.end() &&
         is_maximal(ctx, a, others);
}

}  // namespace arsat
