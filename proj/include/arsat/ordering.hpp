#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "arsat/clause.hpp"
#include "arsat/term.hpp"

namespace arsat {

/// Total precedence on function symbols. Symbols listed earlier are greater.
/// Frozen constants rank below every listed symbol; among themselves the
/// higher index is greater.
class Precedence {
 public:
  Precedence() = default;
  /// `symbols` from greatest to smallest. Duplicates are rejected.
  explicit Precedence(std::vector<std::string> symbols);

  /// Adds `symbol` below every symbol already present. No-op if present.
  void append(const std::string& symbol);
  /// Appends every function symbol of `clauses` in first-occurrence order.
  void extend_with(const std::vector<Clause>& clauses);

  bool contains(const std::string& symbol) const { return position_.count(symbol) != 0; }
  const std::vector<std::string>& symbols() const { return symbols_; }

  /// Larger is greater. Throws std::out_of_range for an unknown symbol.
  std::int64_t rank(const Term& head) const;

  bool operator==(const Precedence& other) const { return symbols_ == other.symbols_; }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, std::size_t> position_;
};

struct OrderingContext {
  Precedence precedence;
};

/// s ≻ t in the lexicographic path ordering.
bool lpo_greater(const OrderingContext& ctx, const Term& s, const Term& t);

/// b ≻ a in the atom ordering: a ≠ b and every argument of a lies strictly
/// below some argument of b. Predicate symbols are ignored. A 0-ary atom is
/// below every atom with arguments; distinct 0-ary atoms are incomparable.
bool atom_greater(const OrderingContext& ctx, const Atom& b, const Atom& a);

/// Set extension of the atom ordering: η1 ≠ η2 and every atom of η2∖η1 is
/// below some atom of η1∖η2.
bool set_greater(const OrderingContext& ctx, const AtomSet& eta1, const AtomSet& eta2);

/// No atom of `others` is greater than `a`.
bool is_maximal(const OrderingContext& ctx, const Atom& a, const std::vector<Atom>& others);
/// Maximal, and `a` itself does not occur in `others`.
bool is_strictly_maximal(const OrderingContext& ctx, const Atom& a,
                         const std::vector<Atom>& others);

}  // namespace arsat
