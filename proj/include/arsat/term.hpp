#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace arsat {

/// A first-order term: a variable, a function symbol applied to arguments
/// (constants are 0-ary functions), or a frozen constant.
///
/// Frozen constants stand for the variables of a clause during redundancy
/// checks. Their names start with '#', which the parser never accepts, so
/// they cannot collide with user symbols.
class Term {
 public:
  enum class Kind : std::uint8_t { Variable, Function, Frozen };

  static Term variable(std::string name);
  static Term function(std::string name, std::vector<Term> args = {});
  static Term frozen(std::uint32_t index);

  Kind kind() const { return kind_; }
  bool is_variable() const { return kind_ == Kind::Variable; }
  bool is_function() const { return kind_ == Kind::Function; }
  bool is_frozen() const { return kind_ == Kind::Frozen; }

  /// Variable or symbol name; "#k" for the frozen constant with index k.
  const std::string& name() const { return name_; }
  std::uint32_t frozen_index() const { return index_; }

  std::span<const Term> args() const { return args_; }
  std::size_t arity() const { return args_.size(); }

  bool is_ground() const;
  bool contains_variable(const std::string& var) const;
  std::size_t size() const;
  std::size_t height() const;

  std::strong_ordering operator<=>(const Term& other) const;
  bool operator==(const Term& other) const;

  std::string to_string() const;
  std::size_t hash() const;

 private:
  Term(Kind kind, std::string name, std::uint32_t index, std::vector<Term> args);

  Kind kind_;
  std::string name_;
  std::uint32_t index_ = 0;
  std::vector<Term> args_;
};

/// Predicate symbol applied to arguments.
struct Atom {
  std::string predicate;
  std::vector<Term> args;

  Atom() = default;
  Atom(std::string pred, std::vector<Term> arguments = {})
      : predicate(std::move(pred)), args(std::move(arguments)) {}

  std::size_t arity() const { return args.size(); }
  bool is_ground() const;

  std::strong_ordering operator<=>(const Atom& other) const;
  bool operator==(const Atom& other) const = default;

  std::string to_string() const;
  std::size_t hash() const;
};

using VarSet = std::set<std::string>;
using AtomSet = std::set<Atom>;

void collect_vars(const Term& t, VarSet& out);
void collect_vars(const Atom& a, VarSet& out);
VarSet vars(const Term& t);
VarSet vars(const Atom& a);

/// All subterms of t, t included.
std::set<Term> subterms(const Term& t);

}  // namespace arsat

template <>
struct std::hash<arsat::Term> {
  std::size_t operator()(const arsat::Term& t) const noexcept { return t.hash(); }
};

template <>
struct std::hash<arsat::Atom> {
  std::size_t operator()(const arsat::Atom& a) const noexcept { return a.hash(); }
};
