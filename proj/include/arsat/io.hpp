#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arsat/clause.hpp"
#include "arsat/local_entailment.hpp"
#include "arsat/ordering.hpp"
#include "arsat/saturation.hpp"

namespace arsat {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Kind and arity of every symbol seen so far; one namespace for predicates
/// and functions.
class SymbolTable {
 public:
  enum class Kind { Predicate, Function };

  /// Throws ParseError on an arity or kind conflict. An unknown arity (from an
  /// `order:` declaration) is fixed by the first use.
  void declare(const std::string& name, Kind kind, std::optional<std::size_t> arity,
               std::size_t line, std::size_t column);

  static SymbolTable of(const std::vector<Clause>& clauses);

 private:
  struct Entry {
    Kind kind;
    std::optional<std::size_t> arity;
  };
  std::map<std::string, Entry> entries_;
};

struct Problem {
  /// Symbols of the `order:` line, greatest first.
  std::vector<std::string> order;
  std::vector<Clause> clauses;
  std::vector<Clause> queries;

  bool operator==(const Problem&) const = default;
};

/// Line-oriented grammar:
///   order: sym (> sym)*
///   clause: [atom (, atom)*] -> [atom (, atom)*]
///   query:  [atom (, atom)*] -> [atom (, atom)*]
/// `%` starts a comment; blank lines are ignored.
Problem parse_problem(std::string_view text);
std::string serialize_problem(const Problem& problem);

/// A single clause "atoms -> atoms". Symbols are checked against `symbols`.
Clause parse_clause(std::string_view text, SymbolTable& symbols);
Clause parse_clause(std::string_view text);

/// Declared symbols first, then undeclared function symbols in order of first
/// occurrence in the clauses.
OrderingContext context_for(const Problem& problem);

/// `saturated: true|limit`, `order:`, then sorted `clause:` and `rule:` lines.
std::string serialize_state(const SaturationState& state);
SaturationState parse_state(std::string_view text);

std::string serialize_certificate(const LocalCertificate& cert);
LocalCertificate parse_certificate(std::string_view text);

}  // namespace arsat
