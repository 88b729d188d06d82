#pragma once

// Short constructors for test fixtures, written in the problem-file syntax.

#include <string>
#include <vector>

#include "arsat/io.hpp"

namespace arsat::testing {

inline Clause C(const std::string& text) { return parse_clause(text); }

inline Atom At(const std::string& text) { return parse_clause("-> " + text).succedent().front(); }

inline Term T(const std::string& text) { return At("wrap__(" + text + ")").args.front(); }

inline std::vector<Clause> Cs(std::initializer_list<const char*> texts) {
  std::vector<Clause> out;
  for (const char* t : texts) out.push_back(C(t));
  return out;
}

inline OrderingContext order(std::initializer_list<const char*> symbols) {
  return OrderingContext{Precedence(std::vector<std::string>(symbols.begin(), symbols.end()))};
}

}  // namespace arsat::testing
