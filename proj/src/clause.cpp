#include "arsat/clause.hpp"

#include <algorithm>

namespace arsat {

namespace {

void canonicalize(std::vector<Atom>& side) {
  std::sort(side.begin(), side.end());
  side.erase(std::unique(side.begin(), side.end()), side.end());
}

std::string join(const std::vector<Atom>& atoms) {
  std::string out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += ", ";
    out += atoms[i].to_string();
  }
  return out;
}

}  // namespace

Clause::Clause(std::vector<Atom> antecedent, std::vector<Atom> succedent)
    : antecedent_(std::move(antecedent)), succedent_(std::move(succedent)) {
  canonicalize(antecedent_);
  canonicalize(succedent_);
}

std::vector<Atom> Clause::atoms() const {
  std::vector<Atom> out;
  out.reserve(literal_count());
  std::set_union(antecedent_.begin(), antecedent_.end(), succedent_.begin(), succedent_.end(),
                 std::back_inserter(out));
  return out;
}

bool Clause::is_ground() const {
  auto ground = [](const Atom& a) { return a.is_ground(); };
  return std::all_of(antecedent_.begin(), antecedent_.end(), ground) &&
         std::all_of(succedent_.begin(), succedent_.end(), ground);
}

bool Clause::is_tautology() const {
  auto a = antecedent_.begin();
  auto s = succedent_.begin();
  while (a != antecedent_.end() && s != succedent_.end()) {
    if (*a < *s) {
      ++a;
    } else if (*s < *a) {
      ++s;
    } else {
      return true;
    }
  }
  return false;
}

std::string Clause::to_string() const {
  std::string out = join(antecedent_);
  if (!out.empty()) out += ' ';
  out += "->";
  if (!succedent_.empty()) out += ' ' + join(succedent_);
  return out;
}

VarSet vars(const Clause& c) {
  VarSet out;
  for (const auto& a : c.antecedent()) collect_vars(a, out);
  for (const auto& a : c.succedent()) collect_vars(a, out);
  return out;
}

std::vector<Clause> negate(const Clause& c) {
  std::vector<Clause> out;
  for (const auto& a : c.antecedent()) out.emplace_back(std::vector<Atom>{}, std::vector<Atom>{a});
  for (const auto& b : c.succedent()) out.emplace_back(std::vector<Atom>{b}, std::vector<Atom>{});
  return out;
}

}  // namespace arsat
