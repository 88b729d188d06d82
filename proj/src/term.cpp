#include "arsat/term.hpp"

#include <algorithm>

namespace arsat {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

template <typename Range>
std::strong_ordering compare_ranges(const Range& a, const Range& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

void join_args(std::string& out, std::span<const Term> args) {
  if (args.empty()) return;
  out += '(';
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ',';
    out += args[i].to_string();
  }
  out += ')';
}

}  // namespace

Term::Term(Kind kind, std::string name, std::uint32_t index, std::vector<Term> args)
    : kind_(kind), name_(std::move(name)), index_(index), args_(std::move(args)) {}

Term Term::variable(std::string name) { return Term(Kind::Variable, std::move(name), 0, {}); }

Term Term::function(std::string name, std::vector<Term> args) {
  return Term(Kind::Function, std::move(name), 0, std::move(args));
}

Term Term::frozen(std::uint32_t index) {
  return Term(Kind::Frozen, "#" + std::to_string(index), index, {});
}

bool Term::is_ground() const {
  if (is_variable()) return false;
  return std::all_of(args_.begin(), args_.end(), [](const Term& a) { return a.is_ground(); });
}

bool Term::contains_variable(const std::string& var) const {
  if (is_variable()) return name_ == var;
  return std::any_of(args_.begin(), args_.end(),
                     [&](const Term& a) { return a.contains_variable(var); });
}

std::size_t Term::size() const {
  std::size_t n = 1;
  for (const auto& a : args_) n += a.size();
  return n;
}

std::size_t Term::height() const {
  std::size_t h = 0;
  for (const auto& a : args_) h = std::max(h, a.height() + 1);
  return h;
}

std::strong_ordering Term::operator<=>(const Term& other) const {
  if (auto c = kind_ <=> other.kind_; c != 0) return c;
  if (kind_ == Kind::Frozen) return index_ <=> other.index_;
  if (auto c = args_.size() <=> other.args_.size(); c != 0) return c;
  if (auto c = name_ <=> other.name_; c != 0) return c;
  return compare_ranges(args_, other.args_);
}

bool Term::operator==(const Term& other) const {
  return kind_ == other.kind_ && index_ == other.index_ && name_ == other.name_ &&
         args_ == other.args_;
}

std::string Term::to_string() const {
  std::string out = name_;
  join_args(out, args_);
  return out;
}

std::size_t Term::hash() const {
  std::size_t h = mix(std::hash<std::string>{}(name_), static_cast<std::size_t>(kind_));
  for (const auto& a : args_) h = mix(h, a.hash());
  return h;
}

bool Atom::is_ground() const {
  return std::all_of(args.begin(), args.end(), [](const Term& a) { return a.is_ground(); });
}

std::strong_ordering Atom::operator<=>(const Atom& other) const {
  if (auto c = predicate <=> other.predicate; c != 0) return c;
  if (auto c = args.size() <=> other.args.size(); c != 0) return c;
  return compare_ranges(args, other.args);
}

std::string Atom::to_string() const {
  std::string out = predicate;
  join_args(out, args);
  return out;
}

std::size_t Atom::hash() const {
  std::size_t h = std::hash<std::string>{}(predicate);
  for (const auto& a : args) h = mix(h, a.hash());
  return h;
}

void collect_vars(const Term& t, VarSet& out) {
  if (t.is_variable()) {
    out.insert(t.name());
    return;
  }
  for (const auto& a : t.args()) collect_vars(a, out);
}

void collect_vars(const Atom& a, VarSet& out) {
  for (const auto& t : a.args) collect_vars(t, out);
}

VarSet vars(const Term& t) {
  VarSet out;
  collect_vars(t, out);
  return out;
}

VarSet vars(const Atom& a) {
  VarSet out;
  collect_vars(a, out);
  return out;
}

namespace {
void collect_subterms(const Term& t, std::set<Term>& out) {
  if (!out.insert(t).second) return;
  for (const auto& a : t.args()) collect_subterms(a, out);
}
}  // namespace

std::set<Term> subterms(const Term& t) {
  std::set<Term> out;
  collect_subterms(t, out);
  return out;
}

}  // namespace arsat
