#include "arsat/resolution.hpp"

#include <algorithm>

namespace arsat {

namespace {

std::vector<Atom> without(const std::vector<Atom>& atoms, std::size_t skip) {
  std::vector<Atom> out;
  out.reserve(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i != skip) out.push_back(atoms[i]);
  }
  return out;
}

std::vector<Atom> concat(const std::vector<Atom>& a, const std::vector<Atom>& b) {
  std::vector<Atom> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

std::vector<Inference> plain_resolvents(const Clause& c1, const Clause& c2_in) {
  std::vector<Inference> out;
  const Clause c2 = rename_apart(c2_in, vars(c1));
  const auto& delta = c1.succedent();
  const auto& gamma2 = c2.antecedent();
  for (std::size_t i = 0; i < delta.size(); ++i) {
    for (std::size_t j = 0; j < gamma2.size(); ++j) {
      auto sigma = mgu(delta[i], gamma2[j]);
      if (!sigma) continue;
      Inference inf;
      inf.kind = InferenceKind::Resolution;
      inf.premises = {c1, c2};
      inf.unifier = *sigma;
      inf.left_atom = delta[i];
      inf.right_atom = gamma2[j];
      inf.resolved_atom = apply(*sigma, delta[i]);
      inf.premise_instances = {apply(*sigma, c1), apply(*sigma, c2)};
      inf.left_antecedent = apply_all(*sigma, c1.antecedent());
      inf.left_succedent = apply_all(*sigma, without(delta, i));
      inf.right_antecedent = apply_all(*sigma, without(gamma2, j));
      inf.right_succedent = apply_all(*sigma, c2.succedent());
      inf.conclusion = Clause(concat(inf.left_antecedent, inf.right_antecedent),
                              concat(inf.left_succedent, inf.right_succedent));
      out.push_back(std::move(inf));
    }
  }
  return out;
}

namespace {

std::vector<Inference> factors_on(const Clause& c, bool antecedent) {
  std::vector<Inference> out;
  const auto& side = antecedent ? c.antecedent() : c.succedent();
  const auto& other = antecedent ? c.succedent() : c.antecedent();
  for (std::size_t i = 0; i < side.size(); ++i) {
    for (std::size_t j = i + 1; j < side.size(); ++j) {
      auto sigma = mgu(side[i], side[j]);
      if (!sigma) continue;
      Inference inf;
      inf.kind = InferenceKind::Factoring;
      inf.antecedent_factor = antecedent;
      inf.premises = {c};
      inf.unifier = *sigma;
      inf.left_atom = side[i];
      inf.right_atom = side[j];
      inf.resolved_atom = apply(*sigma, side[i]);
      inf.premise_instances = {apply(*sigma, c)};
      std::vector<Atom> rest;
      for (std::size_t k = 0; k < side.size(); ++k) {
        if (k != i && k != j) rest.push_back(side[k]);
      }
      std::vector<Atom> kept = apply_all(*sigma, rest);
      std::vector<Atom> fixed = apply_all(*sigma, other);
      if (antecedent) {
        inf.left_antecedent = kept;
        inf.left_succedent = fixed;
        kept.push_back(inf.resolved_atom);
        inf.conclusion = Clause(std::move(kept), std::move(fixed));
      } else {
        inf.left_antecedent = fixed;
        inf.left_succedent = kept;
        kept.push_back(inf.resolved_atom);
        inf.conclusion = Clause(std::move(fixed), std::move(kept));
      }
      out.push_back(std::move(inf));
    }
  }
  return out;
}

}  // namespace

std::vector<Inference> plain_factors(const Clause& c) { return factors_on(c, false); }

std::vector<Inference> plain_antecedent_factors(const Clause& c) { return factors_on(c, true); }

bool satisfies_a_priori(const OrderingContext& ctx, const Inference& inf) {
  if (inf.kind == InferenceKind::Resolution) {
    return is_maximal(ctx, inf.left_atom, inf.premises[0].atoms()) &&
           is_maximal(ctx, inf.right_atom, inf.premises[1].atoms());
  }
  // Either atom of the pair may play the role of the kept atom A.
  const auto atoms = inf.premises[0].atoms();
  return is_maximal(ctx, inf.left_atom, atoms) || is_maximal(ctx, inf.right_atom, atoms);
}

std::vector<Inference> a_priori_resolvents(const OrderingContext& ctx, const Clause& c1,
                                           const Clause& c2) {
  std::vector<Inference> out;
  for (auto& inf : plain_resolvents(c1, c2)) {
    if (satisfies_a_priori(ctx, inf)) out.push_back(std::move(inf));
  }
  return out;
}

std::vector<Inference> a_priori_factors(const OrderingContext& ctx, const Clause& c) {
  std::vector<Inference> out;
  for (auto& inf : plain_factors(c)) {
    if (satisfies_a_priori(ctx, inf)) out.push_back(std::move(inf));
  }
  return out;
}

std::vector<Inference> a_priori_antecedent_factors(const OrderingContext& ctx, const Clause& c) {
  std::vector<Inference> out;
  for (auto& inf : plain_antecedent_factors(c)) {
    if (satisfies_a_priori(ctx, inf)) out.push_back(std::move(inf));
  }
  return out;
}

std::vector<Inference> all_a_priori_factors(const OrderingContext& ctx, const Clause& c) {
  std::vector<Inference> out = a_priori_factors(ctx, c);
  auto more = a_priori_antecedent_factors(ctx, c);
  std::move(more.begin(), more.end(), std::back_inserter(out));
  return out;
}

bool is_a_posteriori(const OrderingContext& ctx, const Inference& inf) {
  const Atom& a = inf.resolved_atom;
  if (inf.kind == InferenceKind::Resolution) {
    return is_strictly_maximal(ctx, a, concat(inf.left_antecedent, inf.left_succedent)) &&
           is_maximal(ctx, a, concat(inf.right_antecedent, inf.right_succedent));
  }
  if (inf.antecedent_factor) {
    return is_strictly_maximal(ctx, a, inf.left_succedent) && is_maximal(ctx, a, inf.left_antecedent);
  }
  return is_strictly_maximal(ctx, a, inf.left_antecedent) && is_maximal(ctx, a, inf.left_succedent);
}

}  // namespace arsat
