#include <doctest.h>

#include "arsat/ordering.hpp"
#include "arsat/substitution.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace arsat;
using namespace arsat::testing;

TEST_CASE("precedence") {
  Precedence p({"f", "g", "a"});
  CHECK(p.rank(T("f(a)")) > p.rank(T("g(a,a)")));
  CHECK(p.rank(T("g(a,a)")) > p.rank(T("a")));
  CHECK(p.rank(T("a")) > p.rank(Term::frozen(7)));
  CHECK(p.rank(Term::frozen(2)) > p.rank(Term::frozen(1)));
  CHECK_THROWS_AS(p.rank(T("b")), std::out_of_range);
  CHECK_THROWS_AS(Precedence({"f", "f"}), std::invalid_argument);

  p.extend_with(Cs({"p(h(b), a) -> q(k)", "-> p(b, f(c))"}));
  CHECK(p.symbols() == std::vector<std::string>{"f", "g", "a", "h", "b", "k", "c"});
}

TEST_CASE("lpo_greater") {
  auto ctx = order({"f", "g", "b", "a"});
  auto prec = rank_map({"f", "g", "b", "a"});
  CHECK(lpo_greater(ctx, T("f(a)"), T("a")));

  // Expected values come from the unfolded definition.
  CHECK(lpo_unfold(prec, T("f(W)"), T("g(W,W)")));
  CHECK(lpo_greater(ctx, T("f(W)"), T("g(W,W)")));

  CHECK_FALSE(lpo_unfold(prec, T("f(Y)"), T("g(X,Y)")));
  CHECK_FALSE(lpo_unfold(prec, T("g(X,Y)"), T("f(Y)")));
  CHECK_FALSE(lpo_greater(ctx, T("f(Y)"), T("g(X,Y)")));
  CHECK_FALSE(lpo_greater(ctx, T("g(X,Y)"), T("f(Y)")));

  CHECK(lpo_greater(ctx, T("g(b,a)"), T("g(a,b)")));
  CHECK(lpo_greater(ctx, T("X"), T("X")) == false);
  CHECK(lpo_greater(ctx, T("f(X)"), T("X")));
  CHECK_FALSE(lpo_greater(ctx, T("f(X)"), T("Y")));
  CHECK(lpo_greater(ctx, T("a"), Term::frozen(1)));
}

TEST_CASE("atom_greater") {
  auto ctx = order({"f", "g"});
  CHECK(atom_greater(ctx, At("q(f(W),W)"), At("p(g(W,W))")));
  CHECK_FALSE(atom_greater(ctx, At("p(g(W,W))"), At("q(f(W),W)")));
  CHECK_FALSE(atom_greater(ctx, At("p(X)"), At("p(X)")));
  CHECK_FALSE(atom_greater(ctx, At("p(X)"), At("q(X)")));
  CHECK_FALSE(atom_greater(ctx, At("q(X)"), At("p(X)")));

  SUBCASE("0-ary atoms") {
    CHECK_FALSE(atom_greater(ctx, At("s"), At("t")));
    CHECK_FALSE(atom_greater(ctx, At("s"), At("s")));
    CHECK(atom_greater(ctx, At("p(X)"), At("s")));
    CHECK_FALSE(atom_greater(ctx, At("s"), At("p(X)")));
  }
}

TEST_CASE("set_greater") {
  auto ctx = order({"f", "g", "b", "a"});
  Atom a1 = At("p(a)"), a2 = At("q(a,b)"), b = At("r(f(a))");
  CHECK(set_greater(ctx, {a1, a2, b}, {a1, b}));
  CHECK_FALSE(set_greater(ctx, {a1, b}, {a1, a2, b}));
  CHECK_FALSE(set_greater(ctx, {a1, b}, {a1, b}));
  CHECK(lpo_unfold(rank_map({"f", "g", "b", "a"}), T("f(a)"), T("a")));
  CHECK(set_greater(ctx, {At("p(f(a))")}, {At("p(a)")}));
  CHECK_FALSE(set_greater(ctx, {At("p(a)")}, {At("p(f(a))")}));
}

TEST_CASE("maximality") {
  auto ctx = order({"f", "g", "b", "a"});
  CHECK(is_maximal(ctx, At("i(X,Y)"), {At("i(b,Y)")}));
  Atom a = At("p(a)");
  CHECK(is_maximal(ctx, a, {a}));
  CHECK_FALSE(is_strictly_maximal(ctx, a, {a}));
  CHECK(is_strictly_maximal(ctx, a, {}));
  CHECK_FALSE(is_maximal(ctx, At("p(g(W,W))"), {At("q(f(W),W)")}));
  CHECK(is_maximal(ctx, At("q(f(W),W)"), {At("p(g(W,W))")}));
}

TEST_CASE("property: lpo matches the unfolded definition") {
  Gen gen(21);
  auto ctx = gen.sig().context();
  auto prec = rank_map(ctx.precedence.symbols());
  for (int i = 0; i < 5000; ++i) {
    Term s = gen.term(3), t = gen.term(3);
    CHECK(lpo_greater(ctx, s, t) == lpo_unfold(prec, s, t));
    Term sub = *std::next(subterms(s).begin(), static_cast<long>(gen.below(subterms(s).size())));
    CHECK(lpo_greater(ctx, s, sub) == lpo_unfold(prec, s, sub));
  }
}

TEST_CASE("property: lpo laws") {
  Gen gen(22);
  auto ctx = gen.sig().context();
  for (int i = 0; i < 5000; ++i) {
    Term s = gen.term(3), t = gen.term(3), u = gen.term(3);
    CHECK_FALSE(lpo_greater(ctx, s, s));
    bool st = lpo_greater(ctx, s, t);
    CHECK_FALSE((st && lpo_greater(ctx, t, s)));
    if (st && lpo_greater(ctx, t, u)) CHECK(lpo_greater(ctx, s, u));
    for (const auto& sub : subterms(s)) {
      if (sub != s) CHECK(lpo_greater(ctx, s, sub));
    }
    if (st) {
      VarSet dom = vars(s);
      collect_vars(t, dom);
      Substitution sigma = gen.substitution(dom, 2);
      CHECK(lpo_greater(ctx, apply(sigma, s), apply(sigma, t)));
    }
    Term gs = gen.ground_term(3), gt = gen.ground_term(3);
    if (gs != gt) CHECK((lpo_greater(ctx, gs, gt) || lpo_greater(ctx, gt, gs)));
  }
}

TEST_CASE("property: atom ordering laws") {
  Gen gen(23);
  auto ctx = gen.sig().context();
  for (int i = 0; i < 5000; ++i) {
    Atom a = gen.atom(2), b = gen.atom(2), c = gen.atom(2);
    CHECK_FALSE(atom_greater(ctx, a, a));
    if (!atom_greater(ctx, a, b)) continue;
    CHECK_FALSE(atom_greater(ctx, b, a));
    VarSet va = vars(a);
    for (const auto& v : vars(b)) CHECK(va.count(v));
    if (atom_greater(ctx, b, c)) CHECK(atom_greater(ctx, a, c));
    VarSet dom = va;
    collect_vars(b, dom);
    Substitution sigma = gen.substitution(dom, 2);
    CHECK(atom_greater(ctx, apply(sigma, a), apply(sigma, b)));
  }
}

TEST_CASE("property: set extension") {
  Gen gen(24);
  auto ctx = gen.sig().context();
  for (int i = 0; i < 2000; ++i) {
    AtomSet big;
    std::size_t n = 1 + gen.below(4);
    for (std::size_t k = 0; k < n; ++k) big.insert(gen.atom(2));
    CHECK_FALSE(set_greater(ctx, big, big));
    AtomSet small = big;
    small.erase(small.begin());
    CHECK(set_greater(ctx, big, small));
    CHECK_FALSE(set_greater(ctx, small, big));
  }
}

TEST_CASE("property: descending walks are bounded") {
  Gen gen(25);
  auto ctx = gen.sig().context();
  std::vector<Term> terms = ground_terms(gen.sig().constants, gen.sig().functions, 2);
  std::vector<Atom> atoms;
  for (const auto& t : terms) {
    atoms.push_back(Atom("p", {t}));
    atoms.push_back(Atom("r", {t}));
  }
  for (int walk = 0; walk < 200; ++walk) {
    Atom cur = atoms[gen.below(atoms.size())];
    std::set<Atom> seen{cur};
    std::size_t steps = 0;
    for (;;) {
      std::vector<Atom> below;
      for (const auto& b : atoms) {
        if (atom_greater(ctx, cur, b)) below.push_back(b);
      }
      if (below.empty()) break;
      cur = below[gen.below(below.size())];
      CHECK(seen.insert(cur).second);
      REQUIRE(++steps <= atoms.size());
    }
  }
}
