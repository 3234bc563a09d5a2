#include <random>

#include "doctest.h"

#include "gft/catalog.hpp"
#include "gft/functorial.hpp"

using namespace gft;

namespace {

LocalGroup local_of(const Group& g) { return local_group(make_ctx(g)); }

ExprPtr random_expr(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 8);
  switch (pick(rng)) {
    case 0:
    case 1: {
      std::uniform_int_distribution<int> b(0, 6);
      constexpr BuiltinKind kinds[] = {BuiltinKind::F,     BuiltinKind::Fstar,
                                       BuiltinKind::Ftilde, BuiltinKind::Phi,
                                       BuiltinKind::Soc,    BuiltinKind::Triv,
                                       BuiltinKind::Id};
      return make_builtin(kinds[b(rng)]);
    }
    case 2: {
      std::set<std::uint64_t> primes{2};
      if (rng() % 2) primes.insert(3);
      if (rng() % 3 == 0) primes.insert(5);
      return make_phi_pi(primes);
    }
    case 3:
      return make_star(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 4:
      return make_circ(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 5:
      return make_meet({random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
    case 6:
      return make_join({random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
    case 7:
      return make_power(random_expr(rng, depth - 1), 1 + rng() % 4);
    default:
      return make_omega(random_expr(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("grammar examples") {
  ExprPtr e = parse_functorial("Phi_pi{2,3}*Fstar");
  REQUIRE(e->tag == FunctorialExpr::Tag::Star);
  CHECK(e->children[0]->builtin == BuiltinKind::PhiPi);
  CHECK(e->children[0]->primes == std::set<std::uint64_t>{2, 3});
  CHECK(e->children[1]->builtin == BuiltinKind::Fstar);

  ExprPtr omega = parse_functorial("Ftilde^inf");
  CHECK(omega->tag == FunctorialExpr::Tag::Omega);
  CHECK(omega->children[0]->builtin == BuiltinKind::Ftilde);

  // '&' binds tighter than '|'
  ExprPtr j = parse_functorial("Fstar & Ftilde | Triv");
  REQUIRE(j->tag == FunctorialExpr::Tag::Join);
  CHECK(j->children[0]->tag == FunctorialExpr::Tag::Meet);
  CHECK(j->children[1]->builtin == BuiltinKind::Triv);

  // '^' binds tightest; '*'/'o' are left-associative
  ExprPtr p = parse_functorial("F * Fstar^2 o Soc");
  REQUIRE(p->tag == FunctorialExpr::Tag::Circ);
  CHECK(p->children[0]->tag == FunctorialExpr::Tag::Star);
  CHECK(p->children[0]->children[1]->tag == FunctorialExpr::Tag::Power);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_functorial("Fbogus"), ParseError);
  CHECK_THROWS_AS(parse_functorial("Phi_pi{}"), ParseError);
  CHECK_THROWS_AS(parse_functorial("Fstar^0"), ParseError);
  CHECK_THROWS_AS(parse_functorial("Fstar Ftilde"), ParseError);
  CHECK_THROWS_AS(parse_functorial("(Fstar"), ParseError);
  CHECK_THROWS_AS(parse_functorial(""), ParseError);
}

TEST_CASE("printer-parser round trip on 1000 random expressions") {
  std::mt19937 rng(20240817);
  for (int i = 0; i < 1000; ++i) {
    ExprPtr e = random_expr(rng, 5);
    std::string text = print_expr(e);
    ExprPtr back = parse_functorial(text);
    CHECK(expr_equal(e, back));
    CHECK(print_expr(back) == text);
  }
}

TEST_CASE("builtin evaluation") {
  LocalGroup s4 = local_of(symmetric_group(4));
  CHECK(evaluate(parse_functorial("Triv"), s4).count() == 1);
  CHECK(evaluate(parse_functorial("Id"), s4) == s4.elems);
  CHECK(evaluate(parse_functorial("F"), s4).count() == 4);
  CHECK(evaluate(parse_functorial("Soc"), s4).count() == 4);
  CHECK(evaluate(parse_functorial("Phi"), s4).count() == 1);
}

TEST_CASE("upper product matches the quotient definition") {
  // (Phi * Soc)(G) is the Schmid-Shemetkov subgroup
  for (const Group& g : {symmetric_group(4), sl_2_3(), dihedral_group(8),
                         alternating_group(4)}) {
    LocalGroup lg = local_of(g);
    CHECK(evaluate(parse_functorial("Phi * Soc"), lg) == f_tilde(lg));
  }
}

TEST_CASE("lower product, meet, join, power") {
  LocalGroup s4 = local_of(symmetric_group(4));
  // F(F(S4)) = F(V4) = V4
  CHECK(evaluate(parse_functorial("F o F"), s4).count() == 4);
  CHECK(evaluate(parse_functorial("F & Id"), s4).count() == 4);
  CHECK(evaluate(parse_functorial("F | Soc"), s4).count() == 4);
  CHECK(evaluate(parse_functorial("Fstar^2"), s4) ==
        evaluate(parse_functorial("Fstar"), s4));
  EvalInfo info;
  CHECK(evaluate(parse_functorial("Fstar^inf"), s4, {}, &info).count() == 4);
  CHECK(info.omega_iterations >= 1);
}

TEST_CASE("negative controls produce witnesses") {
  LocalGroup s3 = local_of(symmetric_group(3));
  AxiomReport triv = check_axioms(make_builtin(BuiltinKind::Triv), s3, {3});
  CHECK(!triv.passed(3));
  CHECK(triv.failures[2]->find("F3") != std::string::npos);

  LocalGroup s4 = local_of(symmetric_group(4));
  AxiomReport id = check_axioms(make_builtin(BuiltinKind::Id), s4, {4});
  CHECK(!id.passed(4));
  CHECK(id.failures[3]->find("F4") != std::string::npos);
}

TEST_CASE("Fstar satisfies all five axioms on small groups") {
  for (const Group& g : {symmetric_group(3), symmetric_group(4), sl_2_3(),
                         alternating_group(5)}) {
    AxiomReport r = check_axioms(make_builtin(BuiltinKind::Fstar), local_of(g));
    CHECK(r.all_passed());
  }
}

TEST_CASE("value lattice is distributive on S4") {
  std::vector<ExprPtr> family{
      parse_functorial("Fstar"), parse_functorial("Ftilde"),
      parse_functorial("Phi_pi{2} * Fstar"), parse_functorial("Phi_pi{3} * Fstar")};
  CHECK(values_lattice_distributive(local_of(symmetric_group(4)), family));
  CHECK(values_lattice_distributive(local_of(sl_2_3()), family));
}

TEST_CASE("class radical agrees with the omega iterate") {
  for (const Group& g : {symmetric_group(4), symmetric_group(5), sl_2_3()}) {
    LocalGroup lg = local_of(g);
    for (const char* text : {"Fstar", "Ftilde"}) {
      ExprPtr e = parse_functorial(text);
      CHECK(gamma_class_radical(e, lg) == evaluate(make_omega(e), lg));
    }
  }
}

TEST_CASE("radical class membership") {
  CHECK(radical_class_membership(parse_functorial("Fstar"),
                                 local_of(alternating_group(5))));
  CHECK(!radical_class_membership(parse_functorial("Fstar"),
                                  local_of(symmetric_group(3))));
}
