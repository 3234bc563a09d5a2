#pragma once

#include <array>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gft/radicals.hpp"

namespace gft {

enum class BuiltinKind { F, Fstar, Ftilde, Phi, PhiPi, Soc, Triv, Id };

/// Abstract syntax tree over builtin functorials and the combinators
/// star (upper product), circ (lower product), meet, join, power, omega.
struct FunctorialExpr;
using ExprPtr = std::shared_ptr<const FunctorialExpr>;

struct FunctorialExpr {
  enum class Tag { Builtin, Star, Circ, Meet, Join, Power, Omega };
  Tag tag = Tag::Builtin;
  BuiltinKind builtin = BuiltinKind::Triv;
  std::set<std::uint64_t> primes;   // PhiPi only
  std::vector<ExprPtr> children;
  int exponent = 0;                 // Power only, >= 1
};

ExprPtr make_builtin(BuiltinKind kind);
ExprPtr make_phi_pi(std::set<std::uint64_t> primes);
ExprPtr make_star(ExprPtr left, ExprPtr right);
ExprPtr make_circ(ExprPtr left, ExprPtr right);
ExprPtr make_meet(std::vector<ExprPtr> children);
ExprPtr make_join(std::vector<ExprPtr> children);
ExprPtr make_power(ExprPtr base, int k);
ExprPtr make_omega(ExprPtr base);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

/// Canonical printer; parse_functorial(print_expr(e)) is structurally e.
std::string print_expr(const ExprPtr& e);

/// Mini-language: atoms F Fstar Ftilde Phi Phi_pi{2,3} Soc Triv Id;
/// '*' upper product, 'o' lower product, '&' meet, '|' join, '^k'/'^inf'
/// iterates. '^' binds tightest, then '*'/'o' (left assoc), '&', '|'.
ExprPtr parse_functorial(const std::string& text);

struct EvalInfo {
  int omega_iterations = 0;  // iterations of the innermost omega evaluated
};

ElemSet evaluate(const ExprPtr& e, const LocalGroup& g, const Caps& caps = {},
                 EvalInfo* info = nullptr);

/// Executable form of the functorial axioms. A fail verdict carries a
/// human-readable witness naming the offending subgroup or centralizer.
///
/// The epimorphism quantifier of the first axiom is checked over quotient
/// maps only: every epimorphism factors as a quotient map followed by an
/// isomorphism, and evaluation depends only on abstract structure.
struct AxiomReport {
  // index 0..4 = F1..F5; nullopt = pass, string = failure witness
  std::array<std::optional<std::string>, 5> failures;
  bool passed(int axiom) const { return !failures[axiom - 1].has_value(); }
  bool all_passed() const;
};

AxiomReport check_axioms(const ExprPtr& e, const LocalGroup& g,
                         const std::set<int>& which = {1, 2, 3, 4, 5},
                         const Caps& caps = {});

/// Closes the family's values under meet and join and checks both
/// distributive laws over all triples of the closure.
bool values_lattice_distributive(const LocalGroup& g,
                                 const std::vector<ExprPtr>& family,
                                 const Caps& caps = {});

bool radical_class_membership(const ExprPtr& e, const LocalGroup& g,
                              const Caps& caps = {});
/// Join of the normal subgroups N with e(N) = N.
ElemSet gamma_class_radical(const ExprPtr& e, const LocalGroup& g,
                            const Caps& caps = {});

}  // namespace gft
