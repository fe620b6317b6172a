#pragma once

// Łukasiewicz (MV) terms: parsing, [0,1] semantics, McNaughton maps and
// solution polyhedra of unification problems.
//
// Surface syntax: "~" negation, "*" strong conjunction, "+" strong
// disjunction, "/\" meet, "\/" join, constants 0 and 1, variables x1..xm.

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nullary/zmap.hpp"

namespace nullary {

enum class Op { Zero, One, Var, Not, Oplus, Odot, Join, Meet };

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

struct TermNode {
    Op op;
    std::size_t var = 0;  // 1-based, for Op::Var
    Term left, right;
};

Term make_constant(bool one);
Term make_var(std::size_t index);
Term make_not(Term t);
Term make_binary(Op op, Term a, Term b);

struct UnificationProblem {
    std::size_t arity = 0;
    std::vector<std::pair<Term, Term>> equations;
};

Term parse(std::string_view text, std::size_t arity);
UnificationProblem parse_problem(std::string_view text, std::size_t arity);

std::string to_string(const Term& t);
std::string to_string(const UnificationProblem& p);

/// Direct recursive [0,1] semantics.
Rational evaluate(const Term& t, const RationalPoint& x);

/// The McNaughton function of t as a Z-map [0,1]^m -> [0,1], 1 <= m <= 4.
ZMap mcnaughton(const Term& t, std::size_t arity);

Polyhedron solution_polyhedron(const UnificationProblem& p);

bool check_unifier(const UnificationProblem& p, const ZMap& sigma);

}  // namespace nullary
