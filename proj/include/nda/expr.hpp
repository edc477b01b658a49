#pragma once

#include "nda/arithmetic.hpp"
#include "nda/nat.hpp"

#include <memory>
#include <string>
#include <string_view>

namespace nda {

/// Abstract syntax for the calculator mini-language: Nat literals, binary
/// + and *, parentheses. * binds tighter than +, both associate to the
/// LEFT, and the grouping is semantically significant because + need not
/// be associative in a projective arithmetic.
struct Expr {
    enum class Kind { literal, add, mul };

    Kind kind = Kind::literal;
    Nat value;  // literal
    std::shared_ptr<const Expr> lhs, rhs;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Throws ParseError carrying the byte offset of the offending character.
ExprPtr parse_expression(std::string_view text);

/// Minimal-parenthesis rendering; reparsing the result yields an
/// identical tree.
std::string render_expression(const Expr& e);

bool expr_equal(const Expr& a, const Expr& b);

/// Evaluates with the arithmetic's own operations.
Nat evaluate(const Expr& e, const ProjectiveArithmetic& A);

/// Alternative semantics: every maximal chain of one operator collapses
/// into a single n-ary application (one coprojection of the conventional
/// sum/product of projections). Association becomes irrelevant, which is
/// exactly what distinguishes the n-ary operations from folded binary ones.
Nat evaluate_nary(const Expr& e, const ProjectiveArithmetic& A);

}  // namespace nda
