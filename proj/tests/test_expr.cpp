#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nda/errors.hpp"
#include "nda/expr.hpp"

#include <random>

using nda::Expr;
using nda::ExprPtr;
using nda::Nat;
using nda::ProjectiveArithmetic;

namespace {

ProjectiveArithmetic make(const char* text) {
    return ProjectiveArithmetic::make(nda::parse_generator_spec(text));
}

ExprPtr lit(unsigned long v) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::literal;
    e->value = Nat(v);
    return e;
}

ExprPtr node(Expr::Kind k, ExprPtr l, ExprPtr r) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
}

ExprPtr random_tree(std::mt19937_64& rng, int depth) {
    if (depth == 0 || rng() % 3 == 0) return lit(rng() % 1000);
    auto k = rng() % 2 == 0 ? Expr::Kind::add : Expr::Kind::mul;
    return node(k, random_tree(rng, depth - 1), random_tree(rng, depth - 1));
}

}  // namespace

TEST_CASE("parsing: precedence and left associativity") {
    // 1 + 2 * 3 parses as 1 + (2 * 3)
    auto e = nda::parse_expression("1 + 2 * 3");
    CHECK(e->kind == Expr::Kind::add);
    CHECK(e->rhs->kind == Expr::Kind::mul);

    // a + b + c parses as (a + b) + c
    auto chain = nda::parse_expression("1 + 2 + 3");
    CHECK(chain->kind == Expr::Kind::add);
    CHECK(chain->lhs->kind == Expr::Kind::add);
    CHECK(chain->rhs->kind == Expr::Kind::literal);

    auto parens = nda::parse_expression("1 + (2 + 3)");
    CHECK(parens->rhs->kind == Expr::Kind::add);
    CHECK(!nda::expr_equal(*chain, *parens));
}

TEST_CASE("parse errors carry byte offsets") {
    auto expect_error_at = [](std::string_view text, std::size_t pos) {
        try {
            nda::parse_expression(text);
            FAIL("expected ParseError for ", text);
        } catch (const nda::ParseError& e) {
            CHECK(e.position() == pos);
        }
    };
    expect_error_at("", 0);
    expect_error_at("1 +", 3);
    expect_error_at("(1 + 2", 0);     // the unclosed '(' is the culprit
    expect_error_at("1 + * 2", 4);
    expect_error_at("1 2", 2);        // trailing junk
    expect_error_at("x + 2", 0);
}

TEST_CASE("render(parse) reparses to the identical tree") {
    for (std::string_view text :
         {"1 + 2 * 3", "(1 + 2) * 3", "5 + (5 + 6)", "(5 + 5) + 6", "2 * 3 * 4",
          "2 * (3 * 4)", "0", "((7))"}) {
        auto e = nda::parse_expression(text);
        auto again = nda::parse_expression(nda::render_expression(*e));
        CHECK(nda::expr_equal(*e, *again));
    }
    std::mt19937_64 rng(23);
    for (int i = 0; i < 300; ++i) {
        auto e = random_tree(rng, 5);
        auto again = nda::parse_expression(nda::render_expression(*e));
        CHECK(nda::expr_equal(*e, *again));
    }
}

TEST_CASE("evaluation uses the chosen arithmetic, left-associatively") {
    auto sq = make("power:2");
    CHECK(nda::evaluate(*nda::parse_expression("2 + 2"), sq) == Nat(2u));
    // grouping is semantically significant under a non-associative addition
    CHECK(nda::evaluate(*nda::parse_expression("(5 + 5) + 6"), sq) == Nat(9u));
    CHECK(nda::evaluate(*nda::parse_expression("5 + (5 + 6)"), sq) == Nat(8u));
    CHECK(nda::evaluate(*nda::parse_expression("5 + 5 + 6"), sq) == Nat(9u));

    auto ten = make("linear:10");
    CHECK(nda::evaluate(*nda::parse_expression("2 * 2"), ten) == Nat(40u));

    // bare + and * match the binary operations across families
    for (const char* text : {"identity", "linear:10", "linear:7/3", "power:2", "power:3",
                             "exp:2", "piecewise:(0,0),(4,4),(5,100)"}) {
        auto A = make(text);
        for (unsigned long a = 0; a <= 50; ++a)
            for (unsigned long b = 0; b <= 50; ++b) {
                std::string sa = std::to_string(a), sb = std::to_string(b);
                CHECK(nda::evaluate(*nda::parse_expression(sa + " + " + sb), A) ==
                      A.add(Nat(a), Nat(b)));
                CHECK(nda::evaluate(*nda::parse_expression(sa + " * " + sb), A) ==
                      A.mul(Nat(a), Nat(b)));
            }
    }
    // the doubly exponential family stays exact on its feasible prefix
    auto de = ProjectiveArithmetic::make(nda::parse_generator_spec("dblexp"), Nat(12u));
    for (unsigned long a = 0; a <= 12; ++a)
        for (unsigned long b = 0; b <= 12; ++b) {
            std::string e = std::to_string(a) + " + " + std::to_string(b);
            CHECK(nda::evaluate(*nda::parse_expression(e), de) == de.add(Nat(a), Nat(b)));
        }
}

TEST_CASE("n-ary evaluation collapses chains into one coprojection") {
    auto sq = make("power:2");
    auto e = nda::parse_expression("2 + 2 + 2");
    CHECK(nda::evaluate(*e, sq) == Nat(2u));       // fold: (2+2)+2
    CHECK(nda::evaluate_nary(*e, sq) == Nat(3u));  // one coprojection of 12

    // parenthesization no longer matters inside one chain
    CHECK(nda::evaluate_nary(*nda::parse_expression("(2 + 2) + 2"), sq) == Nat(3u));

    // chains of different operators stay separate: 2*2 enters the sum as 4
    auto mixed = nda::parse_expression("2 * 2 + 1 + 1");
    CHECK(nda::evaluate_nary(*mixed, sq) == sq.sum_n({Nat(4u), Nat(1u), Nat(1u)}));

    // products collapse too
    CHECK(nda::evaluate_nary(*nda::parse_expression("2 * 5 * 8"), sq) == Nat(80u));

    // single literals and binary chains reduce to the binary operations
    CHECK(nda::evaluate_nary(*nda::parse_expression("7"), sq) == Nat(7u));
    CHECK(nda::evaluate_nary(*nda::parse_expression("3 + 4"), sq) == sq.add(Nat(3u), Nat(4u)));
}
