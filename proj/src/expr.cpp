#include "nda/expr.hpp"

#include "nda/errors.hpp"

#include <cctype>
#include <vector>

namespace nda {

namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool at(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c) {
        if (at(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    ExprPtr parse_expr() {
        ExprPtr node = parse_term();
        while (eat('+')) {
            auto next = parse_term();
            auto sum = std::make_shared<Expr>();
            sum->kind = Expr::Kind::add;
            sum->lhs = std::move(node);
            sum->rhs = std::move(next);
            node = std::move(sum);
        }
        return node;
    }

    ExprPtr parse_term() {
        ExprPtr node = parse_factor();
        while (eat('*')) {
            auto next = parse_factor();
            auto prod = std::make_shared<Expr>();
            prod->kind = Expr::Kind::mul;
            prod->lhs = std::move(node);
            prod->rhs = std::move(next);
            node = std::move(prod);
        }
        return node;
    }

    ExprPtr parse_factor() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("unexpected end of expression", pos);
        if (s[pos] == '(') {
            std::size_t open = pos++;
            ExprPtr inner = parse_expr();
            skip_ws();
            if (!eat(')')) throw ParseError("unclosed '('", open);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            auto lit = std::make_shared<Expr>();
            lit->kind = Expr::Kind::literal;
            lit->value = Nat::from_decimal(s.substr(start, pos - start));
            return lit;
        }
        throw ParseError("expected a number or '('", pos);
    }
};

int precedence(Expr::Kind k) { return k == Expr::Kind::add ? 1 : k == Expr::Kind::mul ? 2 : 3; }

void render(const Expr& e, std::string& out) {
    if (e.kind == Expr::Kind::literal) {
        out += e.value.to_decimal();
        return;
    }
    int prec = precedence(e.kind);
    const char* op = e.kind == Expr::Kind::add ? " + " : " * ";
    // Left child keeps equal precedence (operators associate left); the
    // right child needs parens at equal precedence to preserve the tree.
    bool lp = precedence(e.lhs->kind) < prec;
    bool rp = precedence(e.rhs->kind) <= prec;
    if (lp) out += "(";
    render(*e.lhs, out);
    if (lp) out += ")";
    out += op;
    if (rp) out += "(";
    render(*e.rhs, out);
    if (rp) out += ")";
}

}  // namespace

ExprPtr parse_expression(std::string_view text) {
    Parser p{text};
    ExprPtr e = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("trailing characters after expression", p.pos);
    return e;
}

std::string render_expression(const Expr& e) {
    std::string out;
    render(e, out);
    return out;
}

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Expr::Kind::literal) return a.value == b.value;
    return expr_equal(*a.lhs, *b.lhs) && expr_equal(*a.rhs, *b.rhs);
}

Nat evaluate(const Expr& e, const ProjectiveArithmetic& A) {
    switch (e.kind) {
        case Expr::Kind::literal: return e.value;
        case Expr::Kind::add: return A.add(evaluate(*e.lhs, A), evaluate(*e.rhs, A));
        case Expr::Kind::mul: return A.mul(evaluate(*e.lhs, A), evaluate(*e.rhs, A));
    }
    throw std::logic_error("unreachable");
}

namespace {

void collect_chain(const Expr& e, Expr::Kind op, const ProjectiveArithmetic& A,
                   std::vector<Nat>& out) {
    if (e.kind == op) {
        collect_chain(*e.lhs, op, A, out);
        collect_chain(*e.rhs, op, A, out);
    } else {
        out.push_back(evaluate_nary(e, A));
    }
}

}  // namespace

Nat evaluate_nary(const Expr& e, const ProjectiveArithmetic& A) {
    if (e.kind == Expr::Kind::literal) return e.value;
    std::vector<Nat> operands;
    collect_chain(e, e.kind, A, operands);
    return e.kind == Expr::Kind::add ? A.sum_n(operands) : A.prod_n(operands);
}

}  // namespace nda
