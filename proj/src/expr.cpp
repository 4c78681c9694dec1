#include "ratdyn/expr.hpp"

#include <cctype>

#include "ratdyn/error.hpp"

namespace ratdyn::expr {

namespace {

constexpr long max_exponent = 100000;

NodePtr make(Node::Op op, std::size_t pos, NodePtr lhs = nullptr, NodePtr rhs = nullptr)
{
    auto n = std::make_shared<Node>();
    n->op = op;
    n->pos = pos;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    NodePtr run()
    {
        NodePtr root = sum();
        skip();
        if (i_ != s_.size()) throw SyntaxError(ErrorKind::SyntaxError, i_, "operator or end of input");
        return root;
    }

private:
    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool accept(char c)
    {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    NodePtr sum()
    {
        NodePtr lhs = product();
        for (;;) {
            skip();
            const std::size_t at = i_;
            if (accept('+')) {
                lhs = make(Node::Op::Add, at, lhs, product());
            } else if (accept('-')) {
                lhs = make(Node::Op::Sub, at, lhs, product());
            } else {
                return lhs;
            }
        }
    }

    NodePtr product()
    {
        NodePtr lhs = unary();
        for (;;) {
            skip();
            const std::size_t at = i_;
            if (accept('*')) {
                lhs = make(Node::Op::Mul, at, lhs, unary());
            } else if (accept('/')) {
                lhs = make(Node::Op::Div, at, lhs, unary());
            } else {
                return lhs;
            }
        }
    }

    NodePtr unary()
    {
        skip();
        const std::size_t at = i_;
        if (accept('-')) return make(Node::Op::Neg, at, unary());
        return power();
    }

    NodePtr power()
    {
        NodePtr base = atom();
        skip();
        const std::size_t at = i_;
        if (!accept('^')) return base;
        skip();
        const std::size_t exp_at = i_;
        NodePtr e = unary();
        auto node = std::make_shared<Node>();
        node->op = Node::Op::Pow;
        node->pos = at;
        node->lhs = std::move(base);
        node->rhs = e;
        node->exponent = integer_exponent(e, exp_at);
        return node;
    }

    static long integer_exponent(const NodePtr& e, std::size_t at)
    {
        RatFunc v = RatFunc::zero(Rational(1));
        try {
            v = evaluate(e);
        } catch (const Error&) {
            throw SyntaxError(ErrorKind::ExponentNotInteger, at, "integer exponent");
        }
        if (!v.is_zero() && (!v.is_laurent_polynomial() || v.v() != 0 || v.num().degree() != 0))
            throw SyntaxError(ErrorKind::ExponentNotInteger, at, "constant exponent");
        const Rational c = v.is_zero() ? Rational() : v.num()[0];
        if (!c.is_integer()) throw SyntaxError(ErrorKind::ExponentNotInteger, at, "integer exponent");
        const BigInt& n = c.numerator();
        if (n > max_exponent || n < -max_exponent)
            throw SyntaxError(ErrorKind::ExponentNotInteger, at, "exponent with |e| <= " + std::to_string(max_exponent));
        return n.get_si();
    }

    NodePtr atom()
    {
        skip();
        const std::size_t at = i_;
        if (i_ >= s_.size()) throw SyntaxError(ErrorKind::SyntaxError, at, "number, 'x' or '('");
        const char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            auto n = make(Node::Op::Number, at);
            std::const_pointer_cast<Node>(n)->value = Rational(BigInt(std::string(s_.substr(i_, j - i_))));
            i_ = j;
            return n;
        }
        if (c == 'x') {
            ++i_;
            return make(Node::Op::Var, at);
        }
        if (c == '(') {
            ++i_;
            NodePtr inner = sum();
            if (!accept(')')) throw SyntaxError(ErrorKind::SyntaxError, i_, "')'");
            return inner;
        }
        throw SyntaxError(ErrorKind::SyntaxError, at, "number, 'x' or '('");
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

} // namespace

NodePtr parse(std::string_view text) { return Parser(text).run(); }

RatFunc evaluate(const NodePtr& n)
{
    using Op = Node::Op;
    switch (n->op) {
    case Op::Number: return RatFunc::constant(n->value);
    case Op::Var: return RatFunc::monomial(Rational(1), 1);
    case Op::Neg: return -evaluate(n->lhs);
    case Op::Add: return evaluate(n->lhs) + evaluate(n->rhs);
    case Op::Sub: return evaluate(n->lhs) - evaluate(n->rhs);
    case Op::Mul: return evaluate(n->lhs) * evaluate(n->rhs);
    case Op::Div: return evaluate(n->lhs) / evaluate(n->rhs);
    case Op::Pow: return evaluate(n->lhs).pow(n->exponent);
    }
    fail(ErrorKind::Internal, "unknown expression node");
}

std::string print(const NodePtr& n)
{
    using Op = Node::Op;
    auto bin = [&](const char* op) { return "(" + print(n->lhs) + " " + op + " " + print(n->rhs) + ")"; };
    switch (n->op) {
    case Op::Number:
        if (n->value.is_integer() && n->value.sign() >= 0) return n->value.to_string();
        return "(" + n->value.to_string() + ")";
    case Op::Var: return "x";
    case Op::Neg: return "(-" + print(n->lhs) + ")";
    case Op::Add: return bin("+");
    case Op::Sub: return bin("-");
    case Op::Mul: return bin("*");
    case Op::Div: return bin("/");
    case Op::Pow: return "(" + print(n->lhs) + "^" + print(n->rhs) + ")";
    }
    fail(ErrorKind::Internal, "unknown expression node");
}

bool structurally_equal(const NodePtr& a, const NodePtr& b)
{
    if (!a || !b) return !a && !b;
    if (a->op != b->op) return false;
    if (a->op == Node::Op::Number) return a->value == b->value;
    if (a->op == Node::Op::Pow && a->exponent != b->exponent) return false;
    return structurally_equal(a->lhs, b->lhs) && structurally_equal(a->rhs, b->rhs);
}

} // namespace ratdyn::expr
