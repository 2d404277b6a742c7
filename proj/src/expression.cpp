#include "sosq/expression.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <vector>

#include "sosq/errors.hpp"

namespace sosq {

struct Expression::Node {
    enum class Op { Number, Var, Neg, Add, Sub, Mul, Div, Abs, Min, Max, Pow };

    Op op;
    double value = 0.0;
    std::vector<std::shared_ptr<const Node>> args;

    double eval(double x) const
    {
        switch (op) {
        case Op::Number: return value;
        case Op::Var: return x;
        case Op::Neg: return -args[0]->eval(x);
        case Op::Add: return args[0]->eval(x) + args[1]->eval(x);
        case Op::Sub: return args[0]->eval(x) - args[1]->eval(x);
        case Op::Mul: return args[0]->eval(x) * args[1]->eval(x);
        case Op::Div: return args[0]->eval(x) / args[1]->eval(x);
        case Op::Abs: return std::abs(args[0]->eval(x));
        case Op::Pow: return std::pow(args[0]->eval(x), args[1]->eval(x));
        case Op::Min:
        case Op::Max: {
            double acc = args[0]->eval(x);
            for (std::size_t i = 1; i < args.size(); ++i) {
                const double v = args[i]->eval(x);
                acc = op == Op::Min ? std::min(acc, v) : std::max(acc, v);
            }
            return acc;
        }
        }
        return 0.0;
    }
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Op = Expression::Node::Op;

NodePtr make(Op op, std::vector<NodePtr> args = {}, double value = 0.0)
{
    auto n = std::make_shared<Expression::Node>();
    n->op = op;
    n->value = value;
    n->args = std::move(args);
    return n;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr parse_all()
    {
        NodePtr root = expr();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected token");
        return root;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) const
    {
        std::size_t end = pos_;
        if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) {
            while (end < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '.')) {
                ++end;
            }
        } else if (end < text_.size()) {
            ++end;
        }
        std::string token(text_.substr(pos_, end - pos_));
        if (token.empty()) token = "<end>";
        std::ostringstream os;
        os << why << " '" << token << "' at position " << pos_ << " in '" << text_ << "'";
        throw ParseError(os.str(), token, pos_);
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) fail(std::string("expected '") + c + "' but found");
    }

    NodePtr expr()
    {
        NodePtr lhs = term();
        for (;;) {
            if (accept('+')) {
                lhs = make(Op::Add, {lhs, term()});
            } else if (accept('-')) {
                lhs = make(Op::Sub, {lhs, term()});
            } else {
                return lhs;
            }
        }
    }

    NodePtr term()
    {
        NodePtr lhs = unary();
        for (;;) {
            if (accept('*')) {
                lhs = make(Op::Mul, {lhs, unary()});
            } else if (accept('/')) {
                lhs = make(Op::Div, {lhs, unary()});
            } else {
                return lhs;
            }
        }
    }

    NodePtr unary()
    {
        if (accept('-')) return make(Op::Neg, {unary()});
        if (accept('+')) return unary();
        return primary();
    }

    NodePtr primary()
    {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of expression");

        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (accept('(')) {
            NodePtr inner = expr();
            expect(')');
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const std::string_view name = text_.substr(start, pos_ - start);
            if (name == "x") return make(Op::Var);
            Op op;
            if (name == "abs") {
                op = Op::Abs;
            } else if (name == "min") {
                op = Op::Min;
            } else if (name == "max") {
                op = Op::Max;
            } else if (name == "pow") {
                op = Op::Pow;
            } else {
                pos_ = start;
                fail("unknown identifier");
            }
            expect('(');
            std::vector<NodePtr> args{expr()};
            while (accept(',')) args.push_back(expr());
            expect(')');
            const bool arity_ok = (op == Op::Abs && args.size() == 1) ||
                                  (op == Op::Pow && args.size() == 2) ||
                                  ((op == Op::Min || op == Op::Max) && args.size() >= 2);
            if (!arity_ok) {
                pos_ = start;
                fail("wrong number of arguments to");
            }
            return make(op, std::move(args));
        }
        fail("unexpected token");
    }

    NodePtr number()
    {
        double value = 0.0;
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc()) fail("malformed number");
        pos_ += static_cast<std::size_t>(ptr - first);
        return make(Op::Number, {}, value);
    }
};

} // namespace

Expression Expression::parse(std::string_view text)
{
    return Expression(Parser(text).parse_all(), std::string(text));
}

Expression Expression::constant(double value)
{
    std::ostringstream os;
    os.precision(17);
    os << value;
    return Expression(make(Op::Number, {}, value), os.str());
}

double Expression::operator()(double x) const
{
    return root_->eval(x);
}

} // namespace sosq
