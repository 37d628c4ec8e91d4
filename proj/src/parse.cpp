#include "hyperclass/parse.hpp"

#include <cctype>

#include "hyperclass/errors.hpp"

namespace hyperclass {

namespace {

class Parser {
public:
    Parser(const std::string& s, Sym var) : s_(s), var_(var) {}

    DiffOperator run() {
        DiffOperator r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw PreconditionError("parse error in '" + s_ + "' at " + std::to_string(pos_) + ": " + what);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    DiffOperator constant(const GaussRational& c) const { return DiffOperator::mult(var_, RatFun(c)); }

    static RatFun as_function(const DiffOperator& op, const Parser& p) {
        if (op.order() > 0) p.fail("expected a function, found a differential operator");
        return op.coeff(0);
    }

    DiffOperator expr() {
        DiffOperator r = term();
        for (;;) {
            if (accept('+'))
                r = r + term();
            else if (accept('-'))
                r = r - term();
            else
                return r;
        }
    }

    DiffOperator term() {
        DiffOperator r = unary();
        for (;;) {
            if (accept('*'))
                r = r * unary();
            else if (accept('/')) {
                RatFun d = as_function(unary(), *this);
                if (d.is_zero()) fail("division by zero");
                r = (RatFun(1) / d) * r;
            } else
                return r;
        }
    }

    DiffOperator unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    DiffOperator power() {
        DiffOperator base = atom();
        if (!accept('^')) return base;
        bool negative = accept('-');
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer exponent");
        int n = std::stoi(s_.substr(start, pos_ - start));
        if (negative) {
            RatFun f = as_function(base, *this);
            return DiffOperator::mult(var_, f.pow(-n));
        }
        DiffOperator r = constant(GaussRational(1));
        for (int k = 0; k < n; ++k) r = r * base;
        return r;
    }

    DiffOperator atom() {
        skip();
        if (accept('(')) {
            DiffOperator r = expr();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return constant(GaussRational::parse(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (name == "D") return DiffOperator::d(var_);
            if (name == "i") return constant(GaussRational::i());
            static const std::pair<const char*, Sym> names[] = {
                {"w", Sym::w},         {"v", Sym::v},         {"alpha", Sym::alpha}, {"beta", Sym::beta},
                {"mu", Sym::mu},       {"theta", Sym::theta}, {"lambda", Sym::lambda}};
            for (const auto& [n, s] : names)
                if (name == n) return DiffOperator::mult(var_, RatFun::var(s));
            fail("unknown name '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    size_t pos_ = 0;
    Sym var_;
};

}  // namespace

DiffOperator parse_operator(const std::string& text, Sym var) { return Parser(text, var).run(); }

RatFun parse_ratfun(const std::string& text) {
    DiffOperator op = parse_operator(text, Sym::w);
    if (op.order() > 0) throw PreconditionError("expected a function: " + text);
    return op.coeff(0);
}

MultiPoly parse_poly(const std::string& text) {
    RatFun f = parse_ratfun(text);
    if (!f.is_polynomial()) throw PreconditionError("expected a polynomial: " + text);
    return f.num() * (GaussRational(1) / f.den().constant_term());
}

}  // namespace hyperclass
