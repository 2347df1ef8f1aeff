#include "mzeta/expr.hpp"

#include <cctype>
#include <sstream>

#include "mzeta/errors.hpp"

namespace mzeta {

namespace {

class Parser {
public:
    explicit Parser(const std::string& src) : src_(src) {}

    RingElem ring_elem() {
        RingElem r = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return r;
    }

    RationalSeries series() {
        RationalSeries out;
        skip_ws();
        bool neg = eat('-');
        out += series_term(neg);
        while (true) {
            skip_ws();
            if (eat('+'))
                out += series_term(false);
            else if (eat('-'))
                out += series_term(true);
            else
                break;
        }
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return out;
    }

private:
    RingElem expr() {
        skip_ws();
        RingElem acc;
        bool neg = eat('-');
        RingElem t = term();
        acc = neg ? -t : t;
        while (true) {
            skip_ws();
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    RingElem term() {
        RingElem acc = factor();
        while (true) {
            skip_ws();
            if (!eat('*')) break;
            acc *= factor();
        }
        return acc;
    }

    RingElem factor() {
        RingElem base = atom();
        skip_ws();
        if (eat('^')) {
            long e = signed_int();
            return base.pow(e);
        }
        return base;
    }

    RingElem atom() {
        skip_ws();
        if (pos_ >= src_.size()) fail("expected expression");
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return RingElem(Int(digits()));
        if (c == '(') {
            ++pos_;
            RingElem inner = expr();
            expect(')');
            return inner;
        }
        if (c == 'L' && !is_ident_char(peek_at(pos_ + 1))) {
            ++pos_;
            return RingElem::lefschetz();
        }
        if (src_.compare(pos_, 2, "mu") == 0 && peek_at(pos_ + 2) == '(') {
            pos_ += 3;
            skip_ws();
            long k = to_long(digits());
            if (k < 1) fail("mu requires a positive integer");
            expect(')');
            return RingElem::symbol(Symbol::mu(static_cast<int>(k)));
        }
        if (c == 'W') {
            size_t start = pos_;
            ++pos_;
            while (pos_ < src_.size() && is_ident_char(src_[pos_])) ++pos_;
            if (pos_ - start < 2) fail("expected identifier after 'W'");
            return RingElem::symbol(Symbol::named(src_.substr(start, pos_ - start)));
        }
        fail("expected integer, 'L', 'mu(k)', 'W<name>' or '('");
    }

    // one multiplicative unit of a series term: either a geometric factor
    // A(nu,m)/(1-A(nu,m)) or an ordinary coefficient factor
    RationalSeries series_term(bool negate) {
        RingElem coeff(1);
        std::vector<FactorKey> factors;
        bool any = false;
        while (true) {
            skip_ws();
            if (peek() == 'A' && peek_at(pos_ + 1) == '(') {
                factors.push_back(a_factor());
            } else {
                coeff *= factor();
            }
            any = true;
            skip_ws();
            if (!eat('*')) break;
        }
        if (!any) fail("expected series term");
        if (negate) coeff = -coeff;
        return RationalSeries::term(coeff, std::move(factors));
    }

    FactorKey a_factor() {
        expect('A');
        expect('(');
        long nu = signed_int();
        expect(',');
        long m = signed_int();
        expect(')');
        expect('/');
        expect('(');
        skip_ws();
        if (digits() != "1") fail("expected '1' in factor denominator");
        expect('-');
        expect('A');
        expect('(');
        long nu2 = signed_int();
        expect(',');
        long m2 = signed_int();
        expect(')');
        expect(')');
        if (nu != nu2 || m != m2) fail("mismatched factor A(nu,m)/(1-A(nu,m))");
        if (m < 1) fail("factor requires m >= 1");
        return FactorKey(static_cast<int>(nu), static_cast<int>(m));
    }

    static bool is_ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
    char peek_at(size_t i) const { return i < src_.size() ? src_[i] : '\0'; }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::string digits() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return src_.substr(start, pos_ - start);
    }

    long to_long(const std::string& d) {
        try {
            return std::stol(d);
        } catch (const std::out_of_range&) {
            fail("integer literal out of range");
        }
    }

    long signed_int() {
        skip_ws();
        bool neg = eat('-');
        long v = to_long(digits());
        return neg ? -v : v;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, "", static_cast<long>(pos_));
    }

    const std::string& src_;
    size_t pos_ = 0;
};

} // namespace

RingElem parse_ring_elem(const std::string& text) { return Parser(text).ring_elem(); }

RationalSeries parse_series(const std::string& text) { return Parser(text).series(); }

std::string format_series(const RationalSeries& z) {
    if (z.is_zero_form()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : z.terms()) {
        if (!first) os << " + ";
        first = false;
        std::string cs = t.coeff.str();
        bool wrap = t.coeff.term_count() > 1 || cs[0] == '-';
        os << (wrap ? "(" + cs + ")" : cs);
        for (const auto& f : t.factors) {
            os << " * A(" << f.nu << "," << f.m << ")/(1-A(" << f.nu << "," << f.m << "))";
        }
    }
    return os.str();
}

} // namespace mzeta
