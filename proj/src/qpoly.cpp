#include "mzeta/qpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "mzeta/errors.hpp"

namespace mzeta {

namespace {

long total_degree(const QMono& m) {
    long d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int int_lcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    Int g = int_gcd(a, b);
    Int r = (a / g) * b;
    return r < 0 ? Int(-r) : r;
}

// gcd of rationals: gcd of numerators over lcm of denominators
Rat rat_gcd(const Rat& a, const Rat& b) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (a == 0) return b < 0 ? Rat(-b) : b;
    if (b == 0) return a < 0 ? Rat(-a) : a;
    return Rat(int_gcd(numerator(a), numerator(b)), int_lcm(denominator(a), denominator(b)));
}

} // namespace

bool QMonoOrder::operator()(const QMono& a, const QMono& b) const {
    long da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    // dense lexicographic tie-break (missing variable = exponent 0); the
    // graded order must be translation invariant for exact division
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first == ib->first) {
            if (ia->second != ib->second) return ia->second > ib->second;
            ++ia, ++ib;
        } else if (ia->first < ib->first) {
            return ia->second > 0;
        } else {
            return ib->second < 0;
        }
    }
    if (ia != a.end()) return ia->second > 0;
    if (ib != b.end()) return ib->second < 0;
    return false;
}

void QPoly::add_term(QMono m, Rat c) {
    if (c == 0) return;
    std::erase_if(m, [](const auto& p) { return p.second == 0; });
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), std::move(c));
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QPoly QPoly::variable(const std::string& name, int exp) {
    QPoly p;
    QMono m;
    if (exp != 0) m[name] = exp;
    p.add_term(std::move(m), Rat(1));
    return p;
}

Rat QPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw DomainError("polynomial is not constant: " + str());
    return terms_.begin()->second;
}

bool QPoly::is_laurent() const {
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m)
            if (e < 0) return true;
    return false;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

QPoly QPoly::operator-() const {
    QPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            QMono m = ma;
            for (const auto& [v, e] : mb) {
                auto it = m.find(v);
                if (it == m.end())
                    m.emplace(v, e);
                else if ((it->second += e) == 0)
                    m.erase(it);
            }
            r.add_term(std::move(m), ca * cb);
        }
    return r;
}

QPoly QPoly::pow(long n) const {
    if (n < 0) throw DomainError("QPoly::pow requires a nonnegative exponent");
    QPoly acc(1);
    QPoly base = *this;
    while (n > 0) {
        if (n & 1) acc *= base;
        n >>= 1;
        if (n) base = base * base;
    }
    return acc;
}

Rat QPoly::eval(const std::map<std::string, Rat>& values) const {
    Rat out(0);
    for (const auto& [m, c] : terms_) {
        Rat v = c;
        for (const auto& [var, e] : m) {
            auto it = values.find(var);
            if (it == values.end()) throw DomainError("no value for variable '" + var + "'");
            Rat base = it->second;
            int exp = e;
            if (exp < 0) {
                if (base == 0) throw DomainError("evaluation requires inverting zero");
                base = Rat(1) / base;
                exp = -exp;
            }
            for (int i = 0; i < exp; ++i) v *= base;
        }
        out += v;
    }
    return out;
}

Rat QPoly::content() const {
    Rat g(0);
    for (const auto& [m, c] : terms_) g = rat_gcd(g, c);
    return g;
}

std::string QPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::vector<std::string> parts;
        if (mag != 1 || m.empty()) parts.push_back(mag.str());
        for (const auto& [v, e] : m)
            parts.push_back(e == 1 ? v : v + "^" + std::to_string(e));
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) os << "*";
            os << parts[i];
        }
    }
    return os.str();
}

std::optional<QPoly> exact_divide(const QPoly& numerator, const QPoly& divisor) {
    if (divisor.is_zero()) throw DomainError("exact_divide: divisor is zero");
    if (numerator.is_laurent() || divisor.is_laurent())
        throw DomainError("exact_divide requires nonnegative exponents");
    if (numerator.is_zero()) return QPoly();

    QPoly rem = numerator;
    const auto& [dm, dc] = *divisor.terms().begin(); // graded-lex leading term
    QPoly quot;
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms().begin();
        QMono qm = rm;
        bool ok = true;
        for (const auto& [v, e] : dm) {
            auto it = qm.find(v);
            if (it == qm.end() || it->second < e) {
                ok = false;
                break;
            }
            if ((it->second -= e) == 0) qm.erase(it);
        }
        if (!ok) return std::nullopt;
        QPoly qterm;
        qterm.add_term(qm, rc / dc);
        quot += qterm;
        rem -= qterm * divisor;
    }
    return quot;
}

std::vector<Rat> rational_roots(const QPoly& p, const std::string& var) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (p.is_zero()) throw DomainError("rational_roots of the zero polynomial");
    // dense integer coefficient vector
    int deg = 0;
    for (const auto& [m, c] : p.terms()) {
        int e = 0;
        for (const auto& [v, ex] : m) {
            if (v != var) throw DomainError("rational_roots: polynomial is not univariate in " + var);
            e = ex;
        }
        if (e < 0) throw DomainError("rational_roots requires nonnegative exponents");
        deg = std::max(deg, e);
    }
    Int scale(1);
    for (const auto& [m, c] : p.terms()) scale = int_lcm(scale, denominator(c));
    std::vector<Int> cf(static_cast<size_t>(deg) + 1, Int(0));
    for (const auto& [m, c] : p.terms()) {
        int e = m.empty() ? 0 : m.begin()->second;
        Rat scaled = c * Rat(scale);
        cf[static_cast<size_t>(e)] = numerator(scaled);
    }

    std::vector<Rat> roots;
    // roots at zero
    size_t low = 0;
    while (low < cf.size() && cf[low] == 0) ++low;
    for (size_t i = 0; i < low; ++i) roots.emplace_back(0);
    cf.erase(cf.begin(), cf.begin() + static_cast<long>(low));

    auto divisors = [](Int n) {
        if (n < 0) n = -n;
        if (n > Int(1000000000000LL))
            throw DomainError("rational_roots: coefficient too large for divisor enumeration");
        std::vector<Int> out;
        for (Int d = 1; d * d <= n; ++d)
            if (n % d == 0) {
                out.push_back(d);
                out.push_back(n / d);
            }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    };

    auto eval_at = [&](const std::vector<Int>& c, const Rat& x) {
        Rat acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Rat(*it);
        return acc;
    };

    // synthetic division by (x - r), exact
    auto deflate = [&](std::vector<Int>& c, const Rat& r) {
        std::vector<Rat> q(c.size() - 1);
        Rat carry(0);
        for (size_t i = c.size(); i-- > 1;) {
            carry = Rat(c[i]) + carry * r;
            q[i - 1] = carry;
        }
        Int lcmden(1);
        for (const auto& x : q) lcmden = int_lcm(lcmden, denominator(x));
        std::vector<Int> out(q.size());
        for (size_t i = 0; i < q.size(); ++i) out[i] = numerator(q[i] * Rat(lcmden));
        c = std::move(out);
    };

    while (cf.size() > 1) {
        std::vector<Int> ps = divisors(cf.front());
        std::vector<Int> qs = divisors(cf.back());
        bool found = false;
        for (const Int& pn : ps) {
            for (const Int& qn : qs) {
                for (int sign : {1, -1}) {
                    Rat cand(sign * pn, qn);
                    if (eval_at(cf, cand) == 0) {
                        roots.push_back(cand);
                        deflate(cf, cand);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break; // remaining factor has no rational roots
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void QRat::normalize() {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = QPoly(1);
        return;
    }
    // clear negative exponents and common monomial content
    std::map<std::string, int> lo;
    for (const QPoly* p : {&num_, &den_})
        for (const auto& [m, c] : p->terms())
            for (const auto& [v, e] : m) {
                auto it = lo.find(v);
                if (it == lo.end())
                    lo[v] = e;
                else
                    it->second = std::min(it->second, e);
            }
    // a variable missing from a monomial has exponent 0
    for (auto& [v, e] : lo) {
        bool everywhere = true;
        for (const QPoly* p : {&num_, &den_})
            for (const auto& [m, c] : p->terms())
                if (!m.count(v)) everywhere = false;
        if (!everywhere) e = std::min(e, 0);
    }
    QMono shift;
    for (const auto& [v, e] : lo)
        if (e != 0) shift[v] = -e;
    if (!shift.empty()) {
        QPoly mono;
        mono.add_term(shift, Rat(1));
        num_ *= mono;
        den_ *= mono;
    }
    Rat g = rat_gcd(num_.content(), den_.content());
    if (den_.terms().begin()->second < 0) g = -g;
    if (g != 1) {
        QPoly inv(Rat(1) / g);
        num_ *= inv;
        den_ *= inv;
    }
}

QRat operator+(const QRat& a, const QRat& b) {
    return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRat operator-(const QRat& a, const QRat& b) {
    return QRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

QRat operator*(const QRat& a, const QRat& b) { return QRat(a.num_ * b.num_, a.den_ * b.den_); }

QRat operator/(const QRat& a, const QRat& b) {
    if (b.is_zero()) throw DomainError("division by zero rational function");
    return QRat(a.num_ * b.den_, a.den_ * b.num_);
}

QRat QRat::operator-() const { return QRat(-num_, den_); }

bool operator==(const QRat& a, const QRat& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

Rat QRat::eval(const std::map<std::string, Rat>& values) const {
    Rat d = den_.eval(values);
    if (d == 0) throw DomainError("evaluation at a pole");
    return num_.eval(values) / d;
}

std::string QRat::str() const {
    if (num_.is_zero()) return "0";
    if (den_.is_constant() && den_.constant_value() == 1) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

QPoly substitute(const RingElem& a, const Substitution& table) {
    QPoly out;
    for (const auto& [m, c] : a.terms()) {
        QPoly v{Rat(c)};
        if (m.l_exp != 0) {
            if (!table.l_image) throw DomainError("no substitution entry for L");
            const QPoly& img = *table.l_image;
            if (m.l_exp > 0) {
                v *= img.pow(m.l_exp);
            } else {
                if (img.terms().size() != 1)
                    throw DomainError("non-invertible image of L for a negative exponent");
                const auto& [im, ic] = *img.terms().begin();
                if (ic == 0) throw DomainError("non-invertible image of L for a negative exponent");
                QPoly inv;
                QMono neg;
                for (const auto& [var, e] : im) neg[var] = -e;
                inv.add_term(std::move(neg), Rat(1) / ic);
                v *= inv.pow(-m.l_exp);
            }
        }
        for (const auto& [s, e] : m.syms) {
            auto it = table.symbol_images.find(s);
            if (it == table.symbol_images.end())
                throw DomainError("no substitution entry for symbol '" + s.display() + "'");
            v *= it->second.pow(e);
        }
        out += v;
    }
    return out;
}

namespace {

class QParser {
public:
    explicit QParser(const std::string& src) : src_(src) {}

    QPoly run() {
        QPoly r = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return r;
    }

private:
    QPoly expr() {
        skip_ws();
        bool neg = eat('-');
        QPoly acc = term();
        if (neg) acc = -acc;
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

    QPoly term() {
        QPoly acc = factor();
        while (true) {
            skip_ws();
            if (!eat('*')) break;
            acc *= factor();
        }
        return acc;
    }

    QPoly factor() {
        QPoly base = atom();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            if (pos_ == start) fail("expected nonnegative integer exponent");
            try {
                return base.pow(std::stol(src_.substr(start, pos_ - start)));
            } catch (const std::out_of_range&) {
                fail("exponent out of range");
            }
        }
        return base;
    }

    QPoly atom() {
        skip_ws();
        if (pos_ >= src_.size()) fail("expected expression");
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            return QPoly(Rat(Int(src_.substr(start, pos_ - start))));
        }
        if (c == '(') {
            ++pos_;
            QPoly inner = expr();
            skip_ws();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            return QPoly::variable(src_.substr(start, pos_ - start));
        }
        fail("expected integer, variable or '('");
    }

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

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, "", static_cast<long>(pos_));
    }

    const std::string& src_;
    size_t pos_ = 0;
};

} // namespace

QPoly parse_qpoly(const std::string& text) { return QParser(text).run(); }

} // namespace mzeta
