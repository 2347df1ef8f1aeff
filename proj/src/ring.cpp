#include "mzeta/ring.hpp"

#include <algorithm>
#include <sstream>

#include "mzeta/errors.hpp"

namespace mzeta {

void RingElem::add_term(const Monomial& m, Int c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, std::move(c));
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

RingElem RingElem::monomial(Int coeff, long l_exp, std::vector<std::pair<Symbol, int>> syms) {
    std::sort(syms.begin(), syms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // merge repeated symbols, drop zero exponents
    std::vector<std::pair<Symbol, int>> merged;
    for (auto& [s, e] : syms) {
        if (!merged.empty() && merged.back().first == s)
            merged.back().second += e;
        else
            merged.emplace_back(s, e);
    }
    std::erase_if(merged, [](const auto& p) { return p.second == 0; });
    for (const auto& [s, e] : merged)
        if (e < 0) throw DomainError("symbol '" + s.display() + "' is not invertible");
    RingElem r;
    r.add_term(Monomial{l_exp, std::move(merged)}, std::move(coeff));
    return r;
}

bool RingElem::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_unit() && terms_.begin()->second == 1;
}

std::set<Symbol> RingElem::symbols() const {
    std::set<Symbol> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [s, e] : m.syms) out.insert(s);
    return out;
}

bool RingElem::contains_mu() const {
    for (const auto& [m, c] : terms_)
        for (const auto& [s, e] : m.syms)
            if (s.is_mu()) return true;
    return false;
}

bool RingElem::uses_lefschetz() const {
    for (const auto& [m, c] : terms_)
        if (m.l_exp != 0) return true;
    return false;
}

RingElem& RingElem::operator+=(const RingElem& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

RingElem RingElem::operator-() const {
    RingElem r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

namespace {

Monomial mul_mono(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.l_exp = a.l_exp + b.l_exp;
    out.syms.reserve(a.syms.size() + b.syms.size());
    auto ia = a.syms.begin(), ib = b.syms.begin();
    while (ia != a.syms.end() && ib != b.syms.end()) {
        if (ia->first == ib->first) {
            out.syms.emplace_back(ia->first, ia->second + ib->second);
            ++ia, ++ib;
        } else if (ia->first < ib->first) {
            out.syms.push_back(*ia++);
        } else {
            out.syms.push_back(*ib++);
        }
    }
    out.syms.insert(out.syms.end(), ia, a.syms.end());
    out.syms.insert(out.syms.end(), ib, b.syms.end());
    return out;
}

} // namespace

RingElem operator*(const RingElem& a, const RingElem& b) {
    RingElem r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add_term(mul_mono(ma, mb), ca * cb);
    return r;
}

RingElem RingElem::pow(long n) const {
    if (n < 0) {
        if (terms_.size() != 1)
            throw DomainError("non-invertible element: negative power of a non-unit");
        const auto& [m, c] = *terms_.begin();
        if (!m.syms.empty() || (c != 1 && c != -1))
            throw DomainError("non-invertible element: negative power of a non-unit");
        RingElem r;
        Int coeff = (c == -1 && (n % 2 != 0)) ? Int(-1) : Int(1);
        r.add_term(Monomial{m.l_exp * n, {}}, coeff);
        return r;
    }
    RingElem acc(1);
    RingElem base = *this;
    long e = n;
    while (e > 0) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

std::string RingElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::vector<std::string> parts;
        if (mag != 1 || m.is_unit()) parts.push_back(mag.str());
        if (m.l_exp != 0) parts.push_back(m.l_exp == 1 ? "L" : "L^" + std::to_string(m.l_exp));
        for (const auto& [s, e] : m.syms)
            parts.push_back(e == 1 ? s.display() : s.display() + "^" + std::to_string(e));
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) os << "*";
            os << parts[i];
        }
    }
    return os.str();
}

RingElem l_minus_one_pow(int k) {
    return (RingElem::lefschetz() - RingElem(1)).pow(k);
}

RingElem projective_space_class(int k) {
    RingElem r;
    for (int i = 0; i < k; ++i) r += RingElem::lefschetz(i);
    return r;
}

} // namespace mzeta
