#include "mzeta/tpoly.hpp"

#include <sstream>
#include <vector>

namespace mzeta {

void TPoly::set(int t_exp, const RingElem& c) {
    if (c.is_zero())
        coeffs_.erase(t_exp);
    else
        coeffs_[t_exp] = c;
}

TPoly TPoly::monomial(const RingElem& coeff, int t_exp) {
    TPoly p;
    p.set(t_exp, coeff);
    return p;
}

TPoly& TPoly::operator+=(const TPoly& o) {
    for (const auto& [t, c] : o.coeffs_) {
        auto it = coeffs_.find(t);
        if (it == coeffs_.end()) {
            coeffs_.emplace(t, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
    for (const auto& [t, c] : o.coeffs_) {
        auto it = coeffs_.find(t);
        if (it == coeffs_.end()) {
            coeffs_.emplace(t, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
    TPoly r;
    for (const auto& [ta, ca] : a.coeffs_)
        for (const auto& [tb, cb] : b.coeffs_) {
            RingElem prod = ca * cb;
            auto it = r.coeffs_.find(ta + tb);
            if (it == r.coeffs_.end()) {
                if (!prod.is_zero()) r.coeffs_.emplace(ta + tb, std::move(prod));
            } else {
                it->second += prod;
                if (it->second.is_zero()) r.coeffs_.erase(it);
            }
        }
    return r;
}

std::string TPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (t == 1)
            os << "*T";
        else if (t > 1)
            os << "*T^" << t;
    }
    return os.str();
}

namespace {

// Dense lexicographic comparison of sorted exponent vectors (missing symbol
// = exponent 0, earlier symbol more significant). Unlike the sparse pair-list
// order this is translation invariant, which long division requires.
bool syms_less(const std::vector<std::pair<Symbol, int>>& a,
               const std::vector<std::pair<Symbol, int>>& b) {
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first == ib->first) {
            if (ia->second != ib->second) return ia->second < ib->second;
            ++ia, ++ib;
        } else if (ia->first < ib->first) {
            return false; // a positive where b is zero
        } else {
            return true;
        }
    }
    return ib != b.end();
}

// Fully expanded monomial of Z[L, L^-1, symbols][T]; used only for division.
struct FullMono {
    int t = 0;
    long l = 0;
    std::vector<std::pair<Symbol, int>> syms;

    friend bool operator<(const FullMono& a, const FullMono& b) {
        if (a.t != b.t) return a.t < b.t;
        if (a.l != b.l) return a.l < b.l;
        return syms_less(a.syms, b.syms);
    }
    friend bool operator==(const FullMono& a, const FullMono& b) = default;
};

using FlatPoly = std::map<FullMono, Int>;

FlatPoly flatten(const TPoly& p) {
    FlatPoly out;
    for (const auto& [t, c] : p.coeffs())
        for (const auto& [m, coeff] : c.terms()) out.emplace(FullMono{t, m.l_exp, m.syms}, coeff);
    return out;
}

long min_l_exp(const FlatPoly& p) {
    long m = 0;
    bool first = true;
    for (const auto& [fm, c] : p) {
        if (first || fm.l < m) m = fm.l;
        first = false;
    }
    return m;
}

void shift_l(FlatPoly& p, long delta) {
    if (delta == 0) return;
    FlatPoly out;
    for (auto& [fm, c] : p) {
        FullMono m = fm;
        m.l += delta;
        out.emplace(std::move(m), std::move(c));
    }
    p = std::move(out);
}

// componentwise divisibility of the symbol parts; exponents of b must fit in a
bool syms_divide(const std::vector<std::pair<Symbol, int>>& b,
                 const std::vector<std::pair<Symbol, int>>& a) {
    auto ia = a.begin();
    for (const auto& [s, e] : b) {
        while (ia != a.end() && ia->first < s) ++ia;
        if (ia == a.end() || !(ia->first == s) || ia->second < e) return false;
    }
    return true;
}

std::vector<std::pair<Symbol, int>> syms_quotient(const std::vector<std::pair<Symbol, int>>& a,
                                                  const std::vector<std::pair<Symbol, int>>& b) {
    std::vector<std::pair<Symbol, int>> out;
    auto ib = b.begin();
    for (const auto& [s, e] : a) {
        int sub = 0;
        if (ib != b.end() && ib->first == s) {
            sub = ib->second;
            ++ib;
        }
        if (e - sub > 0) out.emplace_back(s, e - sub);
    }
    return out;
}

void add_flat(FlatPoly& p, const FullMono& m, const Int& c) {
    if (c == 0) return;
    auto it = p.find(m);
    if (it == p.end()) {
        p.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

TPoly unflatten(const FlatPoly& p, long l_shift) {
    TPoly out;
    for (const auto& [fm, c] : p)
        out += TPoly::monomial(RingElem::monomial(c, fm.l + l_shift, fm.syms), fm.t);
    return out;
}

} // namespace

std::optional<TPoly> exact_divide(const TPoly& numerator, const TPoly& divisor) {
    if (divisor.is_zero()) throw DomainError("exact_divide: divisor is zero");
    if (numerator.is_zero()) return TPoly();

    FlatPoly rem = flatten(numerator);
    FlatPoly div = flatten(divisor);

    // L is a unit: divisibility is decided in the ordinary polynomial ring
    // after removing the L-content from both operands.
    long shift_n = min_l_exp(rem);
    long shift_d = min_l_exp(div);
    shift_l(rem, -shift_n);
    shift_l(div, -shift_d);

    const auto& [dm, dc] = *div.rbegin();
    FlatPoly quot;
    while (!rem.empty()) {
        const auto& [rm, rc] = *rem.rbegin();
        if (rm.t < dm.t || rm.l < dm.l || !syms_divide(dm.syms, rm.syms)) return std::nullopt;
        if (rc % dc != 0) return std::nullopt;
        FullMono qm{rm.t - dm.t, rm.l - dm.l, syms_quotient(rm.syms, dm.syms)};
        Int qc = rc / dc;
        for (const auto& [m, c] : div) {
            FullMono prod{qm.t + m.t, qm.l + m.l, {}};
            // merge sorted exponent vectors
            auto ia = qm.syms.begin();
            auto ib = m.syms.begin();
            while (ia != qm.syms.end() && ib != m.syms.end()) {
                if (ia->first == ib->first) {
                    prod.syms.emplace_back(ia->first, ia->second + ib->second);
                    ++ia, ++ib;
                } else if (ia->first < ib->first) {
                    prod.syms.push_back(*ia++);
                } else {
                    prod.syms.push_back(*ib++);
                }
            }
            prod.syms.insert(prod.syms.end(), ia, qm.syms.end());
            prod.syms.insert(prod.syms.end(), ib, m.syms.end());
            add_flat(rem, prod, -qc * c);
        }
        add_flat(quot, qm, qc);
    }
    return unflatten(quot, shift_n - shift_d);
}

} // namespace mzeta
