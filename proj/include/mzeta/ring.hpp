#ifndef MZETA_RING_HPP
#define MZETA_RING_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mzeta/numbers.hpp"
#include "mzeta/symbol.hpp"

namespace mzeta {

/// A monomial L^e * prod sym_i^{a_i}: e may be negative (L is invertible),
/// symbol exponents are strictly positive and the list is sorted by symbol.
struct Monomial {
    long l_exp = 0;
    std::vector<std::pair<Symbol, int>> syms;

    bool is_unit() const { return l_exp == 0 && syms.empty(); }

    // Canonical term order: symbol part lexicographically (symbol-free terms
    // first), then descending L-exponent. Map iteration order is display order.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.syms != b.syms) return a.syms < b.syms;
        return a.l_exp > b.l_exp;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) = default;
};

/// Element of Z[L, L^-1, symbols]: a free commutative ring on the opaque
/// symbols with the Lefschetz class L inverted. All values are immutable in
/// spirit: operations return fresh elements and never mutate shared state.
class RingElem {
public:
    RingElem() = default;
    RingElem(long v) { add_term(Monomial{}, Int(v)); }
    explicit RingElem(Int v) { add_term(Monomial{}, std::move(v)); }

    static RingElem lefschetz(long exp = 1) {
        RingElem r;
        r.add_term(Monomial{exp, {}}, Int(1));
        return r;
    }
    static RingElem symbol(const Symbol& s, int exp = 1) {
        RingElem r;
        r.add_term(Monomial{0, {{s, exp}}}, Int(1));
        return r;
    }
    static RingElem monomial(Int coeff, long l_exp, std::vector<std::pair<Symbol, int>> syms);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit()); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Int>& terms() const { return terms_; }

    /// Every symbol occurring with nonzero exponent.
    std::set<Symbol> symbols() const;
    bool contains_mu() const;
    bool uses_lefschetz() const;

    RingElem& operator+=(const RingElem& o);
    RingElem& operator-=(const RingElem& o);
    RingElem operator-() const;
    friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
    friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
    friend RingElem operator*(const RingElem& a, const RingElem& b);
    RingElem& operator*=(const RingElem& o) { return *this = *this * o; }

    /// Exact power. Negative exponents are defined only for unit monomials
    /// +-L^k and raise a DomainError otherwise.
    RingElem pow(long n) const;

    friend bool operator==(const RingElem& a, const RingElem& b) { return a.terms_ == b.terms_; }

    /// Canonical display form; parses back to the same element.
    std::string str() const;

    void add_term(const Monomial& m, Int c);

private:
    std::map<Monomial, Int> terms_;
};

/// (L - 1)^k for k >= 0.
RingElem l_minus_one_pow(int k);

/// L^{k-1} + ... + L + 1 (class of P^{k-1}; zero when k == 0).
RingElem projective_space_class(int k);

} // namespace mzeta

#endif
