#ifndef MZETA_SERIES_HPP
#define MZETA_SERIES_HPP

#include <map>
#include <string>
#include <vector>

#include "mzeta/ring.hpp"
#include "mzeta/tpoly.hpp"

namespace mzeta {

/// Key of a geometric factor A/(1-A) with A = L^{-nu} T^m. The factor is
/// determined by the value pair (nu, m) alone, never by which component it
/// came from; m must be strictly positive.
struct FactorKey {
    int nu;
    int m;

    FactorKey(int nu_, int m_) : nu(nu_), m(m_) {
        if (m < 1) throw DomainError("factor requires multiplicity m >= 1, got m = " + std::to_string(m_));
    }

    friend auto operator<=>(const FactorKey& a, const FactorKey& b) = default;
};

/// One summand coeff * prod A_f/(1 - A_f); an empty factor list is a plain
/// ring element sitting inside the series module.
struct RationalTerm {
    RingElem coeff;
    std::vector<FactorKey> factors; // sorted
};

/// Finite sum of rational terms, kept in canonical form: terms sorted by
/// factor multiset, one term per multiset, no zero coefficients.
class RationalSeries {
public:
    RationalSeries() = default;

    static RationalSeries constant(const RingElem& c) { return term(c, {}); }
    static RationalSeries term(const RingElem& coeff, std::vector<FactorKey> factors);

    bool is_zero_form() const { return terms_.empty(); }
    const std::vector<RationalTerm>& terms() const { return terms_; }

    /// Coefficient attached to an exact factor multiset (zero if absent).
    RingElem coeff_of(const std::vector<FactorKey>& sorted_factors) const;

    RationalSeries& operator+=(const RationalSeries& o);
    friend RationalSeries operator+(RationalSeries a, const RationalSeries& b) { return a += b; }
    RationalSeries operator-() const;
    friend RationalSeries operator-(RationalSeries a, const RationalSeries& b) { return a += -b; }
    RationalSeries scaled(const RingElem& c) const;

    /// Literal identity of canonical forms (stronger than series_equal).
    friend bool operator==(const RationalSeries& a, const RationalSeries& b);

private:
    void insert_term(const RingElem& coeff, std::vector<FactorKey> factors);
    std::vector<RationalTerm> terms_;
};

/// Common denominator prod (1 - L^{-nu} T^m)^{e(nu,m)} with e the maximal
/// multiplicity of (nu,m) across terms, together with the matching numerator.
struct NormalForm {
    TPoly numerator;
    std::map<FactorKey, int> denominator;
};
NormalForm over_common_denominator(const RationalSeries& s);

/// True iff a - b is identically zero as a rational function: the
/// cross-multiplied numerator over the common denominator vanishes.
bool series_equal(const RationalSeries& a, const RationalSeries& b);

/// The T -> infinity limit: each product of k factors contributes (-1)^k,
/// constants pass through. Defined because every factor has m >= 1.
RingElem series_limit(const RationalSeries& s);

/// 1 - L^{-nu} T^m as a T-polynomial.
TPoly one_minus_a(const FactorKey& f);
/// L^{-nu} T^m as a T-polynomial.
TPoly a_monomial(const FactorKey& f);

} // namespace mzeta

#endif
