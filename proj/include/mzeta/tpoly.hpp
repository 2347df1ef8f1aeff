#ifndef MZETA_TPOLY_HPP
#define MZETA_TPOLY_HPP

#include <map>
#include <optional>
#include <string>

#include "mzeta/ring.hpp"

namespace mzeta {

/// Polynomial in the series variable T with RingElem coefficients, i.e. an
/// element of Z[L, L^-1, symbols][T]. This is where cross-multiplied
/// numerators of rational series live.
class TPoly {
public:
    TPoly() = default;
    explicit TPoly(const RingElem& constant) { set(0, constant); }

    static TPoly monomial(const RingElem& coeff, int t_exp);

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, RingElem>& coeffs() const { return coeffs_; }
    int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(const TPoly& a, const TPoly& b);

    friend bool operator==(const TPoly& a, const TPoly& b) { return a.coeffs_ == b.coeffs_; }

    std::string str() const;

private:
    void set(int t_exp, const RingElem& c);
    std::map<int, RingElem> coeffs_; // t-exponent (>= 0) -> nonzero coefficient
};

/// Exact division in Z[L, L^-1, symbols][T]. Returns the quotient q with
/// q * divisor == numerator, or nullopt when no such q exists. L-powers are
/// units and never obstruct divisibility.
std::optional<TPoly> exact_divide(const TPoly& numerator, const TPoly& divisor);

} // namespace mzeta

#endif
