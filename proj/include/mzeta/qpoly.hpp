#ifndef MZETA_QPOLY_HPP
#define MZETA_QPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mzeta/numbers.hpp"
#include "mzeta/ring.hpp"

namespace mzeta {

/// Exponent vector of a monomial in named variables. Exponents may be
/// negative (Laurent) on outputs of substitutions with invertible images;
/// division and root extraction require honest polynomials.
using QMono = std::map<std::string, int>;

struct QMonoOrder {
    // Total degree descending, then lexicographic: map iteration order is
    // display order and the graded-lex leading term comes first.
    bool operator()(const QMono& a, const QMono& b) const;
};

/// Sparse polynomial over Q in named variables.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(Rat c) { add_term({}, std::move(c)); }
    QPoly(long c) { add_term({}, Rat(c)); }

    static QPoly variable(const std::string& name, int exp = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    Rat constant_value() const;
    bool is_laurent() const;
    const std::map<QMono, Rat, QMonoOrder>& terms() const { return terms_; }

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly operator-() const;
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

    QPoly pow(long n) const; // n >= 0

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.terms_ == b.terms_; }

    Rat eval(const std::map<std::string, Rat>& values) const;

    /// Positive gcd of all coefficients (0 for the zero polynomial).
    Rat content() const;

    std::string str() const;

    void add_term(QMono m, Rat c);

private:
    std::map<QMono, Rat, QMonoOrder> terms_;
};

/// Exact polynomial division over Q (nullopt when not divisible).
/// Both operands must be honest polynomials (no negative exponents).
std::optional<QPoly> exact_divide(const QPoly& numerator, const QPoly& divisor);

/// Rational roots of a univariate polynomial in `var`, with multiplicity,
/// sorted. The polynomial must split into rational detection candidates
/// p/q with p dividing the constant and q the leading coefficient.
std::vector<Rat> rational_roots(const QPoly& p, const std::string& var);

/// Fraction of two QPolys, normalized: no negative exponents, common
/// monomial and rational content removed, leading denominator coefficient
/// positive. Equality is exact cross-multiplication.
class QRat {
public:
    QRat() : num_(), den_(1) {}
    QRat(QPoly num, QPoly den);
    explicit QRat(QPoly num) : QRat(std::move(num), QPoly(1)) {}
    QRat(long c) : QRat(QPoly(c)) {}

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend QRat operator+(const QRat& a, const QRat& b);
    friend QRat operator-(const QRat& a, const QRat& b);
    friend QRat operator*(const QRat& a, const QRat& b);
    friend QRat operator/(const QRat& a, const QRat& b);
    QRat operator-() const;

    friend bool operator==(const QRat& a, const QRat& b);

    Rat eval(const std::map<std::string, Rat>& values) const;

    std::string str() const;

private:
    void normalize();
    QPoly num_, den_;
};

/// Substitution table for RingElem evaluation: an image for L and one per
/// symbol. Missing entries for occurring generators raise DomainError;
/// negative L-exponents require a single-term (invertible) L-image.
struct Substitution {
    std::optional<QPoly> l_image;
    std::map<Symbol, QPoly> symbol_images;
};

QPoly substitute(const RingElem& a, const Substitution& table);

/// Parse a polynomial over Q in named variables: integer literals,
/// identifiers, + - * ^, parentheses, unary minus.
QPoly parse_qpoly(const std::string& text);

} // namespace mzeta

#endif
