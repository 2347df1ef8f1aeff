#ifndef MZETA_SYMBOL_HPP
#define MZETA_SYMBOL_HPP

#include <compare>
#include <string>

#include "mzeta/errors.hpp"

namespace mzeta {

/// An opaque generator of the coefficient ring: either the class of a
/// finite cyclic set `mu(k)` (k-th roots of unity with the regular action)
/// or a named class `W<identifier>` standing for a stratum cover or any
/// other variety class the user does not want to expand.
///
/// Symbols satisfy no relations beyond free commutativity.
class Symbol {
public:
    static Symbol mu(int k) {
        if (k < 1) throw DomainError("mu(k) requires k >= 1, got k = " + std::to_string(k));
        Symbol s;
        s.mu_k_ = k;
        return s;
    }

    static Symbol named(std::string name) {
        if (name.size() < 2 || name[0] != 'W')
            throw DomainError("named symbols are 'W' plus an identifier: '" + name + "'");
        Symbol s;
        s.name_ = std::move(name);
        return s;
    }

    bool is_mu() const { return mu_k_ > 0; }
    int mu_order() const { return mu_k_; }
    const std::string& raw_name() const { return name_; }

    std::string display() const {
        return is_mu() ? "mu(" + std::to_string(mu_k_) + ")" : name_;
    }

    // mu symbols sort before named ones; mu by order, named by name.
    friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
        if (a.is_mu() != b.is_mu()) return a.is_mu() ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.is_mu()) return a.mu_k_ <=> b.mu_k_;
        return a.name_ <=> b.name_;
    }
    friend bool operator==(const Symbol& a, const Symbol& b) = default;

private:
    Symbol() = default;
    int mu_k_ = 0;
    std::string name_;
};

} // namespace mzeta

#endif
