#ifndef MZETA_MODEL_HPP
#define MZETA_MODEL_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mzeta/ring.hpp"

namespace mzeta {

/// Irreducible divisor component: holonomy multiplicity m >= 1 and
/// log-discrepancy nu.
struct Component {
    std::string id;
    int m = 1;
    int nu = 0;

    friend bool operator==(const Component&, const Component&) = default;
};

/// A nonempty intersection stratum: the index set I, the class of its
/// unramified cover (with its cyclic action, hence mu symbols allowed),
/// and the plain geometric class (mu-free).
struct Stratum {
    std::set<std::string> comps;
    RingElem cover;
    RingElem geom;

    friend bool operator==(const Stratum&, const Stratum&) = default;
};

/// The combinatorial shadow of (X, E, Delta, nu): strata absent from the
/// list are empty (class 0).
struct DivisorConfiguration {
    int ambient_dim = 1;
    std::vector<Component> components;
    std::vector<Stratum> strata; // pairwise distinct comps-sets
    std::set<std::string> selection;

    const Component* find_component(const std::string& id) const;
    const Stratum* find_stratum(const std::set<std::string>& comps) const;
    bool has_component(const std::string& id) const { return find_component(id) != nullptr; }

    /// Keep strata sorted by comps-set and drop strata whose classes both
    /// vanish; gives configurations a unique canonical form.
    void canonicalize();

    friend bool operator==(const DivisorConfiguration&, const DivisorConfiguration&) = default;
};

/// Structural violations found by validate(); empty means valid.
std::vector<std::string> validate(const DivisorConfiguration& config);

/// gcd of the multiplicities m_i over i in I; I must be nonempty and valid.
int stratum_gcd(const DivisorConfiguration& config, const std::set<std::string>& ids);

} // namespace mzeta

#endif
