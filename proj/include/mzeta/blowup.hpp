#ifndef MZETA_BLOWUP_HPP
#define MZETA_BLOWUP_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mzeta/model.hpp"
#include "mzeta/series.hpp"

namespace mzeta {

/// Classes of one center stratum Z cap E^o_{I u K}, indexed by the set K of
/// transversal components cutting it out.
struct CenterClasses {
    RingElem cover;
    RingElem geom;

    friend bool operator==(const CenterClasses&, const CenterClasses&) = default;
};

/// Combinatorial description of a blow-up center Z: the maximal containing
/// set I (center_in), the codimension c of Z inside E_I, the components
/// meeting Z transversally, and — when c >= 1 — the classes of the center's
/// strata. When c == 0 the center is E_I itself and the classes default to
/// the configuration's own strata.
struct BlowupSpec {
    std::set<std::string> center_in;
    int codim = 0;
    std::set<std::string> transversal;
    std::map<std::set<std::string>, CenterClasses> center_strata;
    std::string new_id;

    friend bool operator==(const BlowupSpec&, const BlowupSpec&) = default;
};

/// Structural checks; empty result means the spec is applicable.
std::vector<std::string> validate_blowup(const DivisorConfiguration& config,
                                         const BlowupSpec& spec);

/// The transformed configuration: fresh exceptional component with
/// m* = sum m_i and nu* = sum nu_i + codim, center strata removed or
/// reduced, exceptional strata added with their multiplier classes.
DivisorConfiguration apply_blowup(const DivisorConfiguration& config, const BlowupSpec& spec);

struct InvarianceReport {
    bool zeta_equal = false;
    bool naive_equal = false;
    bool equal = false;          // both checks passed
    RationalSeries witness;      // zero when equal; else the zeta difference
};

/// Exact comparison of Z and Z_naive before and after the blow-up.
InvarianceReport verify_invariance(const DivisorConfiguration& config, const BlowupSpec& spec);

/// Left fold of apply_blowup; a failing step reports its index.
DivisorConfiguration apply_script(const DivisorConfiguration& config,
                                  const std::vector<BlowupSpec>& specs);

} // namespace mzeta

#endif
