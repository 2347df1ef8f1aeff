#include "mzeta/model.hpp"

#include <algorithm>
#include <numeric>

#include "mzeta/errors.hpp"

namespace mzeta {

const Component* DivisorConfiguration::find_component(const std::string& id) const {
    for (const auto& c : components)
        if (c.id == id) return &c;
    return nullptr;
}

const Stratum* DivisorConfiguration::find_stratum(const std::set<std::string>& comps) const {
    for (const auto& s : strata)
        if (s.comps == comps) return &s;
    return nullptr;
}

void DivisorConfiguration::canonicalize() {
    std::erase_if(strata, [](const Stratum& s) { return s.cover.is_zero() && s.geom.is_zero(); });
    std::sort(strata.begin(), strata.end(),
              [](const Stratum& a, const Stratum& b) { return a.comps < b.comps; });
}

std::vector<std::string> validate(const DivisorConfiguration& config) {
    std::vector<std::string> out;
    if (config.ambient_dim < 1) out.push_back("ambient_dim must be >= 1");

    std::set<std::string> ids;
    for (const auto& c : config.components) {
        if (!ids.insert(c.id).second) out.push_back("duplicate component id '" + c.id + "'");
        if (c.m < 1)
            out.push_back("component '" + c.id + "': finite-type: m must be >= 1 (got " +
                          std::to_string(c.m) + ")");
    }

    std::set<std::set<std::string>> seen;
    for (const auto& s : config.strata) {
        if (s.comps.empty()) {
            out.push_back("stratum with empty component set");
            continue;
        }
        if (!seen.insert(s.comps).second) out.push_back("duplicate stratum component set");
        for (const auto& id : s.comps)
            if (!ids.count(id)) out.push_back("dangling component id '" + id + "' in stratum");
        if (static_cast<int>(s.comps.size()) > config.ambient_dim)
            out.push_back("stratum of " + std::to_string(s.comps.size()) +
                          " components exceeds ambient_dim " + std::to_string(config.ambient_dim));
        if (s.geom.contains_mu())
            out.push_back("geometric class of a stratum contains mu symbols");
    }

    for (const auto& id : config.selection)
        if (!ids.count(id)) out.push_back("dangling component id '" + id + "' in selection");

    return out;
}

int stratum_gcd(const DivisorConfiguration& config, const std::set<std::string>& ids) {
    if (ids.empty()) throw DomainError("stratum_gcd requires a nonempty component set");
    int g = 0;
    for (const auto& id : ids) {
        const Component* c = config.find_component(id);
        if (!c) throw DomainError("stratum_gcd: unknown component id '" + id + "'");
        g = std::gcd(g, c->m);
    }
    return g;
}

} // namespace mzeta
