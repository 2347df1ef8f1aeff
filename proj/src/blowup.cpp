#include "mzeta/blowup.hpp"

#include <algorithm>

#include "mzeta/errors.hpp"
#include "mzeta/zeta.hpp"

namespace mzeta {

namespace {

std::string join_ids(const std::set<std::string>& ids) {
    std::string out = "{";
    bool first = true;
    for (const auto& id : ids) {
        if (!first) out += ",";
        first = false;
        out += id;
    }
    return out + "}";
}

std::vector<std::set<std::string>> subsets_of(const std::set<std::string>& s) {
    std::vector<std::string> elems(s.begin(), s.end());
    if (elems.size() > 20) throw DomainError("transversal set too large to enumerate");
    std::vector<std::set<std::string>> out;
    for (size_t mask = 0; mask < (size_t{1} << elems.size()); ++mask) {
        std::set<std::string> sub;
        for (size_t i = 0; i < elems.size(); ++i)
            if (mask & (size_t{1} << i)) sub.insert(elems[i]);
        out.push_back(std::move(sub));
    }
    return out;
}

std::set<std::string> set_union(const std::set<std::string>& a, const std::set<std::string>& b) {
    std::set<std::string> out = a;
    out.insert(b.begin(), b.end());
    return out;
}

void add_to_stratum(DivisorConfiguration& config, const std::set<std::string>& comps,
                    const RingElem& cover_delta, const RingElem& geom_delta) {
    for (auto& s : config.strata) {
        if (s.comps == comps) {
            s.cover += cover_delta;
            s.geom += geom_delta;
            return;
        }
    }
    config.strata.push_back(Stratum{comps, cover_delta, geom_delta});
}

} // namespace

std::vector<std::string> validate_blowup(const DivisorConfiguration& config,
                                         const BlowupSpec& spec) {
    std::vector<std::string> out;
    const int k = static_cast<int>(spec.center_in.size());
    const int c = spec.codim;

    if (spec.center_in.empty()) out.push_back("center_in must be nonempty");
    for (const auto& id : spec.center_in)
        if (!config.has_component(id)) out.push_back("dangling component id '" + id + "' in center_in");
    for (const auto& id : spec.transversal) {
        if (!config.has_component(id)) out.push_back("dangling component id '" + id + "' in transversal");
        if (spec.center_in.count(id))
            out.push_back("transversal component '" + id + "' also appears in center_in");
    }
    if (c < 0) out.push_back("codim must be >= 0");
    if (!spec.center_in.empty() && c >= 0) {
        if (k + c < 2) out.push_back("ambient codimension < 2 (|center_in| + codim = " +
                                     std::to_string(k + c) + ")");
        if (k + c > config.ambient_dim)
            out.push_back("center codimension " + std::to_string(k + c) + " exceeds ambient_dim " +
                          std::to_string(config.ambient_dim));
    }
    if (spec.new_id.empty()) out.push_back("new_id must be nonempty");
    if (config.has_component(spec.new_id))
        out.push_back("new_id '" + spec.new_id + "' collides with an existing component");

    // the exceptional component joins the selection, so every center stratum
    // that carries a class must itself meet the selection; otherwise the two
    // zeta functions are not comparable
    auto meets_selection = [&](const std::set<std::string>& K) {
        for (const auto& id : spec.center_in)
            if (config.selection.count(id)) return true;
        for (const auto& id : K)
            if (config.selection.count(id)) return true;
        return false;
    };
    if (!spec.center_in.empty() && c == 0) {
        for (const auto& K : subsets_of(spec.transversal)) {
            const Stratum* s = config.find_stratum(set_union(spec.center_in, K));
            if (s && !(s->cover.is_zero() && s->geom.is_zero()) && !meets_selection(K))
                out.push_back("center stratum " + join_ids(set_union(spec.center_in, K)) +
                              " does not meet the selection set");
        }
    } else if (!spec.center_in.empty() && c >= 1) {
        for (const auto& [K, classes] : spec.center_strata) {
            if (!(classes.cover.is_zero() && classes.geom.is_zero()) && !meets_selection(K))
                out.push_back("center stratum " + join_ids(set_union(spec.center_in, K)) +
                              " does not meet the selection set");
        }
    }

    if (!spec.center_in.empty() && c == 0) {
        if (!spec.center_strata.empty())
            out.push_back("center_strata must be omitted when codim = 0 (classes default to the "
                          "configuration's strata)");
        for (const auto& K : subsets_of(spec.transversal)) {
            if (!config.find_stratum(set_union(spec.center_in, K)))
                out.push_back("missing stratum " + join_ids(set_union(spec.center_in, K)) +
                              " required by a codim-0 center");
        }
        for (const auto& s : config.strata) {
            if (!std::includes(s.comps.begin(), s.comps.end(), spec.center_in.begin(),
                               spec.center_in.end()))
                continue;
            for (const auto& id : s.comps)
                if (!spec.center_in.count(id) && !spec.transversal.count(id))
                    out.push_back("stratum " + join_ids(s.comps) +
                                  " lies inside the codim-0 center but component '" + id +
                                  "' is not listed as transversal");
        }
    }

    if (!spec.center_in.empty() && c >= 1) {
        for (const auto& [K, classes] : spec.center_strata) {
            for (const auto& id : K)
                if (!spec.transversal.count(id))
                    out.push_back("center stratum key " + join_ids(K) +
                                  " is not a subset of the transversal set");
            if (classes.geom.contains_mu())
                out.push_back("geometric class of center stratum " + join_ids(K) +
                              " contains mu symbols");
            if (!(classes.cover.is_zero() && classes.geom.is_zero()) &&
                k + static_cast<int>(K.size()) + c > config.ambient_dim)
                out.push_back("center stratum " + join_ids(K) + " exceeds ambient dimension");
        }
        for (const auto& K : subsets_of(spec.transversal)) {
            if (config.find_stratum(set_union(spec.center_in, K)) && !spec.center_strata.count(K))
                out.push_back("center stratum classes required for K = " + join_ids(K));
        }
    }
    return out;
}

DivisorConfiguration apply_blowup(const DivisorConfiguration& config, const BlowupSpec& spec) {
    auto violations = validate_blowup(config, spec);
    if (!violations.empty()) {
        std::string msg = "invalid blow-up:";
        for (const auto& v : violations) msg += "\n  - " + v;
        throw DomainError(msg);
    }

    const int k = static_cast<int>(spec.center_in.size());
    const int c = spec.codim;

    int m_star = 0, nu_star = c;
    for (const auto& id : spec.center_in) {
        const Component* comp = config.find_component(id);
        m_star += comp->m;
        nu_star += comp->nu;
    }

    // collect center classes per transversal subset K before mutating
    std::vector<std::pair<std::set<std::string>, CenterClasses>> centers;
    if (c == 0) {
        for (const auto& K : subsets_of(spec.transversal)) {
            const Stratum* s = config.find_stratum(set_union(spec.center_in, K));
            centers.emplace_back(K, CenterClasses{s->cover, s->geom});
        }
    } else {
        for (const auto& [K, classes] : spec.center_strata) centers.emplace_back(K, classes);
    }

    DivisorConfiguration out = config;
    out.components.push_back(Component{spec.new_id, m_star, nu_star});
    out.selection.insert(spec.new_id);

    const std::vector<std::string> center_ids(spec.center_in.begin(), spec.center_in.end());
    for (const auto& [K, classes] : centers) {
        const std::set<std::string> ambient = set_union(spec.center_in, K);
        if (c == 0) {
            std::erase_if(out.strata, [&](const Stratum& s) { return s.comps == ambient; });
        } else {
            add_to_stratum(out, ambient, -classes.cover, -classes.geom);
        }
        // strata of the exceptional divisor over this center stratum
        for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
            if (mask + 1 == (size_t{1} << k)) continue; // G = I handled below
            std::set<std::string> comps = K;
            int g = 0;
            for (size_t i = 0; i < static_cast<size_t>(k); ++i)
                if (mask & (size_t{1} << i)) {
                    comps.insert(center_ids[i]);
                    ++g;
                }
            comps.insert(spec.new_id);
            RingElem mult = RingElem::lefschetz(c) * l_minus_one_pow(k - g - 1);
            add_to_stratum(out, comps, classes.cover * mult, classes.geom * mult);
        }
        if (c >= 1) {
            std::set<std::string> comps = set_union(ambient, {spec.new_id});
            RingElem mult = projective_space_class(c);
            add_to_stratum(out, comps, classes.cover * mult, classes.geom * mult);
        }
    }
    out.canonicalize();
    return out;
}

InvarianceReport verify_invariance(const DivisorConfiguration& config, const BlowupSpec& spec) {
    DivisorConfiguration after = apply_blowup(config, spec);
    RationalSeries z_before = compute_zeta(config);
    RationalSeries z_after = compute_zeta(after);
    RationalSeries n_before = compute_naive(config);
    RationalSeries n_after = compute_naive(after);

    InvarianceReport report;
    report.zeta_equal = series_equal(z_before, z_after);
    report.naive_equal = series_equal(n_before, n_after);
    report.equal = report.zeta_equal && report.naive_equal;
    if (!report.zeta_equal)
        report.witness = z_before - z_after;
    else if (!report.naive_equal)
        report.witness = n_before - n_after;
    return report;
}

DivisorConfiguration apply_script(const DivisorConfiguration& config,
                                  const std::vector<BlowupSpec>& specs) {
    DivisorConfiguration current = config;
    for (size_t i = 0; i < specs.size(); ++i) {
        auto violations = validate_blowup(current, specs[i]);
        if (!violations.empty()) {
            std::string msg = "blow-up step " + std::to_string(i) + " invalid:";
            for (const auto& v : violations) msg += "\n  - " + v;
            throw DomainError(msg);
        }
        current = apply_blowup(current, specs[i]);
    }
    return current;
}

} // namespace mzeta
