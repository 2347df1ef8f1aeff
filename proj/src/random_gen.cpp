#include "mzeta/random_gen.hpp"

#include <algorithm>

#include "mzeta/errors.hpp"

namespace mzeta {

int RandomCampaign::pick(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

RingElem RandomCampaign::random_class(bool allow_mu) {
    auto monomial = [&]() {
        Int coeff(pick(0, 4) == 0 ? -1 : pick(1, 3));
        std::vector<std::pair<Symbol, int>> syms;
        if (allow_mu && coin()) syms.emplace_back(Symbol::mu(pick(1, 4)), 1);
        if (pick(0, 2) == 0) syms.emplace_back(Symbol::named(coin() ? "Wa" : "Wb"), 1);
        return RingElem::monomial(coeff, pick(0, 2), std::move(syms));
    };
    RingElem first = monomial();
    if (coin()) {
        RingElem sum = first + monomial();
        if (!sum.is_zero()) return sum;
    }
    return first;
}

DivisorConfiguration RandomCampaign::random_config(int max_components, int max_ambient) {
    DivisorConfiguration config;
    config.ambient_dim = pick(2, max_ambient);
    int n = pick(1, max_components);
    for (int i = 1; i <= n; ++i)
        config.components.push_back(Component{"E" + std::to_string(i), pick(1, 6), pick(-1, 3)});

    // strata form the downward closure of a few maximal faces
    std::set<std::set<std::string>> faces;
    int nfaces = pick(1, 2);
    for (int f = 0; f < nfaces; ++f) {
        int size = pick(1, std::min(config.ambient_dim, n));
        std::set<std::string> face;
        while (static_cast<int>(face.size()) < size)
            face.insert(config.components[static_cast<size_t>(pick(0, n - 1))].id);
        faces.insert(std::move(face));
    }
    std::set<std::set<std::string>> closed;
    for (const auto& face : faces) {
        std::vector<std::string> elems(face.begin(), face.end());
        for (size_t mask = 1; mask < (size_t{1} << elems.size()); ++mask) {
            std::set<std::string> sub;
            for (size_t i = 0; i < elems.size(); ++i)
                if (mask & (size_t{1} << i)) sub.insert(elems[i]);
            closed.insert(std::move(sub));
        }
    }
    for (const auto& comps : closed)
        config.strata.push_back(Stratum{comps, random_class(true), random_class(false)});

    std::set<std::string> selection;
    while (selection.empty())
        for (const auto& c : config.components)
            if (coin()) selection.insert(c.id);
    config.selection = std::move(selection);
    config.canonicalize();
    return config;
}

bool RandomCampaign::try_blowup(const DivisorConfiguration& config, BlowupSpec& out) {
    if (config.strata.empty()) return false;
    const Stratum& target = config.strata[static_cast<size_t>(pick(0, static_cast<int>(config.strata.size()) - 1))];
    const std::set<std::string>& I = target.comps;
    int k = static_cast<int>(I.size());

    std::set<std::string> extras;
    for (const auto& s : config.strata) {
        if (!std::includes(s.comps.begin(), s.comps.end(), I.begin(), I.end())) continue;
        for (const auto& id : s.comps)
            if (!I.count(id)) extras.insert(id);
    }

    BlowupSpec spec;
    spec.center_in = I;
    spec.new_id = "X";
    for (int i = 1; config.has_component(spec.new_id); ++i) spec.new_id = "X" + std::to_string(i);

    if (coin() && k >= 2) {
        // blow up the whole stratum closure E_I; needs the strata above I to
        // form a full cube over the transversal set
        spec.codim = 0;
        spec.transversal = extras;
        std::vector<std::string> elems(extras.begin(), extras.end());
        for (size_t mask = 0; mask < (size_t{1} << elems.size()); ++mask) {
            std::set<std::string> full = I;
            for (size_t i = 0; i < elems.size(); ++i)
                if (mask & (size_t{1} << i)) full.insert(elems[i]);
            if (!config.find_stratum(full)) return false;
        }
        out = std::move(spec);
        return true;
    }

    int cmin = std::max(1, 2 - k);
    int cmax = config.ambient_dim - k;
    if (cmin > cmax) return false;
    spec.codim = pick(cmin, cmax);
    if (!extras.empty() && coin()) {
        // keep one transversal component when dimensions allow it
        std::vector<std::string> elems(extras.begin(), extras.end());
        std::string t = elems[static_cast<size_t>(pick(0, static_cast<int>(elems.size()) - 1))];
        if (k + 1 + spec.codim <= config.ambient_dim) spec.transversal = {t};
    }
    std::vector<std::string> telems(spec.transversal.begin(), spec.transversal.end());
    for (size_t mask = 0; mask < (size_t{1} << telems.size()); ++mask) {
        std::set<std::string> K;
        std::set<std::string> full = I;
        for (size_t i = 0; i < telems.size(); ++i)
            if (mask & (size_t{1} << i)) {
                K.insert(telems[i]);
                full.insert(telems[i]);
            }
        if (config.find_stratum(full))
            spec.center_strata.emplace(K, CenterClasses{random_class(true), random_class(false)});
    }
    if (spec.center_strata.empty()) return false;
    out = std::move(spec);
    return true;
}

std::optional<BlowupSpec> RandomCampaign::random_blowup(DivisorConfiguration& config,
                                                        int attempts) {
    BlowupSpec spec;
    for (int inner = 0; inner < attempts; ++inner) {
        if (!try_blowup(config, spec)) continue;
        // the center must meet the selection for the comparison to be defined
        bool meets = false;
        for (const auto& id : spec.center_in)
            if (config.selection.count(id)) meets = true;
        if (!meets) config.selection.insert(*spec.center_in.begin());
        if (validate_blowup(config, spec).empty()) return spec;
    }
    return std::nullopt;
}

RandomCampaign::Case RandomCampaign::random_case() {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        DivisorConfiguration config = random_config();
        if (auto spec = random_blowup(config)) return Case{std::move(config), std::move(*spec)};
    }
    throw DomainError("random campaign failed to produce a valid case");
}

} // namespace mzeta
