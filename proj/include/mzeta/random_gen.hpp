#ifndef MZETA_RANDOM_GEN_HPP
#define MZETA_RANDOM_GEN_HPP

#include <cstdint>
#include <random>

#include "mzeta/blowup.hpp"
#include "mzeta/model.hpp"

namespace mzeta {

/// Seeded generator of valid configurations and applicable blow-up specs,
/// used by the randomized invariance campaigns. All draws come from one
/// mt19937_64 stream so a seed reproduces the whole campaign.
class RandomCampaign {
public:
    explicit RandomCampaign(uint64_t seed) : rng_(seed) {}

    struct Case {
        DivisorConfiguration config;
        BlowupSpec spec;
    };

    DivisorConfiguration random_config(int max_components = 4, int max_ambient = 4);
    Case random_case();

    /// A spec valid against the given configuration, when one can be found.
    /// May extend the selection so that the center meets it.
    std::optional<BlowupSpec> random_blowup(DivisorConfiguration& config, int attempts = 20);

private:
    int pick(int lo, int hi);
    bool coin() { return pick(0, 1) == 1; }
    RingElem random_class(bool allow_mu);
    bool try_blowup(const DivisorConfiguration& config, BlowupSpec& out);

    std::mt19937_64 rng_;
};

} // namespace mzeta

#endif
