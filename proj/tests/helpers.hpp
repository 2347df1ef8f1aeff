#ifndef MZETA_TESTS_HELPERS_HPP
#define MZETA_TESTS_HELPERS_HPP

#include <numeric>
#include <string>
#include <vector>

#include "mzeta/blowup.hpp"
#include "mzeta/expr.hpp"
#include "mzeta/model.hpp"

namespace mzeta::testing {

inline Stratum stratum(std::set<std::string> comps, const std::string& cover,
                       const std::string& geom) {
    return Stratum{std::move(comps), parse_ring_elem(cover), parse_ring_elem(geom)};
}

struct ExampleCase {
    DivisorConfiguration config;
    BlowupSpec spec;
    std::string name;
};

/// Surface, two curves through a point, blow up the point (codim 0 in E_I).
inline ExampleCase surface_double_point(int m1, int nu1, int m2, int nu2) {
    DivisorConfiguration c;
    c.ambient_dim = 2;
    c.components = {{"E1", m1, nu1}, {"E2", m2, nu2}};
    int g = std::gcd(m1, m2);
    c.strata = {stratum({"E1"}, "Wc1", "Wg1"), stratum({"E2"}, "Wc2", "Wg2"),
                stratum({"E1", "E2"}, "mu(" + std::to_string(g) + ")", "1")};
    c.selection = {"E1", "E2"};
    c.canonicalize();
    BlowupSpec spec;
    spec.center_in = {"E1", "E2"};
    spec.codim = 0;
    spec.new_id = "Estar";
    return {c, spec, "surface double point"};
}

/// Surface, a point on a single curve (codim 1 in E_I).
inline ExampleCase surface_point_on_curve(int m1, int nu1) {
    DivisorConfiguration c;
    c.ambient_dim = 2;
    c.components = {{"E1", m1, nu1}};
    c.strata = {stratum({"E1"}, "Wc1", "Wg1")};
    c.selection = {"E1"};
    BlowupSpec spec;
    spec.center_in = {"E1"};
    spec.codim = 1;
    spec.center_strata.emplace(std::set<std::string>{},
                               CenterClasses{parse_ring_elem("mu(" + std::to_string(m1) + ")"),
                                             parse_ring_elem("1")});
    spec.new_id = "Estar";
    return {c, spec, "surface point on one curve"};
}

/// Threefold, three divisors through a point, blow up the point.
inline ExampleCase threefold_triple_point(int m1, int nu1, int m2, int nu2, int m3, int nu3) {
    DivisorConfiguration c;
    c.ambient_dim = 3;
    c.components = {{"E1", m1, nu1}, {"E2", m2, nu2}, {"E3", m3, nu3}};
    int g = std::gcd(std::gcd(m1, m2), m3);
    c.strata = {stratum({"E1"}, "Wc1", "Wg1"),
                stratum({"E2"}, "Wc2", "Wg2"),
                stratum({"E3"}, "Wc3", "Wg3"),
                stratum({"E1", "E2"}, "Wc12", "Wg12"),
                stratum({"E1", "E3"}, "Wc13", "Wg13"),
                stratum({"E2", "E3"}, "Wc23", "Wg23"),
                stratum({"E1", "E2", "E3"}, "mu(" + std::to_string(g) + ")", "1")};
    c.selection = {"E1", "E2", "E3"};
    c.canonicalize();
    BlowupSpec spec;
    spec.center_in = {"E1", "E2", "E3"};
    spec.codim = 0;
    spec.new_id = "Estar";
    return {c, spec, "threefold triple point"};
}

/// Threefold, a point on the double curve E1 cap E2 (codim 1 in E_I).
inline ExampleCase threefold_point_on_double_curve(int m1, int nu1, int m2, int nu2) {
    DivisorConfiguration c;
    c.ambient_dim = 3;
    c.components = {{"E1", m1, nu1}, {"E2", m2, nu2}};
    int g = std::gcd(m1, m2);
    c.strata = {stratum({"E1"}, "Wc1", "Wg1"), stratum({"E2"}, "Wc2", "Wg2"),
                stratum({"E1", "E2"}, "Wc12", "Wg12")};
    c.selection = {"E1", "E2"};
    c.canonicalize();
    BlowupSpec spec;
    spec.center_in = {"E1", "E2"};
    spec.codim = 1;
    spec.center_strata.emplace(std::set<std::string>{},
                               CenterClasses{parse_ring_elem("mu(" + std::to_string(g) + ")"),
                                             parse_ring_elem("1")});
    spec.new_id = "Estar";
    return {c, spec, "threefold point on a double curve"};
}

/// Threefold, blow up the whole double curve E1 cap E2 with E3 transversal.
inline ExampleCase threefold_curve_with_transversal(int m1, int nu1, int m2, int nu2, int m3,
                                                    int nu3) {
    DivisorConfiguration c;
    c.ambient_dim = 3;
    c.components = {{"E1", m1, nu1}, {"E2", m2, nu2}, {"E3", m3, nu3}};
    int g = std::gcd(std::gcd(m1, m2), m3);
    c.strata = {stratum({"E1"}, "Wc1", "Wg1"),
                stratum({"E2"}, "Wc2", "Wg2"),
                stratum({"E3"}, "Wc3", "Wg3"),
                stratum({"E1", "E2"}, "Wc12", "Wg12"),
                stratum({"E1", "E3"}, "Wc13", "Wg13"),
                stratum({"E2", "E3"}, "Wc23", "Wg23"),
                stratum({"E1", "E2", "E3"}, "mu(" + std::to_string(g) + ")", "1")};
    c.selection = {"E1", "E2", "E3"};
    c.canonicalize();
    BlowupSpec spec;
    spec.center_in = {"E1", "E2"};
    spec.codim = 0;
    spec.transversal = {"E3"};
    spec.new_id = "Estar";
    return {c, spec, "threefold curve center with transversal component"};
}

/// All five scenarios instantiated with one (m, nu) tuple, truncated to each
/// scenario's arity.
inline std::vector<ExampleCase> paper_examples(const std::vector<int>& m,
                                               const std::vector<int>& nu) {
    return {
        surface_double_point(m[0], nu[0], m[1], nu[1]),
        surface_point_on_curve(m[0], nu[0]),
        threefold_triple_point(m[0], nu[0], m[1], nu[1], m[2], nu[2]),
        threefold_point_on_double_curve(m[0], nu[0], m[1], nu[1]),
        threefold_curve_with_transversal(m[0], nu[0], m[1], nu[1], m[2], nu[2]),
    };
}

inline std::vector<std::pair<std::vector<int>, std::vector<int>>> instantiation_tuples() {
    return {
        {{1, 1, 1}, {0, 0, 0}},
        {{2, 3, 5}, {1, 2, 3}},
        {{6, 4, 10}, {0, 1, 2}},
    };
}

/// Resolution data of the plane cusp: strict transform E0 and three
/// exceptional curves, E3 meeting the other three components.
inline DivisorConfiguration cusp_config() {
    DivisorConfiguration c;
    c.ambient_dim = 2;
    c.components = {{"E0", 1, 1}, {"E1", 2, 2}, {"E2", 3, 3}, {"E3", 6, 5}};
    c.strata = {stratum({"E1"}, "mu(2)*L", "L"),
                stratum({"E2"}, "mu(3)*L", "L"),
                stratum({"E3"}, "W3", "L - 2"),
                stratum({"E0", "E3"}, "1", "1"),
                stratum({"E1", "E3"}, "mu(2)", "1"),
                stratum({"E2", "E3"}, "mu(3)", "1")};
    c.selection = {"E1", "E2", "E3"};
    c.canonicalize();
    return c;
}

} // namespace mzeta::testing

#endif
