// Acceptance suite: runs every gate criterion and prints one PASS/FAIL line
// per criterion. Exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <vector>

#include "helpers.hpp"
#include "mzeta/cli.hpp"
#include "mzeta/config_io.hpp"
#include "mzeta/errors.hpp"
#include "mzeta/expr.hpp"
#include "mzeta/random_gen.hpp"
#include "mzeta/zeta.hpp"
#include "oracles.hpp"

using namespace mzeta;
using namespace mzeta::testing;

namespace {

struct Checker {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << "    failed: " << what << "\n";
        }
    }
};

std::vector<std::string> data_files() {
    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(MZETA_DATA_DIR))
        if (entry.path().extension() == ".json") files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    return files;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// --- criterion 1: paper-example invariance suite -------------------------

bool criterion_paper_examples(Checker& c) {
    for (const auto& [m, nu] : instantiation_tuples()) {
        for (const auto& ex : paper_examples(m, nu)) {
            auto start = std::chrono::steady_clock::now();
            InvarianceReport report = verify_invariance(ex.config, ex.spec);
            double seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            c.require(report.zeta_equal, ex.name + ": zeta invariance");
            c.require(report.naive_equal, ex.name + ": naive invariance");
            c.require(report.witness.is_zero_form(), ex.name + ": zero witness");
            c.require(seconds < 1.0, ex.name + ": finished in " + std::to_string(seconds) + "s");
        }
    }
    return c.ok;
}

// --- criterion 2: randomized invariance with negative control ------------

bool criterion_random_invariance(Checker& c) {
    RandomCampaign campaign(20260811);
    for (int i = 0; i < 100; ++i) {
        auto cs = campaign.random_case();
        InvarianceReport report = verify_invariance(cs.config, cs.spec);
        c.require(report.zeta_equal, "case " + std::to_string(i) + ": zeta invariance");
        c.require(report.naive_equal, "case " + std::to_string(i) + ": naive invariance");

        DivisorConfiguration corrupted = apply_blowup(cs.config, cs.spec);
        for (auto& comp : corrupted.components)
            if (comp.id == cs.spec.new_id) comp.nu += 1;
        bool still_equal = series_equal(compute_zeta(cs.config), compute_zeta(corrupted)) &&
                           series_equal(compute_naive(cs.config), compute_naive(corrupted));
        c.require(!still_equal, "case " + std::to_string(i) + ": corrupted nu* detected");
        if (!c.ok) break;
    }
    return c.ok;
}

// --- criterion 3: unit partition identity and exceptional class count ----

bool criterion_identities(Checker& c) {
    for (int k = 1; k <= 6; ++k) {
        std::vector<RingElem> a;
        for (int i = 0; i < k; ++i) a.push_back(RingElem::symbol(Symbol::named("Wa" + std::to_string(i))));
        RingElem sum;
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            RingElem prod(1);
            for (int i = 0; i < k; ++i)
                prod *= (mask & (1u << i)) ? a[size_t(i)] : RingElem(1) - a[size_t(i)];
            sum += prod;
        }
        c.require(sum == RingElem(1), "partition identity at k = " + std::to_string(k));
    }

    for (int r = 1; r <= 5; ++r) {
        for (int k = 1; k <= r + 1; ++k) {
            DivisorConfiguration config;
            config.ambient_dim = r + 1;
            std::set<std::string> center;
            for (int i = 1; i <= k; ++i) {
                config.components.push_back({"E" + std::to_string(i), 1, 0});
                center.insert("E" + std::to_string(i));
            }
            std::vector<std::string> ids(center.begin(), center.end());
            for (size_t mask = 1; mask < (size_t{1} << k); ++mask) {
                std::set<std::string> sub;
                for (size_t i = 0; i < static_cast<size_t>(k); ++i)
                    if (mask & (size_t{1} << i)) sub.insert(ids[i]);
                config.strata.push_back(
                    Stratum{sub, parse_ring_elem("1"), parse_ring_elem("1")});
            }
            config.selection = center;
            config.canonicalize();

            BlowupSpec spec;
            spec.center_in = center;
            spec.codim = r + 1 - k;
            spec.new_id = "Estar";
            if (spec.codim >= 1)
                spec.center_strata.emplace(
                    std::set<std::string>{},
                    CenterClasses{parse_ring_elem("1"), parse_ring_elem("1")});
            DivisorConfiguration after = apply_blowup(config, spec);
            RingElem total;
            for (const auto& s : after.strata)
                if (s.comps.count("Estar")) total += s.geom;
            c.require(total == projective_space_class(r + 1),
                      "exceptional classes sum to [P^" + std::to_string(r) + "] at k = " +
                          std::to_string(k));
        }
    }
    return c.ok;
}

// --- criterion 4: limit relation ------------------------------------------

bool criterion_limit_relation(Checker& c) {
    for (const auto& file : data_files()) {
        ConfigDocument doc = parse_config(slurp(file));
        c.require(check_limit_relation(doc.config), "limit relation on " + file);
        if (!doc.blowups.empty())
            c.require(check_limit_relation(apply_script(doc.config, doc.blowups)),
                      "limit relation after the script of " + file);
    }
    RandomCampaign campaign(1234);
    for (int i = 0; i < 50; ++i) {
        DivisorConfiguration config = campaign.random_config();
        c.require(check_limit_relation(config), "limit relation on random case " + std::to_string(i));
    }
    return c.ok;
}

// --- criterion 5: cusp dataset --------------------------------------------

bool criterion_cusp(Checker& c) {
    ConfigDocument doc = parse_config(slurp(std::string(MZETA_DATA_DIR) + "/cusp.json"));
    QRat z = topological_zeta(doc.config, doc.chi_table);

    // independent dense route over Q[s] from the same resolution data
    DensePoly num{Rat(0)}, den{Rat(1)};
    for (const auto& s : doc.config.strata) {
        bool selected = false;
        for (const auto& id : s.comps) selected |= doc.config.selection.count(id) > 0;
        if (!selected) continue;
        Substitution sub;
        sub.l_image = QPoly(1);
        Rat chi = substitute(s.geom, sub).constant_value();
        DensePoly tnum{chi}, tden{Rat(1)};
        for (const auto& id : s.comps) {
            const Component* comp = doc.config.find_component(id);
            tden = dense_mul(tden, DensePoly{Rat(comp->nu), Rat(comp->m)});
        }
        num = dense_add(dense_mul(num, tden), dense_mul(tnum, den));
        den = dense_mul(den, tden);
    }
    DensePoly g = dense_gcd(num, den);
    num = dense_divide_exact(num, g);
    den = dense_divide_exact(den, g);
    for (const Rat& sample : {Rat(0), Rat(1), Rat(5, 7), Rat(-4)}) {
        c.require(dense_eval(den, sample) != 0, "oracle denominator nonzero at sample");
        c.require(z.eval({{"s", sample}}) == dense_eval(num, sample) / dense_eval(den, sample),
                  "library and oracle values agree at s = " + sample.str());
    }

    std::set<Rat> expected{Rat(-1), Rat(-5, 6)};
    c.require(dense_rational_roots(den) == expected, "oracle pole set is {-1, -5/6}");
    auto lib_roots = rational_roots(z.den(), "s");
    c.require(std::set<Rat>(lib_roots.begin(), lib_roots.end()) == expected,
              "topological_zeta pole set is exactly {-1, -5/6}");

    std::set<Rat> cand_poles;
    for (const auto& f : pole_candidates(compute_zeta(doc.config)))
        cand_poles.insert(Rat(-f.nu, f.m));
    c.require(cand_poles == expected, "pole_candidates maps onto {-1, -5/6}");
    return c.ok;
}

// --- criterion 6: specialization consistency -------------------------------

bool criterion_specializations(Checker& c) {
    // (a) hodge coefficients equal the L -> uv substitution of naive ones
    for (const auto& file : data_files()) {
        ConfigDocument doc = parse_config(slurp(file));
        HodgeSeries h = hodge_zeta(doc.config, doc.hodge_table);
        RationalSeries naive = compute_naive(doc.config);
        Substitution sub;
        sub.l_image = QPoly::variable("u") * QPoly::variable("v");
        for (const auto& [name, img] : doc.hodge_table)
            sub.symbol_images.emplace(Symbol::named(name), img);
        c.require(h.terms.size() == naive.terms().size(), "term count matches for " + file);
        for (size_t i = 0; i < h.terms.size() && c.ok; ++i) {
            c.require(h.terms[i].factors == naive.terms()[i].factors, "factors match in " + file);
            c.require(h.terms[i].coeff == substitute(naive.terms()[i].coeff, sub),
                      "hodge coefficient equals substituted naive coefficient in " + file);
        }
        if (!c.ok) return false;
    }

    // (b) topological values against a numeric evaluation of the naive series
    ConfigDocument cusp = parse_config(slurp(std::string(MZETA_DATA_DIR) + "/cusp.json"));
    QRat z = topological_zeta(cusp.config, cusp.chi_table);
    RationalSeries naive = compute_naive(cusp.config);
    const double l_value = 1.0 + 1e-6;
    for (long s0 : {0L, 1L, -2L}) {
        double numeric = 0.0;
        for (const auto& term : naive.terms()) {
            double coeff = 0.0;
            for (const auto& [mono, coef] : term.coeff.terms()) {
                double part = static_cast<double>(coef.convert_to<long long>()) *
                              std::pow(l_value, static_cast<double>(mono.l_exp));
                // geometric classes of the cusp dataset carry no symbols
                if (!mono.syms.empty()) part = std::numeric_limits<double>::quiet_NaN();
                coeff += part;
            }
            double prod = coeff;
            for (const auto& f : term.factors) {
                double a = std::pow(l_value, -double(f.nu) - double(s0) * double(f.m));
                prod *= a / (1.0 - a);
            }
            numeric += prod;
        }
        double exact = z.eval({{"s", Rat(s0)}}).convert_to<double>();
        double rel = std::abs(numeric - exact) / std::max(1e-30, std::abs(exact));
        c.require(std::isfinite(numeric), "numeric evaluation is finite at s0");
        c.require(rel < 1e-3, "relative deviation " + std::to_string(rel) + " < 1e-3 at s0 = " +
                                  std::to_string(s0));
    }
    return c.ok;
}

// --- criterion 7: stringy sanity -------------------------------------------

bool criterion_stringy(Checker& c) {
    DivisorConfiguration one;
    one.ambient_dim = 2;
    one.components = {{"E1", 1, 1}};
    one.strata = {Stratum{{"E1"}, parse_ring_elem("W1"), parse_ring_elem("Wg")}};
    one.selection = {"E1"};
    QPoly h1 = parse_qpoly("u*v + 3");
    QRat r = stringy_residue(one, {{"Wg", h1}});
    c.require(r == QRat(h1), "single component with m = nu = 1 returns its Hodge class");

    DivisorConfiguration bad;
    bad.ambient_dim = 2;
    bad.components = {{"E1", 1, 1}, {"E2", 2, 2}};
    bad.strata = {Stratum{{"E1", "E2"}, parse_ring_elem("1"), parse_ring_elem("1")}};
    bad.selection = {"E1", "E2"};
    bool threw = false;
    try {
        stringy_residue(bad, {});
    } catch (const DomainError& e) {
        threw = std::string(e.what()).find("higher-order pole") != std::string::npos;
    }
    c.require(threw, "two nu == m factors in one term raise the higher-order-pole error");
    return c.ok;
}

// --- criterion 8: round-trip and determinism --------------------------------

bool criterion_roundtrip(Checker& c) {
    for (const auto& file : data_files()) {
        ConfigDocument doc = parse_config(slurp(file));
        std::string text = format_config(doc);
        ConfigDocument again = parse_config(text);
        c.require(again == doc, "parse(format(parse(x))) == parse(x) for " + file);
        c.require(format_config(again) == text, "format is stable for " + file);

        RationalSeries z = compute_zeta(doc.config);
        c.require(parse_series(format_series(z)) == z, "series round-trip for " + file);
    }
    for (const char* cmd : {"zeta", "micc", "naive", "poles", "topzeta", "blowup", "verify"}) {
        std::string file = std::string(MZETA_DATA_DIR) + "/example_C_v2.json";
        std::ostringstream out1, err1, out2, err2;
        int c1 = run_command({cmd, file}, out1, err1);
        int c2 = run_command({cmd, file}, out2, err2);
        c.require(c1 == 0 && c2 == 0, std::string(cmd) + " exits 0");
        c.require(out1.str() == out2.str() && !out1.str().empty(),
                  std::string(cmd) + " output is byte-identical across runs");
    }
    return c.ok;
}

int run_criterion(int index, const std::string& label, const std::function<bool(Checker&)>& body) {
    Checker c;
    bool ok = false;
    std::string error;
    try {
        ok = body(c);
    } catch (const std::exception& e) {
        error = e.what();
        ok = false;
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << index << ": " << label << "\n";
    if (!error.empty()) std::cout << "    exception: " << error << "\n";
    std::cout << c.detail.str();
    return ok ? 0 : 1;
}

} // namespace

int main() {
    int failures = 0;
    failures += run_criterion(1, "paper-example invariance suite (5 scenarios x 3 instantiations, exact, < 1 s each)",
                              criterion_paper_examples);
    failures += run_criterion(2, "randomized invariance, 100 seeded cases with corrupted-nu* negative control",
                              criterion_random_invariance);
    failures += run_criterion(3, "unit partition identity (k <= 6) and exceptional class accounting (r <= 5)",
                              criterion_identities);
    failures += run_criterion(4, "limit relation S = -lim Z on the data corpus and 50 random configurations",
                              criterion_limit_relation);
    failures += run_criterion(5, "cusp dataset: topological pole set {-1, -5/6} and matching pole candidates",
                              criterion_cusp);
    failures += run_criterion(6, "specialization consistency (hodge = naive at L -> uv; numeric limit check, rtol 1e-3)",
                              criterion_specializations);
    failures += run_criterion(7, "stringy residue sanity (trivial value; higher-order pole rejected)",
                              criterion_stringy);
    failures += run_criterion(8, "round-trip identity and byte-identical CLI runs on the corpus",
                              criterion_roundtrip);
    if (failures == 0)
        std::cout << "acceptance: all 8 criteria passed\n";
    else
        std::cout << "acceptance: " << failures << " criteria FAILED\n";
    return failures;
}
