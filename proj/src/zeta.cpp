#include "mzeta/zeta.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "mzeta/errors.hpp"

namespace mzeta {

namespace {

void require_valid(const DivisorConfiguration& config) {
    auto violations = validate(config);
    if (violations.empty()) return;
    std::string msg = "invalid configuration:";
    for (const auto& v : violations) msg += "\n  - " + v;
    throw DomainError(msg);
}

bool is_selected(const DivisorConfiguration& config, const Stratum& s) {
    for (const auto& id : s.comps)
        if (config.selection.count(id)) return true;
    return false;
}

std::vector<FactorKey> stratum_factors(const DivisorConfiguration& config, const Stratum& s) {
    std::vector<FactorKey> out;
    out.reserve(s.comps.size());
    for (const auto& id : s.comps) {
        const Component* c = config.find_component(id);
        out.emplace_back(c->nu, c->m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

QPoly uv_pow(int k) {
    QPoly p;
    QMono m;
    if (k != 0) {
        m["u"] = k;
        m["v"] = k;
    }
    p.add_term(std::move(m), Rat(1));
    return p;
}

Substitution hodge_substitution(const std::map<std::string, QPoly>& hodge_table) {
    Substitution sub;
    sub.l_image = uv_pow(1);
    for (const auto& [name, img] : hodge_table) sub.symbol_images.emplace(Symbol::named(name), img);
    return sub;
}

// s-linear denominators handled in primitive factored form: nu + s*m =
// scale * (a + b*s) with gcd(a, b) = 1 and b > 0.
struct LinFactor {
    int a;
    int b;
    friend auto operator<=>(const LinFactor&, const LinFactor&) = default;
};

QPoly lin_poly(const LinFactor& f) {
    QPoly p(Rat(f.a));
    QPoly s = QPoly::variable("s");
    QPoly bs = s * QPoly(Rat(f.b));
    return p + bs;
}

struct EulerTerm {
    Rat coeff;
    std::map<LinFactor, int> factors;
};

QRat sum_euler_terms(const std::vector<EulerTerm>& terms) {
    if (terms.empty()) return QRat(0);
    std::map<LinFactor, int> common;
    for (const auto& t : terms)
        for (const auto& [f, e] : t.factors) {
            auto it = common.find(f);
            if (it == common.end())
                common.emplace(f, e);
            else
                it->second = std::max(it->second, e);
        }
    QPoly num;
    for (const auto& t : terms) {
        QPoly part{t.coeff};
        for (const auto& [f, e] : common) {
            int used = 0;
            if (auto it = t.factors.find(f); it != t.factors.end()) used = it->second;
            for (int i = used; i < e; ++i) part *= lin_poly(f);
        }
        num += part;
    }
    // exact cancellation against the known linear factors
    for (auto& [f, e] : common) {
        while (e > 0 && !num.is_zero()) {
            auto q = exact_divide(num, lin_poly(f));
            if (!q) break;
            num = *q;
            --e;
        }
    }
    QPoly den(1);
    for (const auto& [f, e] : common)
        for (int i = 0; i < e; ++i) den *= lin_poly(f);
    return QRat(std::move(num), std::move(den));
}

QRat euler_realization(const DivisorConfiguration& config,
                       const std::function<Rat(const Stratum&)>& weight) {
    std::vector<EulerTerm> terms;
    for (const auto& s : config.strata) {
        if (!is_selected(config, s)) continue;
        Rat w = weight(s);
        if (w == 0) continue;
        EulerTerm t;
        t.coeff = w;
        for (const auto& id : s.comps) {
            const Component* c = config.find_component(id);
            int g = std::gcd(std::abs(c->nu), c->m);
            if (g == 0) g = 1;
            t.coeff /= g;
            ++t.factors[LinFactor{c->nu / g, c->m / g}];
        }
        terms.push_back(std::move(t));
    }
    return sum_euler_terms(terms);
}

} // namespace

RationalSeries compute_zeta(const DivisorConfiguration& config) {
    require_valid(config);
    RationalSeries z;
    for (const auto& s : config.strata) {
        if (!is_selected(config, s)) continue;
        RingElem coeff = s.cover * l_minus_one_pow(static_cast<int>(s.comps.size()) - 1);
        z += RationalSeries::term(coeff, stratum_factors(config, s));
    }
    return z;
}

RingElem compute_micc(const DivisorConfiguration& config) {
    require_valid(config);
    RingElem out;
    for (const auto& s : config.strata) {
        if (!is_selected(config, s)) continue;
        RingElem contrib = s.cover * l_minus_one_pow(static_cast<int>(s.comps.size()) - 1);
        if (s.comps.size() % 2 == 1)
            out += contrib;
        else
            out -= contrib;
    }
    return out;
}

bool check_limit_relation(const DivisorConfiguration& config) {
    return compute_micc(config) == -series_limit(compute_zeta(config));
}

RationalSeries compute_naive(const DivisorConfiguration& config) {
    require_valid(config);
    RationalSeries z;
    for (const auto& s : config.strata) {
        if (!is_selected(config, s)) continue;
        RingElem coeff = s.geom * l_minus_one_pow(static_cast<int>(s.comps.size()));
        z += RationalSeries::term(coeff, stratum_factors(config, s));
    }
    return z;
}

HodgeSeries hodge_zeta(const DivisorConfiguration& config,
                       const std::map<std::string, QPoly>& hodge_table) {
    require_valid(config);
    Substitution sub = hodge_substitution(hodge_table);
    std::map<std::vector<FactorKey>, QPoly> acc;
    for (const auto& s : config.strata) {
        if (!is_selected(config, s)) continue;
        RingElem coeff = s.geom * l_minus_one_pow(static_cast<int>(s.comps.size()));
        acc[stratum_factors(config, s)] += substitute(coeff, sub);
    }
    HodgeSeries h;
    for (auto& [factors, coeff] : acc)
        if (!coeff.is_zero()) h.terms.push_back(HodgeTerm{std::move(coeff), factors});
    return h;
}

std::string format_hodge_series(const HodgeSeries& h) {
    if (h.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : h.terms) {
        if (!first) os << " + ";
        first = false;
        std::string cs = t.coeff.str();
        bool wrap = t.coeff.terms().size() > 1 || cs[0] == '-';
        os << (wrap ? "(" + cs + ")" : cs);
        for (const auto& f : t.factors) {
            std::string tm = f.m == 1 ? "T" : "T^" + std::to_string(f.m);
            os << " * ";
            if (f.nu > 0) {
                std::string uv = f.nu == 1 ? "u*v" : "(u*v)^" + std::to_string(f.nu);
                os << tm << "/(" << uv << " - " << tm << ")";
            } else if (f.nu == 0) {
                os << tm << "/(1 - " << tm << ")";
            } else {
                std::string uv = f.nu == -1 ? "u*v" : "(u*v)^" + std::to_string(-f.nu);
                os << uv << "*" << tm << "/(1 - " << uv << "*" << tm << ")";
            }
        }
    }
    return os.str();
}

QRat topological_zeta(const DivisorConfiguration& config,
                      const std::map<std::string, Rat>& chi_table) {
    require_valid(config);
    Substitution sub;
    sub.l_image = QPoly(1);
    for (const auto& [name, v] : chi_table) sub.symbol_images.emplace(Symbol::named(name), QPoly(v));
    return euler_realization(
        config, [&](const Stratum& s) { return substitute(s.geom, sub).constant_value(); });
}

QRat twisted_topological_zeta(const DivisorConfiguration& config, int order,
                              const std::map<std::string, Rat>& chi_table) {
    if (order < 1) throw DomainError("twisted zeta requires a character order e >= 1");
    require_valid(config);
    return euler_realization(config, [&](const Stratum& s) {
        Substitution sub;
        sub.l_image = QPoly(1);
        for (const auto& sym : s.cover.symbols()) {
            if (sym.is_mu()) {
                sub.symbol_images.emplace(sym, QPoly(sym.mu_order() % order == 0 ? 1 : 0));
            } else {
                auto it = chi_table.find(sym.raw_name());
                if (it == chi_table.end())
                    throw DomainError("no substitution entry for symbol '" + sym.display() + "'");
                sub.symbol_images.emplace(sym, QPoly(it->second));
            }
        }
        return substitute(s.cover, sub).constant_value();
    });
}

QRat stringy_residue(const DivisorConfiguration& config,
                     const std::map<std::string, QPoly>& hodge_table) {
    require_valid(config);
    Substitution sub = hodge_substitution(hodge_table);
    QPoly uv = uv_pow(1);
    QPoly uv_minus_one = uv - QPoly(1);

    QRat total(0);
    for (const auto& s : config.strata) {
        if (!is_selected(config, s)) continue;
        std::vector<FactorKey> factors = stratum_factors(config, s);
        int vanishing = static_cast<int>(
            std::count_if(factors.begin(), factors.end(), [](const FactorKey& f) { return f.nu == f.m; }));
        if (vanishing >= 2)
            throw DomainError("higher-order pole at T = uv: a term carries " +
                              std::to_string(vanishing) + " factors with nu == m");
        if (vanishing == 0) continue;

        QRat term{substitute(s.geom, sub)};
        bool residue_used = false;
        for (const auto& f : factors) {
            if (f.nu == f.m && !residue_used) {
                // limit of (T - uv) * (uv-1)T^m / ((uv)^nu - T^m) at T = uv
                residue_used = true;
                term = term * QRat(-(uv_minus_one * uv), QPoly(Rat(f.m)));
            } else {
                term = term * QRat(uv_minus_one * uv_pow(f.m), uv_pow(f.nu) - uv_pow(f.m));
            }
        }
        total = total + term;
    }
    return total * QRat(QPoly(-1), uv * uv_minus_one);
}

std::vector<FactorKey> pole_candidates(const RationalSeries& z) {
    NormalForm nf = over_common_denominator(z);
    TPoly num = nf.numerator;
    bool progress = true;
    while (progress && !num.is_zero()) {
        progress = false;
        for (auto& [f, e] : nf.denominator) {
            while (e > 0) {
                auto q = exact_divide(num, one_minus_a(f));
                if (!q) break;
                num = std::move(*q);
                --e;
                progress = true;
            }
        }
    }
    std::vector<FactorKey> out;
    for (const auto& [f, e] : nf.denominator)
        for (int i = 0; i < e; ++i) out.push_back(f);
    return out;
}

} // namespace mzeta
