#ifndef MZETA_ZETA_HPP
#define MZETA_ZETA_HPP

#include <map>
#include <string>
#include <vector>

#include "mzeta/model.hpp"
#include "mzeta/qpoly.hpp"
#include "mzeta/series.hpp"

namespace mzeta {

/// Z^A(T): sum over strata meeting the selection of
/// cover * (L-1)^{|I|-1} * prod A_i/(1-A_i).
RationalSeries compute_zeta(const DivisorConfiguration& config);

/// S^A: sum over selected strata of (-1)^{|I|-1} * cover * (L-1)^{|I|-1}.
RingElem compute_micc(const DivisorConfiguration& config);

/// Exact check of S^A == -lim_{T->inf} Z^A(T).
bool check_limit_relation(const DivisorConfiguration& config);

/// Naive variant: geometric classes and exponent (L-1)^{|I|}.
RationalSeries compute_naive(const DivisorConfiguration& config);

/// Series with Q[u,v] coefficients; factor keys keep their (nu, m) meaning,
/// each standing for (uv)^{-nu}T^m / (1 - (uv)^{-nu}T^m).
struct HodgeTerm {
    QPoly coeff;
    std::vector<FactorKey> factors;
};
struct HodgeSeries {
    std::vector<HodgeTerm> terms;
};

/// The naive series with L specialized to uv in all coefficients.
/// hodge_table supplies the u,v-image of every named symbol in geometric
/// classes.
HodgeSeries hodge_zeta(const DivisorConfiguration& config,
                       const std::map<std::string, QPoly>& hodge_table);

std::string format_hodge_series(const HodgeSeries& h);

/// Euler realization: sum of chi(E_I) * prod 1/(nu_i + s m_i) in Q(s),
/// exactly reduced. chi_table supplies integers for named symbols inside
/// geometric classes.
QRat topological_zeta(const DivisorConfiguration& config,
                      const std::map<std::string, Rat>& chi_table);

/// Character-weighted variant of order e >= 1: cover classes are paired
/// with a character alpha of order e via L -> 1, mu(k) -> (e | k ? 1 : 0),
/// named symbols via chi_table.
QRat twisted_topological_zeta(const DivisorConfiguration& config, int order,
                              const std::map<std::string, Rat>& chi_table);

/// Residue of the Hodge series at T = uv, normalized by -1/(uv(uv-1)).
/// Every term may carry at most one factor with nu == m; otherwise the
/// pole at T = uv has higher order and a DomainError is raised.
QRat stringy_residue(const DivisorConfiguration& config,
                     const std::map<std::string, QPoly>& hodge_table);

/// Candidate poles: denominator factors (nu, m) surviving exact free-ring
/// cancellation against the cross-multiplied numerator. Sound superset of
/// the true poles under any specialization; sorted, with multiplicity.
std::vector<FactorKey> pole_candidates(const RationalSeries& z);

} // namespace mzeta

#endif
