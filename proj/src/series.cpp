#include "mzeta/series.hpp"

#include <algorithm>

namespace mzeta {

TPoly a_monomial(const FactorKey& f) {
    return TPoly::monomial(RingElem::lefschetz(-f.nu), f.m);
}

TPoly one_minus_a(const FactorKey& f) {
    TPoly p(RingElem(1));
    p -= a_monomial(f);
    return p;
}

RationalSeries RationalSeries::term(const RingElem& coeff, std::vector<FactorKey> factors) {
    std::sort(factors.begin(), factors.end());
    RationalSeries s;
    s.insert_term(coeff, std::move(factors));
    return s;
}

void RationalSeries::insert_term(const RingElem& coeff, std::vector<FactorKey> factors) {
    if (coeff.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), factors,
                               [](const RationalTerm& t, const std::vector<FactorKey>& f) {
                                   return t.factors < f;
                               });
    if (it != terms_.end() && it->factors == factors) {
        it->coeff += coeff;
        if (it->coeff.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, RationalTerm{coeff, std::move(factors)});
    }
}

RingElem RationalSeries::coeff_of(const std::vector<FactorKey>& sorted_factors) const {
    for (const auto& t : terms_)
        if (t.factors == sorted_factors) return t.coeff;
    return RingElem();
}

RationalSeries& RationalSeries::operator+=(const RationalSeries& o) {
    for (const auto& t : o.terms_) insert_term(t.coeff, t.factors);
    return *this;
}

RationalSeries RationalSeries::operator-() const {
    RationalSeries out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back(RationalTerm{-t.coeff, t.factors});
    return out;
}

RationalSeries RationalSeries::scaled(const RingElem& c) const {
    RationalSeries out;
    for (const auto& t : terms_) out.insert_term(t.coeff * c, t.factors);
    return out;
}

bool operator==(const RationalSeries& a, const RationalSeries& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].factors != b.terms_[i].factors || !(a.terms_[i].coeff == b.terms_[i].coeff))
            return false;
    return true;
}

NormalForm over_common_denominator(const RationalSeries& s) {
    NormalForm nf;
    for (const auto& t : s.terms()) {
        std::map<FactorKey, int> mult;
        for (const auto& f : t.factors) ++mult[f];
        for (const auto& [f, e] : mult) {
            auto it = nf.denominator.find(f);
            if (it == nf.denominator.end())
                nf.denominator.emplace(f, e);
            else
                it->second = std::max(it->second, e);
        }
    }
    for (const auto& t : s.terms()) {
        TPoly part(t.coeff);
        std::map<FactorKey, int> mult;
        for (const auto& f : t.factors) {
            part = part * a_monomial(f);
            ++mult[f];
        }
        for (const auto& [f, e] : nf.denominator) {
            int used = 0;
            if (auto it = mult.find(f); it != mult.end()) used = it->second;
            for (int i = used; i < e; ++i) part = part * one_minus_a(f);
        }
        nf.numerator += part;
    }
    return nf;
}

bool series_equal(const RationalSeries& a, const RationalSeries& b) {
    return over_common_denominator(a - b).numerator.is_zero();
}

RingElem series_limit(const RationalSeries& s) {
    RingElem out;
    for (const auto& t : s.terms()) {
        for (const auto& f : t.factors)
            if (f.m < 1) throw DomainError("limit undefined for non-positive multiplicity");
        if (t.factors.size() % 2 == 0)
            out += t.coeff;
        else
            out -= t.coeff;
    }
    return out;
}

} // namespace mzeta
