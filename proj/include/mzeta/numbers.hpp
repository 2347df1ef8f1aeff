#ifndef MZETA_NUMBERS_HPP
#define MZETA_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace mzeta {

// Coefficients are exact and unbounded: blow-up scripts compose freely.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat make_rat(long long num, long long den = 1) { return Rat(num, den); }

} // namespace mzeta

#endif
