#ifndef NMX_RATIONAL_HPP
#define NMX_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace nmx {

// Exact probabilities everywhere in the oracle: reals appear only in
// rendered reports.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rat rat_pow2(long e) {
    if (e >= 0) return Rat(BigInt(1) << e);
    return Rat(1, BigInt(1) << -e);
}

inline std::string rat_str(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rat rat_parse(const std::string& s);

inline double rat_double(const Rat& r) { return r.convert_to<double>(); }

} // namespace nmx

#endif
