#ifndef NMX_STRAIGHTLINE_HPP
#define NMX_STRAIGHTLINE_HPP

#include "nmx/nmext.hpp"
#include "nmx/plan.hpp"

namespace nmx {

// Deliberately primitive re-implementations of the four pipelines,
// written over '0'/'1' character strings with naive polynomial
// evaluation and no shared engine, so that a bug in the production path
// and a bug here would have to coincide to go unnoticed. They return the
// same trace structure for field-by-field comparison.
NmExtTrace straightline_nmext(const BitString& x, const BitString& y, const ParamPlan& plan);
NmExtTrace straightline_two_nmext(const BitString& x, const BitString& y, const ParamPlan& plan);
NmExtTrace straightline_t_nmext(const BitString& x, const BitString& y, const ParamPlan& plan);
NmExtTrace straightline_t_2nmext(const BitString& x, const BitString& y, const ParamPlan& plan);

} // namespace nmx

#endif
