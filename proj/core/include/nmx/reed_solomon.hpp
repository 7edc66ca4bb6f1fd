#ifndef NMX_REED_SOLOMON_HPP
#define NMX_REED_SOLOMON_HPP

#include <cstdint>
#include <vector>

#include "nmx/bitstring.hpp"
#include "nmx/gf2.hpp"

namespace nmx {

struct Codeword {
    FieldVec symbols;    // length n_code
    std::size_t k_msg;   // message symbols
    unsigned width;      // field width w, alphabet 2^w

    double rate() const { return double(k_msg) / double(symbols.size()); }
    // Guaranteed minimum Hamming distance n - k + 1.
    std::size_t min_distance() const { return symbols.size() - k_msg + 1; }
};

// Systematic-at-zero Reed-Solomon encoding: symbol i (1-based position i)
// is the message polynomial sum_j msg[j] x^j evaluated at the field
// element i-1, so position 1 carries msg[0] verbatim. Requires
// k_msg <= n_code <= 2^w.
Codeword rs_encode(const FieldVec& msg, std::size_t n_code);

// The index-th (1-based) codeword symbol of rs_encode applied to y parsed
// as ceil(|y|/width) symbols, serialized as `width` bits.
BitString ecc_symbol(const BitString& y, std::size_t index, unsigned width, std::size_t n_code);

struct ParamPlan;
BitString ecc_symbol(const BitString& y, std::size_t index, const ParamPlan& plan);

} // namespace nmx

#endif
