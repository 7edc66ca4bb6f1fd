#ifndef NMX_MAC_HPP
#define NMX_MAC_HPP

#include "nmx/bitstring.hpp"

namespace nmx {

// Affine polynomial one-time MAC over GF(2^m): tag = s1*b + s2. Forging a
// tag for a fresh message succeeds for exactly one key in 2^m once the
// observed pair fixes the coset, i.e. with probability 2^-m.
struct MacKey {
    BitString s1;
    BitString s2;

    std::size_t width() const { return s1.size(); }
    static MacKey from_bits(const BitString& key_bits);  // 2m bits, s1 first
};

BitString mac(const MacKey& key, const BitString& b);

} // namespace nmx

#endif
