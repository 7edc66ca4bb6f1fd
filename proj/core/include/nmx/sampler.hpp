#ifndef NMX_SAMPLER_HPP
#define NMX_SAMPLER_HPP

#include <cstdint>
#include <vector>

#include "nmx/bitstring.hpp"

namespace nmx {

// Pairwise-independent position sampler. The seed splits into two
// elements (a, b) of GF(2^u), u = ceil(r/2); sample i is the evaluation
// a*alpha_i + b at the i-th canonical field point, folded into [1, nu].
// Requires 2^u >= nu and t1 <= 2^u.
struct SamplerSpec {
    std::size_t r = 0;     // seed bits
    std::size_t nu = 0;    // universe size
    std::size_t t1 = 0;    // sample count
    double alpha = 1.0 / 15.0;
    double beta = 1.0 / 15.0;
    double delta = 0.1;

    unsigned u() const { return static_cast<unsigned>((r + 1) / 2); }

    bool operator==(const SamplerSpec&) const = default;
};

// Exactly t1 indices in [1, nu], deterministic in (seed, spec).
std::vector<std::size_t> samp(const BitString& seed, const SamplerSpec& spec);

} // namespace nmx

#endif
