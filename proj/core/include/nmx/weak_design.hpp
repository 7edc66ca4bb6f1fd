#ifndef NMX_WEAK_DESIGN_HPP
#define NMX_WEAK_DESIGN_HPP

#include <cstdint>
#include <vector>

namespace nmx {

// Nisan-Wigderson polynomial design: m subsets of [1, d_total], each of
// size l, with bounded pairwise overlaps. Set i is the graph of the i-th
// polynomial over GF(p) (p the smallest prime >= l, coefficients the
// base-p digits of i) evaluated at the points 0..l-1; the pair (a, f(a))
// maps to position f(a)*l + a + 1. Hence d_total = l*p, which is l^2
// whenever l is prime, and the zero polynomial yields the set {1..l}.
//
// For m == 1 no overlap structure is needed and the single set {1..l}
// over d_total = l suffices.
struct WeakDesign {
    std::size_t m = 0;
    std::size_t l = 0;
    std::size_t p = 0;        // field size (1 for the m==1 degenerate case)
    std::size_t d_total = 0;
    double overlap_bound = 2.0;  // sum_{j<i} 2^{|Si ∩ Sj|} <= overlap_bound * m
    std::vector<std::vector<std::uint32_t>> sets;  // 1-based positions
};

WeakDesign weak_design(std::size_t m, std::size_t l);

// Smallest d_total a (m, l) design needs; used by the planner to size
// extractor seeds.
std::size_t weak_design_positions(std::size_t m, std::size_t l);

std::size_t next_prime_at_least(std::size_t n);

} // namespace nmx

#endif
