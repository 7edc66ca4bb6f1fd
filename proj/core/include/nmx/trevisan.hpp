#ifndef NMX_TREVISAN_HPP
#define NMX_TREVISAN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nmx/bitstring.hpp"
#include "nmx/gf2.hpp"
#include "nmx/weak_design.hpp"

namespace nmx {

enum class ExtRole {
    Ext0, Ext1, Ext2, Ext3, Ext4, Ext5, Ext6, PAExt,
};

std::string to_string(ExtRole role);

// One seeded-extractor instance: the declared contract (n_in, d_seed,
// m_out, k_req, eps) plus the resolved internals of its realization
// (field width of the inner code and weak-design geometry).
struct ExtSpec {
    ExtRole role = ExtRole::Ext0;
    std::size_t n_in = 0;
    std::size_t d_seed = 0;
    std::size_t m_out = 0;
    std::size_t k_req = 0;
    double eps = 0.0;

    // Realization: per output bit the seed restricted to a design set of
    // size 2*field_bits feeds the inner one-bit extractor.
    unsigned field_bits = 0;       // l_f
    std::size_t design_l = 0;      // 2 * field_bits
    std::size_t design_p = 0;
    std::size_t d_total = 0;       // design universe, <= d_seed
    bool injective = false;        // ceil(n_in/l_f) <= 2^l_f

    bool operator==(const ExtSpec&) const = default;
};

// Resolves the realization fields for the given contract. Throws
// PlanError when no field width fits the seed, or (when
// require_injective) when the inner code would be degenerate.
ExtSpec make_ext_spec(ExtRole role, std::size_t n_in, std::size_t d_seed, std::size_t m_out,
                      std::size_t k_req, double eps, bool require_injective = false);

// Inner one-bit extractor: the seed splits into an evaluation point z and
// a mask w of field_bits each; the output is the parity of
// poly_x(z) & w, where poly_x has the l_f-bit chunks of x as
// coefficients (chunk j is the coefficient of X^j).
int one_bit_ext(const BitString& x, const BitString& seed);

class TrevisanExt {
public:
    explicit TrevisanExt(const ExtSpec& spec);

    const ExtSpec& spec() const { return spec_; }
    const WeakDesign& design() const { return design_; }

    BitString extract(const BitString& x, const BitString& seed) const;

    // Seed bits at design set i's positions in increasing order.
    BitString restrict_seed(const BitString& seed, std::size_t i) const;

    // Hot-path variant over pre-parsed l_f-bit chunks of x.
    void extract_into(const std::vector<std::uint32_t>& x_chunks, const BitString& seed,
                      BitString& out) const;

    // Per-bit design positions (0-based, sorted within each set), laid
    // out as m_out consecutive runs of design_l entries.
    const std::vector<std::uint32_t>& flat_positions() const { return positions_; }

    // For a fixed source the inner polynomial takes only 2^field_bits
    // values; tabulating them once beats per-bit Horner whenever
    // m_out exceeds the field size. Both paths compute identical bits.
    bool table_pays_off() const { return (std::size_t(1) << spec_.field_bits) < spec_.m_out; }
    std::vector<std::uint32_t> eval_table(const std::vector<std::uint32_t>& x_chunks) const;
    void extract_table_into(const std::vector<std::uint32_t>& table, const BitString& seed,
                            BitString& out) const;

    // Dispatches between the direct and tabled path, reusing `table`
    // across calls that share the same source.
    BitString extract_with_cache(const BitString& x, const BitString& seed,
                                 std::vector<std::uint32_t>& table) const;

private:
    ExtSpec spec_;
    Gf2Field field_;
    WeakDesign design_;
    std::vector<std::uint32_t> positions_;  // sets flattened, sorted within each set
};

BitString trevisan_ext(const BitString& x, const BitString& seed, const ExtSpec& spec);

} // namespace nmx

#endif
