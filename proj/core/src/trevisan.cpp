#include "nmx/trevisan.hpp"
#include "nmx/errors.hpp"

#include <algorithm>

namespace nmx {

std::string to_string(ExtRole role) {
    switch (role) {
        case ExtRole::Ext0: return "Ext0";
        case ExtRole::Ext1: return "Ext1";
        case ExtRole::Ext2: return "Ext2";
        case ExtRole::Ext3: return "Ext3";
        case ExtRole::Ext4: return "Ext4";
        case ExtRole::Ext5: return "Ext5";
        case ExtRole::Ext6: return "Ext6";
        case ExtRole::PAExt: return "PAExt";
    }
    return "?";
}

namespace {

bool chunks_fit(std::size_t n_in, unsigned lf) {
    std::size_t chunks = (n_in + lf - 1) / lf;
    return lf < 64 && chunks <= (std::size_t(1) << lf);
}

bool design_fits(std::size_t m_out, unsigned lf, std::size_t d_seed) {
    std::size_t l = 2 * std::size_t(lf);
    if (m_out == 1) return l <= d_seed;
    std::size_t p = next_prime_at_least(l);
    if (l * p > d_seed) return false;
    // degree-bound feasibility: smallest c with p^c >= m must satisfy c <= p
    std::size_t c = 1, span = p;
    while (span < m_out) {
        if (c == p) return false;
        span *= p;
        ++c;
    }
    return true;
}

} // namespace

ExtSpec make_ext_spec(ExtRole role, std::size_t n_in, std::size_t d_seed, std::size_t m_out,
                      std::size_t k_req, double eps, bool require_injective) {
    if (n_in == 0 || d_seed == 0 || m_out == 0)
        throw PlanError(to_string(role) + ": n_in, d_seed, m_out must be positive");
    if (m_out > n_in)
        throw PlanError(to_string(role) + ": m_out " + std::to_string(m_out) + " exceeds n_in " +
                        std::to_string(n_in));

    ExtSpec spec;
    spec.role = role;
    spec.n_in = n_in;
    spec.d_seed = d_seed;
    spec.m_out = m_out;
    spec.k_req = k_req;
    spec.eps = eps;

    // Largest field width whose design fits in the seed; larger widths
    // mean fewer polynomial coefficients, hence a less degenerate code.
    for (unsigned lf = 24; lf >= 1; --lf) {
        if (!design_fits(m_out, lf, d_seed)) continue;
        spec.field_bits = lf;
        spec.design_l = 2 * std::size_t(lf);
        spec.design_p = (m_out == 1) ? 1 : next_prime_at_least(spec.design_l);
        spec.d_total = weak_design_positions(m_out, spec.design_l);
        spec.injective = chunks_fit(n_in, lf);
        break;
    }
    if (spec.field_bits == 0)
        throw PlanError(to_string(role) + ": seed length " + std::to_string(d_seed) +
                        " cannot host a weak design for " + std::to_string(m_out) +
                        " output bits (needs >= " +
                        std::to_string(weak_design_positions(m_out, 2)) + ")");
    if (require_injective && !spec.injective)
        throw PlanError(to_string(role) + ": inner code degenerate at n_in=" +
                        std::to_string(n_in) + ", field_bits=" + std::to_string(spec.field_bits) +
                        " (chunks exceed field size)");
    return spec;
}

int one_bit_ext(const BitString& x, const BitString& seed) {
    if (seed.size() < 2 || seed.size() % 2 != 0)
        throw StructuralError("one_bit_ext: seed length must be even and >= 2, got " +
                              std::to_string(seed.size()));
    unsigned lf = static_cast<unsigned>(seed.size() / 2);
    Gf2Field f(lf);
    auto chunks = x.parse_symbols(lf);
    std::uint32_t z = static_cast<std::uint32_t>(seed.prefix(lf).to_uint());
    std::uint32_t w = static_cast<std::uint32_t>(seed.slice(lf, lf).to_uint());
    std::uint32_t acc = 0;
    for (std::size_t j = chunks.size(); j-- > 0;) acc = f.mul(acc, z) ^ chunks[j];
    return __builtin_parity(acc & w);
}

TrevisanExt::TrevisanExt(const ExtSpec& spec)
    : spec_(spec), field_(spec.field_bits), design_(weak_design(spec.m_out, spec.design_l)) {
    if (design_.d_total > spec_.d_seed)
        throw PlanError(to_string(spec_.role) + ": design universe " +
                        std::to_string(design_.d_total) + " exceeds seed length " +
                        std::to_string(spec_.d_seed));
    positions_.reserve(spec_.m_out * spec_.design_l);
    for (auto set : design_.sets) {
        std::sort(set.begin(), set.end());
        for (auto pos : set) positions_.push_back(pos - 1);  // to 0-based
    }
}

BitString TrevisanExt::restrict_seed(const BitString& seed, std::size_t i) const {
    BitString r(spec_.design_l);
    const std::uint32_t* pos = positions_.data() + i * spec_.design_l;
    for (std::size_t j = 0; j < spec_.design_l; ++j) r.set_bit(j, seed.bit(pos[j]));
    return r;
}

void TrevisanExt::extract_into(const std::vector<std::uint32_t>& x_chunks, const BitString& seed,
                               BitString& out) const {
    const unsigned lf = spec_.field_bits;
    const std::uint32_t* pos = positions_.data();
    for (std::size_t i = 0; i < spec_.m_out; ++i) {
        std::uint32_t z = 0, w = 0;
        for (unsigned j = 0; j < lf; ++j) z = (z << 1) | static_cast<std::uint32_t>(seed.bit(pos[j]));
        for (unsigned j = lf; j < 2 * lf; ++j) w = (w << 1) | static_cast<std::uint32_t>(seed.bit(pos[j]));
        pos += spec_.design_l;
        std::uint32_t acc = 0;
        for (std::size_t j = x_chunks.size(); j-- > 0;) acc = field_.mul(acc, z) ^ x_chunks[j];
        out.set_bit(i, __builtin_parity(acc & w));
    }
}

std::vector<std::uint32_t> TrevisanExt::eval_table(const std::vector<std::uint32_t>& x_chunks) const {
    std::vector<std::uint32_t> table(std::size_t(1) << spec_.field_bits);
    for (std::uint32_t z = 0; z < table.size(); ++z) {
        std::uint32_t acc = 0;
        for (std::size_t j = x_chunks.size(); j-- > 0;) acc = field_.mul(acc, z) ^ x_chunks[j];
        table[z] = acc;
    }
    return table;
}

void TrevisanExt::extract_table_into(const std::vector<std::uint32_t>& table, const BitString& seed,
                                     BitString& out) const {
    const unsigned lf = spec_.field_bits;
    const std::uint32_t* pos = positions_.data();
    for (std::size_t i = 0; i < spec_.m_out; ++i) {
        std::uint32_t z = 0, w = 0;
        for (unsigned j = 0; j < lf; ++j) z = (z << 1) | static_cast<std::uint32_t>(seed.bit(pos[j]));
        for (unsigned j = lf; j < 2 * lf; ++j) w = (w << 1) | static_cast<std::uint32_t>(seed.bit(pos[j]));
        pos += spec_.design_l;
        out.set_bit(i, __builtin_parity(table[z] & w));
    }
}

BitString TrevisanExt::extract_with_cache(const BitString& x, const BitString& seed,
                                          std::vector<std::uint32_t>& table) const {
    if (x.size() != spec_.n_in)
        throw StructuralError(to_string(spec_.role) + ": source length " + std::to_string(x.size()) +
                              " != n_in " + std::to_string(spec_.n_in));
    if (seed.size() != spec_.d_seed)
        throw StructuralError(to_string(spec_.role) + ": seed length " + std::to_string(seed.size()) +
                              " != d_seed " + std::to_string(spec_.d_seed));
    BitString out(spec_.m_out);
    if (!table_pays_off()) {
        extract_into(x.parse_symbols(spec_.field_bits), seed, out);
        return out;
    }
    if (table.empty()) table = eval_table(x.parse_symbols(spec_.field_bits));
    extract_table_into(table, seed, out);
    return out;
}

BitString TrevisanExt::extract(const BitString& x, const BitString& seed) const {
    if (x.size() != spec_.n_in)
        throw StructuralError(to_string(spec_.role) + ": source length " + std::to_string(x.size()) +
                              " != n_in " + std::to_string(spec_.n_in));
    if (seed.size() != spec_.d_seed)
        throw StructuralError(to_string(spec_.role) + ": seed length " + std::to_string(seed.size()) +
                              " != d_seed " + std::to_string(spec_.d_seed));
    BitString out(spec_.m_out);
    extract_into(x.parse_symbols(spec_.field_bits), seed, out);
    return out;
}

BitString trevisan_ext(const BitString& x, const BitString& seed, const ExtSpec& spec) {
    return TrevisanExt(spec).extract(x, seed);
}

} // namespace nmx
