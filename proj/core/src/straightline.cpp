#include "nmx/straightline.hpp"
#include "nmx/errors.hpp"
#include "nmx/gf2.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace nmx {

namespace {

// Everything below works on '0'/'1' strings, leftmost bit first.

using Bits = std::string;

Bits to_bits(const BitString& b) { return b.to_binary(); }
BitString from_bits(const Bits& s) { return BitString::from_binary(s); }

Bits take(const Bits& s, std::size_t d) { return s.substr(0, d); }

std::uint64_t bits_value(const Bits& s) {
    std::uint64_t v = 0;
    for (char c : s) v = v * 2 + (c == '1' ? 1 : 0);
    return v;
}

Bits value_bits(std::uint64_t v, std::size_t len) {
    Bits s(len, '0');
    for (std::size_t i = 0; i < len; ++i)
        if (v & (std::uint64_t(1) << (len - 1 - i))) s[i] = '1';
    return s;
}

// Polynomial multiplication mod the width's fixed modulus, one shifted
// addition at a time.
std::uint64_t sl_gf_mul(std::uint64_t a, std::uint64_t b, unsigned w) {
    std::uint64_t mod = Gf2Field::modulus_for(w);
    std::uint64_t r = 0;
    for (unsigned i = 0; i < w; ++i) {
        if ((b >> i) & 1u) {
            std::uint64_t shifted = a;
            for (unsigned j = 0; j < i; ++j) {
                shifted <<= 1;
                if ((shifted >> w) & 1u) shifted ^= mod;
            }
            r ^= shifted;
        }
    }
    return r;
}

std::uint64_t sl_gf_pow(std::uint64_t a, std::uint64_t e, unsigned w) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r = sl_gf_mul(r, a, w);
    return r;
}

std::vector<std::uint64_t> sl_chunks(const Bits& src, unsigned w) {
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < src.size(); i += w) {
        Bits piece = src.substr(i, w);
        while (piece.size() < w) piece += '0';
        out.push_back(bits_value(piece));
    }
    return out;
}

// Codeword symbol at 1-based position: evaluate sum_j m_j * point^j term
// by term.
std::uint64_t sl_ecc_symbol(const Bits& src, std::uint64_t position, unsigned w) {
    auto msg = sl_chunks(src, w);
    std::uint64_t point = position - 1;
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < msg.size(); ++j)
        acc ^= sl_gf_mul(msg[j], sl_gf_pow(point, j, w), w);
    return acc;
}

bool sl_is_prime(std::size_t v) {
    if (v < 2) return false;
    for (std::size_t d = 2; d < v; ++d)
        if (v % d == 0) return false;
    return true;
}

// Design set i as sorted 0-based positions, re-derived from scratch.
std::vector<std::size_t> sl_design_set(std::size_t m, std::size_t l, std::size_t i) {
    std::vector<std::size_t> set;
    if (m == 1) {
        for (std::size_t j = 0; j < l; ++j) set.push_back(j);
        return set;
    }
    std::size_t p = l;
    while (!sl_is_prime(p)) ++p;
    for (std::size_t a = 0; a < l; ++a) {
        // evaluate the base-p digit polynomial of i at a, highest digit first
        std::vector<std::size_t> digits;
        std::size_t v = i;
        while (v) {
            digits.push_back(v % p);
            v /= p;
        }
        if (digits.empty()) digits.push_back(0);
        std::size_t fa = 0;
        for (std::size_t j = digits.size(); j-- > 0;) fa = (fa * a + digits[j]) % p;
        set.push_back(fa * l + a);
    }
    std::sort(set.begin(), set.end());
    return set;
}

Bits sl_trevisan(const Bits& x, const Bits& seed, const ExtSpec& spec) {
    unsigned lf = spec.field_bits;
    auto chunks = sl_chunks(x, lf);
    Bits out;
    for (std::size_t i = 0; i < spec.m_out; ++i) {
        auto set = sl_design_set(spec.m_out, spec.design_l, i);
        Bits restricted;
        for (auto pos : set) restricted += seed[pos];
        std::uint64_t z = bits_value(restricted.substr(0, lf));
        std::uint64_t w = bits_value(restricted.substr(lf, lf));
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < chunks.size(); ++j)
            acc ^= sl_gf_mul(chunks[j], sl_gf_pow(z, j, lf), lf);
        std::uint64_t masked = acc & w;
        int parity = 0;
        while (masked) {
            parity ^= static_cast<int>(masked & 1u);
            masked >>= 1;
        }
        out += parity ? '1' : '0';
    }
    return out;
}

Bits sl_ext(const ParamPlan& plan, ExtRole role, const Bits& x, const Bits& seed) {
    return sl_trevisan(x, seed, plan.spec(role));
}

struct SlFf {
    Bits zs, a, c, b, zbar, zbars, abar, cbar, bbar, o;
    Bits z_in;
    int g = 0;
};

SlFf sl_flip_flop(const ParamPlan& plan, const Bits& y, const Bits& longsrc, const Bits& z, int g) {
    SlFf f;
    f.z_in = z;
    f.g = g;
    f.zs = take(z, plan.s);
    f.a = sl_ext(plan, ExtRole::Ext1, y, f.zs);
    f.c = sl_ext(plan, ExtRole::Ext2, z, f.a);
    f.b = sl_ext(plan, ExtRole::Ext1, y, f.c);
    f.zbar = sl_ext(plan, ExtRole::Ext3, longsrc, g == 0 ? f.a : f.b);
    f.zbars = take(f.zbar, plan.s);
    f.abar = sl_ext(plan, ExtRole::Ext1, y, f.zbars);
    f.cbar = sl_ext(plan, ExtRole::Ext2, f.zbar, f.abar);
    f.bbar = sl_ext(plan, ExtRole::Ext1, y, f.cbar);
    f.o = sl_ext(plan, ExtRole::Ext3, longsrc, g == 0 ? f.bbar : f.abar);
    return f;
}

void sl_breaker(const ParamPlan& plan, const Bits& y, const Bits& longsrc, const Bits& z0,
                const Bits& advice, NmExtTrace& tr) {
    Bits z = z0;
    for (char gc : advice) {
        SlFf f = sl_flip_flop(plan, y, longsrc, z, gc == '1' ? 1 : 0);
        FfRoundTrace rt;
        rt.z_in = from_bits(f.z_in);
        rt.zs = from_bits(f.zs);
        rt.a = from_bits(f.a);
        rt.c = from_bits(f.c);
        rt.b = from_bits(f.b);
        rt.zbar = from_bits(f.zbar);
        rt.zbars = from_bits(f.zbars);
        rt.abar = from_bits(f.abar);
        rt.cbar = from_bits(f.cbar);
        rt.bbar = from_bits(f.bbar);
        rt.o = from_bits(f.o);
        rt.g = f.g;
        tr.rounds.push_back(std::move(rt));
        z = f.o;
    }
    tr.s = from_bits(sl_ext(plan, ExtRole::Ext4, y, z));
}

std::uint64_t sl_ip(const Bits& xs, const Bits& ys, unsigned w) {
    auto xv = sl_chunks(xs, w);
    auto yv = sl_chunks(ys, w);
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < xv.size(); ++i) acc ^= sl_gf_mul(xv[i], yv[i], w);
    return acc;
}

// Sampler re-derivation: split, pad, evaluate a*alpha_i + b, fold.
std::vector<std::uint64_t> sl_samp(const Bits& seed, std::size_t nu, std::size_t t1) {
    std::size_t r = seed.size();
    unsigned u = static_cast<unsigned>((r + 1) / 2);
    std::size_t half = (r + 1) / 2;
    Bits a_bits = seed.substr(0, half);
    Bits b_bits = seed.substr(half);
    while (a_bits.size() < u) a_bits += '0';
    while (b_bits.size() < u) b_bits += '0';
    std::uint64_t a = bits_value(a_bits), b = bits_value(b_bits);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < t1; ++i)
        out.push_back((sl_gf_mul(a, i, u) ^ b) % nu + 1);
    return out;
}

} // namespace

NmExtTrace straightline_nmext(const BitString& x_in, const BitString& y_in, const ParamPlan& plan) {
    Bits x = to_bits(x_in), y = to_bits(y_in);
    NmExtTrace tr;

    Bits y1 = take(y, plan.d1);
    Bits idx_bits = sl_ext(plan, ExtRole::Ext0, x, y1);
    std::uint64_t index = bits_value(idx_bits) + 1;
    Bits g = y1 + value_bits(sl_ecc_symbol(y, index, plan.ecc_width), plan.ecc_width);
    tr.y1 = from_bits(y1);
    tr.index = index;
    tr.advice = from_bits(g);

    Bits y2 = take(y, plan.d2);
    Bits t = sl_ext(plan, ExtRole::Ext5, x, y2);
    tr.y2 = from_bits(y2);
    tr.t_src = from_bits(t);

    Bits z0 = take(t, plan.h);
    tr.z0 = from_bits(z0);
    sl_breaker(plan, y, t, z0, g, tr);
    tr.l = from_bits(sl_ext(plan, ExtRole::Ext6, x, to_bits(tr.s)));
    return tr;
}

NmExtTrace straightline_two_nmext(const BitString& x_in, const BitString& y_in,
                                  const ParamPlan& plan) {
    Bits x = to_bits(x_in), y = to_bits(y_in);
    NmExtTrace tr;

    Bits x1 = take(x, 3 * plan.k), y1 = take(y, 3 * plan.k);
    std::uint64_t r = sl_ip(x1, y1, static_cast<unsigned>(plan.log_v));
    std::uint64_t index = r + 1;
    Bits g = x1 + y1 + value_bits(sl_ecc_symbol(x, index, plan.ecc_width), plan.ecc_width) +
             value_bits(sl_ecc_symbol(y, index, plan.ecc_width), plan.ecc_width);
    tr.x1 = from_bits(x1);
    tr.y1 = from_bits(y1);
    tr.index = index;
    tr.advice = from_bits(g);

    std::size_t p2 = 3 * plan.k * plan.k * plan.k;
    Bits x2 = take(x, p2), y2 = take(y, p2);
    Bits z0 = value_bits(sl_ip(x2, y2, static_cast<unsigned>(plan.h)), plan.h);
    tr.x2 = from_bits(x2);
    tr.y2 = from_bits(y2);
    tr.z0 = from_bits(z0);

    sl_breaker(plan, y, x, z0, g, tr);
    tr.l = from_bits(sl_ext(plan, ExtRole::Ext6, x, to_bits(tr.s)));
    return tr;
}

NmExtTrace straightline_t_nmext(const BitString& x_in, const BitString& y_in,
                                const ParamPlan& plan) {
    Bits x = to_bits(x_in), y = to_bits(y_in);
    NmExtTrace tr;

    Bits y1 = take(y, plan.d1);
    Bits idx_bits = sl_ext(plan, ExtRole::Ext0, x, y1);
    Bits g = y1;
    for (auto pos : sl_samp(idx_bits, plan.v, plan.t1))
        g += value_bits(sl_ecc_symbol(y, pos, plan.ecc_width), plan.ecc_width);
    tr.y1 = from_bits(y1);
    tr.index = bits_value(idx_bits);
    tr.advice = from_bits(g);

    Bits y2 = take(y, plan.d2);
    Bits t = sl_ext(plan, ExtRole::Ext5, x, y2);
    tr.y2 = from_bits(y2);
    tr.t_src = from_bits(t);

    Bits z0 = take(t, plan.h);
    tr.z0 = from_bits(z0);
    sl_breaker(plan, y, t, z0, g, tr);
    tr.l = from_bits(sl_ext(plan, ExtRole::Ext6, x, to_bits(tr.s)));
    return tr;
}

NmExtTrace straightline_t_2nmext(const BitString& x_in, const BitString& y_in,
                                 const ParamPlan& plan) {
    Bits x = to_bits(x_in), y = to_bits(y_in);
    NmExtTrace tr;

    Bits x1 = take(x, 3 * plan.k), y1 = take(y, 3 * plan.k);
    std::uint64_t r = sl_ip(x1, y1, static_cast<unsigned>(plan.n1));
    Bits r_bits = value_bits(r, plan.n1);
    Bits g = x1 + y1;
    auto positions = sl_samp(r_bits, plan.v, plan.t1);
    for (auto pos : positions)
        g += value_bits(sl_ecc_symbol(x, pos, plan.ecc_width), plan.ecc_width);
    for (auto pos : positions)
        g += value_bits(sl_ecc_symbol(y, pos, plan.ecc_width), plan.ecc_width);
    tr.x1 = from_bits(x1);
    tr.y1 = from_bits(y1);
    tr.index = r;
    tr.advice = from_bits(g);

    std::size_t p2 = 3 * plan.k * plan.k * plan.k;
    Bits x2 = take(x, p2), y2 = take(y, p2);
    Bits z0 = value_bits(sl_ip(x2, y2, static_cast<unsigned>(plan.h)), plan.h);
    tr.x2 = from_bits(x2);
    tr.y2 = from_bits(y2);
    tr.z0 = from_bits(z0);

    sl_breaker(plan, y, x, z0, g, tr);
    tr.l = from_bits(sl_ext(plan, ExtRole::Ext6, x, to_bits(tr.s)));
    return tr;
}

} // namespace nmx
