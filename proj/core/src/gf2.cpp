#include "nmx/gf2.hpp"
#include "nmx/errors.hpp"

#include <memory>
#include <mutex>
#include <vector>

namespace nmx {

namespace {

// Lowest-weight irreducible polynomial per width, lexicographically first
// among trinomials then pentanomials. Verified irreducible by trial
// division in the unit tests.
constexpr std::uint32_t kModuli[25] = {
    0,        0x3,      0x7,      0xb,       0x13,     0x25,
    0x43,     0x83,     0x11b,    0x203,     0x409,    0x805,
    0x1009,   0x201b,   0x4021,   0x8003,    0x1002b,  0x20009,
    0x40009,  0x80027,  0x100009, 0x200005,  0x400003, 0x800021,
    0x100001b,
};

std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, unsigned w, std::uint32_t mod) {
    std::uint64_t prod = 0;
    std::uint64_t aa = a;
    while (b) {
        if (b & 1u) prod ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    for (int d = 2 * static_cast<int>(w) - 2; d >= static_cast<int>(w); --d)
        if (prod >> d & 1u) prod ^= static_cast<std::uint64_t>(mod) << (d - static_cast<int>(w));
    return static_cast<std::uint32_t>(prod);
}

// Shared per-width tables. Widths <= 8 get a full product table, widths
// 9..16 log/exp tables over a brute-forced generator, larger widths fall
// back to shift-and-reduce.
struct FieldTables {
    unsigned width;
    std::uint32_t modulus;
    std::vector<std::uint8_t> mul_table;  // w <= 8
    std::vector<std::uint32_t> log_table;  // 9 <= w <= 16
    std::vector<std::uint32_t> exp_table;
};

const FieldTables& tables_for(unsigned w) {
    static std::unique_ptr<FieldTables> cache[25];
    static std::once_flag flags[25];
    std::call_once(flags[w], [w] {
        auto t = std::make_unique<FieldTables>();
        t->width = w;
        t->modulus = kModuli[w];
        const std::uint32_t size = std::uint32_t(1) << w;
        if (w <= 8) {
            t->mul_table.resize(std::size_t(size) * size);
            for (std::uint32_t a = 0; a < size; ++a)
                for (std::uint32_t b = 0; b < size; ++b)
                    t->mul_table[(std::size_t(a) << w) | b] =
                        static_cast<std::uint8_t>(slow_mul(a, b, w, t->modulus));
        } else if (w <= 16) {
            const std::uint32_t order = size - 1;
            for (std::uint32_t g = 2; g < size; ++g) {
                std::vector<std::uint32_t> exp;
                exp.reserve(order);
                std::uint32_t v = 1;
                bool primitive = true;
                for (std::uint32_t i = 0; i < order; ++i) {
                    exp.push_back(v);
                    v = slow_mul(v, g, w, t->modulus);
                    if (v == 1 && i + 1 < order) {
                        primitive = false;
                        break;
                    }
                }
                if (primitive && v == 1) {
                    t->exp_table = std::move(exp);
                    t->log_table.assign(size, 0);
                    for (std::uint32_t i = 0; i < order; ++i) t->log_table[t->exp_table[i]] = i;
                    break;
                }
            }
        }
        cache[w] = std::move(t);
    });
    return *cache[w];
}

} // namespace

std::uint32_t Gf2Field::modulus_for(unsigned width) {
    if (width < 1 || width > 24)
        throw StructuralError("Gf2Field: width " + std::to_string(width) + " outside [1,24]");
    return kModuli[width];
}

Gf2Field::Gf2Field(unsigned width)
    : width_(width), modulus_(modulus_for(width)), tables_(&tables_for(width)) {}

std::uint32_t Gf2Field::mul(std::uint32_t a, std::uint32_t b) const {
    const auto& t = *static_cast<const FieldTables*>(tables_);
    if (!t.mul_table.empty()) return t.mul_table[(std::size_t(a) << width_) | b];
    if (!t.exp_table.empty()) {
        if (a == 0 || b == 0) return 0;
        std::uint32_t order = (std::uint32_t(1) << width_) - 1;
        std::uint32_t lg = t.log_table[a] + t.log_table[b];
        if (lg >= order) lg -= order;
        return t.exp_table[lg];
    }
    return slow_mul(a, b, width_, modulus_);
}

std::uint32_t Gf2Field::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
        if (e & 1u) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint32_t Gf2Field::inv(std::uint32_t a) const {
    if (a == 0) throw StructuralError("Gf2Field::inv: zero has no inverse");
    // a^(2^w - 2)
    return pow(a, (std::uint64_t(1) << width_) - 2);
}

FieldElem gf_mul(const FieldElem& a, const FieldElem& b) {
    if (a.width != b.width)
        throw StructuralError("gf_mul: width mismatch (" + std::to_string(a.width) + " vs " +
                              std::to_string(b.width) + ")");
    Gf2Field f(a.width);
    return {f.mul(a.value, b.value), a.width};
}

FieldElem gf_add(const FieldElem& a, const FieldElem& b) {
    if (a.width != b.width) throw StructuralError("gf_add: width mismatch");
    return {a.value ^ b.value, a.width};
}

FieldElem ip(const FieldVec& x, const FieldVec& y) {
    if (x.size() != y.size())
        throw StructuralError("ip: length mismatch (" + std::to_string(x.size()) + " vs " +
                              std::to_string(y.size()) + ")");
    if (x.empty()) throw StructuralError("ip: empty vectors");
    unsigned w = x[0].width;
    Gf2Field f(w);
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].width != w || y[i].width != w) throw StructuralError("ip: width mismatch");
        acc ^= f.mul(x[i].value, y[i].value);
    }
    return {acc, w};
}

FieldVec to_field_vec(const BitString& bits, unsigned width) {
    auto syms = bits.parse_symbols(width);
    FieldVec v;
    v.reserve(syms.size());
    for (auto s : syms) v.push_back({s, width});
    return v;
}

BitString prefix(const BitString& x, std::size_t d) {
    return x.prefix(d);
}

} // namespace nmx
