#include <doctest.h>

#include "nmx/errors.hpp"
#include "nmx/gf2.hpp"

using namespace nmx;

namespace {

// Trial division over GF(2)[x]: no factor of degree in [1, w/2].
bool poly_irreducible(std::uint32_t f, unsigned w) {
    for (std::uint32_t g = 2; g < (std::uint32_t(1) << (w / 2 + 1)); ++g) {
        unsigned gd = 31 - static_cast<unsigned>(__builtin_clz(g));
        if (gd == 0 || gd >= w) continue;
        std::uint64_t r = f;
        while (r >= (std::uint64_t(1) << gd)) {
            unsigned rd = 63 - static_cast<unsigned>(__builtin_clzll(r));
            if (rd < gd) break;
            r ^= std::uint64_t(g) << (rd - gd);
        }
        if (r == 0) return false;
    }
    return true;
}

} // namespace

TEST_CASE("modulus table entries are irreducible") {
    for (unsigned w = 2; w <= 24; ++w)
        CHECK_MESSAGE(poly_irreducible(Gf2Field::modulus_for(w), w), "width ", w);
}

TEST_CASE("field laws hold exhaustively for small widths") {
    for (unsigned w = 1; w <= 4; ++w) {
        Gf2Field f(w);
        const std::uint32_t n = f.size();
        for (std::uint32_t a = 0; a < n; ++a) {
            CHECK(f.mul(a, 0) == 0);
            CHECK(f.mul(a, 1) == a);
            for (std::uint32_t b = 0; b < n; ++b) {
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (std::uint32_t c = 0; c < n; ++c) {
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, b ^ c) == (f.mul(a, b) ^ f.mul(a, c)));
                }
            }
        }
        // every nonzero element has a multiplicative inverse
        for (std::uint32_t a = 1; a < n; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    }
}

TEST_CASE("gf(2^3) squaring below the modulus degree") {
    Gf2Field f(3);
    CHECK(f.mul(0b010, 0b010) == 0b100);
}

TEST_CASE("table-backed widths agree with the shift-reduce definition") {
    // log/exp (w=9..16) and full-table (w<=8) paths against a local
    // shift-xor reference.
    for (unsigned w : {3u, 8u, 9u, 12u, 16u, 20u}) {
        Gf2Field f(w);
        std::uint32_t mod = Gf2Field::modulus_for(w);
        auto ref = [&](std::uint64_t a, std::uint64_t b) {
            std::uint64_t prod = 0;
            while (b) {
                if (b & 1) prod ^= a;
                a <<= 1;
                b >>= 1;
            }
            for (int d = 2 * int(w) - 2; d >= int(w); --d)
                if (prod >> d & 1) prod ^= std::uint64_t(mod) << (d - int(w));
            return static_cast<std::uint32_t>(prod);
        };
        std::uint32_t a = 1, b = 3;
        for (int i = 0; i < 500; ++i) {
            a = (a * 2654435761u + 1) & (f.size() - 1);
            b = (b * 2246822519u + 7) & (f.size() - 1);
            CHECK(f.mul(a, b) == ref(a, b));
        }
    }
}

TEST_CASE("gf_mul rejects mixed widths") {
    CHECK_THROWS_AS(gf_mul({1, 3}, {1, 4}), StructuralError);
}

TEST_CASE("inner product examples") {
    // zero vector annihilates
    FieldVec x = {{1, 2}, {2, 2}}, zero = {{0, 2}, {0, 2}};
    CHECK(ip(x, zero).value == 0);
    // GF(2): <(1,1),(1,0)> = 1
    CHECK(ip({{1, 1}, {1, 1}}, {{1, 1}, {0, 1}}).value == 1);
    // GF(4): <(x,1),(1,x)> = x + x = 0
    CHECK(ip({{0b10, 2}, {0b01, 2}}, {{0b01, 2}, {0b10, 2}}).value == 0);
    CHECK_THROWS_AS(ip(x, FieldVec{{1, 2}}), StructuralError);
}
