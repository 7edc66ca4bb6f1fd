#include <doctest.h>

#include "nmx/errors.hpp"
#include "nmx/reed_solomon.hpp"

using namespace nmx;

TEST_CASE("zero and constant messages") {
    Codeword zero = rs_encode({{0, 4}, {0, 4}}, 8);
    for (const auto& s : zero.symbols) CHECK(s.value == 0);

    Codeword constant = rs_encode({{9, 4}}, 8);
    for (const auto& s : constant.symbols) CHECK(s.value == 9);
}

TEST_CASE("gf(2^4) evaluation against a direct polynomial oracle") {
    // msg = (1, x): symbol at point alpha is 1 + x*alpha
    Gf2Field f(4);
    Codeword cw = rs_encode({{1, 4}, {0b0010, 4}}, 8);
    for (std::uint32_t point = 0; point < 8; ++point)
        CHECK(cw.symbols[point].value == (1u ^ f.mul(0b0010, point)));
}

TEST_CASE("encoding is linear") {
    for (std::uint32_t a = 0; a < 16; ++a)
        for (std::uint32_t b = 0; b < 16; ++b) {
            Codeword ca = rs_encode({{a & 3, 2}, {a >> 2, 2}}, 4);
            Codeword cb = rs_encode({{b & 3, 2}, {b >> 2, 2}}, 4);
            Codeword cx = rs_encode({{(a ^ b) & 3, 2}, {(a ^ b) >> 2, 2}}, 4);
            for (std::size_t i = 0; i < 4; ++i)
                CHECK(cx.symbols[i].value == (ca.symbols[i].value ^ cb.symbols[i].value));
        }
}

TEST_CASE("q=16 k=2 n=8 code has minimum distance 7") {
    std::size_t min_dist = 9;
    for (std::uint32_t m1 = 0; m1 < 256; ++m1)
        for (std::uint32_t m2 = m1 + 1; m2 < 256; ++m2) {
            Codeword c1 = rs_encode({{m1 & 15, 4}, {m1 >> 4, 4}}, 8);
            Codeword c2 = rs_encode({{m2 & 15, 4}, {m2 >> 4, 4}}, 8);
            std::size_t d = 0;
            for (std::size_t i = 0; i < 8; ++i)
                if (c1.symbols[i].value != c2.symbols[i].value) ++d;
            min_dist = std::min(min_dist, d);
        }
    CHECK(min_dist == 7);
    CHECK(rs_encode({{1, 4}, {2, 4}}, 8).min_distance() == 7);
}

TEST_CASE("parameter errors") {
    CHECK_THROWS_AS(rs_encode({{1, 2}}, 5), PlanError);  // n_code > field size
    CHECK_THROWS_AS(rs_encode({{1, 2}, {1, 2}, {1, 2}}, 2), PlanError);  // msg longer than code
}

TEST_CASE("ecc_symbol basics") {
    BitString zero(12);
    CHECK(ecc_symbol(zero, 3, 4, 8) == BitString::from_uint(0, 4));

    // position 1 evaluates at the zero point, exposing the first symbol
    BitString y = BitString::from_binary("101101110001");
    CHECK(ecc_symbol(y, 1, 4, 8) == y.prefix(4));

    CHECK_THROWS_AS(ecc_symbol(y, 0, 4, 8), StructuralError);
    CHECK_THROWS_AS(ecc_symbol(y, 9, 4, 8), StructuralError);

    // determinism
    CHECK(ecc_symbol(y, 5, 4, 8) == ecc_symbol(y, 5, 4, 8));
}

TEST_CASE("messages differing in one symbol agree on at most k-1 positions") {
    // q=16, k_msg=2, n_code=8, exhaustive over single-symbol changes
    for (std::uint32_t base = 0; base < 256; ++base) {
        std::uint32_t m0 = base & 15, m1 = base >> 4;
        Codeword c = rs_encode({{m0, 4}, {m1, 4}}, 8);
        for (std::uint32_t repl = 0; repl < 16; ++repl) {
            if (repl == m1) continue;
            Codeword c2 = rs_encode({{m0, 4}, {repl, 4}}, 8);
            std::size_t agree = 0;
            for (std::size_t i = 0; i < 8; ++i)
                if (c.symbols[i].value == c2.symbols[i].value) ++agree;
            CHECK(agree <= 1);
        }
    }
}
