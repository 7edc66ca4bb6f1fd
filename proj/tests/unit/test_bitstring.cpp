#include <doctest.h>

#include "nmx/bitstring.hpp"
#include "nmx/errors.hpp"
#include "nmx/rng.hpp"

using namespace nmx;

TEST_CASE("prefix basics") {
    BitString x = BitString::from_binary("10110");
    CHECK(x.prefix(3) == BitString::from_binary("101"));
    CHECK(x.prefix(x.size()) == x);
    CHECK(x.prefix(0).size() == 0);
    CHECK_THROWS_AS(x.prefix(6), StructuralError);
}

TEST_CASE("prefix composition law") {
    CtrRng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        BitString x = rng.bits(1 + rng.next() % 40);
        std::size_t d2 = rng.next() % (x.size() + 1);
        std::size_t d1 = rng.next() % (d2 + 1);
        CHECK(x.prefix(d2).prefix(d1) == x.prefix(d1));
    }
}

TEST_CASE("uint round trip is big-endian") {
    CHECK(BitString::from_binary("101").to_uint() == 5);
    CHECK(BitString::from_uint(5, 3) == BitString::from_binary("101"));
    CHECK(BitString::from_uint(1, 4) == BitString::from_binary("0001"));
    CHECK(BitString::from_binary("101").to_index1() == 6);
}

TEST_CASE("hex serialization round trip") {
    CHECK(BitString::from_binary("1010").to_hex() == "4:a");
    CHECK(BitString::from_binary("10100").to_hex() == "5:a0");
    CHECK(BitString::from_hex("5:a0") == BitString::from_binary("10100"));
    CHECK_THROWS_AS(BitString::from_hex("5:a1"), StructuralError);  // padding bits set
    CHECK_THROWS_AS(BitString::from_hex("deadbeef"), StructuralError);
    CHECK_THROWS_AS(BitString::from_hex("8:f"), StructuralError);

    CtrRng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        BitString x = rng.bits(rng.next() % 70);
        CHECK(BitString::from_hex(x.to_hex()) == x);
    }
}

TEST_CASE("concat length is additive") {
    CtrRng rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        BitString a = rng.bits(rng.next() % 20);
        BitString b = rng.bits(rng.next() % 20);
        BitString c = a.concat(b);
        CHECK(c.size() == a.size() + b.size());
        CHECK(c.prefix(a.size()) == a);
    }
}

TEST_CASE("symbol parsing pads the tail with zeros") {
    BitString x = BitString::from_binary("10110");
    auto syms = x.parse_symbols(3);
    REQUIRE(syms.size() == 2);
    CHECK(syms[0] == 0b101);
    CHECK(syms[1] == 0b100);  // "10" padded to "100"
}
