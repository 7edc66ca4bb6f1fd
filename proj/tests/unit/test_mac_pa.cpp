#include <doctest.h>

#include "nmx/errors.hpp"
#include "nmx/gf2.hpp"
#include "nmx/mac.hpp"
#include "nmx/pa_protocol.hpp"
#include "nmx/presets.hpp"
#include "nmx/rng.hpp"

using namespace nmx;

TEST_CASE("mac degenerate keys") {
    for (std::uint64_t b = 0; b < 8; ++b) {
        MacKey k{BitString(3), BitString::from_uint(5, 3)};  // s1 = 0
        CHECK(mac(k, BitString::from_uint(b, 3)) == BitString::from_uint(5, 3));
    }
    MacKey k2{BitString::from_uint(6, 3), BitString::from_uint(2, 3)};
    CHECK(mac(k2, BitString(3)) == BitString::from_uint(2, 3));  // b = 0
}

TEST_CASE("mac matches the field oracle on gf(2^2)") {
    // s1 = x, s2 = 1, b = x: tag = x^2 + 1 reduced mod x^2+x+1
    MacKey k{BitString::from_uint(0b10, 2), BitString::from_uint(0b01, 2)};
    FieldElem prod = gf_mul({0b10, 2}, {0b10, 2});
    CHECK(mac(k, BitString::from_uint(0b10, 2)).to_uint() == (prod.value ^ 0b01));
}

TEST_CASE("mac width checks") {
    MacKey k{BitString(3), BitString(3)};
    CHECK_THROWS_AS(mac(k, BitString(2)), StructuralError);
    CHECK_THROWS_AS(MacKey::from_bits(BitString(5)), StructuralError);
}

TEST_CASE("forging against an independent uniform key succeeds at exactly 2^-m") {
    // the Claim-C.8 setting: S uniform and independent of (T, B, B');
    // exhaustively over keys, any fixed (b != b', t) pair verifies for
    // exactly 2^m of the 2^2m keys
    for (std::size_t m = 2; m <= 4; ++m) {
        const std::uint64_t space = std::uint64_t(1) << m;
        for (std::uint64_t b = 0; b < space; ++b)
            for (std::uint64_t bp = 0; bp < space; ++bp) {
                if (b == bp) continue;
                for (std::uint64_t t = 0; t < space; ++t) {
                    std::uint64_t good = 0;
                    for (std::uint64_t key = 0; key < space * space; ++key) {
                        MacKey k = MacKey::from_bits(BitString::from_uint(key, 2 * m));
                        if (mac(k, BitString::from_uint(b, m)).to_uint() == t) ++good;
                    }
                    CHECK(good == space);  // 2^m / 2^2m = 2^-m
                }
            }
    }
}

TEST_CASE("identity strategy always agrees") {
    ParamPlan plan = micro_preset("pa-m2");
    PaSession session(plan);
    CtrRng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        BitString x = rng.bits(plan.n);
        SessionResult r = session.run(x, make_strategy("identity"), 1000 + trial);
        REQUIRE(r.accepted());
        CHECK(*r.r_a == *r.r_b);
    }
}

TEST_CASE("wrong tag with untouched message always rejects") {
    ParamPlan plan = micro_preset("pa-m2");
    PaSession session(plan);
    AdversaryStrategy bad;
    bad.name = "tag-clobber";
    bad.tamper_seed = [](const BitString& y) { return y; };
    bad.tamper_auth = [](const AdversaryView& v) {
        BitString t = v.t_prime;
        t.set_bit(0, 1 - t.bit(0));
        return std::make_pair(v.b_prime, t);
    };
    CtrRng rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        SessionResult r = session.run(rng.bits(plan.n), bad, 2000 + trial);
        CHECK(!r.accepted());
    }
}

TEST_CASE("sessions replay byte-identically") {
    ParamPlan plan = micro_preset("pa-m8");
    PaSession session(plan);
    BitString x = CtrRng(77).bits(plan.n);
    for (const auto& name : strategy_names()) {
        SessionResult a = session.run(x, make_strategy(name, 9), 31337);
        SessionResult b = session.run(x, make_strategy(name, 9), 31337);
        CHECK(a.to_json() == b.to_json());
    }
}

TEST_CASE("eval_robustness identity on a point source has zero q-rate") {
    ParamPlan plan = micro_preset("pa-m2");
    JointDist source = JointDist::flat_pair({CtrRng(5).bits(plan.n)}, {BitString()});
    RobustnessReport rep = eval_robustness(source, make_strategy("identity"), plan, 200, 7);
    CHECK(rep.q_count == 0);
    CHECK(rep.agree_count == 200);
    CHECK(rep.reject_count == 0);
}

TEST_CASE("strategy table is total and rejects unknown names") {
    for (const auto& name : strategy_names()) CHECK_NOTHROW(make_strategy(name, 1));
    CHECK_THROWS_AS(make_strategy("nope", 1), StructuralError);
}

TEST_CASE("ctr rng is a pure function of seed and counter") {
    CtrRng a(123), b(123);
    for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
    CHECK(CtrRng(1).bits(64) != CtrRng(2).bits(64));
    CHECK(CtrRng::derive(9, 1) != CtrRng::derive(9, 2));
    CHECK(CtrRng(5).word(3) == CtrRng(5).word(3));
}
