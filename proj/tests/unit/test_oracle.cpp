#include <doctest.h>

#include "nmx/errors.hpp"
#include "nmx/oracle.hpp"
#include "nmx/presets.hpp"
#include "nmx/rng.hpp"

using namespace nmx;

namespace {

Dist make_dist(std::initializer_list<std::pair<const char*, Rat>> entries) {
    Dist d;
    for (const auto& [k, v] : entries) d[k] = v;
    return d;
}

} // namespace

TEST_CASE("stat_dist basics") {
    Dist p = make_dist({{"a", Rat(1, 2)}, {"b", Rat(1, 2)}});
    CHECK(stat_dist(p, p) == 0);

    // point mass vs uniform on one bit
    Dist point = make_dist({{"0", 1}});
    Dist unif = make_dist({{"0", Rat(1, 2)}, {"1", Rat(1, 2)}});
    CHECK(stat_dist(point, unif) == Rat(1, 2));
}

TEST_CASE("stat_dist on explicit 4-atom tables, two summation orders") {
    Dist p = make_dist({{"w", Rat(1, 8)}, {"x", Rat(3, 8)}, {"y", Rat(1, 4)}, {"z", Rat(1, 4)}});
    Dist q = make_dist({{"w", Rat(1, 4)}, {"x", Rat(1, 8)}, {"y", Rat(1, 8)}, {"z", Rat(1, 2)}});
    Rat direct = stat_dist(p, q);
    // independent summation in reverse order
    Rat total = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) total += abs(it->second - q[it->first]);
    CHECK(direct == total / 2);
    CHECK(direct == Rat(3, 8));
}

TEST_CASE("stat_dist is a metric on random small tables") {
    CtrRng rng(51);
    const char* keys[4] = {"a", "b", "c", "d"};
    auto random_dist = [&]() {
        std::uint64_t w[4], sum = 0;
        for (auto& v : w) {
            v = rng.next() % 16 + 1;
            sum += v;
        }
        Dist d;
        for (int i = 0; i < 4; ++i) d[keys[i]] = Rat(w[i], sum);
        return d;
    };
    for (int trial = 0; trial < 50; ++trial) {
        Dist p = random_dist(), q = random_dist(), r = random_dist();
        CHECK(stat_dist(p, q) == stat_dist(q, p));
        CHECK(stat_dist(p, p) == 0);
        CHECK(stat_dist(p, r) <= stat_dist(p, q) + stat_dist(q, r));
        CHECK(stat_dist(p, q) >= 0);
        CHECK(stat_dist(p, q) <= 1);
    }
}

TEST_CASE("min-entropy examples") {
    // uniform X with trivial E has guess probability 2^-n
    std::vector<SourceAtom> atoms;
    for (std::uint64_t v = 0; v < 16; ++v)
        atoms.push_back({BitString::from_uint(v, 4), BitString(), BitString(), Rat(1, 16)});
    JointDist uniform(atoms);
    CHECK(min_entropy_cond(uniform, CondTarget::XGivenE).guess == Rat(1, 16));
    CHECK(min_entropy_cond(uniform, CondTarget::XGivenE).bits == doctest::Approx(4.0));

    // E = X collapses the entropy
    std::vector<SourceAtom> leaky;
    for (std::uint64_t v = 0; v < 16; ++v) {
        BitString x = BitString::from_uint(v, 4);
        leaky.push_back({x, x, BitString(), Rat(1, 16)});
    }
    CHECK(min_entropy_cond(JointDist(leaky), CondTarget::XGivenE).guess == 1);

    // 3-atom crafted table: e=0 holds {x=0: 1/2, x=1: 1/4}, e=1 holds {x=2: 1/4};
    // guess = max(1/2,1/4) + 1/4 = 3/4
    std::vector<SourceAtom> crafted = {
        {BitString::from_uint(0, 2), BitString::from_uint(0, 1), BitString(), Rat(1, 2)},
        {BitString::from_uint(1, 2), BitString::from_uint(0, 1), BitString(), Rat(1, 4)},
        {BitString::from_uint(2, 2), BitString::from_uint(1, 1), BitString(), Rat(1, 4)},
    };
    CHECK(min_entropy_cond(JointDist(crafted), CondTarget::XGivenE).guess == Rat(3, 4));
}

TEST_CASE("finer conditioning never increases min-entropy") {
    CtrRng rng(52);
    for (int trial = 0; trial < 20; ++trial) {
        // atoms over (x, e) with e a coarsening of e2 = (e, extra bit)
        CondAtoms coarse, fine;
        std::uint64_t weights[8];
        std::uint64_t sum = 0;
        for (auto& w : weights) {
            w = rng.next() % 9 + 1;
            sum += w;
        }
        for (int i = 0; i < 8; ++i) {
            std::string x = std::to_string(i % 4);
            std::string e = std::to_string(i % 2);
            std::string e2 = e + "-" + std::to_string(i / 4);
            coarse.add(e, x, Rat(weights[i], sum));
            fine.add(e2, x, Rat(weights[i], sum));
        }
        CHECK(guessing_probability(fine) >= guessing_probability(coarse));
    }
}

TEST_CASE("joint dist JSON round trip") {
    std::vector<SourceAtom> atoms = {
        {BitString::from_uint(3, 4), BitString::from_uint(1, 1), BitString::from_uint(0, 2), Rat(2, 3)},
        {BitString::from_uint(5, 4), BitString(), BitString::from_uint(1, 2), Rat(1, 3)},
    };
    JointDist d(atoms);
    JointDist d2 = JointDist::from_json(d.to_json());
    CHECK(d2.to_json() == d.to_json());
    CHECK_THROWS_AS(JointDist::from_json("{}"), StructuralError);

    // probabilities must sum to exactly one
    std::vector<SourceAtom> bad = {{BitString(1), BitString(), BitString(), Rat(1, 3)}};
    CHECK_THROWS_AS((void)JointDist(bad), StructuralError);
}

TEST_CASE("point-mass source distance is 1 - 2^-|L|") {
    ParamPlan plan = micro_preset("seeded-s1");
    // single x, single y: the joint law is a point mass
    std::vector<SourceAtom> atoms = {
        {CtrRng(1).bits(plan.n), BitString(), CtrRng(2).bits(plan.d), Rat(1)}};
    JointDist source(atoms);
    TamperSet tampers{TamperSide::Y, {[](const BitString& y) {
        BitString m = BitString::from_uint(1, y.size());
        return y ^ m;
    }}};
    NmDistanceReport rep = nm_distance(source, tampers, plan);
    CHECK(rep.joint_y == Rat(1) - rat_pow2(-static_cast<long>(plan.out_len)));
    CHECK(rep.base_y == rep.joint_y);
}

TEST_CASE("budget refusal is explicit") {
    ParamPlan plan = micro_preset("seeded-s1");
    plan.enum_budget = 3;
    std::vector<BitString> support;
    for (std::uint64_t v = 0; v < 4; ++v) support.push_back(BitString::from_uint(v, plan.n));
    JointDist source = JointDist::flat_seeded(support, plan.d);
    TamperSet tampers{TamperSide::Y,
                      {[](const BitString& y) { return y ^ BitString::from_uint(1, y.size()); }}};
    CHECK_THROWS_AS(nm_distance(source, tampers, plan), BudgetError);
}

TEST_CASE("tamper maps with fixed points are rejected") {
    ParamPlan plan = micro_preset("seeded-s1");
    std::vector<BitString> support = {BitString(plan.n)};
    JointDist source = JointDist::flat_seeded(support, plan.d);
    TamperSet tampers{TamperSide::Y, {[](const BitString& y) { return y; }}};
    CHECK_THROWS_AS(nm_distance(source, tampers, plan), StructuralError);
}

TEST_CASE("ext_distance of a point source is 1 - 2^-m") {
    ExtSpec spec = make_ext_spec(ExtRole::Ext1, 8, 4, 2, 4, 0.125);
    std::vector<SourceAtom> atoms = {{CtrRng(3).bits(8), BitString(), BitString(), Rat(1)}};
    CHECK(ext_distance(JointDist(atoms), spec, true, 1 << 20) == Rat(3, 4));
}

TEST_CASE("ext_distance matches an independent per-seed summation") {
    ExtSpec spec = make_ext_spec(ExtRole::Ext1, 6, 4, 2, 4, 0.125);
    std::vector<BitString> support;
    for (std::uint64_t v = 0; v < 16; ++v) support.push_back(BitString::from_uint(v * 3 % 64, 6));
    JointDist source = JointDist::flat_seeded(support, 0);

    Rat oracle = ext_distance(source, spec, true, 1 << 20);

    // direct two-level summation: average over seeds of per-seed half-L1
    TrevisanExt ext(spec);
    Rat total = 0;
    for (std::uint64_t sv = 0; sv < 16; ++sv) {
        BitString seed = BitString::from_uint(sv, 4);
        std::map<std::uint64_t, int> counts;
        for (const auto& x : support) counts[ext.extract(x, seed).to_uint()]++;
        Rat acc = 0;
        for (std::uint64_t out = 0; out < 4; ++out) {
            auto it = counts.find(out);
            Rat p = it == counts.end() ? Rat(0) : Rat(it->second, 16);
            acc += abs(p - Rat(1, 4));
        }
        total += acc / 2;
    }
    CHECK(oracle == total / 16);
}

TEST_CASE("budget refusal in ext_distance") {
    ExtSpec spec = make_ext_spec(ExtRole::Ext1, 8, 20, 2, 4, 0.125);
    std::vector<SourceAtom> atoms = {{BitString(8), BitString(), BitString(), Rat(1)}};
    CHECK_THROWS_AS(ext_distance(JointDist(atoms), spec, true, 100), BudgetError);
}
