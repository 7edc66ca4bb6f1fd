#include "nmx/verify.hpp"

#include <cmath>
#include <thread>
#include <sstream>

#include <json.hpp>

#include "nmx/errors.hpp"
#include "nmx/gf2.hpp"
#include "nmx/mac.hpp"
#include "nmx/nmext.hpp"
#include "nmx/oracle.hpp"
#include "nmx/pa_protocol.hpp"
#include "nmx/presets.hpp"
#include "nmx/reed_solomon.hpp"
#include "nmx/rng.hpp"
#include "nmx/straightline.hpp"
#include "nmx/t_tamper.hpp"
#include "nmx/two_source.hpp"
#include "nmx/weak_design.hpp"

namespace nmx {

bool SuiteReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string SuiteReport::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["pass"] = pass();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks)
        j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return j.dump(2);
}

std::string SuiteReport::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks)
        os << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  [" << c.detail << "]\n";
    os << (pass() ? "PASS" : "FAIL") << "  suite:" << suite << "\n";
    return os.str();
}

namespace {

CheckResult ok(const std::string& name, const std::string& detail) {
    return {name, true, detail};
}

CheckResult failed(const std::string& name, const std::string& detail) {
    return {name, false, detail};
}

CheckResult expect(const std::string& name, bool cond, const std::string& detail) {
    return {name, cond, detail};
}

// Compares a computed exact rational against its committed baseline.
CheckResult committed(const std::string& name, const Rat& computed) {
    const char* base = baseline(name);
    if (!base)
        return failed(name, "no committed baseline; computed " + rat_str(computed));
    if (computed == rat_parse(base)) return ok(name, rat_str(computed));
    return failed(name, "computed " + rat_str(computed) + " != committed " + std::string(base));
}

std::string compare_traces(const NmExtTrace& a, const NmExtTrace& b) {
    auto diff = [](const char* what, const BitString& x, const BitString& y) -> std::string {
        if (x != y) return std::string(what) + ": " + x.to_hex() + " vs " + y.to_hex();
        return "";
    };
    std::string r;
    if (!(r = diff("y1", a.y1, b.y1)).empty()) return r;
    if (a.index != b.index) return "index: " + std::to_string(a.index) + " vs " + std::to_string(b.index);
    if (!(r = diff("advice", a.advice, b.advice)).empty()) return r;
    if (!(r = diff("y2", a.y2, b.y2)).empty()) return r;
    if (!(r = diff("t_src", a.t_src, b.t_src)).empty()) return r;
    if (!(r = diff("z0", a.z0, b.z0)).empty()) return r;
    if (a.rounds.size() != b.rounds.size()) return "round count mismatch";
    for (std::size_t i = 0; i < a.rounds.size(); ++i) {
        const auto& ra = a.rounds[i];
        const auto& rb = b.rounds[i];
        std::string tag = "round " + std::to_string(i) + " ";
        if (!(r = diff((tag + "zs").c_str(), ra.zs, rb.zs)).empty()) return r;
        if (!(r = diff((tag + "a").c_str(), ra.a, rb.a)).empty()) return r;
        if (!(r = diff((tag + "c").c_str(), ra.c, rb.c)).empty()) return r;
        if (!(r = diff((tag + "b").c_str(), ra.b, rb.b)).empty()) return r;
        if (!(r = diff((tag + "zbar").c_str(), ra.zbar, rb.zbar)).empty()) return r;
        if (!(r = diff((tag + "abar").c_str(), ra.abar, rb.abar)).empty()) return r;
        if (!(r = diff((tag + "cbar").c_str(), ra.cbar, rb.cbar)).empty()) return r;
        if (!(r = diff((tag + "bbar").c_str(), ra.bbar, rb.bbar)).empty()) return r;
        if (!(r = diff((tag + "o").c_str(), ra.o, rb.o)).empty()) return r;
    }
    if (!(r = diff("s", a.s, b.s)).empty()) return r;
    if (!(r = diff("l", a.l, b.l)).empty()) return r;
    return "";
}

BitString committed_bits(std::uint64_t tag, std::size_t len) {
    return CtrRng(CtrRng::derive(0xba5eba11, tag)).bits(len);
}

std::vector<BitString> committed_support(std::uint64_t tag, std::size_t count, std::size_t len) {
    // Distinct pseudorandom values from the committed generator.
    std::vector<BitString> out;
    CtrRng rng(CtrRng::derive(0x5eed5 + tag, count));
    while (out.size() < count) {
        BitString v = rng.bits(len);
        bool dup = false;
        for (const auto& u : out) dup |= (u == v);
        if (!dup) out.push_back(v);
    }
    return out;
}

TamperFn xor_tamper(std::uint64_t mask, std::size_t len) {
    BitString m = BitString::from_uint(mask, len);
    return [m](const BitString& v) { return v ^ m; };
}

} // namespace

SuiteReport verify_mac() {
    SuiteReport rep;
    rep.suite = "mac";
    for (std::size_t m = 2; m <= 4; ++m) {
        const std::uint64_t space = std::uint64_t(1) << m;
        bool exact = true;
        std::string witness;
        // For every (b', b != b'): s -> (MAC(s,b'), MAC(s,b)) must hit each
        // tag pair exactly once across the 2^{2m} keys; conditioned on the
        // observed tag that is a forgery probability of exactly 2^-m.
        for (std::uint64_t bp = 0; bp < space && exact; ++bp) {
            for (std::uint64_t b = 0; b < space && exact; ++b) {
                if (b == bp) continue;
                std::vector<std::uint32_t> hits(space * space, 0);
                for (std::uint64_t key = 0; key < space * space; ++key) {
                    MacKey k = MacKey::from_bits(BitString::from_uint(key, 2 * m));
                    std::uint64_t tp = mac(k, BitString::from_uint(bp, m)).to_uint();
                    std::uint64_t tg = mac(k, BitString::from_uint(b, m)).to_uint();
                    ++hits[tp * space + tg];
                }
                for (std::uint64_t i = 0; i < space * space; ++i) {
                    if (hits[i] != 1) {
                        exact = false;
                        witness = "b'=" + std::to_string(bp) + " b=" + std::to_string(b) +
                                  " pair " + std::to_string(i) + " hit " + std::to_string(hits[i]);
                        break;
                    }
                }
            }
        }
        rep.checks.push_back(expect("mac-exact-m" + std::to_string(m), exact,
                                    exact ? "conditional forgery exactly 2^-" + std::to_string(m)
                                          : witness));
    }
    return rep;
}

SuiteReport verify_ecc() {
    SuiteReport rep;
    rep.suite = "ecc";
    const unsigned w = 4;
    const std::size_t k_msg = 2, n_code = 8;
    std::vector<Codeword> words;
    for (std::uint32_t a = 0; a < 16; ++a)
        for (std::uint32_t b = 0; b < 16; ++b)
            words.push_back(rs_encode({{a, w}, {b, w}}, n_code));
    std::size_t min_dist = n_code + 1;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            std::size_t dist = 0;
            for (std::size_t p = 0; p < n_code; ++p)
                if (words[i].symbols[p].value != words[j].symbols[p].value) ++dist;
            min_dist = std::min(min_dist, dist);
        }
    rep.checks.push_back(expect("ecc-min-distance", min_dist == n_code - k_msg + 1,
                                "exhaustive pairwise minimum " + std::to_string(min_dist) +
                                    ", bound n-k+1 = " + std::to_string(n_code - k_msg + 1)));
    // Realized rate delta and distance complement gamma against the
    // alphabet bound delta + 1/(sqrt(q)-1) >= gamma.
    const double delta = double(k_msg) / double(n_code);
    const double gamma = 1.0 - double(min_dist) / double(n_code);
    const double bound = delta + 1.0 / (std::sqrt(16.0) - 1.0);
    rep.checks.push_back(expect("ecc-alphabet-bound", bound >= gamma,
                                "delta + 1/(sqrt(q)-1) = " + std::to_string(bound) +
                                    " >= gamma = " + std::to_string(gamma)));
    return rep;
}

SuiteReport verify_design() {
    SuiteReport rep;
    rep.suite = "design";
    struct Combo { std::size_t m, l; };
    std::vector<Combo> combos;
    for (std::size_t m = 1; m <= 16; ++m) {
        for (std::size_t l : {2, 4, 5, 6}) {
            if (l == 2 && m > 4) continue;  // degree bound: GF(2) hosts at most 4 sets
            combos.push_back({m, l});
        }
    }
    bool sizes_ok = true, range_ok = true, sum_ok = true, pairwise_ok = true;
    std::string witness;
    for (const auto& c : combos) {
        WeakDesign wd = weak_design(c.m, c.l);
        for (const auto& set : wd.sets) {
            if (set.size() != c.l) sizes_ok = false;
            for (auto pos : set)
                if (pos < 1 || pos > wd.d_total) range_ok = false;
        }
        const double log2m = c.m > 1 ? std::log2(double(c.m)) : 0.0;
        for (std::size_t i = 0; i < wd.sets.size(); ++i) {
            double sum = 0;
            for (std::size_t j = 0; j < i; ++j) {
                std::size_t overlap = 0;
                for (auto p1 : wd.sets[i])
                    for (auto p2 : wd.sets[j])
                        if (p1 == p2) ++overlap;
                if (c.m > 1 && double(overlap) > log2m) {
                    pairwise_ok = false;
                    witness = "m=" + std::to_string(c.m) + " l=" + std::to_string(c.l) +
                              " overlap " + std::to_string(overlap);
                }
                sum += std::pow(2.0, double(overlap));
            }
            if (sum > wd.overlap_bound * double(c.m)) {
                sum_ok = false;
                witness = "m=" + std::to_string(c.m) + " l=" + std::to_string(c.l) + " sum " +
                          std::to_string(sum);
            }
        }
    }
    rep.checks.push_back(expect("design-set-sizes", sizes_ok, "every set has exactly l elements"));
    rep.checks.push_back(expect("design-range", range_ok, "positions within [1, d_total]"));
    rep.checks.push_back(expect("design-overlap-sum", sum_ok,
                                sum_ok ? "sum 2^overlap <= 2m for all prefixes" : witness));
    rep.checks.push_back(expect("design-pairwise", pairwise_ok,
                                pairwise_ok ? "pairwise overlaps <= log2 m" : witness));
    return rep;
}

namespace {

struct StrongEnum {
    Rat total;
    std::uint64_t generic = 0;
    std::uint64_t generic_nonzero = 0;
};

// Exact strong distance of the criterion-4 extractor over a flat source,
// by direct (seed, x) enumeration with integer counts. Also classifies
// seeds: a seed is generic when its per-bit (z, w) pairs are distinct
// with nonzero masks, which forces distinct nonzero linear output forms.
StrongEnum strong_enum(const TrevisanExt& ext, const std::vector<std::uint64_t>& support) {
    const ExtSpec& spec = ext.spec();
    const unsigned lf = spec.field_bits;
    Gf2Field field(lf);
    const std::size_t m = spec.m_out;
    const std::uint64_t seeds = std::uint64_t(1) << spec.d_seed;
    const auto& positions = ext.flat_positions();

    std::vector<std::vector<std::uint32_t>> chunked;
    chunked.reserve(support.size());
    for (auto xv : support)
        chunked.push_back(BitString::from_uint(xv, spec.n_in).parse_symbols(lf));

    StrongEnum out;
    BigInt total_num = 0;
    std::vector<std::uint8_t> sbits(spec.d_seed);
    std::vector<std::uint32_t> zs(m), ws(m);
    std::vector<std::uint64_t> counts(std::size_t(1) << m);
    const std::uint64_t supp = support.size();

    for (std::uint64_t sv = 0; sv < seeds; ++sv) {
        for (std::size_t i = 0; i < spec.d_seed; ++i)
            sbits[i] = static_cast<std::uint8_t>((sv >> (spec.d_seed - 1 - i)) & 1u);
        const std::uint32_t* pos = positions.data();
        for (std::size_t i = 0; i < m; ++i) {
            std::uint32_t z = 0, w = 0;
            for (unsigned j = 0; j < lf; ++j) z = (z << 1) | sbits[pos[j]];
            for (unsigned j = lf; j < 2 * lf; ++j) w = (w << 1) | sbits[pos[j]];
            zs[i] = z;
            ws[i] = w;
            pos += spec.design_l;
        }
        bool generic = true;
        for (std::size_t i = 0; i < m && generic; ++i) {
            if (ws[i] == 0) generic = false;
            for (std::size_t j = 0; j < i; ++j)
                if (zs[i] == zs[j] && ws[i] == ws[j]) generic = false;
        }

        std::fill(counts.begin(), counts.end(), 0);
        for (const auto& chunks : chunked) {
            std::uint64_t outv = 0;
            for (std::size_t i = 0; i < m; ++i) {
                std::uint32_t acc = 0;
                for (std::size_t j = chunks.size(); j-- > 0;) acc = field.mul(acc, zs[i]) ^ chunks[j];
                outv = (outv << 1) | static_cast<std::uint64_t>(__builtin_parity(acc & ws[i]));
            }
            ++counts[outv];
        }
        std::uint64_t num = 0;
        for (auto c : counts) {
            std::uint64_t scaled = c << m;
            num += scaled > supp ? scaled - supp : supp - scaled;
        }
        if (generic) {
            ++out.generic;
            if (num != 0) ++out.generic_nonzero;
        }
        total_num += num;
    }
    out.total = Rat(total_num, BigInt(2) * supp * (BigInt(1) << m) * seeds);
    return out;
}

} // namespace

SuiteReport verify_ext() {
    SuiteReport rep;
    rep.suite = "ext";
    // Committed micro instance: injective inner code at n = 8 with a
    // 2-bit output and full 20-bit design seed.
    ExtSpec spec = make_ext_spec(ExtRole::Ext0, 8, 20, 2, 4, 0.125);
    TrevisanExt ext(spec);

    auto flat = [](std::size_t count) {
        std::vector<std::uint64_t> s(count);
        for (std::size_t i = 0; i < count; ++i) s[i] = i;
        return s;
    };

    StrongEnum uniform = strong_enum(ext, flat(256));
    rep.checks.push_back(expect(
        "ext-uniform-generic-zero", uniform.generic > 0 && uniform.generic_nonzero == 0,
        "per-seed distance 0 for all " + std::to_string(uniform.generic) + " generic seeds (" +
            std::to_string(uniform.generic_nonzero) + " nonzero)"));
    rep.checks.push_back(committed("ext-uniform-total", uniform.total));

    StrongEnum h7 = strong_enum(ext, flat(128));
    StrongEnum h6 = strong_enum(ext, flat(64));
    StrongEnum h4 = strong_enum(ext, flat(16));
    rep.checks.push_back(committed("ext-flat-h7", h7.total));
    rep.checks.push_back(committed("ext-flat-h6", h6.total));
    rep.checks.push_back(committed("ext-flat-h4", h4.total));
    rep.checks.push_back(expect(
        "ext-monotonic",
        uniform.total <= h7.total && h7.total <= h6.total && h6.total <= h4.total,
        rat_str(uniform.total) + " <= " + rat_str(h7.total) + " <= " + rat_str(h6.total) +
            " <= " + rat_str(h4.total)));
    return rep;
}

namespace {

// Shared structural battery: output length, determinism, straight-line
// trace equality, advice-prefix separation.
void structural_checks(SuiteReport& rep, const std::string& tag, const ParamPlan& plan,
                       std::size_t expected_out,
                       const std::function<NmExtTrace(const BitString&, const BitString&)>& run,
                       const std::function<NmExtTrace(const BitString&, const BitString&)>& straight) {
    const std::size_t xlen = plan.n;
    const std::size_t ylen = plan.d;

    std::vector<std::pair<BitString, BitString>> pairs = {
        {BitString(xlen), BitString(ylen)},
        {BitString(xlen).complement(), BitString(ylen).complement()},
        {committed_bits(1, xlen), committed_bits(2, ylen)},
        {committed_bits(3, xlen), committed_bits(4, ylen)},
        {committed_bits(5, xlen), committed_bits(6, ylen)},
    };

    bool len_ok = true, det_ok = true;
    std::string trace_diff;
    for (const auto& [x, y] : pairs) {
        NmExtTrace t1 = run(x, y);
        NmExtTrace t2 = run(x, y);
        if (t1.l.size() != expected_out) len_ok = false;
        if (compare_traces(t1, t2) != "") det_ok = false;
        NmExtTrace ts = straight(x, y);
        std::string d = compare_traces(t1, ts);
        if (!d.empty() && trace_diff.empty()) trace_diff = d;
    }
    rep.checks.push_back(expect(tag + "-output-length", len_ok,
                                "|L| = " + std::to_string(expected_out) + " on all pairs"));
    rep.checks.push_back(expect(tag + "-deterministic", det_ok, "identical traces on replay"));
    rep.checks.push_back(expect(tag + "-straightline", trace_diff.empty(),
                                trace_diff.empty() ? "full trace equality on committed pairs"
                                                   : trace_diff));
}

} // namespace

SuiteReport verify_nmext() {
    SuiteReport rep;
    rep.suite = "nmext";
    for (const char* name : {"seeded-s1", "seeded-s2", "seeded-s3"}) {
        ParamPlan plan = micro_preset(name);
        NmExt pipe(plan);
        structural_checks(
            rep, name, plan, plan.k / 4,
            [&](const BitString& x, const BitString& y) {
                NmExtTrace t;
                pipe.compute(x, y, &t);
                return t;
            },
            [&](const BitString& x, const BitString& y) { return straightline_nmext(x, y, plan); });

        // Advice-prefix separation, exhaustive over seed pairs.
        bool sep_ok = true;
        for (int xi = 0; xi < 3 && sep_ok; ++xi) {
            BitString x = committed_bits(10 + xi, plan.n);
            std::vector<BitString> advices;
            for (std::uint64_t yv = 0; yv < (std::uint64_t(1) << plan.d); ++yv)
                advices.push_back(pipe.advice_gen(x, BitString::from_uint(yv, plan.d)).bits);
            for (std::uint64_t y1 = 0; y1 < advices.size() && sep_ok; ++y1)
                for (std::uint64_t y2 = 0; y2 < advices.size() && sep_ok; ++y2) {
                    bool prefix_differs =
                        BitString::from_uint(y1, plan.d).prefix(plan.d1) !=
                        BitString::from_uint(y2, plan.d).prefix(plan.d1);
                    if (prefix_differs && advices[y1] == advices[y2]) sep_ok = false;
                }
        }
        rep.checks.push_back(expect(std::string(name) + "-advice-separation", sep_ok,
                                    "G differs whenever Prefix(Y, d1) differs, exhaustively"));
    }

    // Committed regression instances.
    struct Instance {
        const char* name;
        const char* plan;
        std::size_t supp;
        bool e_is_first_bit;
        std::uint64_t tamper_mask;
    };
    const Instance instances[] = {
        {"nmext-r1", "seeded-s1", 64, true, 0x1},
        {"nmext-r2", "seeded-s2", 32, false, 0x1},
        {"nmext-r3", "seeded-s3", 256, true, 0xf},
    };
    for (const auto& inst : instances) {
        ParamPlan plan = micro_preset(inst.plan);
        std::vector<SourceAtom> atoms;
        Rat p = Rat(1, BigInt(inst.supp) * (BigInt(1) << plan.d));
        for (std::uint64_t xv = 0; xv < inst.supp; ++xv) {
            BitString x = BitString::from_uint(xv, plan.n);
            BitString e = inst.e_is_first_bit ? x.prefix(1) : BitString();
            for (std::uint64_t yv = 0; yv < (std::uint64_t(1) << plan.d); ++yv)
                atoms.push_back({x, e, BitString::from_uint(yv, plan.d), p});
        }
        JointDist source(std::move(atoms));
        TamperSet tampers{TamperSide::Y, {xor_tamper(inst.tamper_mask, plan.d)}};
        NmDistanceReport r = nm_distance(source, tampers, plan);
        rep.checks.push_back(committed(inst.name, r.joint_y));
        rep.checks.push_back(expect(std::string(inst.name) + "-ordering", r.base_y <= r.joint_y,
                                    "base " + rat_str(r.base_y) + " <= joint " + rat_str(r.joint_y)));
    }
    return rep;
}

SuiteReport verify_2nmext() {
    SuiteReport rep;
    rep.suite = "2nmext";
    for (const char* name : {"2src-t1", "2src-t2", "2src-t3"}) {
        ParamPlan plan = micro_preset(name);
        TwoNmExt pipe(plan);
        structural_checks(
            rep, name, plan, plan.n / 4,
            [&](const BitString& x, const BitString& y) {
                NmExtTrace t;
                pipe.compute(x, y, &t);
                return t;
            },
            [&](const BitString& x, const BitString& y) {
                return straightline_two_nmext(x, y, plan);
            });

        // X1/Y1 prefixes are embedded verbatim in the advice.
        bool sep_ok = true;
        BitString suffix = committed_bits(20, plan.n - 3 * plan.k);
        BitString y_fixed = committed_bits(21, plan.n);
        for (std::uint64_t p1 = 0; p1 < (std::uint64_t(1) << (3 * plan.k)) && sep_ok; ++p1)
            for (std::uint64_t p2 = 0; p2 < (std::uint64_t(1) << (3 * plan.k)) && sep_ok; ++p2) {
                if (p1 == p2) continue;
                BitString x1 = BitString::from_uint(p1, 3 * plan.k).concat(suffix);
                BitString x2 = BitString::from_uint(p2, 3 * plan.k).concat(suffix);
                if (pipe.advice_gen2(x1, y_fixed).bits == pipe.advice_gen2(x2, y_fixed).bits)
                    sep_ok = false;
            }
        rep.checks.push_back(expect(std::string(name) + "-advice-separation", sep_ok,
                                    "G differs whenever Prefix(X, 3k) differs, exhaustively"));
    }

    struct Instance {
        const char* name;
        const char* plan;
        TamperSide side;
        std::uint64_t mask;
    };
    const Instance instances[] = {
        {"2nmext-r1", "2src-t1", TamperSide::Y, 0x3},
        {"2nmext-r2", "2src-t2", TamperSide::X, 0x5},
        {"2nmext-r3", "2src-t3", TamperSide::Y, 0x1},
    };
    for (const auto& inst : instances) {
        ParamPlan plan = micro_preset(inst.plan);
        JointDist source = JointDist::flat_pair(committed_support(30, 32, plan.n),
                                                committed_support(31, 32, plan.n));
        TamperSet tampers{inst.side, {xor_tamper(inst.mask, plan.n)}};
        NmDistanceReport r = nm_distance(source, tampers, plan);
        rep.checks.push_back(committed(std::string(inst.name) + "-y", r.joint_y));
        rep.checks.push_back(committed(std::string(inst.name) + "-x", *r.joint_x));
        rep.checks.push_back(expect(std::string(inst.name) + "-ordering",
                                    r.base_y <= r.joint_y && *r.base_x <= *r.joint_x,
                                    "untampered marginals within tampered joints"));
    }
    return rep;
}

SuiteReport verify_t() {
    SuiteReport rep;
    rep.suite = "t";
    for (const char* name : {"t-seeded-u1", "t-seeded-u2", "t-seeded-u3"}) {
        ParamPlan plan = micro_preset(name);
        TNmExt pipe(plan);
        structural_checks(
            rep, name, plan, plan.k / (8 * plan.t),
            [&](const BitString& x, const BitString& y) {
                NmExtTrace t;
                pipe.compute(x, y, &t);
                return t;
            },
            [&](const BitString& x, const BitString& y) {
                return straightline_t_nmext(x, y, plan);
            });
    }
    for (const char* name : {"t-2src-v1", "t-2src-v2", "t-2src-v3"}) {
        ParamPlan plan = micro_preset(name);
        T2NmExt pipe(plan);
        structural_checks(
            rep, name, plan, plan.n / (4 * plan.t),
            [&](const BitString& x, const BitString& y) {
                NmExtTrace t;
                pipe.compute(x, y, &t);
                return t;
            },
            [&](const BitString& x, const BitString& y) {
                return straightline_t_2nmext(x, y, plan);
            });
    }

    // t = 2 joint-distance regressions, both variants.
    struct Instance {
        const char* name;
        const char* plan;
        bool two_source;
        std::uint64_t mask1, mask2;
    };
    const Instance instances[] = {
        {"t-nmext-r1", "t-seeded-u1", false, 0x1, 0x6},
        {"t-nmext-r2", "t-seeded-u2", false, 0x3, 0x8},
        {"t-nmext-r3", "t-seeded-u3", false, 0x1, 0xf},
        {"t-2nmext-r1", "t-2src-v1", true, 0x1, 0x9},
        {"t-2nmext-r2", "t-2src-v2", true, 0x3, 0x4},
        {"t-2nmext-r3", "t-2src-v3", true, 0x7, 0x2},
    };
    for (const auto& inst : instances) {
        ParamPlan plan = micro_preset(inst.plan);
        JointDist source =
            inst.two_source
                ? JointDist::flat_pair(committed_support(40, 32, plan.n),
                                       committed_support(41, 32, plan.n))
                : JointDist::flat_seeded(committed_support(42, 32, plan.n), plan.d);
        std::size_t tlen = inst.two_source ? plan.n : plan.d;
        TamperSet tampers{TamperSide::Y, {xor_tamper(inst.mask1, tlen), xor_tamper(inst.mask2, tlen)}};
        NmDistanceReport r = nm_distance(source, tampers, plan);
        rep.checks.push_back(committed(std::string(inst.name) + "-y", r.joint_y));
        if (inst.two_source)
            rep.checks.push_back(committed(std::string(inst.name) + "-x", *r.joint_x));
        rep.checks.push_back(expect(std::string(inst.name) + "-ordering", r.base_y <= r.joint_y,
                                    "base " + rat_str(r.base_y) + " <= joint " + rat_str(r.joint_y)));
    }
    return rep;
}

namespace {

struct PaCounts {
    std::uint64_t q = 0, reject = 0, agree = 0;
};

// Seeded sessions on fresh uniform sources, split across two workers.
// Per-trial seeds are derived from the batch seed, so the aggregate is
// independent of the thread split.
PaCounts run_pa_batch(const PaSession& session, const AdversaryStrategy& strategy,
                      std::uint64_t trials, std::uint64_t batch_seed) {
    auto worker = [&](std::uint64_t from, std::uint64_t to, PaCounts& out) {
        for (std::uint64_t i = from; i < to; ++i) {
            BitString x = CtrRng(CtrRng::derive(batch_seed ^ 0x5eed0001, i)).bits(session.plan().n);
            SessionResult r = session.run(x, strategy, CtrRng::derive(batch_seed, i));
            if (r.q_event()) ++out.q;
            else if (!r.accepted()) ++out.reject;
            else ++out.agree;
        }
    };
    PaCounts a, b;
    std::thread half(worker, 0, trials / 2, std::ref(a));
    worker(trials / 2, trials, b);
    half.join();
    return {a.q + b.q, a.reject + b.reject, a.agree + b.agree};
}

} // namespace

SuiteReport verify_pa(std::uint64_t correctness_trials, std::uint64_t robustness_trials) {
    SuiteReport rep;
    rep.suite = "pa";
    ParamPlan plan = micro_preset("pa-m8");
    PaSession session(plan);

    PaCounts corr = run_pa_batch(session, make_strategy("identity"), correctness_trials, 0xc0ffee);
    rep.checks.push_back(expect("pa-correctness",
                                corr.agree == correctness_trials && corr.q == 0 && corr.reject == 0,
                                "R_A = R_B != bot in " + std::to_string(corr.agree) + "/" +
                                    std::to_string(correctness_trials) + " identity sessions"));

    // The trial budget covers the whole adversary suite; the binomial
    // slack is computed at the per-strategy share.
    const std::uint64_t per_strategy = robustness_trials / 4;
    const double p = std::pow(2.0, -double(plan.mac_bits));
    const double sigma = std::sqrt(p * (1 - p) / double(per_strategy));
    const double limit = p + 3 * sigma;
    for (const char* strat : {"seed-bitflip", "replay", "substitute-B", "tag-forge-random"}) {
        PaCounts r = run_pa_batch(session, make_strategy(strat, 0xadf0), per_strategy, 0x20b057);
        double rate = double(r.q) / double(per_strategy);
        rep.checks.push_back(expect(std::string("pa-robust-") + strat, rate <= limit,
                                    "Q-rate " + std::to_string(rate) + " <= bound " +
                                        std::to_string(limit) + " (q=" + std::to_string(r.q) +
                                        ", reject=" + std::to_string(r.reject) + ", trials=" +
                                        std::to_string(per_strategy) + ")"));
    }
    return rep;
}

SuiteReport verify_entropy_loss() {
    SuiteReport rep;
    rep.suite = "entropy-loss";
    ParamPlan plan = micro_preset("pa-m2");
    const std::size_t m = plan.mac_bits;
    const std::size_t leaked = plan.d + 2 * m;  // bits sent by the x-holding parties
    NmExt nm(plan);
    TrevisanExt pa_ext(plan.spec(ExtRole::PAExt));

    struct Instance {
        const char* name;
        std::vector<SourceAtom> atoms;
        const char* strategy;
    };
    std::vector<Instance> instances;
    {
        Instance d1{"entropy-d1", {}, "substitute-B"};
        Rat p(1, 16);
        for (std::uint64_t v = 0; v < 16; ++v)
            d1.atoms.push_back({BitString::from_uint(v, plan.n), BitString(), BitString(), p});
        instances.push_back(std::move(d1));

        Instance d2{"entropy-d2", {}, "seed-bitflip"};
        Rat q(1, 32);
        for (std::uint64_t v = 0; v < 32; ++v) {
            BitString x = BitString::from_uint(v * 3 + 1, plan.n);
            d2.atoms.push_back({x, x.prefix(1), BitString(), q});
        }
        instances.push_back(std::move(d2));

        Instance d3{"entropy-d3", {}, "replay"};
        d3.atoms.push_back({BitString::from_uint(0x2a, plan.n), BitString(), BitString(), Rat(1, 2)});
        d3.atoms.push_back({BitString::from_uint(0x15, plan.n), BitString(), BitString(), Rat(1, 4)});
        d3.atoms.push_back({BitString::from_uint(0x33, plan.n), BitString(), BitString(), Rat(1, 4)});
        instances.push_back(std::move(d3));
    }

    for (const auto& inst : instances) {
        JointDist dist(inst.atoms);
        Rat source_guess = dist.guess_x_given_e();
        AdversaryStrategy strat = make_strategy(inst.strategy, 0xE00);

        CondAtoms cond;
        Dist rb_joint;
        std::map<std::string, Rat> transcript_marginal;
        Rat cell = rat_pow2(-static_cast<long>(plan.d + m));
        for (const auto& atom : dist.atoms()) {
            for (std::uint64_t yv = 0; yv < (std::uint64_t(1) << plan.d); ++yv) {
                BitString y = BitString::from_uint(yv, plan.d);
                BitString y_t = strat.tamper_seed(y);
                BitString s_key = nm.compute(atom.x, y).prefix(2 * m);
                BitString s_key_t = nm.compute(atom.x, y_t).prefix(2 * m);
                for (std::uint64_t bv = 0; bv < (std::uint64_t(1) << m); ++bv) {
                    BitString b_prime = BitString::from_uint(bv, m);
                    BitString t_prime = mac(MacKey::from_bits(s_key_t), b_prime);
                    auto [b_msg, t_msg] = strat.tamper_auth({y, y_t, b_prime, t_prime});
                    std::string transcript =
                        outcome_key({y, y_t, b_prime, t_prime, b_msg, t_msg});
                    cond.add(transcript, atom.x.to_hex(), atom.p * cell);
                    BitString r_b = pa_ext.extract(atom.x, b_prime);
                    rb_joint[r_b.to_hex() + "|" + transcript] += atom.p * cell;
                    transcript_marginal[transcript] += atom.p * cell;
                }
            }
        }
        Rat guess = guessing_probability(cond);
        Rat bound = source_guess * rat_pow2(static_cast<long>(leaked));
        bool holds = guess <= bound;
        rep.checks.push_back(expect(
            inst.name, holds,
            "p_guess(X|transcript) = " + rat_str(guess) + " <= 2^leak * p_guess(X|E) = " +
                rat_str(bound) + " (leak = " + std::to_string(leaked) + " bits)"));

        // Extraction analogue: exact distance of (R_B, transcript) from a
        // fresh z-bit string next to the same transcript.
        Dist product;
        Rat z_p = rat_pow2(-static_cast<long>(plan.z_out));
        for (const auto& [tkey, mass] : transcript_marginal)
            for (std::uint64_t r = 0; r < (std::uint64_t(1) << plan.z_out); ++r)
                product[BitString::from_uint(r, plan.z_out).to_hex() + "|" + tkey] = mass * z_p;
        rep.checks.push_back(
            committed(std::string(inst.name) + "-extraction", stat_dist(rb_joint, product)));
    }
    return rep;
}

SuiteReport run_suite(const std::string& name) {
    if (name == "mac") return verify_mac();
    if (name == "ecc") return verify_ecc();
    if (name == "design") return verify_design();
    if (name == "ext") return verify_ext();
    if (name == "nmext") return verify_nmext();
    if (name == "2nmext") return verify_2nmext();
    if (name == "t") return verify_t();
    if (name == "pa") return verify_pa();
    if (name == "entropy-loss") return verify_entropy_loss();
    throw StructuralError("unknown verify suite '" + name + "'");
}

std::vector<std::string> suite_names() {
    return {"mac", "ecc", "design", "ext", "nmext", "2nmext", "t", "pa", "entropy-loss"};
}

} // namespace nmx
