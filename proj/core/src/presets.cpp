#include "nmx/presets.hpp"
#include "nmx/errors.hpp"

namespace nmx {

namespace {

MicroSpec base(Variant v) {
    MicroSpec m;
    m.variant = v;
    return m;
}

MicroSpec seeded_s1() {
    auto m = base(Variant::Seeded);
    m.n = 8; m.d = 4; m.k = 8;
    m.d1 = 4; m.d2 = 4;
    m.log_v = 2; m.ecc_width = 2;
    m.s = 4; m.b = 4; m.h = 4;
    m.t_len = 4; m.s_out = 4; m.out_len = 2;
    m.eps = 0.125;
    return m;
}

MicroSpec seeded_s2() {
    auto m = base(Variant::Seeded);
    m.n = 8; m.d = 6; m.k = 8;
    m.d1 = 2; m.d2 = 4;
    m.log_v = 1; m.ecc_width = 3;
    m.s = 4; m.b = 4; m.h = 4;
    m.t_len = 4; m.s_out = 4; m.out_len = 2;
    m.eps = 0.125;
    return m;
}

MicroSpec seeded_s3() {
    auto m = base(Variant::Seeded);
    m.n = 10; m.d = 4; m.k = 16;
    m.d1 = 2; m.d2 = 4;
    m.log_v = 1; m.ecc_width = 2;
    m.s = 4; m.b = 4; m.h = 4;
    m.t_len = 4; m.s_out = 4; m.out_len = 4;
    m.eps = 0.125;
    return m;
}

MicroSpec twosrc_t1() {
    auto m = base(Variant::TwoSource);
    m.n = 24; m.k = 2;
    m.log_v = 3; m.ecc_width = 4;
    m.s = 20; m.b = 20; m.h = 24;
    m.s_out = 20; m.out_len = 6;
    m.eps = 0.125;
    return m;
}

MicroSpec twosrc_t2() {
    auto m = base(Variant::TwoSource);
    m.n = 32; m.k = 2;
    m.log_v = 2; m.ecc_width = 8;
    m.s = 20; m.b = 20; m.h = 24;
    m.s_out = 20; m.out_len = 8;
    m.eps = 0.125;
    return m;
}

MicroSpec twosrc_t3() {
    auto m = base(Variant::TwoSource);
    m.n = 24; m.k = 2;
    m.log_v = 6; m.ecc_width = 6;
    m.s = 20; m.b = 20; m.h = 24;
    m.s_out = 20; m.out_len = 6;
    m.eps = 0.125;
    return m;
}

MicroSpec tseeded_u1() {
    auto m = base(Variant::TSeeded);
    m.n = 32; m.d = 4; m.k = 32; m.t = 2;
    m.d1 = 4; m.d2 = 4;
    m.log_v = 2; m.v = 4; m.ecc_width = 2;
    m.n1 = 4; m.t1 = 2;
    m.s = 4; m.b = 4; m.h = 4;
    m.t_len = 4; m.s_out = 4; m.out_len = 2;
    m.eps = 0.125;
    return m;
}

MicroSpec tseeded_u2() {
    auto m = base(Variant::TSeeded);
    m.n = 32; m.d = 6; m.k = 32; m.t = 2;
    m.d1 = 4; m.d2 = 6;
    m.log_v = 2; m.v = 4; m.ecc_width = 2;
    m.n1 = 4; m.t1 = 2;
    m.s = 4; m.b = 4; m.h = 4;
    m.t_len = 4; m.s_out = 4; m.out_len = 2;
    m.eps = 0.125;
    return m;
}

MicroSpec tseeded_u3() {
    auto m = base(Variant::TSeeded);
    m.n = 16; m.d = 4; m.k = 16; m.t = 2;
    m.d1 = 4; m.d2 = 4;
    m.log_v = 2; m.v = 4; m.ecc_width = 2;
    m.n1 = 4; m.t1 = 3;
    m.s = 4; m.b = 4; m.h = 4;
    m.t_len = 4; m.s_out = 4; m.out_len = 1;
    m.eps = 0.125;
    return m;
}

MicroSpec t2src_v1() {
    auto m = base(Variant::TTwoSource);
    m.n = 24; m.k = 2; m.t = 2;
    m.v = 4; m.ecc_width = 6;
    m.n1 = 3; m.t1 = 2;
    m.s = 20; m.b = 20; m.h = 24;
    m.s_out = 20; m.out_len = 3;
    m.eps = 0.125;
    return m;
}

MicroSpec t2src_v2() {
    auto m = base(Variant::TTwoSource);
    m.n = 32; m.k = 2; m.t = 2;
    m.v = 8; m.ecc_width = 5;
    m.n1 = 6; m.t1 = 2;
    m.s = 20; m.b = 20; m.h = 24;
    m.s_out = 20; m.out_len = 4;
    m.eps = 0.125;
    return m;
}

MicroSpec t2src_v3() {
    auto m = base(Variant::TTwoSource);
    m.n = 24; m.k = 2; m.t = 2;
    m.v = 8; m.ecc_width = 4;
    m.n1 = 6; m.t1 = 3;
    m.s = 20; m.b = 20; m.h = 24;
    m.s_out = 20; m.out_len = 3;
    m.eps = 0.125;
    return m;
}

// Fully enumerable PA plan for the exact transcript checks.
MicroSpec pa_m2() {
    auto m = seeded_s1();
    m.out_len = 4;
    m.mac_bits = 2;
    m.z_out = 1;
    return m;
}

// Monte-Carlo PA plan for the robustness suite at m = 8. Sized so the
// key S = Prefix(L, 16) is close to unbiased: the flip-flop chain runs
// at field width 5 (bit density settles near 0.475 instead of decaying
// to the all-zero fixed point that narrower widths hit) and the output
// extractor at width 8, which keeps the all-zero-mask excess of
// Pr(s1 = 0) under five percent of 2^-8.
MicroSpec pa_m8() {
    auto m = base(Variant::Seeded);
    m.n = 128; m.d = 272; m.k = 64;
    m.d1 = 4; m.d2 = 110;
    m.log_v = 4; m.ecc_width = 17;
    m.s = 110; m.b = 110; m.h = 110;
    m.t_len = 110; m.s_out = 272; m.out_len = 16;
    m.mac_bits = 8; m.z_out = 4;
    m.eps = 0.01;
    return m;
}

} // namespace

std::vector<std::string> micro_preset_names() {
    return {"seeded-s1", "seeded-s2", "seeded-s3", "2src-t1",     "2src-t2",     "2src-t3",
            "t-seeded-u1", "t-seeded-u2", "t-seeded-u3", "t-2src-v1", "t-2src-v2", "t-2src-v3",
            "pa-m2", "pa-m8"};
}

ParamPlan micro_preset(const std::string& name) {
    MicroSpec ms;
    if (name == "seeded-s1") ms = seeded_s1();
    else if (name == "seeded-s2") ms = seeded_s2();
    else if (name == "seeded-s3") ms = seeded_s3();
    else if (name == "2src-t1") ms = twosrc_t1();
    else if (name == "2src-t2") ms = twosrc_t2();
    else if (name == "2src-t3") ms = twosrc_t3();
    else if (name == "t-seeded-u1") ms = tseeded_u1();
    else if (name == "t-seeded-u2") ms = tseeded_u2();
    else if (name == "t-seeded-u3") ms = tseeded_u3();
    else if (name == "t-2src-v1") ms = t2src_v1();
    else if (name == "t-2src-v2") ms = t2src_v2();
    else if (name == "t-2src-v3") ms = t2src_v3();
    else if (name == "pa-m2") ms = pa_m2();
    else if (name == "pa-m8") ms = pa_m8();
    else throw StructuralError("unknown micro preset '" + name + "'");
    return plan_micro(ms);
}

} // namespace nmx
