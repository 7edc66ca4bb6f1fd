#include "nmx/reed_solomon.hpp"
#include "nmx/errors.hpp"
#include "nmx/plan.hpp"

namespace nmx {

Codeword rs_encode(const FieldVec& msg, std::size_t n_code) {
    if (msg.empty()) throw StructuralError("rs_encode: empty message");
    unsigned w = msg[0].width;
    for (const auto& m : msg)
        if (m.width != w) throw StructuralError("rs_encode: mixed symbol widths");
    Gf2Field f(w);
    if (n_code > f.size())
        throw PlanError("rs_encode: n_code " + std::to_string(n_code) + " exceeds field size " +
                        std::to_string(f.size()));
    if (msg.size() > n_code)
        throw PlanError("rs_encode: message length " + std::to_string(msg.size()) +
                        " exceeds n_code " + std::to_string(n_code));

    Codeword cw;
    cw.k_msg = msg.size();
    cw.width = w;
    cw.symbols.reserve(n_code);
    for (std::uint32_t point = 0; point < n_code; ++point) {
        // Horner, highest coefficient first.
        std::uint32_t acc = 0;
        for (std::size_t j = msg.size(); j-- > 0;)
            acc = f.mul(acc, point) ^ msg[j].value;
        cw.symbols.push_back({acc, w});
    }
    return cw;
}

BitString ecc_symbol(const BitString& y, std::size_t index, unsigned width, std::size_t n_code) {
    if (index < 1 || index > n_code)
        throw StructuralError("ecc_symbol: index " + std::to_string(index) + " outside [1, " +
                              std::to_string(n_code) + "]");
    Codeword cw = rs_encode(to_field_vec(y, width), n_code);
    return BitString::from_uint(cw.symbols[index - 1].value, width);
}

BitString ecc_symbol(const BitString& y, std::size_t index, const ParamPlan& plan) {
    return ecc_symbol(y, index, plan.ecc_width, plan.v);
}

} // namespace nmx
