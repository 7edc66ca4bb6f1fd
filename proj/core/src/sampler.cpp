#include "nmx/sampler.hpp"
#include "nmx/errors.hpp"
#include "nmx/gf2.hpp"

namespace nmx {

std::vector<std::size_t> samp(const BitString& seed, const SamplerSpec& spec) {
    if (seed.size() != spec.r)
        throw StructuralError("samp: seed length " + std::to_string(seed.size()) + " != r " +
                              std::to_string(spec.r));
    if (spec.t1 < 1 || spec.nu < 1) throw PlanError("samp: t1 and nu must be positive");
    unsigned u = spec.u();
    if ((std::size_t(1) << u) < spec.nu)
        throw PlanError("samp: 2^u = " + std::to_string(std::size_t(1) << u) +
                        " cannot cover universe " + std::to_string(spec.nu));
    if (spec.t1 > (std::size_t(1) << u))
        throw PlanError("samp: t1 exceeds 2^u distinct evaluation points");

    Gf2Field f(u);
    std::size_t half = (spec.r + 1) / 2;
    std::uint32_t a = 0, b = 0;
    for (std::size_t i = 0; i < half; ++i) a = (a << 1) | static_cast<std::uint32_t>(seed.bit(i));
    for (std::size_t i = half; i < spec.r; ++i) b = (b << 1) | static_cast<std::uint32_t>(seed.bit(i));
    // zero-pad the short halves on the right up to u bits
    a <<= (u - half);
    b <<= (u - (spec.r - half));

    std::vector<std::size_t> out;
    out.reserve(spec.t1);
    for (std::uint32_t i = 0; i < spec.t1; ++i)
        out.push_back((f.mul(a, i) ^ b) % spec.nu + 1);
    return out;
}

} // namespace nmx
