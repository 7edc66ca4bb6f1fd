#include "nmx/mac.hpp"
#include "nmx/errors.hpp"
#include "nmx/gf2.hpp"

namespace nmx {

MacKey MacKey::from_bits(const BitString& key_bits) {
    if (key_bits.size() % 2 != 0)
        throw StructuralError("MacKey::from_bits: key length must be 2m");
    std::size_t m = key_bits.size() / 2;
    return {key_bits.prefix(m), key_bits.slice(m, m)};
}

BitString mac(const MacKey& key, const BitString& b) {
    std::size_t m = key.width();
    if (key.s2.size() != m)
        throw StructuralError("mac: key halves disagree in width");
    if (b.size() != m)
        throw StructuralError("mac: message width " + std::to_string(b.size()) +
                              " != key width " + std::to_string(m));
    Gf2Field f(static_cast<unsigned>(m));
    std::uint32_t tag = f.mul(static_cast<std::uint32_t>(key.s1.to_uint()),
                              static_cast<std::uint32_t>(b.to_uint())) ^
                        static_cast<std::uint32_t>(key.s2.to_uint());
    return BitString::from_uint(tag, m);
}

} // namespace nmx
