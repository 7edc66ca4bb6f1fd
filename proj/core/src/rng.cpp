#include "nmx/rng.hpp"

namespace nmx {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

std::uint64_t CtrRng::word(std::uint64_t index) const {
    return mix(seed_ + (index + 1) * kGolden);
}

std::uint64_t CtrRng::next() {
    return word(counter_++);
}

BitString CtrRng::bits(std::size_t count) {
    BitString out(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (buffered_ == 0) {
            buffer_ = next();
            buffered_ = 64;
        }
        out.set_bit(i, static_cast<int>((buffer_ >> 63) & 1u));
        buffer_ <<= 1;
        --buffered_;
    }
    return out;
}

std::uint64_t CtrRng::derive(std::uint64_t seed, std::uint64_t stream) {
    return mix(seed ^ mix(stream + kGolden));
}

} // namespace nmx
