#ifndef NMX_RNG_HPP
#define NMX_RNG_HPP

#include <cstdint>

#include "nmx/bitstring.hpp"

namespace nmx {

// Counter-based generator, algorithm id "splitmix64-ctr-v1": word i of a
// stream is the splitmix64 finalizer applied to seed + (i+1)*golden.
// Pure function of (seed, counter), identical on every platform.
class CtrRng {
public:
    explicit CtrRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t word(std::uint64_t index) const;
    std::uint64_t next();
    BitString bits(std::size_t count);

    // Independent substream for session i of a batch.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
    std::uint64_t buffer_ = 0;
    unsigned buffered_ = 0;
};

} // namespace nmx

#endif
