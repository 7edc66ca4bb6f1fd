#ifndef NMX_BITSTRING_HPP
#define NMX_BITSTRING_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace nmx {

// Ordered, length-annotated sequence of bits. Bit 0 is the leftmost /
// most significant position everywhere in this library: to_uint() of
// "101" is 5, prefix keeps the left end, and hex serialization writes
// bit 0 into the top bit of the first nibble.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::size_t len) : bits_(len, 0) {}

    // Parses a string of '0'/'1' characters, leftmost first.
    static BitString from_binary(const std::string& s);
    // value's low `len` bits, most significant bit first.
    static BitString from_uint(std::uint64_t value, std::size_t len);
    // "len:hexdigits" with big-endian bit order (see to_hex).
    static BitString from_hex(const std::string& s);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    int bit(std::size_t i) const;
    void set_bit(std::size_t i, int v);

    // First d bits. Throws StructuralError if d exceeds the length.
    BitString prefix(std::size_t d) const;
    BitString slice(std::size_t from, std::size_t len) const;
    BitString concat(const BitString& other) const;
    BitString operator^(const BitString& other) const;
    BitString complement() const;

    // Big-endian integer value; length must be <= 64 bits.
    std::uint64_t to_uint() const;
    // Big-endian value + 1, i.e. an index in [1, 2^len].
    std::uint64_t to_index1() const { return to_uint() + 1; }

    std::string to_binary() const;
    // "len:hex" where hex has ceil(len/4) digits; the first bit of the
    // string is the most significant bit of the first digit and lengths
    // that are not a multiple of 4 leave the unused low bits of the
    // last digit zero.
    std::string to_hex() const;

    bool operator==(const BitString& o) const { return bits_ == o.bits_; }
    bool operator!=(const BitString& o) const { return bits_ != o.bits_; }
    bool operator<(const BitString& o) const { return bits_ < o.bits_; }

    // Splits into ceil(len/width) chunks of `width` bits, the last one
    // zero-padded on the right, each as a big-endian integer.
    std::vector<std::uint32_t> parse_symbols(unsigned width) const;
    static BitString from_symbols(const std::vector<std::uint32_t>& syms, unsigned width);

private:
    std::vector<std::uint8_t> bits_;
};

} // namespace nmx

#endif
