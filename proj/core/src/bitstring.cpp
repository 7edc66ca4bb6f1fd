#include "nmx/bitstring.hpp"
#include "nmx/errors.hpp"

#include <algorithm>
#include <sstream>

namespace nmx {

BitString BitString::from_binary(const std::string& s) {
    BitString b(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '0' && s[i] != '1')
            throw StructuralError("BitString::from_binary: bad character '" + std::string(1, s[i]) + "'");
        b.bits_[i] = static_cast<std::uint8_t>(s[i] - '0');
    }
    return b;
}

BitString BitString::from_uint(std::uint64_t value, std::size_t len) {
    if (len > 64) throw StructuralError("BitString::from_uint: length > 64");
    BitString b(len);
    for (std::size_t i = 0; i < len; ++i)
        b.bits_[i] = static_cast<std::uint8_t>((value >> (len - 1 - i)) & 1u);
    return b;
}

int BitString::bit(std::size_t i) const {
    if (i >= bits_.size()) throw StructuralError("BitString::bit: index out of range");
    return bits_[i];
}

void BitString::set_bit(std::size_t i, int v) {
    if (i >= bits_.size()) throw StructuralError("BitString::set_bit: index out of range");
    bits_[i] = static_cast<std::uint8_t>(v & 1);
}

BitString BitString::prefix(std::size_t d) const {
    if (d > bits_.size())
        throw StructuralError("prefix: requested " + std::to_string(d) + " bits from a " +
                              std::to_string(bits_.size()) + "-bit string");
    BitString b(d);
    std::copy(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(d), b.bits_.begin());
    return b;
}

BitString BitString::slice(std::size_t from, std::size_t len) const {
    if (from + len > bits_.size()) throw StructuralError("slice: range out of bounds");
    BitString b(len);
    std::copy(bits_.begin() + static_cast<std::ptrdiff_t>(from),
              bits_.begin() + static_cast<std::ptrdiff_t>(from + len), b.bits_.begin());
    return b;
}

BitString BitString::concat(const BitString& other) const {
    BitString b(bits_.size() + other.bits_.size());
    std::copy(bits_.begin(), bits_.end(), b.bits_.begin());
    std::copy(other.bits_.begin(), other.bits_.end(),
              b.bits_.begin() + static_cast<std::ptrdiff_t>(bits_.size()));
    return b;
}

BitString BitString::operator^(const BitString& other) const {
    if (bits_.size() != other.bits_.size())
        throw StructuralError("xor: length mismatch");
    BitString b(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i)
        b.bits_[i] = bits_[i] ^ other.bits_[i];
    return b;
}

BitString BitString::complement() const {
    BitString b(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i)
        b.bits_[i] = bits_[i] ^ 1u;
    return b;
}

std::uint64_t BitString::to_uint() const {
    if (bits_.size() > 64) throw StructuralError("to_uint: length > 64");
    std::uint64_t v = 0;
    for (std::uint8_t b : bits_) v = (v << 1) | b;
    return v;
}

std::string BitString::to_binary() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
    return s;
}

std::string BitString::to_hex() const {
    std::ostringstream os;
    os << bits_.size() << ':';
    static const char* digits = "0123456789abcdef";
    for (std::size_t i = 0; i < bits_.size(); i += 4) {
        unsigned nib = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            nib <<= 1;
            if (i + j < bits_.size()) nib |= bits_[i + j];
        }
        os << digits[nib];
    }
    return os.str();
}

BitString BitString::from_hex(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw StructuralError("BitString::from_hex: missing ':' length separator in '" + s + "'");
    std::size_t len = 0;
    try {
        len = static_cast<std::size_t>(std::stoull(s.substr(0, colon)));
    } catch (const std::exception&) {
        throw StructuralError("BitString::from_hex: bad length field in '" + s + "'");
    }
    std::string hex = s.substr(colon + 1);
    if (hex.size() != (len + 3) / 4)
        throw StructuralError("BitString::from_hex: expected " + std::to_string((len + 3) / 4) +
                              " hex digits for " + std::to_string(len) + " bits, got " +
                              std::to_string(hex.size()));
    BitString b(len);
    for (std::size_t i = 0; i < len; ++i) {
        char c = hex[i / 4];
        unsigned nib;
        if (c >= '0' && c <= '9') nib = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f') nib = static_cast<unsigned>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F') nib = static_cast<unsigned>(c - 'A' + 10);
        else throw StructuralError("BitString::from_hex: bad hex digit");
        b.bits_[i] = static_cast<std::uint8_t>((nib >> (3 - i % 4)) & 1u);
    }
    // Unused low bits of the final nibble must be zero.
    if (len % 4 != 0) {
        char c = hex.back();
        unsigned nib = (c >= '0' && c <= '9') ? static_cast<unsigned>(c - '0')
                     : (c >= 'a' && c <= 'f') ? static_cast<unsigned>(c - 'a' + 10)
                                              : static_cast<unsigned>(c - 'A' + 10);
        if (nib & ((1u << (4 - len % 4)) - 1u))
            throw StructuralError("BitString::from_hex: nonzero padding bits");
    }
    return b;
}

std::vector<std::uint32_t> BitString::parse_symbols(unsigned width) const {
    if (width == 0 || width > 32) throw StructuralError("parse_symbols: width must be in [1,32]");
    std::size_t count = (bits_.size() + width - 1) / width;
    std::vector<std::uint32_t> out(count, 0);
    for (std::size_t i = 0; i < count; ++i) {
        std::uint32_t v = 0;
        for (unsigned j = 0; j < width; ++j) {
            std::size_t pos = i * width + j;
            v = (v << 1) | (pos < bits_.size() ? bits_[pos] : 0u);
        }
        out[i] = v;
    }
    return out;
}

BitString BitString::from_symbols(const std::vector<std::uint32_t>& syms, unsigned width) {
    if (width == 0 || width > 32) throw StructuralError("from_symbols: width must be in [1,32]");
    BitString b(syms.size() * width);
    for (std::size_t i = 0; i < syms.size(); ++i)
        for (unsigned j = 0; j < width; ++j)
            b.bits_[i * width + j] = static_cast<std::uint8_t>((syms[i] >> (width - 1 - j)) & 1u);
    return b;
}

} // namespace nmx
