#ifndef NMX_GF2_HPP
#define NMX_GF2_HPP

#include <cstdint>
#include <vector>

#include "nmx/bitstring.hpp"

namespace nmx {

// Binary extension field GF(2^w), 1 <= w <= 24, with a fixed irreducible
// modulus per width so that every build reduces identically. Elements are
// plain integers in [0, 2^w); addition is XOR.
class Gf2Field {
public:
    explicit Gf2Field(unsigned width);

    unsigned width() const { return width_; }
    std::uint32_t size() const { return std::uint32_t(1) << width_; }
    // Modulus bit pattern including the x^w term, e.g. 0b10011 for w=4.
    std::uint32_t modulus() const { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t inv(std::uint32_t a) const;

    // The fixed modulus used for a given width.
    static std::uint32_t modulus_for(unsigned width);

private:
    unsigned width_;
    std::uint32_t modulus_;
    const void* tables_;  // shared per-width lookup tables
};

// Field element tagged with its width; the checked-width faces of the
// arithmetic above.
struct FieldElem {
    std::uint32_t value = 0;
    unsigned width = 0;

    bool operator==(const FieldElem&) const = default;
};

using FieldVec = std::vector<FieldElem>;

FieldElem gf_mul(const FieldElem& a, const FieldElem& b);
FieldElem gf_add(const FieldElem& a, const FieldElem& b);

// sum_i x_i * y_i over GF(2^w). Lengths and widths must agree.
FieldElem ip(const FieldVec& x, const FieldVec& y);

// Vector view of a bit string: ceil(len/w) symbols, right-padded.
FieldVec to_field_vec(const BitString& bits, unsigned width);

// First d bits of x (the canonical Prefix).
BitString prefix(const BitString& x, std::size_t d);

} // namespace nmx

#endif
