#ifndef AIXI_CORE_BITS_HPP
#define AIXI_CORE_BITS_HPP

#include <cstddef>
#include <string>

namespace aixi {

// Bit strings are kept as text of '0'/'1' characters, most significant first.
// Lexicographic string order is the program order used for tie-breaking.
using Bits = std::string;

// Number of bits needed to write values 0..n-1 (0 when n <= 1).
unsigned bit_width_for(unsigned n);

void append_bits(Bits& out, unsigned value, unsigned width);

// Reads `width` bits at `pos`; returns false if the string is too short.
bool read_bits(const Bits& in, std::size_t& pos, unsigned width, unsigned& value);

// Hex with zero padding to a whole number of nibbles.
std::string bits_to_hex(const Bits& bits);
Bits hex_to_bits(const std::string& hex);

// value written in exactly `width` bits
Bits bits_of(unsigned long long value, unsigned width);

}  // namespace aixi

#endif  // AIXI_CORE_BITS_HPP
