#include "aixi/core/bits.hpp"

#include <cctype>
#include <stdexcept>

namespace aixi {

unsigned bit_width_for(unsigned n)
{
    unsigned w = 0;
    while ((1u << w) < n) ++w;
    return w;
}

void append_bits(Bits& out, unsigned value, unsigned width)
{
    for (unsigned i = width; i-- > 0;) out.push_back(((value >> i) & 1u) ? '1' : '0');
}

bool read_bits(const Bits& in, std::size_t& pos, unsigned width, unsigned& value)
{
    if (pos + width > in.size()) return false;
    value = 0;
    for (unsigned i = 0; i < width; ++i) value = (value << 1) | (in[pos + i] == '1' ? 1u : 0u);
    pos += width;
    return true;
}

std::string bits_to_hex(const Bits& bits)
{
    static const char* digits = "0123456789abcdef";
    std::string hex;
    for (std::size_t i = 0; i < bits.size(); i += 4) {
        unsigned nib = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            nib <<= 1;
            if (i + j < bits.size() && bits[i + j] == '1') nib |= 1u;
        }
        hex.push_back(digits[nib]);
    }
    return hex;
}

Bits hex_to_bits(const std::string& hex)
{
    Bits bits;
    for (char c : hex) {
        int v;
        if (c >= '0' && c <= '9')
            v = c - '0';
        else if (c >= 'a' && c <= 'f')
            v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F')
            v = c - 'A' + 10;
        else
            throw std::invalid_argument(std::string("bad hex digit '") + c + "'");
        append_bits(bits, static_cast<unsigned>(v), 4);
    }
    return bits;
}

Bits bits_of(unsigned long long value, unsigned width)
{
    Bits b(width, '0');
    for (unsigned i = 0; i < width; ++i)
        if ((value >> (width - 1 - i)) & 1ull) b[i] = '1';
    return b;
}

}  // namespace aixi
