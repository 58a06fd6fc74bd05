#include "aixi/bestvote/cvm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace aixi {

namespace {

constexpr unsigned target_width = 3;

unsigned action_width(int num_actions)
{
    return bit_width_for(static_cast<unsigned>(num_actions));
}

void encode_instr(Bits& b, const Instr& in, int num_actions)
{
    switch (in.op) {
    case Op::Act:
        b += "00";
        append_bits(b, static_cast<unsigned>(in.arg), action_width(num_actions));
        break;
    case Op::Rate:
        b += "01";
        append_bits(b, static_cast<unsigned>(in.arg), 2);
        break;
    case Op::Read:
        b += "100";
        append_bits(b, static_cast<unsigned>(in.arg), 1);
        break;
    case Op::Jz:
        b += "101";
        append_bits(b, static_cast<unsigned>(in.arg), target_width);
        break;
    case Op::Jmp:
        b += "110";
        append_bits(b, static_cast<unsigned>(in.arg), target_width);
        break;
    case Op::Halt:
        b += "111";
        break;
    }
}

bool valid_instr(const Instr& in, int n, int num_actions)
{
    switch (in.op) {
    case Op::Act:
        return in.arg >= 0 && in.arg < num_actions;
    case Op::Rate:
        return in.arg >= 0 && in.arg <= 3;
    case Op::Read:
        return in.arg == 0 || in.arg == 1;
    case Op::Jz:
    case Op::Jmp:
        return in.arg >= 0 && in.arg <= n && in.arg < (1 << target_width);
    case Op::Halt:
        return true;
    }
    return false;
}

bool take(const Bits& b, std::size_t& pos, char c)
{
    if (pos >= b.size() || b[pos] != c) return false;
    ++pos;
    return true;
}

}  // namespace

CvmProgram CvmProgram::assemble(std::vector<Instr> code, int num_actions)
{
    const int n = static_cast<int>(code.size());
    Bits b(code.size(), '1');
    b.push_back('0');
    for (const auto& in : code) {
        if (!valid_instr(in, n, num_actions)) throw std::invalid_argument("CVM operand out of range");
        encode_instr(b, in, num_actions);
    }
    return CvmProgram(std::move(code), std::move(b));
}

std::optional<CvmProgram> CvmProgram::decode_prefix(const Bits& bits, int num_actions, std::size_t& consumed)
{
    std::size_t pos = 0;
    int n = 0;
    while (pos < bits.size() && bits[pos] == '1') ++n, ++pos;
    if (!take(bits, pos, '0')) return std::nullopt;
    std::vector<Instr> code;
    for (int i = 0; i < n; ++i) {
        Instr in;
        unsigned arg = 0;
        if (take(bits, pos, '0')) {
            if (take(bits, pos, '0')) {
                in.op = Op::Act;
                if (!read_bits(bits, pos, action_width(num_actions), arg)) return std::nullopt;
            } else if (take(bits, pos, '1')) {
                in.op = Op::Rate;
                if (!read_bits(bits, pos, 2, arg)) return std::nullopt;
            } else {
                return std::nullopt;
            }
        } else if (take(bits, pos, '1')) {
            unsigned tag = 0;
            if (!read_bits(bits, pos, 2, tag)) return std::nullopt;
            unsigned width = 0;
            switch (tag) {
            case 0: in.op = Op::Read, width = 1; break;
            case 1: in.op = Op::Jz, width = target_width; break;
            case 2: in.op = Op::Jmp, width = target_width; break;
            default: in.op = Op::Halt; break;
            }
            if (!read_bits(bits, pos, width, arg)) return std::nullopt;
        } else {
            return std::nullopt;
        }
        in.arg = static_cast<int>(arg);
        if (!valid_instr(in, n, num_actions)) return std::nullopt;
        code.push_back(in);
    }
    consumed = pos;
    return CvmProgram(std::move(code), bits.substr(0, pos));
}

std::optional<CvmProgram> CvmProgram::decode(const Bits& bits, int num_actions)
{
    std::size_t used = 0;
    auto p = decode_prefix(bits, num_actions, used);
    if (!p || used != bits.size()) return std::nullopt;
    return p;
}

VmResult CvmProgram::run(const History& h, std::uint64_t budget) const
{
    VmResult r;
    int a = 0;
    std::size_t pc = 0;
    while (pc < code_.size()) {
        if (r.steps >= budget) {
            r.halted = false;
            return r;
        }
        ++r.steps;
        const Instr& in = code_[pc++];
        switch (in.op) {
        case Op::Act: r.y = in.arg; break;
        case Op::Rate: r.w = in.arg; break;
        case Op::Read:
            a = h.empty() ? 0 : (in.arg == 0 ? h[h.size() - 1].action : h[h.size() - 1].percept.credit);
            break;
        case Op::Jz:
            if (a == 0) pc = static_cast<std::size_t>(in.arg);
            break;
        case Op::Jmp: pc = static_cast<std::size_t>(in.arg); break;
        case Op::Halt: return r;
        }
    }
    return r;
}

std::string CvmProgram::disassemble() const
{
    static const char* names[] = {"ACT", "RATE", "READ", "JZ", "JMP", "HALT"};
    std::string out;
    for (const auto& in : code_) {
        if (!out.empty()) out += "; ";
        out += names[static_cast<int>(in.op)];
        if (in.op != Op::Halt) out += " " + std::to_string(in.arg);
    }
    return out.empty() ? "(empty)" : out;
}

std::vector<CvmProgram> enumerate_programs(unsigned max_len, int num_actions, std::uint64_t* examined)
{
    if (max_len > 24) throw std::length_error("CVM enumeration bound too large");
    std::vector<CvmProgram> out;
    std::uint64_t tried = 0;
    for (unsigned len = 1; len <= max_len; ++len)
        for (std::uint64_t v = 0; v < (1ull << len); ++v) {
            ++tried;
            if (auto p = CvmProgram::decode(bits_of(v, len), num_actions)) out.push_back(std::move(*p));
        }
    std::sort(out.begin(), out.end(), [](const CvmProgram& x, const CvmProgram& y) { return x.bits() < y.bits(); });
    if (examined) *examined = tried;
    return out;
}

std::string write_pool_manifest(const std::vector<CvmProgram>& programs)
{
    std::string out;
    for (const auto& p : programs) out += bits_to_hex(p.bits()) + "\n";
    return out;
}

std::vector<CvmProgram> read_pool_manifest(const std::string& text, int num_actions)
{
    std::vector<CvmProgram> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        auto last = line.find_last_not_of(" \t\r");
        Bits bits = hex_to_bits(line.substr(first, last - first + 1));
        std::size_t used = 0;
        auto p = CvmProgram::decode_prefix(bits, num_actions, used);
        if (!p || bits.size() - used >= 4 || bits.find('1', used) != Bits::npos)
            throw std::invalid_argument("pool manifest line " + std::to_string(lineno) + ": not a program codeword");
        out.push_back(std::move(*p));
    }
    return out;
}

}  // namespace aixi
