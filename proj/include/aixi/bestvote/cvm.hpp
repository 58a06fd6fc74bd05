#ifndef AIXI_BESTVOTE_CVM_HPP
#define AIXI_BESTVOTE_CVM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aixi/core/bits.hpp"
#include "aixi/core/history.hpp"

namespace aixi {

// Minimal register VM for self-rating policies. Registers: A (accumulator),
// W (claimed credit), Y (action), all starting at 0.
//
// Code: n ones then a zero (n instructions), then the instructions:
//   00 a     ACT   Y := a          (a in bit_width_for(|Y|) bits, a < |Y|)
//   01 rr    RATE  W := r          (r in 0..3)
//   100 s    READ  A := last action (s = 0) or last credit index (s = 1); 0 at k = 1
//   101 ttt  JZ    if A == 0 goto t  (t <= n)
//   110 ttt  JMP   goto t            (t <= n)
//   111      HALT
// Running off the end halts. Every executed instruction costs one step.
enum class Op { Act, Rate, Read, Jz, Jmp, Halt };

struct Instr {
    Op op = Op::Halt;
    int arg = 0;

    friend bool operator==(const Instr&, const Instr&) = default;
};

struct VmResult {
    int w = 0;
    Action y = 0;
    std::uint64_t steps = 0;
    bool halted = true;
};

class CvmProgram {
public:
    // Encodes the instruction list; throws std::invalid_argument on bad operands.
    static CvmProgram assemble(std::vector<Instr> code, int num_actions);

    static std::optional<CvmProgram> decode(const Bits& bits, int num_actions);
    static std::optional<CvmProgram> decode_prefix(const Bits& bits, int num_actions, std::size_t& consumed);

    const Bits& bits() const { return bits_; }
    unsigned length() const { return static_cast<unsigned>(bits_.size()); }
    const std::vector<Instr>& code() const { return code_; }

    // Runs on the history for cycle |h| + 1 with a step budget; halted is
    // false when the budget ran out first.
    VmResult run(const History& h, std::uint64_t budget) const;

    std::string disassemble() const;

private:
    CvmProgram(std::vector<Instr> code, Bits bits) : code_(std::move(code)), bits_(std::move(bits)) {}

    std::vector<Instr> code_;
    Bits bits_;
};

// Every decodable program of length <= max_len, in lexicographic code order.
// `examined` receives the number of bit strings tried (< 2^{max_len + 1}).
std::vector<CvmProgram> enumerate_programs(unsigned max_len, int num_actions, std::uint64_t* examined = nullptr);

std::string write_pool_manifest(const std::vector<CvmProgram>& programs);
std::vector<CvmProgram> read_pool_manifest(const std::string& text, int num_actions);

}  // namespace aixi

#endif  // AIXI_BESTVOTE_CVM_HPP
