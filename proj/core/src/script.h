// Copyright (c) 2026 The txsize developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef TXSIZE_SCRIPT_H
#define TXSIZE_SCRIPT_H

#include <cstddef>
#include <cstdint>
#include <span>

namespace txsize {

enum Opcode : uint8_t {
    OP_0 = 0x00,
    OP_PUSHDATA1 = 0x4c,
    OP_PUSHDATA2 = 0x4d,
    OP_PUSHDATA4 = 0x4e,
    OP_1NEGATE = 0x4f,
    OP_1 = 0x51,
    OP_16 = 0x60,
    OP_RETURN = 0x6a,
    OP_DUP = 0x76,
    OP_EQUAL = 0x87,
    OP_EQUALVERIFY = 0x88,
    OP_HASH160 = 0xa9,
    OP_CHECKSIG = 0xac,
    OP_CHECKMULTISIG = 0xae,
};

struct ScriptOp {
    uint8_t opcode{0};
    /** Pushed bytes; empty for non-push opcodes and OP_0. */
    std::span<const uint8_t> data;
    /** Opcode byte plus explicit length bytes. */
    std::size_t prefix_size{1};

    bool IsPush() const { return opcode <= OP_PUSHDATA4; }
};

/** Reads the op at `pos` and advances past it. False on a truncated push. */
bool GetOp(std::span<const uint8_t> script, std::size_t& pos, ScriptOp& op);

} // namespace txsize

#endif // TXSIZE_SCRIPT_H
