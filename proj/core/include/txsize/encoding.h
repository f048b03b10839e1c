// Copyright (c) 2026 The txsize developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef TXSIZE_ENCODING_H
#define TXSIZE_ENCODING_H

#include <txsize/size.h>

#include <cstdint>

namespace txsize {

static constexpr uint64_t MAX_SINGLE_BYTE_VARINT{252};
static constexpr uint64_t MAX_DIRECT_PUSH{75};
static constexpr uint64_t MAX_PUSH_LENGTH{0xffffffff};

/** Length in bytes of the CompactSize encoding of n. */
constexpr unsigned CompactSizeLength(uint64_t n)
{
    if (n <= MAX_SINGLE_BYTE_VARINT) return 1;
    if (n <= 0xffff) return 3;
    if (n <= 0xffffffff) return 5;
    return 9;
}

/** Size of the CompactSize varint encoding n: 1, 3, 5 or 9 bytes. */
SizeQ VarIntSize(uint64_t n);

/**
 * Size of the varint prefixing a component of model length `length`.
 * Fractional lengths only arise from averaged signatures; a length strictly
 * above a threshold moves to the next encoding, so the length is rounded up.
 */
SizeQ VarIntSize(const SizeQ& length);

/**
 * Overhead of pushing `len` bytes in Script: opcode plus explicit length, not
 * the data itself. 1 for 0..75, 2 for 76..255 (OP_PUSHDATA1), 3 up to 65535
 * (OP_PUSHDATA2), 5 beyond (OP_PUSHDATA4). Throws InvalidPushError above 2^32-1.
 */
SizeQ PushSize(uint64_t len);

/** As above for a model length; rounded up like VarIntSize. */
SizeQ PushSize(const SizeQ& len);

/** Script size of a small integer n (OP_0, OP_1..OP_16, or a one-byte push beyond). */
SizeQ SmallIntSize(uint64_t n);

} // namespace txsize

#endif // TXSIZE_ENCODING_H
