// Copyright (c) 2026 The txsize developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <txsize/encoding.h>

#include <txsize/errors.h>

namespace txsize {

SizeQ VarIntSize(uint64_t n)
{
    return SizeQ{CompactSizeLength(n)};
}

SizeQ VarIntSize(const SizeQ& length)
{
    return VarIntSize(length.Ceil());
}

SizeQ PushSize(uint64_t len)
{
    if (len <= MAX_DIRECT_PUSH) return SizeQ{1};
    if (len <= 0xff) return SizeQ{2};
    if (len <= 0xffff) return SizeQ{3};
    if (len <= MAX_PUSH_LENGTH) return SizeQ{5};
    throw InvalidPushError("push of " + std::to_string(len) + " bytes exceeds OP_PUSHDATA4 range");
}

SizeQ PushSize(const SizeQ& len)
{
    return PushSize(len.Ceil());
}

SizeQ SmallIntSize(uint64_t n)
{
    if (n <= 16) return SizeQ{1};
    // Minimal encoding of 17..127 is a one-byte direct push.
    if (n <= 127) return PushSize(1) + SizeQ{1};
    throw InvalidSpecError("small integer " + std::to_string(n) + " out of supported range");
}

} // namespace txsize
