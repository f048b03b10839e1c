// Copyright (c) 2026 The txsize developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef TXSIZE_PARSER_H
#define TXSIZE_PARSER_H

#include <txsize/classify.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace txsize {

/** Upper bound on an accepted serialized transaction: one block's weight. */
static constexpr std::size_t MAX_TX_SIZE{4'000'000};

struct ParsedInput {
    std::array<uint8_t, 32> prev_txid{};
    uint32_t prev_position{0};
    Bytes script;
    uint32_t sequence{0};
    /** Serialized size: outpoint, script length varint, script, sequence. */
    std::size_t size{0};
    InputMatch match;
};

struct ParsedOutput {
    int64_t amount{0};
    Bytes script;
    /** Serialized size: amount, script length varint, script. */
    std::size_t size{0};
    OutputMatch match;
};

struct ParsedWitness {
    std::vector<Bytes> items;
    /** Serialized size: item count varint plus each item with its length varint. */
    std::size_t size{0};
};

struct ParsedTx {
    int32_t version{0};
    bool segwit{false};
    std::vector<ParsedInput> inputs;
    std::vector<ParsedOutput> outputs;
    /** One per input when segwit, otherwise empty. */
    std::vector<ParsedWitness> witnesses;
    uint32_t locktime{0};
    std::size_t total_size{0};
    std::size_t base_size{0};
    std::size_t weight{0};
};

/** Decodes one complete transaction; trailing bytes are an error. */
ParsedTx ParseTx(std::span<const uint8_t> data);

/**
 * Decodes one transaction starting at `offset` and advances `offset` past
 * it. Used for walking the transactions of a block. Error offsets are
 * absolute within `data`.
 */
ParsedTx ParseTxAt(std::span<const uint8_t> data, std::size_t& offset);

/** Hex (either case, whitespace ignored) to bytes. Throws ParseError. */
Bytes DecodeHex(std::string_view hex);
std::string EncodeHex(std::span<const uint8_t> data);

ParsedTx ParseTxHex(std::string_view hex);

/** Transactions of a serialized block (80-byte header, count, transactions). */
std::vector<ParsedTx> ParseBlock(std::span<const uint8_t> data);

/** Re-serializes a parsed transaction in the form it was read. */
Bytes SerializeTx(const ParsedTx& tx);

enum class Component : uint8_t {
    OVERHEAD,
    INPUT,
    OUTPUT,
    WITNESS,
};

std::string ToString(Component component);

/** One observed component size, the unit of histogram aggregation. */
struct Measurement {
    Component component{Component::OVERHEAD};
    std::string kind;
    std::size_t size{0};

    /** "input:p2pkh", "witness:p2wpkh", "overhead:segwit", ... */
    std::string Key() const { return ToString(component) + ":" + kind; }

    friend bool operator==(const Measurement&, const Measurement&) = default;
};

/**
 * Per-component sizes of a parsed transaction: the overhead, then every
 * input, output and witness in order. The sizes sum to total_size. Witnesses
 * of inputs that carry no witness data are reported with kind "empty".
 */
std::vector<Measurement> Measure(const ParsedTx& tx);

} // namespace txsize

#endif // TXSIZE_PARSER_H
