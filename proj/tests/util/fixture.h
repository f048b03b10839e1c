// Copyright (c) 2026 The txsize developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef TXSIZE_TEST_UTIL_FIXTURE_H
#define TXSIZE_TEST_UTIL_FIXTURE_H

#include <txsize/size.h>
#include <txsize/templates.h>

#include <cstdint>
#include <random>
#include <vector>

/**
 * Byte-level transaction serializer used as a test oracle.
 *
 * It builds scripts, witnesses and transactions opcode by opcode from the
 * template definitions and shares no size arithmetic with the library; the
 * descriptor structs are only used to say what to build.
 *
 * Averaged signatures (71.5 bytes) cannot be serialized, so a Blob tracks a
 * surplus of half bytes: such a signature is written as 72 bytes and counted
 * as 71.5. Length prefixes are sized from the model length rounded up.
 */
namespace fixture {

using Bytes = std::vector<uint8_t>;

struct Blob {
    Bytes bytes;
    /** Half bytes by which the model length is below bytes.size(). */
    uint64_t surplus_halves{0};

    uint64_t ModelHalves() const { return 2 * bytes.size() - surplus_halves; }
    /** Model length rounded up, the value length prefixes are sized for. */
    uint64_t PrefixLength() const { return (ModelHalves() + 1) / 2; }
    txsize::SizeQ Size() const { return txsize::SizeQ::FromHalves(ModelHalves()); }

    void Append(const Blob& other);
    void Append(const Bytes& other);
    void Push(uint8_t byte) { bytes.push_back(byte); }
};

/** How signatures and keys are produced. */
struct Signing {
    /** ECDSA signature length including the sighash byte, 9..73. */
    uint32_t ecdsa_len{72};
    /** Write 72-byte signatures counted as 71.5. Overrides ecdsa_len. */
    bool average{false};
    /** When set, each ECDSA signature is 71 or 72 bytes with equal odds. */
    std::mt19937_64* mix{nullptr};
    bool compressed{true};
    /** Schnorr signatures carry an explicit sighash byte (65 bytes). */
    bool schnorr_sighash{false};
};

void WriteCompactSize(Bytes& out, uint64_t n);
/** Length prefix sized for the blob's model length, then the blob. */
void WriteLengthPrefixed(Blob& out, const Blob& item);
/** Size-minimal data push (OP_0, direct, OP_PUSHDATA1/2/4). */
void WritePush(Blob& script, const Blob& data);
/** OP_0, OP_1..OP_16, or a one-byte push for 17..127. */
void WriteSmallInt(Blob& script, uint32_t n);

/** Strict-DER signature of exactly `len` bytes, sighash byte included. */
Bytes DerSignature(uint32_t len, uint8_t seed = 1);
Bytes SecPubKey(bool compressed, uint8_t seed = 1);
Bytes Filler(std::size_t len, uint8_t value = 0xaa);

Blob EcdsaSignature(const Signing& signing, uint8_t seed = 1);

Blob LockingScript(const txsize::OutputSpec& spec, const Signing& signing);
Blob MultisigScript(uint32_t m, uint32_t n, const Signing& signing);

struct InputFixture {
    Blob script;
    /** Witness stack items; empty for spends without witness data. */
    std::vector<Blob> witness;
};

InputFixture BuildInput(const txsize::InputSpec& spec, const Signing& signing);

/** outpoint + script length + script + sequence. */
Blob SerializeInput(const InputFixture& input);
/** amount + script length + script. */
Blob SerializeOutput(const Blob& script, int64_t amount = 50'000);
/** Item count then each item with its length. */
Blob SerializeWitness(const std::vector<Blob>& items);

struct TxFixture {
    std::vector<InputFixture> inputs;
    std::vector<Blob> outputs;
    int32_t version{2};
    uint32_t locktime{0};

    bool HasWitness() const;
};

struct SerializedTx {
    Blob total;
    /** Without marker, flag and witnesses. */
    Blob base;
    /** Marker, flag and witnesses; empty for legacy transactions. */
    txsize::SizeQ witness_size;
};

SerializedTx Serialize(const TxFixture& tx);

TxFixture BuildTx(const std::vector<txsize::InputSpec>& inputs, const std::vector<txsize::OutputSpec>& outputs,
                  const Signing& signing);

/** Random, valid templates for property tests. */
txsize::InputSpec RandomInputSpec(std::mt19937_64& rng);
txsize::OutputSpec RandomOutputSpec(std::mt19937_64& rng);

} // namespace fixture

#endif // TXSIZE_TEST_UTIL_FIXTURE_H
