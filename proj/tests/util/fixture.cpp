// Copyright (c) 2026 The txsize developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <util/fixture.h>

#include <stdexcept>

using txsize::InputSpec;
using txsize::InputType;
using txsize::OutputSpec;
using txsize::OutputType;

namespace fixture {
namespace {

constexpr uint8_t OP_0{0x00};
constexpr uint8_t OP_PUSHDATA1{0x4c};
constexpr uint8_t OP_PUSHDATA2{0x4d};
constexpr uint8_t OP_PUSHDATA4{0x4e};
constexpr uint8_t OP_1{0x51};
constexpr uint8_t OP_RETURN{0x6a};
constexpr uint8_t OP_DUP{0x76};
constexpr uint8_t OP_EQUAL{0x87};
constexpr uint8_t OP_EQUALVERIFY{0x88};
constexpr uint8_t OP_HASH160{0xa9};
constexpr uint8_t OP_CHECKSIG{0xac};
constexpr uint8_t OP_CHECKMULTISIG{0xae};

void WriteLE(Bytes& out, uint64_t value, int bytes)
{
    for (int i = 0; i < bytes; ++i) out.push_back(static_cast<uint8_t>(value >> (8 * i)));
}

Blob Raw(Bytes bytes) { return Blob{std::move(bytes), 0}; }

Bytes PubKey(const Signing& signing, uint8_t seed) { return SecPubKey(signing.compressed, seed); }

Blob SchnorrSignature(const Signing& signing)
{
    Bytes sig = Filler(64, 0x5c);
    if (signing.schnorr_sighash) sig.push_back(0x81);
    return Raw(std::move(sig));
}

/** OP_0 <20 or 32 bytes>: a v0 witness program. */
Blob WitnessV0Program(std::size_t len)
{
    Blob script;
    script.Push(OP_0);
    WritePush(script, Raw(Filler(len, 0x11)));
    return script;
}

} // namespace

void Blob::Append(const Blob& other)
{
    bytes.insert(bytes.end(), other.bytes.begin(), other.bytes.end());
    surplus_halves += other.surplus_halves;
}

void Blob::Append(const Bytes& other) { bytes.insert(bytes.end(), other.begin(), other.end()); }

void WriteCompactSize(Bytes& out, uint64_t n)
{
    if (n < 253) {
        out.push_back(static_cast<uint8_t>(n));
    } else if (n <= 0xffff) {
        out.push_back(253);
        WriteLE(out, n, 2);
    } else if (n <= 0xffffffff) {
        out.push_back(254);
        WriteLE(out, n, 4);
    } else {
        out.push_back(255);
        WriteLE(out, n, 8);
    }
}

void WriteLengthPrefixed(Blob& out, const Blob& item)
{
    WriteCompactSize(out.bytes, item.PrefixLength());
    out.Append(item);
}

void WritePush(Blob& script, const Blob& data)
{
    const uint64_t len = data.PrefixLength();
    if (len == 0) {
        script.Push(OP_0);
        return;
    }
    if (len < OP_PUSHDATA1) {
        script.Push(static_cast<uint8_t>(len));
    } else if (len <= 0xff) {
        script.Push(OP_PUSHDATA1);
        WriteLE(script.bytes, len, 1);
    } else if (len <= 0xffff) {
        script.Push(OP_PUSHDATA2);
        WriteLE(script.bytes, len, 2);
    } else {
        script.Push(OP_PUSHDATA4);
        WriteLE(script.bytes, len, 4);
    }
    script.Append(data);
}

void WriteSmallInt(Blob& script, uint32_t n)
{
    if (n == 0) {
        script.Push(OP_0);
    } else if (n <= 16) {
        script.Push(static_cast<uint8_t>(OP_1 + n - 1));
    } else if (n <= 127) {
        script.Push(0x01);
        script.Push(static_cast<uint8_t>(n));
    } else {
        throw std::invalid_argument("small integer out of range");
    }
}

Bytes DerSignature(uint32_t len, uint8_t seed)
{
    if (len < 9 || len > 73) throw std::invalid_argument("DER signature length must be 9..73");
    // 0x30 L 0x02 rlen r 0x02 slen s sighash
    const uint32_t payload = len - 7;
    const uint32_t rlen = std::min<uint32_t>(33, (payload + 1) / 2);
    const uint32_t slen = payload - rlen;
    auto integer = [&](uint32_t n) {
        Bytes v(n, static_cast<uint8_t>(0x20 + seed % 0x40));
        // A 33-byte integer needs its zero pad byte followed by a high byte.
        if (n == 33) {
            v[0] = 0x00;
            v[1] = 0x80 | seed;
        } else {
            v[0] = static_cast<uint8_t>(0x01 + seed % 0x7e);
        }
        return v;
    };
    Bytes sig{0x30, static_cast<uint8_t>(len - 3), 0x02, static_cast<uint8_t>(rlen)};
    const Bytes r = integer(rlen);
    sig.insert(sig.end(), r.begin(), r.end());
    sig.push_back(0x02);
    sig.push_back(static_cast<uint8_t>(slen));
    const Bytes s = integer(slen);
    sig.insert(sig.end(), s.begin(), s.end());
    sig.push_back(0x01); // SIGHASH_ALL
    return sig;
}

Bytes SecPubKey(bool compressed, uint8_t seed)
{
    Bytes key(compressed ? 33 : 65, static_cast<uint8_t>(0x40 + seed % 0x40));
    key[0] = compressed ? static_cast<uint8_t>(0x02 + seed % 2) : 0x04;
    return key;
}

Bytes Filler(std::size_t len, uint8_t value) { return Bytes(len, value); }

Blob EcdsaSignature(const Signing& signing, uint8_t seed)
{
    if (signing.mix) {
        const uint32_t len = std::uniform_int_distribution<int>{0, 1}(*signing.mix) ? 72 : 71;
        return Raw(DerSignature(len, seed));
    }
    if (signing.average) return Blob{DerSignature(72, seed), 1};
    return Raw(DerSignature(signing.ecdsa_len, seed));
}

Blob MultisigScript(uint32_t m, uint32_t n, const Signing& signing)
{
    Blob script;
    WriteSmallInt(script, m);
    for (uint32_t i = 0; i < n; ++i) WritePush(script, Raw(PubKey(signing, static_cast<uint8_t>(i + 1))));
    WriteSmallInt(script, n);
    script.Push(OP_CHECKMULTISIG);
    return script;
}

Blob LockingScript(const OutputSpec& spec, const Signing& signing)
{
    Blob script;
    switch (spec.type) {
    case OutputType::P2PK:
        WritePush(script, Raw(PubKey(signing, 1)));
        script.Push(OP_CHECKSIG);
        break;
    case OutputType::P2PKH:
        script.Push(OP_DUP);
        script.Push(OP_HASH160);
        WritePush(script, Raw(Filler(20)));
        script.Push(OP_EQUALVERIFY);
        script.Push(OP_CHECKSIG);
        break;
    case OutputType::BARE_MS:
        script = MultisigScript(spec.m, spec.n, signing);
        break;
    case OutputType::NULL_DATA:
        script.Push(OP_RETURN);
        WritePush(script, Raw(Filler(spec.data_len)));
        break;
    case OutputType::P2SH:
        script.Push(OP_HASH160);
        WritePush(script, Raw(Filler(20)));
        script.Push(OP_EQUAL);
        break;
    case OutputType::P2WPKH:
        script = WitnessV0Program(20);
        break;
    case OutputType::P2WSH:
        script = WitnessV0Program(32);
        break;
    case OutputType::P2TR:
        script.Push(OP_1);
        WritePush(script, Raw(Filler(32, 0x22)));
        break;
    }
    return script;
}

InputFixture BuildInput(const InputSpec& spec, const Signing& signing)
{
    InputFixture in;
    auto sigs = [&](uint32_t count) {
        std::vector<Blob> ret;
        for (uint32_t i = 0; i < count; ++i) ret.push_back(EcdsaSignature(signing, static_cast<uint8_t>(i + 1)));
        return ret;
    };
    switch (spec.type) {
    case InputType::P2PK:
        WritePush(in.script, EcdsaSignature(signing));
        break;
    case InputType::P2PKH:
        WritePush(in.script, EcdsaSignature(signing));
        WritePush(in.script, Raw(PubKey(signing, 1)));
        break;
    case InputType::BARE_MS:
        in.script.Push(OP_0);
        for (const Blob& sig : sigs(spec.m)) WritePush(in.script, sig);
        break;
    case InputType::P2SH_MS:
        in.script.Push(OP_0);
        for (const Blob& sig : sigs(spec.m)) WritePush(in.script, sig);
        WritePush(in.script, MultisigScript(spec.m, spec.n, signing));
        break;
    case InputType::P2SH_P2WSH_MS:
        WritePush(in.script, WitnessV0Program(32));
        [[fallthrough]];
    case InputType::P2WSH_MS:
        in.witness.push_back(Blob{});
        for (Blob& sig : sigs(spec.m)) in.witness.push_back(std::move(sig));
        in.witness.push_back(MultisigScript(spec.m, spec.n, signing));
        break;
    case InputType::P2SH_P2WPKH:
        WritePush(in.script, WitnessV0Program(20));
        [[fallthrough]];
    case InputType::P2WPKH:
        in.witness.push_back(EcdsaSignature(signing));
        in.witness.push_back(Raw(PubKey(signing, 1)));
        break;
    case InputType::P2TR_KEYPATH:
        in.witness.push_back(SchnorrSignature(signing));
        break;
    case InputType::P2TR_SCRIPTPATH: {
        const txsize::TaprootScriptShape& shape = spec.shape;
        if (!shape.item_lengths.empty()) {
            for (uint64_t len : shape.item_lengths) in.witness.push_back(Raw(Filler(len, 0x33)));
        } else {
            for (uint32_t i = 0; i < shape.stack_items; ++i) {
                const uint64_t len = shape.stack_data_len / shape.stack_items +
                                     (i < shape.stack_data_len % shape.stack_items ? 1 : 0);
                in.witness.push_back(Raw(Filler(len, 0x33)));
            }
        }
        in.witness.push_back(Raw(Filler(shape.script_len, 0x51)));
        Bytes control = Filler(33 + 32 * std::size_t{shape.merkle_depth}, 0x44);
        control[0] = 0xc0;
        in.witness.push_back(Raw(std::move(control)));
        break;
    }
    }
    return in;
}

Blob SerializeInput(const InputFixture& input)
{
    Blob out;
    out.Append(Filler(32, 0x77));
    WriteLE(out.bytes, 0, 4);
    WriteLengthPrefixed(out, input.script);
    WriteLE(out.bytes, 0xffffffff, 4);
    return out;
}

Blob SerializeOutput(const Blob& script, int64_t amount)
{
    Blob out;
    WriteLE(out.bytes, static_cast<uint64_t>(amount), 8);
    WriteLengthPrefixed(out, script);
    return out;
}

Blob SerializeWitness(const std::vector<Blob>& items)
{
    Blob out;
    WriteCompactSize(out.bytes, items.size());
    for (const Blob& item : items) WriteLengthPrefixed(out, item);
    return out;
}

bool TxFixture::HasWitness() const
{
    for (const InputFixture& in : inputs) {
        if (!in.witness.empty()) return true;
    }
    return false;
}

SerializedTx Serialize(const TxFixture& tx)
{
    const bool segwit = tx.HasWitness();
    Blob head;
    WriteLE(head.bytes, static_cast<uint32_t>(tx.version), 4);
    Blob body;
    WriteCompactSize(body.bytes, tx.inputs.size());
    for (const InputFixture& in : tx.inputs) body.Append(SerializeInput(in));
    WriteCompactSize(body.bytes, tx.outputs.size());
    for (const Blob& script : tx.outputs) body.Append(SerializeOutput(script));
    Blob tail;
    WriteLE(tail.bytes, tx.locktime, 4);

    SerializedTx ret;
    ret.base = head;
    ret.base.Append(body);
    ret.base.Append(tail);

    Blob witness;
    if (segwit) {
        witness.Push(0x00); // marker
        witness.Push(0x01); // flag
        for (const InputFixture& in : tx.inputs) witness.Append(SerializeWitness(in.witness));
    }
    ret.witness_size = witness.Size();

    ret.total = head;
    if (segwit) {
        ret.total.Push(0x00);
        ret.total.Push(0x01);
    }
    ret.total.Append(body);
    if (segwit) {
        for (const InputFixture& in : tx.inputs) ret.total.Append(SerializeWitness(in.witness));
    }
    ret.total.Append(tail);
    return ret;
}

TxFixture BuildTx(const std::vector<InputSpec>& inputs, const std::vector<OutputSpec>& outputs, const Signing& signing)
{
    TxFixture tx;
    for (const InputSpec& spec : inputs) tx.inputs.push_back(BuildInput(spec, signing));
    for (const OutputSpec& spec : outputs) tx.outputs.push_back(LockingScript(spec, signing));
    return tx;
}

InputSpec RandomInputSpec(std::mt19937_64& rng)
{
    auto uniform = [&](uint32_t lo, uint32_t hi) { return std::uniform_int_distribution<uint32_t>{lo, hi}(rng); };
    const auto type = static_cast<InputType>(uniform(0, static_cast<uint32_t>(InputType::P2TR_SCRIPTPATH)));
    switch (type) {
    case InputType::BARE_MS:
    case InputType::P2SH_MS:
    case InputType::P2SH_P2WSH_MS:
    case InputType::P2WSH_MS: {
        // Legacy P2SH redeem scripts are capped at 520 bytes.
        const uint32_t n = uniform(1, type == InputType::P2SH_MS ? 15 : 20);
        return InputSpec::Multisig(type, uniform(1, n), n);
    }
    case InputType::P2TR_SCRIPTPATH: {
        txsize::TaprootScriptShape shape;
        shape.stack_items = uniform(0, 6);
        shape.stack_data_len = shape.stack_items == 0 ? 0 : uniform(0, 80 * shape.stack_items);
        shape.script_len = uniform(1, 300);
        shape.merkle_depth = uniform(0, 12);
        return InputSpec::TaprootScript(shape);
    }
    default:
        return InputSpec::Simple(type);
    }
}

OutputSpec RandomOutputSpec(std::mt19937_64& rng)
{
    auto uniform = [&](uint32_t lo, uint32_t hi) { return std::uniform_int_distribution<uint32_t>{lo, hi}(rng); };
    const auto type = static_cast<OutputType>(uniform(0, static_cast<uint32_t>(OutputType::P2TR)));
    switch (type) {
    case OutputType::BARE_MS: {
        const uint32_t n = uniform(1, 3);
        return OutputSpec::BareMultisig(uniform(1, n), n);
    }
    case OutputType::NULL_DATA:
        return OutputSpec::NullData(uniform(0, 80));
    default:
        return OutputSpec::Simple(type);
    }
}

} // namespace fixture
