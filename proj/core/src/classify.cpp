// Copyright (c) 2026 The txsize developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <txsize/classify.h>

#include <txsize/encoding.h>

#include "script.h"

#include <algorithm>
#include <vector>

namespace txsize {

bool GetOp(std::span<const uint8_t> script, std::size_t& pos, ScriptOp& op)
{
    if (pos >= script.size()) return false;
    op = ScriptOp{};
    op.opcode = script[pos++];
    if (op.opcode > OP_PUSHDATA4) return true;

    std::size_t len{0};
    std::size_t len_bytes{0};
    if (op.opcode < OP_PUSHDATA1) {
        len = op.opcode;
    } else {
        len_bytes = op.opcode == OP_PUSHDATA1 ? 1 : op.opcode == OP_PUSHDATA2 ? 2 : 4;
        if (script.size() - pos < len_bytes) return false;
        for (std::size_t i = 0; i < len_bytes; ++i) {
            len |= std::size_t{script[pos + i]} << (8 * i);
        }
        pos += len_bytes;
    }
    if (script.size() - pos < len) return false;
    op.data = script.subspan(pos, len);
    op.prefix_size = 1 + len_bytes;
    pos += len;
    return true;
}

namespace {

/** Splits a script into ops; nullopt if a push runs past the end. */
std::optional<std::vector<ScriptOp>> Decode(std::span<const uint8_t> script)
{
    std::vector<ScriptOp> ops;
    std::size_t pos{0};
    while (pos < script.size()) {
        ScriptOp op;
        if (!GetOp(script, pos, op)) return std::nullopt;
        ops.push_back(op);
    }
    return ops;
}

/** The push uses the encoding whose size PushSize() assumes. */
bool IsSizeMinimalPush(const ScriptOp& op)
{
    return op.IsPush() && SizeQ{op.prefix_size} == PushSize(op.data.size());
}

std::optional<uint32_t> DecodeSmallInt(const ScriptOp& op)
{
    if (op.opcode >= OP_1 && op.opcode <= OP_16) return op.opcode - OP_1 + 1;
    if (op.opcode == 1 && op.data.size() == 1 && op.data[0] > 16 && op.data[0] <= 0x7f) return op.data[0];
    return std::nullopt;
}

bool IsControlBlock(std::span<const uint8_t> item)
{
    return item.size() >= 33 && (item.size() - 33) % 32 == 0 && (item.size() - 33) / 32 <= MAX_TAPROOT_DEPTH &&
           (item[0] & 0xfe) == 0xc0;
}

bool IsWitnessProgram(std::span<const uint8_t> script, uint8_t version, std::size_t program_len)
{
    return script.size() == program_len + 2 && script[0] == version && script[1] == program_len;
}

/** Multisig witness: empty dummy, m signatures, then the witness script. */
std::optional<MultisigParams> MatchMultisigWitness(std::span<const Bytes> witness)
{
    if (witness.size() < 3 || !witness.front().empty()) return std::nullopt;
    auto params = MatchMultisig(witness.back());
    if (!params || witness.size() != params->m + 2) return std::nullopt;
    return params;
}

InputMatch MatchWitnessOnly(std::span<const Bytes> witness)
{
    InputMatch ret;
    if (witness.size() == 2 && IsValidSignatureEncoding(witness[0]) && IsSecPubKey(witness[1])) {
        ret.cls = InputClass::P2WPKH;
        return ret;
    }
    if (auto ms = MatchMultisigWitness(witness)) {
        ret.cls = InputClass::P2WSH_MS;
        ret.m = ms->m;
        ret.n = ms->n;
        return ret;
    }
    if (witness.size() >= 2 && IsControlBlock(witness.back()) && !witness[witness.size() - 2].empty()) {
        ret.cls = InputClass::P2TR_SCRIPTPATH;
        std::vector<uint64_t> lengths;
        for (std::size_t i = 0; i + 2 < witness.size(); ++i) lengths.push_back(witness[i].size());
        const uint64_t script_len = witness[witness.size() - 2].size();
        const uint32_t depth = static_cast<uint32_t>((witness.back().size() - 33) / 32);
        if (std::any_of(lengths.begin(), lengths.end(), [](uint64_t l) { return l > MAX_SINGLE_BYTE_VARINT; })) {
            ret.shape = TaprootScriptShape::WithItems(std::move(lengths), script_len, depth);
        } else {
            ret.shape.stack_items = static_cast<uint32_t>(lengths.size());
            for (uint64_t l : lengths) ret.shape.stack_data_len += l;
            ret.shape.script_len = script_len;
            ret.shape.merkle_depth = depth;
        }
        return ret;
    }
    if (witness.size() == 1 && (witness[0].size() == 64 || witness[0].size() == 65)) {
        ret.cls = InputClass::P2TR_KEYPATH;
    }
    return ret;
}

} // namespace

bool IsValidSignatureEncoding(std::span<const uint8_t> sig)
{
    // 0x30 [total-length] 0x02 [R-length] [R] 0x02 [S-length] [S] [sighash]
    if (sig.size() < 9 || sig.size() > 73) return false;
    if (sig[0] != 0x30) return false;
    if (sig[1] != sig.size() - 3) return false;
    const std::size_t len_r = sig[3];
    if (5 + len_r >= sig.size()) return false;
    const std::size_t len_s = sig[5 + len_r];
    if (len_r + len_s + 7 != sig.size()) return false;

    if (sig[2] != 0x02 || len_r == 0) return false;
    if (sig[4] & 0x80) return false;
    if (len_r > 1 && sig[4] == 0x00 && !(sig[5] & 0x80)) return false;

    if (sig[len_r + 4] != 0x02 || len_s == 0) return false;
    if (sig[len_r + 6] & 0x80) return false;
    if (len_s > 1 && sig[len_r + 6] == 0x00 && !(sig[len_r + 7] & 0x80)) return false;
    return true;
}

bool IsSecPubKey(std::span<const uint8_t> key)
{
    if (key.size() == 33) return key[0] == 0x02 || key[0] == 0x03;
    if (key.size() == 65) return key[0] == 0x04;
    return false;
}

std::optional<MultisigParams> MatchMultisig(std::span<const uint8_t> script)
{
    auto ops = Decode(script);
    if (!ops || ops->size() < 4) return std::nullopt;
    if (ops->back().opcode != OP_CHECKMULTISIG) return std::nullopt;

    const auto m = DecodeSmallInt(ops->front());
    const auto n = DecodeSmallInt((*ops)[ops->size() - 2]);
    if (!m || !n) return std::nullopt;
    const std::size_t keys = ops->size() - 3;
    if (keys != *n || *m < 1 || *m > *n || *n > MAX_MULTISIG_KEYS) return std::nullopt;
    for (std::size_t i = 1; i <= keys; ++i) {
        const ScriptOp& op = (*ops)[i];
        if (!IsSizeMinimalPush(op) || !IsSecPubKey(op.data)) return std::nullopt;
    }
    return MultisigParams{*m, *n};
}

OutputMatch ClassifyOutput(std::span<const uint8_t> script)
{
    const std::size_t size = script.size();
    if ((size == 35 || size == 67) && script[0] == size - 2 && script.back() == OP_CHECKSIG &&
        IsSecPubKey(script.subspan(1, size - 2))) {
        return {OutputSpec::Simple(OutputType::P2PK)};
    }
    if (size == 25 && script[0] == OP_DUP && script[1] == OP_HASH160 && script[2] == 20 &&
        script[23] == OP_EQUALVERIFY && script[24] == OP_CHECKSIG) {
        return {OutputSpec::Simple(OutputType::P2PKH)};
    }
    if (size == 23 && script[0] == OP_HASH160 && script[1] == 20 && script[22] == OP_EQUAL) {
        return {OutputSpec::Simple(OutputType::P2SH)};
    }
    if (IsWitnessProgram(script, OP_0, 20)) return {OutputSpec::Simple(OutputType::P2WPKH)};
    if (IsWitnessProgram(script, OP_0, 32)) return {OutputSpec::Simple(OutputType::P2WSH)};
    if (IsWitnessProgram(script, OP_1, 32)) return {OutputSpec::Simple(OutputType::P2TR)};
    if (auto ms = MatchMultisig(script)) {
        return {OutputSpec::BareMultisig(ms->m, ms->n)};
    }
    if (size >= 2 && script[0] == OP_RETURN) {
        std::size_t pos{1};
        ScriptOp op;
        if (GetOp(script, pos, op) && pos == size && IsSizeMinimalPush(op)) {
            return {OutputSpec::NullData(op.data.size())};
        }
    }
    return {};
}

InputMatch ClassifyInput(std::span<const uint8_t> script, std::span<const Bytes> witness)
{
    InputMatch ret;
    if (script.empty()) {
        return witness.empty() ? ret : MatchWitnessOnly(witness);
    }

    auto decoded = Decode(script);
    if (!decoded) return ret;
    const std::vector<ScriptOp>& ops = *decoded;
    if (!std::all_of(ops.begin(), ops.end(), [](const ScriptOp& op) { return op.IsPush(); })) return ret;

    if (ops.size() == 1) {
        const auto data = ops[0].data;
        if (IsWitnessProgram(data, OP_0, 20)) {
            ret.cls = InputClass::P2SH_P2WPKH;
        } else if (IsWitnessProgram(data, OP_0, 32)) {
            if (auto ms = MatchMultisigWitness(witness)) {
                ret.cls = InputClass::P2SH_P2WSH_MS;
                ret.m = ms->m;
                ret.n = ms->n;
            } else {
                ret.cls = InputClass::P2SH_P2WSH_OTHER;
            }
        } else if (IsValidSignatureEncoding(data)) {
            ret.cls = InputClass::P2PK;
        }
        return ret;
    }
    if (ops.size() == 2 && IsValidSignatureEncoding(ops[0].data) && IsSecPubKey(ops[1].data)) {
        ret.cls = InputClass::P2PKH;
        return ret;
    }
    if (ops[0].opcode != OP_0) return ret;

    std::size_t sigs{0};
    while (1 + sigs < ops.size() && IsValidSignatureEncoding(ops[1 + sigs].data)) ++sigs;
    if (sigs == 0) return ret;
    if (1 + sigs == ops.size()) {
        ret.cls = InputClass::BARE_MS;
        ret.m = static_cast<uint32_t>(sigs);
        return ret;
    }
    if (2 + sigs == ops.size()) {
        if (auto ms = MatchMultisig(ops.back().data)) {
            ret.cls = InputClass::P2SH_MS;
            ret.m = ms->m;
            ret.n = ms->n;
        }
    }
    return ret;
}

std::string OutputMatch::Label() const
{
    return spec ? ToString(spec->type) : "unknown";
}

std::string InputMatch::Label() const
{
    switch (cls) {
    case InputClass::P2PK: return ToString(InputType::P2PK);
    case InputClass::P2PKH: return ToString(InputType::P2PKH);
    case InputClass::BARE_MS: return ToString(InputType::BARE_MS);
    case InputClass::P2SH_MS: return ToString(InputType::P2SH_MS);
    case InputClass::P2SH_P2WSH_MS: return ToString(InputType::P2SH_P2WSH_MS);
    case InputClass::P2SH_P2WPKH: return ToString(InputType::P2SH_P2WPKH);
    case InputClass::P2WPKH: return ToString(InputType::P2WPKH);
    case InputClass::P2WSH_MS: return ToString(InputType::P2WSH_MS);
    case InputClass::P2TR_KEYPATH: return ToString(InputType::P2TR_KEYPATH);
    case InputClass::P2TR_SCRIPTPATH: return ToString(InputType::P2TR_SCRIPTPATH);
    case InputClass::P2WSH_OTHER: return "p2wsh-other";
    case InputClass::P2SH_P2WSH_OTHER: return "p2sh-p2wsh-other";
    case InputClass::COINBASE: return "coinbase";
    case InputClass::UNKNOWN: return "unknown";
    }
    return "unknown";
}

std::optional<InputSpec> InputMatch::ToSpec() const
{
    switch (cls) {
    case InputClass::P2PK: return InputSpec::Simple(InputType::P2PK);
    case InputClass::P2PKH: return InputSpec::Simple(InputType::P2PKH);
    case InputClass::P2SH_P2WPKH: return InputSpec::Simple(InputType::P2SH_P2WPKH);
    case InputClass::P2WPKH: return InputSpec::Simple(InputType::P2WPKH);
    case InputClass::P2TR_KEYPATH: return InputSpec::Simple(InputType::P2TR_KEYPATH);
    case InputClass::P2SH_MS: return InputSpec::Multisig(InputType::P2SH_MS, m, n);
    case InputClass::P2SH_P2WSH_MS: return InputSpec::Multisig(InputType::P2SH_P2WSH_MS, m, n);
    case InputClass::P2WSH_MS: return InputSpec::Multisig(InputType::P2WSH_MS, m, n);
    case InputClass::P2TR_SCRIPTPATH: return InputSpec::TaprootScript(shape);
    case InputClass::BARE_MS: // key count not revealed by the spend
    case InputClass::P2WSH_OTHER:
    case InputClass::P2SH_P2WSH_OTHER:
    case InputClass::COINBASE:
    case InputClass::UNKNOWN:
        return std::nullopt;
    }
    return std::nullopt;
}

} // namespace txsize
