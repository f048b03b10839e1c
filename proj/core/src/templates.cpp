// Copyright (c) 2026 The txsize developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <txsize/templates.h>

#include <txsize/encoding.h>
#include <txsize/errors.h>

#include <numeric>

namespace txsize {
namespace {

constexpr uint64_t AMOUNT_SIZE{8};
constexpr uint64_t TXID_SIZE{32};
constexpr uint64_t POSITION_SIZE{4};
constexpr uint64_t SEQUENCE_SIZE{4};
constexpr uint64_t HASH160_SIZE{20};
constexpr uint64_t SHA256_SIZE{32};
constexpr uint64_t XONLY_KEY_SIZE{32};
constexpr uint64_t CONTROL_BLOCK_BASE{33};
constexpr uint64_t CONTROL_BLOCK_STEP{32};

/** OP_x <len> <program> */
SizeQ WitnessProgramSize(uint64_t program_len)
{
    return SizeQ{1} + PushSize(program_len) + SizeQ{program_len};
}

/** A push of `len` bytes inside a script, prefix included. */
SizeQ Pushed(const SizeQ& len)
{
    return PushSize(len) + len;
}

/** A witness stack item, length varint included. */
SizeQ Item(const SizeQ& len)
{
    return VarIntSize(len) + len;
}

void CheckMultisigParams(uint32_t m, uint32_t n)
{
    if (m < 1 || n < 1 || m > n || n > MAX_MULTISIG_KEYS) {
        throw InvalidSpecError("multisig requires 1 <= m <= n <= 20, got " + std::to_string(m) + "-of-" + std::to_string(n));
    }
}

} // namespace

OutputSpec OutputSpec::Simple(OutputType type)
{
    OutputSpec ret;
    ret.type = type;
    return ret;
}

OutputSpec OutputSpec::BareMultisig(uint32_t m, uint32_t n)
{
    OutputSpec ret;
    ret.type = OutputType::BARE_MS;
    ret.m = m;
    ret.n = n;
    return ret;
}

OutputSpec OutputSpec::NullData(uint64_t data_len)
{
    OutputSpec ret;
    ret.type = OutputType::NULL_DATA;
    ret.data_len = data_len;
    return ret;
}

TaprootScriptShape TaprootScriptShape::WithItems(std::vector<uint64_t> lengths, uint64_t script_len, uint32_t merkle_depth)
{
    TaprootScriptShape ret;
    ret.stack_items = static_cast<uint32_t>(lengths.size());
    ret.stack_data_len = std::accumulate(lengths.begin(), lengths.end(), uint64_t{0});
    ret.script_len = script_len;
    ret.merkle_depth = merkle_depth;
    ret.item_lengths = std::move(lengths);
    return ret;
}

InputSpec InputSpec::Simple(InputType type)
{
    InputSpec ret;
    ret.type = type;
    return ret;
}

InputSpec InputSpec::Multisig(InputType type, uint32_t m, uint32_t n)
{
    InputSpec ret;
    ret.type = type;
    ret.m = m;
    ret.n = n;
    return ret;
}

InputSpec InputSpec::TaprootScript(TaprootScriptShape shape)
{
    InputSpec ret;
    ret.type = InputType::P2TR_SCRIPTPATH;
    ret.shape = std::move(shape);
    return ret;
}

void ComponentSize::Add(std::string label, const SizeQ& size)
{
    m_total += size;
    m_detail.emplace_back(std::move(label), size);
}

bool IsMultisig(InputType type)
{
    switch (type) {
    case InputType::BARE_MS:
    case InputType::P2SH_MS:
    case InputType::P2SH_P2WSH_MS:
    case InputType::P2WSH_MS:
        return true;
    default:
        return false;
    }
}

bool SpendsWitness(InputType type)
{
    switch (type) {
    case InputType::P2SH_P2WSH_MS:
    case InputType::P2SH_P2WPKH:
    case InputType::P2WPKH:
    case InputType::P2WSH_MS:
    case InputType::P2TR_KEYPATH:
    case InputType::P2TR_SCRIPTPATH:
        return true;
    case InputType::P2PK:
    case InputType::P2PKH:
    case InputType::BARE_MS:
    case InputType::P2SH_MS:
        return false;
    }
    return false;
}

void CheckOutputSpec(const OutputSpec& spec, const Policy& policy)
{
    switch (spec.type) {
    case OutputType::BARE_MS:
        CheckMultisigParams(spec.m, spec.n);
        break;
    case OutputType::NULL_DATA:
        if (spec.data_len > policy.max_nulldata_len) {
            throw InvalidSpecError("null data payload of " + std::to_string(spec.data_len) + " bytes exceeds the " +
                                   std::to_string(policy.max_nulldata_len) + "-byte relay limit");
        }
        if (spec.data_len > MAX_PUSH_LENGTH) {
            throw InvalidSpecError("null data payload exceeds push range");
        }
        break;
    default:
        break;
    }
}

void CheckInputSpec(const InputSpec& spec)
{
    if (IsMultisig(spec.type)) {
        CheckMultisigParams(spec.m, spec.n);
        return;
    }
    if (spec.type != InputType::P2TR_SCRIPTPATH) return;

    const TaprootScriptShape& shape = spec.shape;
    if (shape.script_len < 1) {
        throw InvalidSpecError("taproot leaf script must not be empty");
    }
    if (shape.merkle_depth > MAX_TAPROOT_DEPTH) {
        throw InvalidSpecError("taproot merkle depth " + std::to_string(shape.merkle_depth) + " exceeds 128");
    }
    if (!shape.item_lengths.empty()) {
        const uint64_t sum = std::accumulate(shape.item_lengths.begin(), shape.item_lengths.end(), uint64_t{0});
        if (shape.item_lengths.size() != shape.stack_items || sum != shape.stack_data_len) {
            throw InvalidSpecError("taproot item lengths disagree with stack item count or data length");
        }
        return;
    }
    if (shape.stack_data_len > MAX_SINGLE_BYTE_VARINT * uint64_t{shape.stack_items}) {
        throw InvalidSpecError("taproot stack data does not fit " + std::to_string(shape.stack_items) +
                               " items of at most 252 bytes; give explicit item lengths");
    }
}

SizeQ MultisigScriptSize(uint32_t m, uint32_t n, const SizeModel& model)
{
    const SizeQ key = PubKeySize(model.pubkey);
    return SmallIntSize(m) + n * Pushed(key) + SmallIntSize(n) + SizeQ{1};
}

SizeQ LockingScriptSize(const OutputSpec& spec, const SizeModel& model)
{
    switch (spec.type) {
    case OutputType::P2PK:
        return Pushed(PubKeySize(model.pubkey)) + SizeQ{1};
    case OutputType::P2PKH:
        // OP_DUP OP_HASH160 <20> OP_EQUALVERIFY OP_CHECKSIG
        return SizeQ{2} + Pushed(SizeQ{HASH160_SIZE}) + SizeQ{2};
    case OutputType::BARE_MS:
        return MultisigScriptSize(spec.m, spec.n, model);
    case OutputType::NULL_DATA:
        return SizeQ{1} + Pushed(SizeQ{spec.data_len});
    case OutputType::P2SH:
        // OP_HASH160 <20> OP_EQUAL
        return SizeQ{1} + Pushed(SizeQ{HASH160_SIZE}) + SizeQ{1};
    case OutputType::P2WPKH:
        return WitnessProgramSize(HASH160_SIZE);
    case OutputType::P2WSH:
        return WitnessProgramSize(SHA256_SIZE);
    case OutputType::P2TR:
        return WitnessProgramSize(XONLY_KEY_SIZE);
    }
    throw InvalidSpecError("unknown output type");
}

SizeQ UnlockingScriptSize(const InputSpec& spec, const SizeModel& model)
{
    const SizeQ sig = EcdsaSigSize(model.ecdsa);
    const SizeQ key = PubKeySize(model.pubkey);
    switch (spec.type) {
    case InputType::P2PK:
        return Pushed(sig);
    case InputType::P2PKH:
        return Pushed(sig) + Pushed(key);
    case InputType::BARE_MS:
        // OP_0 dummy consumed by OP_CHECKMULTISIG, then m signatures
        return SizeQ{1} + spec.m * Pushed(sig);
    case InputType::P2SH_MS: {
        const SizeQ redeem = MultisigScriptSize(spec.m, spec.n, model);
        return SizeQ{1} + spec.m * Pushed(sig) + Pushed(redeem);
    }
    case InputType::P2SH_P2WSH_MS:
        return Pushed(WitnessProgramSize(SHA256_SIZE));
    case InputType::P2SH_P2WPKH:
        return Pushed(WitnessProgramSize(HASH160_SIZE));
    case InputType::P2WPKH:
    case InputType::P2WSH_MS:
    case InputType::P2TR_KEYPATH:
    case InputType::P2TR_SCRIPTPATH:
        return SizeQ{0};
    }
    throw InvalidSpecError("unknown input type");
}

ComponentSize OutputSize(const OutputSpec& spec, const SizeModel& model, const Policy& policy)
{
    CheckOutputSpec(spec, policy);
    const SizeQ script = LockingScriptSize(spec, model);
    ComponentSize ret{ToString(spec.type)};
    ret.Add("amount", SizeQ{AMOUNT_SIZE});
    ret.Add("script_length", VarIntSize(script));
    ret.Add("script", script);
    return ret;
}

ComponentSize InputSize(const InputSpec& spec, const SizeModel& model)
{
    CheckInputSpec(spec);
    const SizeQ script = UnlockingScriptSize(spec, model);
    ComponentSize ret{ToString(spec.type)};
    ret.Add("txid", SizeQ{TXID_SIZE});
    ret.Add("position", SizeQ{POSITION_SIZE});
    ret.Add("sequence", SizeQ{SEQUENCE_SIZE});
    ret.Add("script_length", VarIntSize(script));
    ret.Add("script", script);
    return ret;
}

ComponentSize WitnessSize(const InputSpec& spec, const SizeModel& model)
{
    CheckInputSpec(spec);
    ComponentSize ret{SpendsWitness(spec.type) ? ToString(spec.type) : "empty"};
    const SizeQ sig = EcdsaSigSize(model.ecdsa);
    const SizeQ key = PubKeySize(model.pubkey);

    switch (spec.type) {
    case InputType::P2WPKH:
    case InputType::P2SH_P2WPKH:
        ret.Add("item_count", VarIntSize(2));
        ret.Add("signature", Item(sig));
        ret.Add("pubkey", Item(key));
        break;
    case InputType::P2WSH_MS:
    case InputType::P2SH_P2WSH_MS: {
        const SizeQ script = MultisigScriptSize(spec.m, spec.n, model);
        ret.Add("item_count", VarIntSize(uint64_t{spec.m} + 2));
        ret.Add("dummy", Item(SizeQ{0}));
        ret.Add("signatures", spec.m * Item(sig));
        ret.Add("witness_script", Item(script));
        break;
    }
    case InputType::P2TR_KEYPATH:
        ret.Add("item_count", VarIntSize(1));
        ret.Add("signature", Item(SchnorrSigSize(model.schnorr)));
        break;
    case InputType::P2TR_SCRIPTPATH: {
        const TaprootScriptShape& shape = spec.shape;
        ret.Add("item_count", VarIntSize(uint64_t{shape.stack_items} + 2));
        SizeQ stack{0};
        if (shape.item_lengths.empty()) {
            stack = SizeQ{shape.stack_items} + SizeQ{shape.stack_data_len};
        } else {
            for (uint64_t len : shape.item_lengths) stack += Item(SizeQ{len});
        }
        ret.Add("stack_data", stack);
        ret.Add("script", Item(SizeQ{shape.script_len}));
        ret.Add("control_block", Item(SizeQ{CONTROL_BLOCK_BASE + CONTROL_BLOCK_STEP * shape.merkle_depth}));
        break;
    }
    case InputType::P2PK:
    case InputType::P2PKH:
    case InputType::BARE_MS:
    case InputType::P2SH_MS:
        ret.Add("item_count", VarIntSize(0));
        break;
    }
    return ret;
}

std::string ToString(OutputType type)
{
    switch (type) {
    case OutputType::P2PK: return "p2pk";
    case OutputType::P2PKH: return "p2pkh";
    case OutputType::BARE_MS: return "ms";
    case OutputType::NULL_DATA: return "nulldata";
    case OutputType::P2SH: return "p2sh";
    case OutputType::P2WPKH: return "p2wpkh";
    case OutputType::P2WSH: return "p2wsh";
    case OutputType::P2TR: return "p2tr";
    }
    return "?";
}

std::string ToString(InputType type)
{
    switch (type) {
    case InputType::P2PK: return "p2pk";
    case InputType::P2PKH: return "p2pkh";
    case InputType::BARE_MS: return "ms";
    case InputType::P2SH_MS: return "p2sh-ms";
    case InputType::P2SH_P2WSH_MS: return "p2sh-p2wsh-ms";
    case InputType::P2SH_P2WPKH: return "p2sh-p2wpkh";
    case InputType::P2WPKH: return "p2wpkh";
    case InputType::P2WSH_MS: return "p2wsh-ms";
    case InputType::P2TR_KEYPATH: return "p2tr";
    case InputType::P2TR_SCRIPTPATH: return "p2tr-script";
    }
    return "?";
}

std::string ToString(const OutputSpec& spec)
{
    switch (spec.type) {
    case OutputType::BARE_MS:
        return "ms:" + std::to_string(spec.m) + "/" + std::to_string(spec.n);
    case OutputType::NULL_DATA:
        return "nulldata:" + std::to_string(spec.data_len);
    default:
        return ToString(spec.type);
    }
}

std::string ToString(const InputSpec& spec)
{
    if (IsMultisig(spec.type)) {
        return ToString(spec.type) + ":" + std::to_string(spec.m) + "/" + std::to_string(spec.n);
    }
    if (spec.type == InputType::P2TR_SCRIPTPATH) {
        const TaprootScriptShape& shape = spec.shape;
        std::string ret = "p2tr-script:";
        if (shape.item_lengths.empty()) {
            ret += "items=" + std::to_string(shape.stack_items) + ",data=" + std::to_string(shape.stack_data_len);
        } else {
            ret += "lens=";
            for (size_t i = 0; i < shape.item_lengths.size(); ++i) {
                if (i) ret += '/';
                ret += std::to_string(shape.item_lengths[i]);
            }
        }
        ret += ",script=" + std::to_string(shape.script_len) + ",depth=" + std::to_string(shape.merkle_depth);
        return ret;
    }
    return ToString(spec.type);
}

} // namespace txsize
