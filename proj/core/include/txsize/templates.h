// Copyright (c) 2026 The txsize developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef TXSIZE_TEMPLATES_H
#define TXSIZE_TEMPLATES_H

#include <txsize/sigmodel.h>
#include <txsize/size.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace txsize {

static constexpr uint32_t MAX_MULTISIG_KEYS{20};
static constexpr uint32_t MAX_NULLDATA_RELAY{80};
static constexpr uint32_t MAX_TAPROOT_DEPTH{128};

enum class OutputType : uint8_t {
    P2PK,
    P2PKH,
    BARE_MS,
    NULL_DATA,
    P2SH,
    P2WPKH,
    P2WSH,
    P2TR,
};

enum class InputType : uint8_t {
    P2PK,
    P2PKH,
    BARE_MS,
    P2SH_MS,
    P2SH_P2WSH_MS,
    P2SH_P2WPKH,
    P2WPKH,
    P2WSH_MS,
    P2TR_KEYPATH,
    P2TR_SCRIPTPATH,
};

/** Output template. m and n are used by BARE_MS, data_len by NULL_DATA. */
struct OutputSpec {
    OutputType type{OutputType::P2WPKH};
    uint32_t m{0};
    uint32_t n{0};
    uint64_t data_len{0};

    static OutputSpec Simple(OutputType type);
    static OutputSpec BareMultisig(uint32_t m, uint32_t n);
    static OutputSpec NullData(uint64_t data_len);

    friend bool operator==(const OutputSpec&, const OutputSpec&) = default;
};

/**
 * What is revealed when spending a taproot output through a script leaf.
 *
 * Without explicit item_lengths each stack item is assumed to fit a one-byte
 * length varint (<= 252 bytes). Setting item_lengths overrides stack_items and
 * stack_data_len.
 */
struct TaprootScriptShape {
    uint32_t stack_items{0};
    uint64_t stack_data_len{0};
    uint64_t script_len{1};
    uint32_t merkle_depth{0};
    std::vector<uint64_t> item_lengths{};

    static TaprootScriptShape WithItems(std::vector<uint64_t> lengths, uint64_t script_len, uint32_t merkle_depth);

    friend bool operator==(const TaprootScriptShape&, const TaprootScriptShape&) = default;
};

/** Input template. m and n are used by the multisig types, shape by P2TR_SCRIPTPATH. */
struct InputSpec {
    InputType type{InputType::P2WPKH};
    uint32_t m{0};
    uint32_t n{0};
    TaprootScriptShape shape{};

    static InputSpec Simple(InputType type);
    static InputSpec Multisig(InputType type, uint32_t m, uint32_t n);
    static InputSpec TaprootScript(TaprootScriptShape shape);

    friend bool operator==(const InputSpec&, const InputSpec&) = default;
};

/** Relay policy knobs that affect validity, not size. */
struct Policy {
    uint64_t max_nulldata_len{MAX_NULLDATA_RELAY};
};

/** A size with a labelled breakdown. Detail entries always sum to total. */
class ComponentSize
{
public:
    ComponentSize() = default;
    explicit ComponentSize(std::string kind) : m_kind(std::move(kind)) {}

    void Add(std::string label, const SizeQ& size);

    const std::string& Kind() const { return m_kind; }
    const SizeQ& Total() const { return m_total; }
    const std::vector<std::pair<std::string, SizeQ>>& Detail() const { return m_detail; }

private:
    std::string m_kind;
    SizeQ m_total{};
    std::vector<std::pair<std::string, SizeQ>> m_detail;
};

bool IsMultisig(InputType type);
/** True for input types whose satisfaction data lives in the witness. */
bool SpendsWitness(InputType type);

/** Throws InvalidSpecError when the spec's parameters are out of range. */
void CheckOutputSpec(const OutputSpec& spec, const Policy& policy = {});
void CheckInputSpec(const InputSpec& spec);

/** Locking script length (excluding its own length varint). */
SizeQ LockingScriptSize(const OutputSpec& spec, const SizeModel& model);
/** Unlocking script length (excluding its own length varint). */
SizeQ UnlockingScriptSize(const InputSpec& spec, const SizeModel& model);
/** OP_m <keys> OP_n OP_CHECKMULTISIG, used as redeem and witness script. */
SizeQ MultisigScriptSize(uint32_t m, uint32_t n, const SizeModel& model);

/** amount + script length varint + locking script. */
ComponentSize OutputSize(const OutputSpec& spec, const SizeModel& model, const Policy& policy = {});
/** outpoint + sequence + script length varint + unlocking script. */
ComponentSize InputSize(const InputSpec& spec, const SizeModel& model);
/**
 * Witness field of the input. Input types without witness data yield the
 * one-byte empty witness (item count 0) every input carries in a segwit
 * transaction.
 */
ComponentSize WitnessSize(const InputSpec& spec, const SizeModel& model);

std::string ToString(OutputType type);
std::string ToString(InputType type);
std::string ToString(const OutputSpec& spec);
std::string ToString(const InputSpec& spec);

} // namespace txsize

#endif // TXSIZE_TEMPLATES_H
