// Copyright (c) 2026 The txsize developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef TXSIZE_CLASSIFY_H
#define TXSIZE_CLASSIFY_H

#include <txsize/templates.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace txsize {

using Bytes = std::vector<uint8_t>;

/** Result of matching a locking script against the known templates. */
struct OutputMatch {
    /** Unset when no template matches. */
    std::optional<OutputSpec> spec;

    std::string Label() const;
};

enum class InputClass : uint8_t {
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
    P2WSH_OTHER,      //!< v0 script-hash spend whose witness script is not multisig
    P2SH_P2WSH_OTHER, //!< nested variant of the above
    COINBASE,
    UNKNOWN,
};

/**
 * Result of matching an input. The spent output is not part of the spending
 * transaction, so matching is syntactic and best effort.
 */
struct InputMatch {
    InputClass cls{InputClass::UNKNOWN};
    uint32_t m{0};
    /** 0 when the key count is not revealed (bare multisig spends). */
    uint32_t n{0};
    TaprootScriptShape shape{};

    std::string Label() const;
    /** The equivalent template, when the match pins down every parameter. */
    std::optional<InputSpec> ToSpec() const;
};

OutputMatch ClassifyOutput(std::span<const uint8_t> script);

/** `witness` is empty for inputs without witness data. */
InputMatch ClassifyInput(std::span<const uint8_t> script, std::span<const Bytes> witness = {});

/** Strict DER signature check, including the trailing sighash byte. */
bool IsValidSignatureEncoding(std::span<const uint8_t> sig);
/** 33-byte compressed or 65-byte uncompressed SEC encoding. */
bool IsSecPubKey(std::span<const uint8_t> key);

struct MultisigParams {
    uint32_t m{0};
    uint32_t n{0};
};

/** Matches OP_m <key>... OP_n OP_CHECKMULTISIG with size-minimal encodings. */
std::optional<MultisigParams> MatchMultisig(std::span<const uint8_t> script);

} // namespace txsize

#endif // TXSIZE_CLASSIFY_H
