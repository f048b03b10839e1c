// Copyright (c) 2026 The txsize developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef TXSIZE_SPEC_STRING_H
#define TXSIZE_SPEC_STRING_H

#include <txsize/sigmodel.h>
#include <txsize/templates.h>

#include <string>
#include <vector>

namespace txsize {

/**
 * Textual component descriptors, shared by the command line and bindings:
 *
 *   p2pk  p2pkh  p2wpkh  p2sh-p2wpkh  p2tr
 *   ms:M/N  p2sh-ms:M/N  p2sh-p2wsh-ms:M/N  p2wsh-ms:M/N
 *   p2tr-script:items=I,data=D,script=S,depth=K
 *   p2tr-script:lens=L1/L2/...,script=S,depth=K
 *   nulldata:LEN            (outputs only)
 *   p2sh  p2wsh             (outputs only)
 *
 * Any descriptor may carry a repetition suffix xCOUNT, e.g. p2wpkhx3.
 * Output descriptors for script-hash spends map to the output they spend
 * from, so "p2sh-ms:2/3" as an output is a P2SH output. Errors throw
 * InvalidSpecError naming the offending token.
 */
std::vector<InputSpec> ParseInputSpec(const std::string& text);
std::vector<OutputSpec> ParseOutputSpec(const std::string& text);

/**
 * ECDSA signature model names: average (default),
 * low-r, low-s, legacy (alias conservative), fixed:K.
 */
EcdsaSigModel ParseSigModel(const std::string& text);
PubKeyEncoding ParsePubKeyEncoding(const std::string& text);
SchnorrSighash ParseSchnorrSighash(const std::string& text);

} // namespace txsize

#endif // TXSIZE_SPEC_STRING_H
