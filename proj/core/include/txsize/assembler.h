// Copyright (c) 2026 The txsize developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef TXSIZE_ASSEMBLER_H
#define TXSIZE_ASSEMBLER_H

#include <txsize/sigmodel.h>
#include <txsize/size.h>
#include <txsize/templates.h>

#include <vector>

namespace txsize {

static constexpr uint64_t WITNESS_SCALE_FACTOR{4};

struct TxTemplate {
    std::vector<InputSpec> inputs;
    std::vector<OutputSpec> outputs;
    SizeModel model{};
    Policy policy{};
    /** Permit zero inputs or outputs, e.g. to price a single component. */
    bool allow_empty{false};
};

struct Breakdown {
    ComponentSize overhead;
    std::vector<ComponentSize> inputs;
    std::vector<ComponentSize> outputs;
    /** Empty for transactions without witness data, otherwise one per input. */
    std::vector<ComponentSize> witnesses;
};

/**
 * Size of a whole transaction.
 *
 * base_bytes is everything the legacy serialization contains; witness_bytes
 * is the segwit marker and flag plus every witness field. Real transactions
 * have integer weights; averaged signature models can produce fractional
 * ones, which are kept exact.
 */
struct TxEstimate {
    SizeQ total_bytes;
    SizeQ base_bytes;
    SizeQ witness_bytes;
    SizeQ weight;
    SizeQ vbytes;
    Breakdown breakdown;
};

bool HasWitness(const TxTemplate& tpl);

/** Throws InvalidSpecError for a malformed template or component. */
TxEstimate EstimateTx(const TxTemplate& tpl);

/**
 * EstimateTx, additionally verifying that the breakdown sums to the totals
 * and that the weight identities hold. Throws InternalError otherwise.
 */
TxEstimate Explain(const TxTemplate& tpl);

/** Checks the TxEstimate identities; throws InternalError when one fails. */
void CheckEstimate(const TxEstimate& estimate);

/** Virtual size as charged by relay policy: weight / 4 rounded up. */
uint64_t VBytesCeil(const TxEstimate& estimate);

} // namespace txsize

#endif // TXSIZE_ASSEMBLER_H
