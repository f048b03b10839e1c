// Copyright (c) 2026 The txsize developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <txsize/assembler.h>

#include <txsize/encoding.h>
#include <txsize/errors.h>

#include <algorithm>

namespace txsize {

bool HasWitness(const TxTemplate& tpl)
{
    return std::any_of(tpl.inputs.begin(), tpl.inputs.end(),
                       [](const InputSpec& in) { return SpendsWitness(in.type); });
}

TxEstimate EstimateTx(const TxTemplate& tpl)
{
    if (!tpl.allow_empty && (tpl.inputs.empty() || tpl.outputs.empty())) {
        throw InvalidSpecError("a transaction needs at least one input and one output");
    }

    TxEstimate ret;
    Breakdown& parts = ret.breakdown;
    const bool segwit = HasWitness(tpl);

    parts.overhead = ComponentSize{"overhead"};
    parts.overhead.Add("version", SizeQ{4});
    if (segwit) {
        parts.overhead.Add("marker", SizeQ{1});
        parts.overhead.Add("flag", SizeQ{1});
    }
    parts.overhead.Add("input_count", VarIntSize(tpl.inputs.size()));
    parts.overhead.Add("output_count", VarIntSize(tpl.outputs.size()));
    parts.overhead.Add("locktime", SizeQ{4});

    SizeQ base = parts.overhead.Total();
    SizeQ witness{0};
    if (segwit) {
        base -= SizeQ{2};
        witness += SizeQ{2};
    }

    parts.inputs.reserve(tpl.inputs.size());
    for (const InputSpec& in : tpl.inputs) {
        parts.inputs.push_back(InputSize(in, tpl.model));
        base += parts.inputs.back().Total();
    }
    parts.outputs.reserve(tpl.outputs.size());
    for (const OutputSpec& out : tpl.outputs) {
        parts.outputs.push_back(OutputSize(out, tpl.model, tpl.policy));
        base += parts.outputs.back().Total();
    }
    if (segwit) {
        parts.witnesses.reserve(tpl.inputs.size());
        for (const InputSpec& in : tpl.inputs) {
            parts.witnesses.push_back(WitnessSize(in, tpl.model));
            witness += parts.witnesses.back().Total();
        }
    }

    ret.base_bytes = base;
    ret.witness_bytes = witness;
    ret.total_bytes = base + witness;
    ret.weight = WITNESS_SCALE_FACTOR * base + witness;
    ret.vbytes = ret.weight.DivideExact(WITNESS_SCALE_FACTOR);
    return ret;
}

void CheckEstimate(const TxEstimate& est)
{
    const Breakdown& parts = est.breakdown;
    SizeQ sum = parts.overhead.Total();
    for (const auto* list : {&parts.inputs, &parts.outputs, &parts.witnesses}) {
        for (const ComponentSize& c : *list) {
            SizeQ detail{0};
            for (const auto& [label, size] : c.Detail()) detail += size;
            if (detail != c.Total()) throw InternalError("component detail does not sum to its total");
            sum += c.Total();
        }
    }
    if (sum != est.total_bytes) throw InternalError("breakdown does not sum to total bytes");
    if (est.base_bytes + est.witness_bytes != est.total_bytes) throw InternalError("base + witness != total");
    if (WITNESS_SCALE_FACTOR * est.base_bytes + est.witness_bytes != est.weight) throw InternalError("weight identity violated");
    if (WITNESS_SCALE_FACTOR * est.vbytes != est.weight) throw InternalError("vbytes != weight / 4");
    if (parts.witnesses.empty() && est.witness_bytes != SizeQ{0}) throw InternalError("witness bytes without witnesses");
}

TxEstimate Explain(const TxTemplate& tpl)
{
    TxEstimate ret = EstimateTx(tpl);
    CheckEstimate(ret);
    return ret;
}

uint64_t VBytesCeil(const TxEstimate& estimate)
{
    return estimate.vbytes.Ceil();
}

} // namespace txsize
