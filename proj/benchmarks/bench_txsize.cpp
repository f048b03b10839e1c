// Copyright (c) 2026 The txsize developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <txsize/assembler.h>
#include <txsize/classify.h>
#include <txsize/parser.h>
#include <txsize/spec_string.h>

#include <util/fixture.h>

#include <benchmark/benchmark.h>

using namespace txsize;

namespace {

/** P2WPKH, 2-of-3 P2WSH and 2-of-3 P2SH spends to two outputs, serialized byte by byte. */
Bytes SampleTx()
{
    fixture::Signing signing;
    const fixture::TxFixture tx = fixture::BuildTx(
        {InputSpec::Simple(InputType::P2WPKH), InputSpec::Multisig(InputType::P2WSH_MS, 2, 3),
         InputSpec::Multisig(InputType::P2SH_MS, 2, 3)},
        {OutputSpec::Simple(OutputType::P2WPKH), OutputSpec::Simple(OutputType::P2TR)}, signing);
    return fixture::Serialize(tx).total.bytes;
}

void BM_EstimateSimple(benchmark::State& state)
{
    TxTemplate tpl;
    tpl.inputs = {InputSpec::Simple(InputType::P2WPKH)};
    tpl.outputs = {OutputSpec::Simple(OutputType::P2WPKH), OutputSpec::Simple(OutputType::P2TR)};
    for (auto _ : state) benchmark::DoNotOptimize(EstimateTx(tpl));
}
BENCHMARK(BM_EstimateSimple);

void BM_EstimateLarge(benchmark::State& state)
{
    TxTemplate tpl;
    tpl.inputs = ParseInputSpec("p2sh-ms:2/3x" + std::to_string(state.range(0)));
    tpl.outputs = ParseOutputSpec("p2wpkhx" + std::to_string(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(EstimateTx(tpl));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EstimateLarge)->Arg(10)->Arg(300);

void BM_ParseTx(benchmark::State& state)
{
    const Bytes raw = SampleTx();
    for (auto _ : state) benchmark::DoNotOptimize(ParseTx(raw));
    state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(raw.size()));
}
BENCHMARK(BM_ParseTx);

void BM_ClassifyWitnessMultisig(benchmark::State& state)
{
    const ParsedTx tx = ParseTx(SampleTx());
    const ParsedInput& in = tx.inputs[1];
    const std::vector<Bytes>& witness = tx.witnesses[1].items;
    for (auto _ : state) benchmark::DoNotOptimize(ClassifyInput(in.script, witness));
}
BENCHMARK(BM_ClassifyWitnessMultisig);

void BM_DecodeHex(benchmark::State& state)
{
    const std::string hex = EncodeHex(SampleTx());
    for (auto _ : state) benchmark::DoNotOptimize(DecodeHex(hex));
    state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(hex.size()));
}
BENCHMARK(BM_DecodeHex);

} // namespace

BENCHMARK_MAIN();
