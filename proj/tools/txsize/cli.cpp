// Copyright (c) 2026 The txsize developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "cli.h"

#include <txsize/assembler.h>
#include <txsize/corpus.h>
#include <txsize/encoding.h>
#include <txsize/errors.h>
#include <txsize/parser.h>
#include <txsize/spec_string.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace txsize::cli {
namespace {

using json = nlohmann::ordered_json;

/** A problem with the user's input, reported with exit code 2. */
class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/** Integers stay integers; fractions are exact binary values, so they print exactly. */
json Number(const SizeQ& size)
{
    if (size.IsInteger()) return size.Floor();
    return size.ToDouble();
}

struct EstimateOptions {
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::string sig_model{"average"};
    std::string pubkey{"compressed"};
    std::string schnorr{"default"};
    std::string vbytes_mode{"exact"};
    bool allow_large_nulldata{false};
    bool json{false};
};

struct ParseOptions {
    std::string file;
    bool json{false};
};

struct CorpusOptions {
    std::string file;
    std::vector<std::string> kinds;
    std::string out;
    int64_t from{0};
    int64_t to{0};
    std::string checkpoint;
    int retries{3};
    int backoff_ms{1000};
    std::string format;
    std::string kind;
};

void AddEstimateOptions(CLI::App& cmd, EstimateOptions& opts)
{
    cmd.add_option("-i,--input", opts.inputs, "Input descriptor, repeatable (e.g. p2wpkh, p2sh-ms:2/3, p2pkhx2)")->required();
    cmd.add_option("-o,--output", opts.outputs, "Output descriptor, repeatable (e.g. p2tr, nulldata:20)")->required();
    cmd.add_option("--sig-model", opts.sig_model, "ECDSA signature size: average, low-r, low-s, conservative, fixed:K")
        ->capture_default_str();
    cmd.add_option("--pubkey", opts.pubkey, "Public key encoding: compressed, uncompressed")->capture_default_str();
    cmd.add_option("--schnorr-sighash", opts.schnorr, "Schnorr signature sighash: default, custom")->capture_default_str();
    cmd.add_option("--vbytes-mode", opts.vbytes_mode, "Virtual size: exact or ceil")
        ->check(CLI::IsMember({"exact", "ceil"}))
        ->capture_default_str();
    cmd.add_flag("--allow-large-nulldata", opts.allow_large_nulldata, "Permit null data payloads above 80 bytes");
    cmd.add_flag("--json", opts.json, "Machine-readable output");
}

TxTemplate BuildTemplate(const EstimateOptions& opts)
{
    TxTemplate tpl;
    for (const std::string& token : opts.inputs) {
        for (InputSpec& spec : ParseInputSpec(token)) tpl.inputs.push_back(std::move(spec));
    }
    for (const std::string& token : opts.outputs) {
        for (OutputSpec& spec : ParseOutputSpec(token)) tpl.outputs.push_back(std::move(spec));
    }
    tpl.model.ecdsa = ParseSigModel(opts.sig_model);
    tpl.model.pubkey = ParsePubKeyEncoding(opts.pubkey);
    tpl.model.schnorr = ParseSchnorrSighash(opts.schnorr);
    if (opts.allow_large_nulldata) tpl.policy.max_nulldata_len = MAX_PUSH_LENGTH;
    return tpl;
}

json ComponentJson(const ComponentSize& c, const std::string& spec, bool detail)
{
    json ret;
    if (!spec.empty()) ret["spec"] = spec;
    ret["kind"] = c.Kind();
    ret["size"] = Number(c.Total());
    if (detail) {
        json items = json::array();
        for (const auto& [label, size] : c.Detail()) items.push_back(json{{"label", label}, {"size", Number(size)}});
        ret["detail"] = std::move(items);
    }
    return ret;
}

json EstimateJson(const TxTemplate& tpl, const TxEstimate& est, const EstimateOptions& opts, bool detail)
{
    const bool ceil = opts.vbytes_mode == "ceil";
    json inputs = json::array();
    for (std::size_t i = 0; i < est.breakdown.inputs.size(); ++i) {
        inputs.push_back(ComponentJson(est.breakdown.inputs[i], ToString(tpl.inputs[i]), detail));
    }
    json outputs = json::array();
    for (std::size_t i = 0; i < est.breakdown.outputs.size(); ++i) {
        outputs.push_back(ComponentJson(est.breakdown.outputs[i], ToString(tpl.outputs[i]), detail));
    }
    json witnesses = json::array();
    for (std::size_t i = 0; i < est.breakdown.witnesses.size(); ++i) {
        witnesses.push_back(ComponentJson(est.breakdown.witnesses[i], ToString(tpl.inputs[i]), detail));
    }
    json ret;
    ret["total_bytes"] = Number(est.total_bytes);
    ret["base_bytes"] = Number(est.base_bytes);
    ret["witness_bytes"] = Number(est.witness_bytes);
    ret["weight"] = Number(est.weight);
    ret["vbytes"] = ceil ? json(VBytesCeil(est)) : Number(est.vbytes);
    ret["vbytes_mode"] = opts.vbytes_mode;
    ret["model"] = json{{"ecdsa", ToString(tpl.model.ecdsa)},
                        {"pubkey", ToString(tpl.model.pubkey)},
                        {"schnorr", ToString(tpl.model.schnorr)}};
    ret["breakdown"] = json{{"overhead", ComponentJson(est.breakdown.overhead, "", detail)},
                            {"inputs", std::move(inputs)},
                            {"outputs", std::move(outputs)},
                            {"witnesses", std::move(witnesses)}};
    return ret;
}

void PrintRow(std::ostream& out, const std::string& label, const std::string& value, int indent = 0)
{
    out << std::string(indent, ' ') << std::left << std::setw(28 - indent) << label << std::right << std::setw(12) << value
        << "\n";
}

void PrintComponent(std::ostream& out, const std::string& title, const ComponentSize& c, bool detail)
{
    PrintRow(out, title, c.Total().ToString());
    if (!detail) return;
    for (const auto& [label, size] : c.Detail()) PrintRow(out, label, size.ToString(), 2);
}

void PrintEstimate(std::ostream& out, const TxTemplate& tpl, const TxEstimate& est, const EstimateOptions& opts, bool detail)
{
    const bool ceil = opts.vbytes_mode == "ceil";
    if (detail) {
        PrintComponent(out, "overhead", est.breakdown.overhead, true);
        for (std::size_t i = 0; i < tpl.inputs.size(); ++i) {
            PrintComponent(out, "input " + std::to_string(i) + " " + ToString(tpl.inputs[i]), est.breakdown.inputs[i], true);
        }
        for (std::size_t i = 0; i < tpl.outputs.size(); ++i) {
            PrintComponent(out, "output " + std::to_string(i) + " " + ToString(tpl.outputs[i]), est.breakdown.outputs[i], true);
        }
        for (std::size_t i = 0; i < est.breakdown.witnesses.size(); ++i) {
            PrintComponent(out, "witness " + std::to_string(i) + " " + ToString(tpl.inputs[i]), est.breakdown.witnesses[i], true);
        }
        out << "\n";
    }
    PrintRow(out, "total bytes", est.total_bytes.ToString());
    PrintRow(out, "base bytes", est.base_bytes.ToString());
    PrintRow(out, "witness bytes", est.witness_bytes.ToString());
    PrintRow(out, "weight (WU)", est.weight.ToString());
    PrintRow(out, ceil ? "virtual bytes (ceil)" : "virtual bytes", ceil ? std::to_string(VBytesCeil(est)) : est.vbytes.ToString());
}

int CmdEstimate(const EstimateOptions& opts, std::ostream& out, bool detail)
{
    const TxTemplate tpl = BuildTemplate(opts);
    const TxEstimate est = Explain(tpl);
    if (opts.json) {
        out << EstimateJson(tpl, est, opts, detail).dump(2) << "\n";
    } else {
        PrintEstimate(out, tpl, est, opts, detail);
    }
    return EXIT_OK;
}

std::string ReadSource(const std::string& file, std::istream& in)
{
    std::ostringstream buf;
    if (file == "-") {
        buf << in.rdbuf();
        if (in.bad()) throw IoError("cannot read standard input");
    } else {
        std::ifstream f{file};
        if (!f) throw IoError("cannot open " + file);
        buf << f.rdbuf();
    }
    return buf.str();
}

std::string TxidHex(const std::array<uint8_t, 32>& txid)
{
    // Displayed in the conventional reversed byte order.
    std::array<uint8_t, 32> reversed;
    std::reverse_copy(txid.begin(), txid.end(), reversed.begin());
    return EncodeHex(reversed);
}

json ParsedJson(const ParsedTx& tx)
{
    json inputs = json::array();
    for (const ParsedInput& in : tx.inputs) {
        inputs.push_back(json{{"txid", TxidHex(in.prev_txid)},
                              {"vout", in.prev_position},
                              {"sequence", in.sequence},
                              {"kind", in.match.Label()},
                              {"script_size", in.script.size()},
                              {"size", in.size}});
    }
    json outputs = json::array();
    for (const ParsedOutput& o : tx.outputs) {
        outputs.push_back(json{{"amount", o.amount},
                               {"kind", o.match.Label()},
                               {"script", EncodeHex(o.script)},
                               {"size", o.size}});
    }
    json witnesses = json::array();
    for (std::size_t i = 0; i < tx.witnesses.size(); ++i) {
        const ParsedWitness& w = tx.witnesses[i];
        witnesses.push_back(json{{"kind", w.items.empty() ? std::string{"empty"} : tx.inputs[i].match.Label()},
                                 {"items", w.items.size()},
                                 {"size", w.size}});
    }
    json ret;
    ret["version"] = tx.version;
    ret["segwit"] = tx.segwit;
    ret["locktime"] = tx.locktime;
    ret["total_size"] = tx.total_size;
    ret["base_size"] = tx.base_size;
    ret["witness_size"] = tx.total_size - tx.base_size;
    ret["weight"] = tx.weight;
    ret["vbytes"] = Number(SizeQ{tx.weight}.DivideExact(WITNESS_SCALE_FACTOR));
    ret["inputs"] = std::move(inputs);
    ret["outputs"] = std::move(outputs);
    ret["witnesses"] = std::move(witnesses);
    return ret;
}

int CmdParse(const ParseOptions& opts, std::istream& in, std::ostream& out)
{
    const ParsedTx tx = ParseTxHex(ReadSource(opts.file, in));
    if (opts.json) {
        out << ParsedJson(tx).dump(2) << "\n";
        return EXIT_OK;
    }
    PrintRow(out, "segwit", tx.segwit ? "yes" : "no");
    PrintRow(out, "total bytes", std::to_string(tx.total_size));
    PrintRow(out, "base bytes", std::to_string(tx.base_size));
    PrintRow(out, "weight (WU)", std::to_string(tx.weight));
    PrintRow(out, "virtual bytes", SizeQ{tx.weight}.DivideExact(WITNESS_SCALE_FACTOR).ToString());
    for (const Measurement& m : Measure(tx)) PrintRow(out, m.Key(), std::to_string(m.size));
    return EXIT_OK;
}

void WriteOutput(const std::string& path, const std::string& content, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << content;
        return;
    }
    std::ofstream f{path, std::ios::trunc};
    if (!f || !(f << content) || !f.flush()) throw IoError("cannot write " + path);
}

KindFilter Filter(const std::vector<std::string>& kinds) { return KindFilter{{kinds.begin(), kinds.end()}}; }

int CmdIngestFile(const CorpusOptions& opts, std::istream& in, std::ostream& out, std::ostream& err)
{
    IngestResult res;
    if (opts.file == "-") {
        res = IngestStream(in, Filter(opts.kinds));
    } else {
        res = IngestFile(opts.file, Filter(opts.kinds));
    }
    if (res.skipped > 0) err << "warning: skipped " << res.skipped << " malformed line(s)\n";
    WriteOutput(opts.out, ExportResultJson(res), out);
    return EXIT_OK;
}

int CmdIngestRpc(const CorpusOptions& opts, std::ostream& out, std::ostream& err, const GetEnv& env)
{
    const auto url = env("TXSIZE_RPC_URL");
    if (!url || url->empty()) throw UsageError("TXSIZE_RPC_URL is not set");
    RpcEndpoint endpoint{*url, env("TXSIZE_RPC_USER").value_or(""), env("TXSIZE_RPC_PASS").value_or("")};
    if (opts.retries < 1) throw UsageError("--retries must be at least 1");
    if (opts.backoff_ms < 0) throw UsageError("--backoff-ms must not be negative");

    RpcIngestOptions options;
    options.filter = Filter(opts.kinds);
    if (!opts.checkpoint.empty()) options.checkpoint = opts.checkpoint;
    options.retry.attempts = opts.retries;
    options.retry.initial_backoff = std::chrono::milliseconds{opts.backoff_ms};
    const IngestResult res = IngestRpc(endpoint, {opts.from, opts.to}, options);
    err << "fetched " << res.blocks << " block(s), " << res.transactions << " transaction(s)\n";
    WriteOutput(opts.out, ExportResultJson(res), out);
    return EXIT_OK;
}

int CmdExport(const CorpusOptions& opts, std::istream& in, std::ostream& out)
{
    const auto format = ParseExportFormat(opts.format);
    if (!format) throw UsageError("unknown export format '" + opts.format + "'; valid: csv, json");
    const IngestResult res = ImportResultJson(ReadSource(opts.file, in));
    const Histogram* h = res.histograms.Find(opts.kind);
    Histogram empty;
    if (!h) {
        empty.kind = opts.kind;
        h = &empty;
    }
    WriteOutput(opts.out, ExportHistogram(*h, *format), out);
    return EXIT_OK;
}

} // namespace

std::optional<std::string> ProcessEnv(const std::string& name)
{
    const char* value = std::getenv(name.c_str());
    if (!value) return std::nullopt;
    return std::string{value};
}

int Run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err, const GetEnv& env)
{
    CLI::App app{"Bitcoin transaction size estimator", "txsize"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "txsize 1.0.0");

    EstimateOptions estimate_opts;
    CLI::App* estimate = app.add_subcommand("estimate", "Estimate the size of a transaction template");
    AddEstimateOptions(*estimate, estimate_opts);

    EstimateOptions explain_opts;
    CLI::App* explain = app.add_subcommand("explain", "Estimate with a per-field breakdown of every component");
    AddEstimateOptions(*explain, explain_opts);

    ParseOptions parse_opts;
    CLI::App* parse = app.add_subcommand("parse", "Decode a serialized transaction given as hex");
    parse->add_option("file", parse_opts.file, "File with the transaction hex, or - for standard input")->required();
    parse->add_flag("--json", parse_opts.json, "Machine-readable output");

    CorpusOptions corpus_opts;
    CLI::App* corpus = app.add_subcommand("corpus", "Aggregate observed component sizes into histograms");
    corpus->require_subcommand(1);
    CLI::App* ingest_file = corpus->add_subcommand("ingest-file", "Ingest newline-delimited transaction hex");
    ingest_file->add_option("file", corpus_opts.file, "Corpus file, or - for standard input")->required();
    ingest_file->add_option("--kind", corpus_opts.kinds, "Only aggregate these kinds (input:p2pkh or p2pkh), repeatable");
    ingest_file->add_option("--out", corpus_opts.out, "Write the histogram document here instead of standard output");

    CLI::App* ingest_rpc = corpus->add_subcommand(
        "ingest-rpc", "Ingest a block range from a node; endpoint from TXSIZE_RPC_URL, TXSIZE_RPC_USER, TXSIZE_RPC_PASS");
    ingest_rpc->add_option("--from", corpus_opts.from, "First block height")->required();
    ingest_rpc->add_option("--to", corpus_opts.to, "Last block height (inclusive)")->required();
    ingest_rpc->add_option("--checkpoint", corpus_opts.checkpoint, "Resume from and record progress in this file");
    ingest_rpc->add_option("--kind", corpus_opts.kinds, "Only aggregate these kinds, repeatable");
    ingest_rpc->add_option("--retries", corpus_opts.retries, "Attempts per request")->capture_default_str();
    ingest_rpc->add_option("--backoff-ms", corpus_opts.backoff_ms, "Initial retry backoff, doubled per retry")->capture_default_str();
    ingest_rpc->add_option("--out", corpus_opts.out, "Write the histogram document here instead of standard output");

    CLI::App* export_cmd = corpus->add_subcommand("export", "Export one histogram of an ingested document");
    export_cmd->add_option("file", corpus_opts.file, "Histogram document from ingest-file or ingest-rpc, or -")->required();
    export_cmd->add_option("--kind", corpus_opts.kind, "Histogram to export, e.g. input:p2pkh")->required();
    export_cmd->add_option("--format", corpus_opts.format, "csv or json")->required();
    export_cmd->add_option("--out", corpus_opts.out, "Write here instead of standard output");

    std::vector<const char*> argv{"txsize"};
    for (const std::string& arg : args) argv.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? EXIT_OK : EXIT_USAGE;
    }

    try {
        if (*estimate) return CmdEstimate(estimate_opts, out, /*detail=*/false);
        if (*explain) return CmdEstimate(explain_opts, out, /*detail=*/true);
        if (*parse) return CmdParse(parse_opts, in, out);
        if (*ingest_file) return CmdIngestFile(corpus_opts, in, out, err);
        if (*ingest_rpc) return CmdIngestRpc(corpus_opts, out, err, env);
        if (*export_cmd) return CmdExport(corpus_opts, in, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return EXIT_INTERNAL;
    }
    err << "internal error: no command ran\n";
    return EXIT_INTERNAL;
}

} // namespace txsize::cli
