// Copyright (c) 2026 The txsize developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef TXSIZE_CORPUS_H
#define TXSIZE_CORPUS_H

#include <txsize/parser.h>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>

namespace txsize {

/** Observed sizes of one component kind, e.g. "input:p2pkh". */
struct Histogram {
    std::string kind;
    std::map<uint64_t, uint64_t> buckets;
    uint64_t total{0};

    void Add(uint64_t size, uint64_t count = 1);
    void Merge(const Histogram& other);

    friend bool operator==(const Histogram&, const Histogram&) = default;
};

/**
 * Selects which measurements are aggregated. An entry matches either a full
 * key ("input:p2pkh") or a bare kind ("p2pkh", any component). An empty
 * filter accepts everything.
 */
class KindFilter
{
public:
    KindFilter() = default;
    explicit KindFilter(std::set<std::string> kinds) : m_kinds(std::move(kinds)) {}

    bool Accepts(const Measurement& m) const;

private:
    std::set<std::string> m_kinds;
};

/** Histograms keyed by kind. Merging is associative and commutative. */
class HistogramSet
{
public:
    void Add(const Measurement& m);
    void AddTx(const ParsedTx& tx, const KindFilter& filter);
    void Merge(const Histogram& histogram);
    void Merge(const HistogramSet& other);

    const std::map<std::string, Histogram>& All() const { return m_histograms; }
    const Histogram* Find(const std::string& kind) const;
    bool Empty() const { return m_histograms.empty(); }

    friend bool operator==(const HistogramSet&, const HistogramSet&) = default;

private:
    std::map<std::string, Histogram> m_histograms;
};

struct IngestResult {
    HistogramSet histograms;
    uint64_t transactions{0};
    uint64_t skipped{0};
    /** RPC ingestion: heights actually fetched in this run. */
    uint64_t blocks{0};
};

/**
 * Newline-delimited hex transactions. Blank lines are ignored; undecodable
 * lines are counted in `skipped`. Throws IoError if the file cannot be read
 * and CorpusQualityError if more than half the lines are malformed.
 */
IngestResult IngestFile(const std::filesystem::path& path, const KindFilter& filter = {});
IngestResult IngestStream(std::istream& in, const KindFilter& filter = {});

struct RpcEndpoint {
    std::string url;
    std::string user;
    std::string password;
};

struct RetryPolicy {
    int attempts{3};
    std::chrono::milliseconds initial_backoff{1000};
};

struct BlockRange {
    int64_t first{0};
    int64_t last{0};
};

/** Minimal client for a node's JSON-RPC interface over HTTP with basic auth. */
class RpcClient
{
public:
    RpcClient(RpcEndpoint endpoint, RetryPolicy retry = {});

    std::string GetBlockHash(int64_t height);
    /** Serialized block as returned by getblock with verbosity 0. */
    std::string GetBlockHex(const std::string& hash);

    const RpcEndpoint& Endpoint() const { return m_endpoint; }

private:
    /** Returns the JSON "result" member rendered as a string. */
    std::string Call(const std::string& method, const std::string& params_json);

    RpcEndpoint m_endpoint;
    RetryPolicy m_retry;
};

/** Stable identifier of an endpoint URL, stored in checkpoints. */
std::string EndpointFingerprint(const std::string& url);

struct Checkpoint {
    int64_t height{0};
    std::string endpoint_fingerprint;
};

std::optional<Checkpoint> ReadCheckpoint(const std::filesystem::path& path);
/** Writes via a temporary file and rename so a crash never leaves a torn checkpoint. */
void WriteCheckpoint(const std::filesystem::path& path, const Checkpoint& checkpoint);

struct RpcIngestOptions {
    KindFilter filter{};
    std::optional<std::filesystem::path> checkpoint{};
    RetryPolicy retry{};
};

/**
 * Fetches every block in [first, last] and aggregates its transactions.
 * With a checkpoint file for the same endpoint, ingestion resumes at the
 * height after the recorded one; the checkpoint advances after each block.
 * Throws TransportError after exhausting retries and RangeError for
 * heights the node does not have.
 */
IngestResult IngestRpc(const RpcEndpoint& endpoint, BlockRange range, const RpcIngestOptions& options = {});

enum class ExportFormat : uint8_t { CSV, JSON };

/** Parses "csv" or "json"; nullopt otherwise. */
std::optional<ExportFormat> ParseExportFormat(const std::string& name);

/**
 * CSV: "size,count" header then one row per bucket, ascending by size.
 * JSON: {"kind":..,"buckets":[{"size":..,"count":..}],"total":..}.
 */
std::string ExportHistogram(const Histogram& histogram, ExportFormat format);

/** {"transactions":..,"skipped":..,"histograms":[...]} */
std::string ExportResultJson(const IngestResult& result);
/** Reads the document ExportResultJson produces. Throws Error on malformed input. */
IngestResult ImportResultJson(const std::string& json);

} // namespace txsize

#endif // TXSIZE_CORPUS_H
