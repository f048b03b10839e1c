// Copyright (c) 2026 The txsize developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <txsize/corpus.h>

#include <txsize/errors.h>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace txsize {

using json = nlohmann::ordered_json;

void Histogram::Add(uint64_t size, uint64_t count)
{
    buckets[size] += count;
    total += count;
}

void Histogram::Merge(const Histogram& other)
{
    for (const auto& [size, count] : other.buckets) Add(size, count);
}

bool KindFilter::Accepts(const Measurement& m) const
{
    return m_kinds.empty() || m_kinds.count(m.Key()) || m_kinds.count(m.kind);
}

void HistogramSet::Add(const Measurement& m)
{
    const std::string key = m.Key();
    auto [it, inserted] = m_histograms.try_emplace(key);
    if (inserted) it->second.kind = key;
    it->second.Add(m.size);
}

void HistogramSet::AddTx(const ParsedTx& tx, const KindFilter& filter)
{
    for (const Measurement& m : Measure(tx)) {
        if (filter.Accepts(m)) Add(m);
    }
}

void HistogramSet::Merge(const Histogram& histogram)
{
    auto [it, inserted] = m_histograms.try_emplace(histogram.kind);
    if (inserted) it->second.kind = histogram.kind;
    it->second.Merge(histogram);
}

void HistogramSet::Merge(const HistogramSet& other)
{
    for (const auto& [key, hist] : other.m_histograms) Merge(hist);
}

const Histogram* HistogramSet::Find(const std::string& kind) const
{
    auto it = m_histograms.find(kind);
    return it == m_histograms.end() ? nullptr : &it->second;
}

IngestResult IngestStream(std::istream& in, const KindFilter& filter)
{
    IngestResult ret;
    std::string line;
    uint64_t lines{0};
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        ++lines;
        try {
            ret.histograms.AddTx(ParseTxHex(line), filter);
            ++ret.transactions;
        } catch (const ParseError&) {
            ++ret.skipped;
        }
    }
    if (in.bad()) throw IoError("error while reading corpus");
    if (ret.skipped * 2 > lines) {
        throw CorpusQualityError(std::to_string(ret.skipped) + " of " + std::to_string(lines) +
                                 " corpus lines are not decodable transactions");
    }
    return ret;
}

IngestResult IngestFile(const std::filesystem::path& path, const KindFilter& filter)
{
    std::ifstream file{path};
    if (!file) throw IoError("cannot open corpus file " + path.string());
    return IngestStream(file, filter);
}

std::optional<ExportFormat> ParseExportFormat(const std::string& name)
{
    if (name == "csv") return ExportFormat::CSV;
    if (name == "json") return ExportFormat::JSON;
    return std::nullopt;
}

namespace {

json HistogramToJson(const Histogram& h)
{
    json buckets = json::array();
    for (const auto& [size, count] : h.buckets) {
        buckets.push_back(json{{"size", size}, {"count", count}});
    }
    return json{{"kind", h.kind}, {"buckets", std::move(buckets)}, {"total", h.total}};
}

Histogram HistogramFromJson(const json& j)
{
    Histogram h;
    h.kind = j.at("kind").get<std::string>();
    for (const json& b : j.at("buckets")) {
        h.Add(b.at("size").get<uint64_t>(), b.at("count").get<uint64_t>());
    }
    if (h.total != j.at("total").get<uint64_t>()) {
        throw Error("histogram " + h.kind + " total does not match its buckets");
    }
    return h;
}

} // namespace

std::string ExportHistogram(const Histogram& histogram, ExportFormat format)
{
    if (format == ExportFormat::JSON) return HistogramToJson(histogram).dump() + "\n";
    std::ostringstream out;
    out << "size,count\n";
    for (const auto& [size, count] : histogram.buckets) out << size << ',' << count << '\n';
    return out.str();
}

std::string ExportResultJson(const IngestResult& result)
{
    json hists = json::array();
    for (const auto& [key, h] : result.histograms.All()) hists.push_back(HistogramToJson(h));
    json doc{{"transactions", result.transactions},
             {"skipped", result.skipped},
             {"blocks", result.blocks},
             {"histograms", std::move(hists)}};
    return doc.dump(2) + "\n";
}

IngestResult ImportResultJson(const std::string& text)
{
    IngestResult ret;
    try {
        const json doc = json::parse(text);
        ret.transactions = doc.value("transactions", uint64_t{0});
        ret.skipped = doc.value("skipped", uint64_t{0});
        ret.blocks = doc.value("blocks", uint64_t{0});
        for (const json& h : doc.at("histograms")) ret.histograms.Merge(HistogramFromJson(h));
    } catch (const json::exception& e) {
        throw Error(std::string{"malformed histogram document: "} + e.what());
    }
    return ret;
}

} // namespace txsize
