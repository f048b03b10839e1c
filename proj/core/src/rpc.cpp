// Copyright (c) 2026 The txsize developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <txsize/corpus.h>

#include <txsize/errors.h>

#include <httplib.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

namespace txsize {
namespace {

using json = nlohmann::json;

/** JSON-RPC error codes a node uses for unknown heights and hashes. */
constexpr int RPC_INVALID_PARAMETER{-8};
constexpr int RPC_INVALID_ADDRESS_OR_KEY{-5};

struct ParsedUrl {
    std::string host;
    int port{8332};
    std::string path{"/"};
};

ParsedUrl ParseUrl(const std::string& url)
{
    std::string rest = url;
    const auto scheme_end = rest.find("://");
    if (scheme_end != std::string::npos) {
        const std::string scheme = rest.substr(0, scheme_end);
        if (scheme != "http") throw TransportError("unsupported RPC URL scheme '" + scheme + "', use http");
        rest = rest.substr(scheme_end + 3);
    }
    ParsedUrl ret;
    const auto slash = rest.find('/');
    if (slash != std::string::npos) {
        ret.path = rest.substr(slash);
        rest = rest.substr(0, slash);
    }
    const auto colon = rest.rfind(':');
    if (colon != std::string::npos) {
        try {
            ret.port = std::stoi(rest.substr(colon + 1));
        } catch (const std::exception&) {
            throw TransportError("invalid port in RPC URL " + url);
        }
        rest = rest.substr(0, colon);
    }
    if (rest.empty()) throw TransportError("missing host in RPC URL " + url);
    ret.host = rest;
    return ret;
}

} // namespace

RpcClient::RpcClient(RpcEndpoint endpoint, RetryPolicy retry)
    : m_endpoint(std::move(endpoint)), m_retry(retry)
{
    ParseUrl(m_endpoint.url);
}

std::string RpcClient::Call(const std::string& method, const std::string& params_json)
{
    const ParsedUrl url = ParseUrl(m_endpoint.url);
    const std::string body = json{{"jsonrpc", "1.0"}, {"id", "txsize"}, {"method", method}, {"params", json::parse(params_json)}}.dump();

    std::string last_failure;
    auto backoff = m_retry.initial_backoff;
    for (int attempt = 1; attempt <= m_retry.attempts; ++attempt) {
        httplib::Client client{url.host, url.port};
        client.set_connection_timeout(std::chrono::seconds{5});
        client.set_read_timeout(std::chrono::seconds{60});
        if (!m_endpoint.user.empty() || !m_endpoint.password.empty()) {
            client.set_basic_auth(m_endpoint.user, m_endpoint.password);
        }
        auto res = client.Post(url.path, body, "application/json");
        if (!res) {
            last_failure = "connection to " + url.host + ":" + std::to_string(url.port) + " failed: " + httplib::to_string(res.error());
        } else if (res->status == 401 || res->status == 403) {
            last_failure = "authentication rejected (HTTP " + std::to_string(res->status) + ")";
        } else {
            json reply = json::parse(res->body, nullptr, /*allow_exceptions=*/false);
            if (reply.is_object() && reply.contains("error") && !reply["error"].is_null()) {
                const json& err = reply["error"];
                const int code = err.value("code", 0);
                const std::string message = err.value("message", std::string{"unknown error"});
                if (code == RPC_INVALID_PARAMETER || code == RPC_INVALID_ADDRESS_OR_KEY) {
                    throw RangeError(method + ": " + message);
                }
                throw Error(method + " failed with code " + std::to_string(code) + ": " + message);
            }
            if (res->status == 200 && reply.is_object() && reply.contains("result")) {
                const json& result = reply["result"];
                return result.is_string() ? result.get<std::string>() : result.dump();
            }
            last_failure = "unexpected HTTP " + std::to_string(res->status) + " reply";
        }
        if (attempt < m_retry.attempts) {
            std::this_thread::sleep_for(backoff);
            backoff *= 2;
        }
    }
    throw TransportError(method + ": " + last_failure + " after " + std::to_string(m_retry.attempts) + " attempts");
}

std::string RpcClient::GetBlockHash(int64_t height)
{
    return Call("getblockhash", "[" + std::to_string(height) + "]");
}

std::string RpcClient::GetBlockHex(const std::string& hash)
{
    return Call("getblock", json::array({hash, 0}).dump());
}

std::string EndpointFingerprint(const std::string& url)
{
    // FNV-1a, stable across platforms and runs.
    uint64_t hash{0xcbf29ce484222325};
    for (unsigned char c : url) {
        hash ^= c;
        hash *= 0x100000001b3;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

std::optional<Checkpoint> ReadCheckpoint(const std::filesystem::path& path)
{
    std::ifstream file{path};
    if (!file) return std::nullopt;
    std::stringstream buf;
    buf << file.rdbuf();
    try {
        const json doc = json::parse(buf.str());
        return Checkpoint{doc.at("height").get<int64_t>(), doc.at("endpoint-fingerprint").get<std::string>()};
    } catch (const json::exception& e) {
        throw Error("malformed checkpoint " + path.string() + ": " + e.what());
    }
}

void WriteCheckpoint(const std::filesystem::path& path, const Checkpoint& checkpoint)
{
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream file{tmp, std::ios::trunc};
        if (!file) throw IoError("cannot write checkpoint " + tmp.string());
        file << json{{"height", checkpoint.height}, {"endpoint-fingerprint", checkpoint.endpoint_fingerprint}}.dump() << "\n";
        if (!file.flush()) throw IoError("cannot write checkpoint " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("cannot replace checkpoint " + path.string() + ": " + ec.message());
}

IngestResult IngestRpc(const RpcEndpoint& endpoint, BlockRange range, const RpcIngestOptions& options)
{
    if (range.first < 0 || range.first > range.last) {
        throw RangeError("invalid block range [" + std::to_string(range.first) + ", " + std::to_string(range.last) + "]");
    }
    const std::string fingerprint = EndpointFingerprint(endpoint.url);
    int64_t start = range.first;
    if (options.checkpoint) {
        if (auto cp = ReadCheckpoint(*options.checkpoint)) {
            if (cp->endpoint_fingerprint != fingerprint) {
                throw Error("checkpoint " + options.checkpoint->string() + " belongs to a different endpoint");
            }
            start = std::max(start, cp->height + 1);
        }
    }

    RpcClient client{endpoint, options.retry};
    IngestResult ret;
    for (int64_t height = start; height <= range.last; ++height) {
        const std::string hash = client.GetBlockHash(height);
        const Bytes block = DecodeHex(client.GetBlockHex(hash));
        for (const ParsedTx& tx : ParseBlock(block)) {
            ret.histograms.AddTx(tx, options.filter);
            ++ret.transactions;
        }
        ++ret.blocks;
        if (options.checkpoint) WriteCheckpoint(*options.checkpoint, {height, fingerprint});
    }
    return ret;
}

} // namespace txsize
