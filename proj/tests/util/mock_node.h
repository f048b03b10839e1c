// Copyright (c) 2026 The txsize developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef TXSIZE_TEST_UTIL_MOCK_NODE_H
#define TXSIZE_TEST_UTIL_MOCK_NODE_H

#include <txsize/corpus.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace test {

/**
 * In-process JSON-RPC server answering getblockhash and getblock for a chain
 * of fixture blocks at heights 0..tip. Requires basic auth user:pass.
 */
class MockNode
{
public:
    explicit MockNode(int64_t tip);
    ~MockNode();

    txsize::RpcEndpoint Endpoint() const;
    /** Requests received, including rejected ones. */
    uint64_t Requests() const;
    /** Heights asked for through getblockhash, in order. */
    std::vector<int64_t> HeightsServed() const;

    /** Raw block at `height`: a coinbase plus height % 3 spends. */
    static std::string BlockHex(int64_t height);

private:
    struct Impl;
    std::unique_ptr<Impl> m_impl;
};

/** A local TCP port nothing listens on. */
int UnusedPort();

} // namespace test

#endif // TXSIZE_TEST_UTIL_MOCK_NODE_H
