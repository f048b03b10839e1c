// Copyright (c) 2026 The txsize developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <cli.h>

#include <txsize/parser.h>

#include <util/fixture.h>
#include <util/mock_node.h>
#include <util/tempdir.h>

#include <boost/test/unit_test.hpp>

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>

using namespace txsize;
using json = nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result RunCli(std::vector<std::string> args, const std::string& stdin_text = "",
              std::map<std::string, std::string> env = {})
{
    std::istringstream in{stdin_text};
    std::ostringstream out, err;
    const int code = cli::Run(args, in, out, err, [&](const std::string& name) -> std::optional<std::string> {
        auto it = env.find(name);
        if (it == env.end()) return std::nullopt;
        return it->second;
    });
    return {code, out.str(), err.str()};
}

std::string FixtureHex(const std::vector<InputSpec>& inputs, uint32_t sig_len = 71)
{
    fixture::Signing signing;
    signing.ecdsa_len = sig_len;
    return EncodeHex(fixture::Serialize(fixture::BuildTx(inputs, {OutputSpec::Simple(OutputType::P2WPKH)}, signing)).total.bytes);
}

} // namespace

BOOST_AUTO_TEST_SUITE(cli_tests)

BOOST_AUTO_TEST_CASE(estimate_json)
{
    const Result r = RunCli({"estimate", "--input", "p2wpkh", "--output", "p2wpkh", "--json"});
    BOOST_REQUIRE_EQUAL(r.code, 0);
    const json doc = json::parse(r.out);
    BOOST_CHECK_EQUAL(doc["total_bytes"].get<double>(), 191.5);
    BOOST_CHECK_EQUAL(doc["base_bytes"].get<int>(), 82);
    BOOST_CHECK(doc["base_bytes"].is_number_integer());
    BOOST_CHECK_EQUAL(doc["vbytes"].get<double>(), 109.375);
    BOOST_CHECK(r.out.find("\"vbytes\": 109.375,") != std::string::npos);
    BOOST_CHECK(r.out.find("\"weight\": 437.5,") != std::string::npos);
    // Keys appear in a fixed order.
    BOOST_CHECK(r.out.find("total_bytes") < r.out.find("base_bytes"));
    BOOST_CHECK(r.out.find("base_bytes") < r.out.find("witness_bytes"));
    BOOST_CHECK(r.out.find("weight") < r.out.find("\"vbytes\""));
    BOOST_CHECK(r.out.find("\"vbytes\"") < r.out.find("breakdown"));
    // Deterministic output.
    BOOST_CHECK_EQUAL(RunCli({"estimate", "--input", "p2wpkh", "--output", "p2wpkh", "--json"}).out, r.out);
}

BOOST_AUTO_TEST_CASE(estimate_p2sh_ms_component)
{
    const Result r = RunCli({"estimate", "--input", "p2sh-ms:2/3", "--output", "p2sh", "--json"});
    BOOST_REQUIRE_EQUAL(r.code, 0);
    const json doc = json::parse(r.out);
    BOOST_CHECK_EQUAL(doc["breakdown"]["inputs"][0]["size"].get<int>(), 296);
    BOOST_CHECK_EQUAL(doc["breakdown"]["inputs"][0]["spec"].get<std::string>(), "p2sh-ms:2/3");
}

BOOST_AUTO_TEST_CASE(estimate_options)
{
    const json ceil = json::parse(RunCli({"estimate", "-i", "p2wpkh", "-o", "p2wpkh", "--vbytes-mode", "ceil", "--json"}).out);
    BOOST_CHECK_EQUAL(ceil["vbytes"].get<int>(), 110);
    const json lowr = json::parse(RunCli({"estimate", "-i", "p2pkhx2", "-o", "p2pkh", "--sig-model", "low-r", "--json"}).out);
    BOOST_CHECK_EQUAL(lowr["total_bytes"].get<int>(), 10 + 2 * 147 + 34);
    BOOST_CHECK_EQUAL(lowr["breakdown"]["inputs"].size(), 2u);
    const json fixed = json::parse(RunCli({"estimate", "-i", "p2pk", "-o", "p2pk", "--sig-model", "fixed:71", "--json"}).out);
    BOOST_CHECK_EQUAL(fixed["breakdown"]["inputs"][0]["size"].get<int>(), 113);
    const Result text = RunCli({"estimate", "-i", "p2wpkh", "-o", "p2wpkh"});
    BOOST_CHECK_EQUAL(text.code, 0);
    BOOST_CHECK(text.out.find("109.375") != std::string::npos);
}

BOOST_AUTO_TEST_CASE(explain_detail)
{
    const Result r = RunCli({"explain", "-i", "p2wpkh", "-o", "p2tr", "--json"});
    BOOST_REQUIRE_EQUAL(r.code, 0);
    const json doc = json::parse(r.out);
    const json& wit = doc["breakdown"]["witnesses"][0];
    BOOST_CHECK_EQUAL(wit["size"].get<double>(), 107.5);
    double sum{0};
    for (const json& d : wit["detail"]) sum += d["size"].get<double>();
    BOOST_CHECK_EQUAL(sum, 107.5);
    BOOST_CHECK_EQUAL(RunCli({"explain", "-i", "p2wpkh", "-o", "p2tr"}).code, 0);
}

BOOST_AUTO_TEST_CASE(estimate_errors)
{
    const Result bad = RunCli({"estimate", "--input", "p2xyz", "--output", "p2wpkh"});
    BOOST_CHECK_EQUAL(bad.code, 2);
    BOOST_CHECK(bad.err.find("p2xyz") != std::string::npos);
    BOOST_CHECK(bad.err.find("p2wpkh") != std::string::npos);
    BOOST_CHECK_EQUAL(RunCli({"estimate", "--input", "p2pkh", "--output", "nulldata:81"}).code, 2);
    BOOST_CHECK_EQUAL(RunCli({"estimate", "--input", "p2pkh", "--output", "nulldata:81", "--allow-large-nulldata"}).code, 0);
    BOOST_CHECK_EQUAL(RunCli({"estimate", "--output", "p2wpkh"}).code, 2);
    BOOST_CHECK_EQUAL(RunCli({"estimate", "-i", "p2wpkh", "-o", "p2wpkh", "--sig-model", "fixed:99"}).code, 2);
    BOOST_CHECK_EQUAL(RunCli({"estimate", "-i", "p2wpkh", "-o", "p2wpkh", "--vbytes-mode", "floor"}).code, 2);
    BOOST_CHECK_EQUAL(RunCli({}).code, 2);
    BOOST_CHECK_EQUAL(RunCli({"frobnicate"}).code, 2);
    BOOST_CHECK_EQUAL(RunCli({"--help"}).code, 0);
}

BOOST_AUTO_TEST_CASE(parse_command)
{
    test::TempDir dir;
    const auto path = dir.Path() / "tx.hex";
    std::ofstream{path} << FixtureHex({InputSpec::Simple(InputType::P2WPKH)}) << "\n";
    const Result r = RunCli({"parse", path.string(), "--json"});
    BOOST_REQUIRE_EQUAL(r.code, 0);
    const json doc = json::parse(r.out);
    BOOST_CHECK(doc["segwit"].get<bool>());
    BOOST_CHECK(doc.contains("weight"));
    BOOST_CHECK_EQUAL(doc["inputs"][0]["kind"].get<std::string>(), "p2wpkh");

    const Result piped = RunCli({"parse", "-", "--json"}, FixtureHex({InputSpec::Simple(InputType::P2PKH)}));
    BOOST_REQUIRE_EQUAL(piped.code, 0);
    BOOST_CHECK(!json::parse(piped.out)["segwit"].get<bool>());
    BOOST_CHECK_EQUAL(RunCli({"parse", "-"}, FixtureHex({InputSpec::Simple(InputType::P2PKH)})).code, 0);

    const Result garbage = RunCli({"parse", "-"}, "zz");
    BOOST_CHECK_EQUAL(garbage.code, 2);
    const Result truncated = RunCli({"parse", "-"}, FixtureHex({InputSpec::Simple(InputType::P2PKH)}).substr(0, 30));
    BOOST_CHECK_EQUAL(truncated.code, 2);
    BOOST_CHECK(truncated.err.find("offset 5") != std::string::npos);
    BOOST_CHECK_EQUAL(RunCli({"parse", (dir.Path() / "missing").string()}).code, 2);
}

BOOST_AUTO_TEST_CASE(corpus_commands)
{
    test::TempDir dir;
    const auto corpus = dir.Path() / "corpus.txt";
    const InputSpec p2pkh = InputSpec::Simple(InputType::P2PKH);
    std::ofstream{corpus} << FixtureHex({p2pkh}, 71) << "\n" << FixtureHex({p2pkh}, 71) << "\n" << FixtureHex({p2pkh}, 72) << "\n";
    const auto doc = dir.Path() / "hist.json";
    BOOST_REQUIRE_EQUAL(RunCli({"corpus", "ingest-file", corpus.string(), "--out", doc.string()}).code, 0);
    const Result csv = RunCli({"corpus", "export", doc.string(), "--kind", "input:p2pkh", "--format", "csv"});
    BOOST_CHECK_EQUAL(csv.code, 0);
    BOOST_CHECK_EQUAL(csv.out, "size,count\n147,2\n148,1\n");
    BOOST_CHECK_EQUAL(RunCli({"corpus", "export", doc.string(), "--kind", "input:p2pkh", "--format", "xml"}).code, 2);
    BOOST_CHECK_EQUAL(RunCli({"corpus", "export", doc.string(), "--kind", "input:nothing", "--format", "csv"}).out, "size,count\n");

    const Result piped = RunCli({"corpus", "ingest-file", "-", "--kind", "p2pkh"}, FixtureHex({p2pkh}, 72));
    BOOST_CHECK_EQUAL(piped.code, 0);
    BOOST_CHECK_EQUAL(json::parse(piped.out)["histograms"].size(), 1u);

    BOOST_CHECK_EQUAL(RunCli({"corpus", "ingest-file", "-"}, "zz\nzz\n").code, 2);
    BOOST_CHECK_EQUAL(RunCli({"corpus"}).code, 2);
}

BOOST_AUTO_TEST_CASE(corpus_rpc)
{
    BOOST_CHECK_EQUAL(RunCli({"corpus", "ingest-rpc", "--from", "0", "--to", "0"}).code, 2);
    // Credentials are never accepted as flags.
    BOOST_CHECK_EQUAL(RunCli({"corpus", "ingest-rpc", "--from", "0", "--to", "0", "--rpcpassword", "x"}).code, 2);

    test::MockNode node{2};
    const auto endpoint = node.Endpoint();
    const std::map<std::string, std::string> env{{"TXSIZE_RPC_URL", endpoint.url},
                                                 {"TXSIZE_RPC_USER", endpoint.user},
                                                 {"TXSIZE_RPC_PASS", endpoint.password}};
    const Result r = RunCli({"corpus", "ingest-rpc", "--from", "0", "--to", "2"}, "", env);
    BOOST_REQUIRE_EQUAL(r.code, 0);
    const json doc = json::parse(r.out);
    BOOST_CHECK_EQUAL(doc["blocks"].get<int>(), 3);
    BOOST_CHECK_EQUAL(doc["transactions"].get<int>(), 1 + 2 + 3);

    auto wrong = env;
    wrong["TXSIZE_RPC_PASS"] = "nope";
    BOOST_CHECK_EQUAL(RunCli({"corpus", "ingest-rpc", "--from", "0", "--to", "0", "--backoff-ms", "1"}, "", wrong).code, 2);
    BOOST_CHECK_EQUAL(RunCli({"corpus", "ingest-rpc", "--from", "0", "--to", "9"}, "", env).code, 2);
}

BOOST_AUTO_TEST_SUITE_END()
