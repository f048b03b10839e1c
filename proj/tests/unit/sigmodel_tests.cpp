// Copyright (c) 2026 The txsize developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <txsize/errors.h>
#include <txsize/sigmodel.h>
#include <txsize/spec_string.h>

#include <util/fixture.h>

#include <boost/test/unit_test.hpp>

using namespace txsize;
using Kind = EcdsaSigModel::Kind;

BOOST_AUTO_TEST_SUITE(sigmodel_tests)

BOOST_AUTO_TEST_CASE(pubkey_sizes)
{
    BOOST_CHECK_EQUAL(PubKeySize(PubKeyEncoding::COMPRESSED_SEC), SizeQ{33});
    BOOST_CHECK_EQUAL(PubKeySize(PubKeyEncoding::UNCOMPRESSED_SEC), SizeQ{65});
    BOOST_CHECK_EQUAL(PubKeySize(PubKeyEncoding::XONLY), SizeQ{32});
    BOOST_CHECK_EQUAL(fixture::SecPubKey(true).size(), 33u);
    BOOST_CHECK_EQUAL(fixture::SecPubKey(false).size(), 65u);
}

BOOST_AUTO_TEST_CASE(ecdsa_sizes)
{
    BOOST_CHECK_EQUAL(EcdsaSigSize(EcdsaSigModel{}).ToString(), "71.5");
    BOOST_CHECK_EQUAL(EcdsaSigSize(EcdsaSigModel{Kind::AVERAGE}).ToString(), "71.5");
    BOOST_CHECK_EQUAL(EcdsaSigSize(EcdsaSigModel{Kind::LOW_S_ONLY}).ToString(), "71.5");
    BOOST_CHECK_EQUAL(EcdsaSigSize(EcdsaSigModel{Kind::LOW_R}), SizeQ{71});
    BOOST_CHECK_EQUAL(EcdsaSigSize(EcdsaSigModel{Kind::LEGACY}), SizeQ{72});
    BOOST_CHECK_EQUAL(EcdsaSigSize(EcdsaSigModel::Fixed(73)), SizeQ{73});
    BOOST_CHECK_EQUAL(EcdsaSigSize(EcdsaSigModel::Fixed(8)), SizeQ{8});
    BOOST_CHECK_THROW(EcdsaSigModel::Fixed(7), InvalidModelError);
    BOOST_CHECK_THROW(EcdsaSigModel::Fixed(74), InvalidModelError);
    BOOST_CHECK_THROW(EcdsaSigModel{Kind::FIXED}, InvalidModelError);
}

BOOST_AUTO_TEST_CASE(schnorr_sizes)
{
    BOOST_CHECK_EQUAL(SchnorrSigSize(SchnorrSighash::DEFAULT), SizeQ{64});
    BOOST_CHECK_EQUAL(SchnorrSigSize(SchnorrSighash::CUSTOM), SizeQ{65});
}

BOOST_AUTO_TEST_CASE(der_fixture_lengths)
{
    for (uint32_t len = 9; len <= 73; ++len) {
        BOOST_CHECK_EQUAL(fixture::DerSignature(len).size(), len);
    }
}

BOOST_AUTO_TEST_CASE(average_matches_padding_odds)
{
    // Low s, r high half of the time: 71 and 72 bytes equally likely.
    const SizeQ mean = (EcdsaSigSize(EcdsaSigModel::Fixed(71)) + EcdsaSigSize(EcdsaSigModel::Fixed(72))).DivideExact(2);
    BOOST_CHECK_EQUAL(mean, EcdsaSigSize(EcdsaSigModel{}));
}

BOOST_AUTO_TEST_CASE(model_names)
{
    BOOST_CHECK(ParseSigModel("average") == EcdsaSigModel{});
    BOOST_CHECK(ParseSigModel("low-r") == EcdsaSigModel{Kind::LOW_R});
    BOOST_CHECK(ParseSigModel("conservative") == EcdsaSigModel{Kind::LEGACY});
    BOOST_CHECK(ParseSigModel("fixed:71") == EcdsaSigModel::Fixed(71));
    BOOST_CHECK_THROW(ParseSigModel("fixed:80"), InvalidModelError);
    BOOST_CHECK_THROW(ParseSigModel("fixed:"), InvalidModelError);
    BOOST_CHECK_THROW(ParseSigModel("huge"), InvalidModelError);
    BOOST_CHECK_EQUAL(ToString(EcdsaSigModel::Fixed(71)), "fixed:71");
    BOOST_CHECK(ParsePubKeyEncoding("uncompressed") == PubKeyEncoding::UNCOMPRESSED_SEC);
    BOOST_CHECK(ParseSchnorrSighash("custom") == SchnorrSighash::CUSTOM);
    BOOST_CHECK_THROW(ParsePubKeyEncoding("hybrid"), InvalidModelError);
}

BOOST_AUTO_TEST_SUITE_END()
