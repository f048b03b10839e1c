// Copyright (c) 2026 The txsize developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <txsize/sigmodel.h>

#include <txsize/errors.h>

namespace txsize {

EcdsaSigModel::EcdsaSigModel(Kind kind) : m_kind(kind)
{
    if (kind == Kind::FIXED) {
        throw InvalidModelError("fixed signature model requires a size");
    }
}

EcdsaSigModel EcdsaSigModel::Fixed(uint32_t bytes)
{
    if (bytes < MIN_FIXED || bytes > MAX_FIXED) {
        throw InvalidModelError("fixed signature size " + std::to_string(bytes) + " outside [8, 73]");
    }
    EcdsaSigModel ret;
    ret.m_kind = Kind::FIXED;
    ret.m_fixed = bytes;
    return ret;
}

SizeQ PubKeySize(PubKeyEncoding encoding)
{
    switch (encoding) {
    case PubKeyEncoding::COMPRESSED_SEC: return SizeQ{33};
    case PubKeyEncoding::UNCOMPRESSED_SEC: return SizeQ{65};
    case PubKeyEncoding::XONLY: return SizeQ{32};
    }
    throw InvalidModelError("unknown public key encoding");
}

SizeQ EcdsaSigSize(const EcdsaSigModel& model)
{
    switch (model.GetKind()) {
    case EcdsaSigModel::Kind::AVERAGE:
    case EcdsaSigModel::Kind::LOW_S_ONLY:
        return SizeQ::FromHalves(143);
    case EcdsaSigModel::Kind::LOW_R: return SizeQ{71};
    case EcdsaSigModel::Kind::LEGACY: return SizeQ{72};
    case EcdsaSigModel::Kind::FIXED:
        if (model.FixedBytes() < EcdsaSigModel::MIN_FIXED || model.FixedBytes() > EcdsaSigModel::MAX_FIXED) {
            throw InvalidModelError("fixed signature size outside [8, 73]");
        }
        return SizeQ{model.FixedBytes()};
    }
    throw InvalidModelError("unknown ECDSA signature model");
}

SizeQ SchnorrSigSize(SchnorrSighash sighash)
{
    return sighash == SchnorrSighash::CUSTOM ? SizeQ{65} : SizeQ{64};
}

std::string ToString(PubKeyEncoding encoding)
{
    switch (encoding) {
    case PubKeyEncoding::COMPRESSED_SEC: return "compressed";
    case PubKeyEncoding::UNCOMPRESSED_SEC: return "uncompressed";
    case PubKeyEncoding::XONLY: return "xonly";
    }
    return "?";
}

std::string ToString(const EcdsaSigModel& model)
{
    switch (model.GetKind()) {
    case EcdsaSigModel::Kind::AVERAGE: return "average";
    case EcdsaSigModel::Kind::LOW_R: return "low-r";
    case EcdsaSigModel::Kind::LOW_S_ONLY: return "low-s";
    case EcdsaSigModel::Kind::LEGACY: return "legacy";
    case EcdsaSigModel::Kind::FIXED: return "fixed:" + std::to_string(model.FixedBytes());
    }
    return "?";
}

std::string ToString(SchnorrSighash sighash)
{
    return sighash == SchnorrSighash::CUSTOM ? "custom" : "default";
}

} // namespace txsize
