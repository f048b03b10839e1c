// Copyright (c) 2026 The txsize developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef TXSIZE_SIGMODEL_H
#define TXSIZE_SIGMODEL_H

#include <txsize/size.h>

#include <cstdint>
#include <string>

namespace txsize {

enum class PubKeyEncoding : uint8_t {
    COMPRESSED_SEC,   //!< 33 bytes: prefix + x
    UNCOMPRESSED_SEC, //!< 65 bytes: prefix + x + y
    XONLY,            //!< 32 bytes: x only, even y implied
};

/**
 * Size assumption for DER-encoded ECDSA signatures, including the trailing
 * sighash byte. The averaged models follow from the padding byte that a
 * high r or s value needs: with low-s enforced, r is high half of the time.
 */
class EcdsaSigModel
{
public:
    enum class Kind : uint8_t {
        AVERAGE,       //!< low-s enforced, r unconstrained: 71.5
        LOW_R,         //!< low-r grinding: 71
        LOW_S_ONLY,    //!< same distribution as AVERAGE: 71.5
        LEGACY,        //!< neither rule: 72
        FIXED,         //!< caller-chosen integer size
    };

    static constexpr uint32_t MIN_FIXED{8};
    static constexpr uint32_t MAX_FIXED{73};

    constexpr EcdsaSigModel() = default;
    /** Throws InvalidModelError for FIXED; use Fixed() instead. */
    explicit EcdsaSigModel(Kind kind);
    /** Throws InvalidModelError unless 8 <= bytes <= 73. */
    static EcdsaSigModel Fixed(uint32_t bytes);

    Kind GetKind() const { return m_kind; }
    uint32_t FixedBytes() const { return m_fixed; }

    friend bool operator==(const EcdsaSigModel&, const EcdsaSigModel&) = default;

private:
    Kind m_kind{Kind::AVERAGE};
    uint32_t m_fixed{0};
};

enum class SchnorrSighash : uint8_t {
    DEFAULT, //!< implicit SIGHASH_DEFAULT, 64 bytes
    CUSTOM,  //!< explicit sighash byte, 65 bytes
};

/** Signature and key size assumptions used by every estimate. */
struct SizeModel {
    PubKeyEncoding pubkey{PubKeyEncoding::COMPRESSED_SEC};
    EcdsaSigModel ecdsa{};
    SchnorrSighash schnorr{SchnorrSighash::DEFAULT};

    friend bool operator==(const SizeModel&, const SizeModel&) = default;
};

SizeQ PubKeySize(PubKeyEncoding encoding);
SizeQ EcdsaSigSize(const EcdsaSigModel& model);
SizeQ SchnorrSigSize(SchnorrSighash sighash);

std::string ToString(PubKeyEncoding encoding);
std::string ToString(const EcdsaSigModel& model);
std::string ToString(SchnorrSighash sighash);

} // namespace txsize

#endif // TXSIZE_SIGMODEL_H
