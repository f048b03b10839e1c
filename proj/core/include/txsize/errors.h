// Copyright (c) 2026 The txsize developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef TXSIZE_ERRORS_H
#define TXSIZE_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace txsize {

/** Base class for every error raised by the library. */
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class InvalidPushError : public Error
{
public:
    using Error::Error;
};

class InvalidModelError : public Error
{
public:
    using Error::Error;
};

class InvalidSpecError : public Error
{
public:
    using Error::Error;
};

/** Raised when a serialized transaction cannot be decoded. Carries the byte offset of the failure. */
class ParseError : public Error
{
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), m_offset(offset) {}

    std::size_t Offset() const { return m_offset; }

private:
    std::size_t m_offset;
};

class IoError : public Error
{
public:
    using Error::Error;
};

/** More than half of the lines of a corpus file could not be decoded. */
class CorpusQualityError : public Error
{
public:
    using Error::Error;
};

/** Connection or authentication failure talking to a node, after retries. */
class TransportError : public Error
{
public:
    using Error::Error;
};

/** The node does not know the requested block height or hash. */
class RangeError : public Error
{
public:
    using Error::Error;
};

/** A library invariant did not hold. Indicates a bug, not bad input. */
class InternalError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace txsize

#endif // TXSIZE_ERRORS_H
