// Copyright (c) 2026 The txsize developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <txsize/parser.h>

#include <txsize/encoding.h>
#include <txsize/errors.h>

#include <algorithm>
#include <cctype>

namespace txsize {
namespace {

constexpr std::size_t BLOCK_HEADER_SIZE{80};

class Reader
{
public:
    Reader(std::span<const uint8_t> data, std::size_t offset) : m_data(data), m_pos(offset) {}

    std::size_t Pos() const { return m_pos; }

    std::span<const uint8_t> Take(std::size_t n, const char* what)
    {
        if (m_data.size() - m_pos < n) throw ParseError(std::string{"truncated "} + what, m_pos);
        auto ret = m_data.subspan(m_pos, n);
        m_pos += n;
        return ret;
    }

    uint8_t Byte(const char* what) { return Take(1, what)[0]; }

    uint8_t PeekByte(std::size_t ahead = 0) const
    {
        return m_pos + ahead < m_data.size() ? m_data[m_pos + ahead] : 0xff;
    }
    bool HasBytes(std::size_t n) const { return m_data.size() - m_pos >= n; }

    uint64_t LittleEndian(std::size_t n, const char* what)
    {
        auto bytes = Take(n, what);
        uint64_t ret{0};
        for (std::size_t i = 0; i < n; ++i) ret |= uint64_t{bytes[i]} << (8 * i);
        return ret;
    }

    /** Canonical CompactSize; values beyond MAX_TX_SIZE cannot describe anything inside a transaction. */
    uint64_t CompactSize(const char* what)
    {
        const std::size_t start = m_pos;
        const uint8_t first = Byte(what);
        uint64_t value{first};
        uint64_t min{0};
        if (first == 0xfd) {
            value = LittleEndian(2, what);
            min = 0xfd;
        } else if (first == 0xfe) {
            value = LittleEndian(4, what);
            min = 0x10000;
        } else if (first == 0xff) {
            value = LittleEndian(8, what);
            min = 0x100000000;
        }
        if (value < min) throw ParseError(std::string{"non-canonical varint for "} + what, start);
        if (value > MAX_TX_SIZE) throw ParseError(std::string{"varint overflow for "} + what, start);
        return value;
    }

    Bytes VarBytes(const char* what)
    {
        const uint64_t len = CompactSize(what);
        auto data = Take(len, what);
        return Bytes(data.begin(), data.end());
    }

private:
    std::span<const uint8_t> m_data;
    std::size_t m_pos;
};

void WriteLE(Bytes& out, uint64_t value, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) out.push_back(static_cast<uint8_t>(value >> (8 * i)));
}

void WriteCompactSize(Bytes& out, uint64_t n)
{
    if (n < 0xfd) {
        out.push_back(static_cast<uint8_t>(n));
    } else if (n <= 0xffff) {
        out.push_back(0xfd);
        WriteLE(out, n, 2);
    } else if (n <= 0xffffffff) {
        out.push_back(0xfe);
        WriteLE(out, n, 4);
    } else {
        out.push_back(0xff);
        WriteLE(out, n, 8);
    }
}

void WriteVarBytes(Bytes& out, std::span<const uint8_t> data)
{
    WriteCompactSize(out, data.size());
    out.insert(out.end(), data.begin(), data.end());
}

bool IsNullOutpoint(const ParsedInput& in)
{
    return in.prev_position == 0xffffffff &&
           std::all_of(in.prev_txid.begin(), in.prev_txid.end(), [](uint8_t b) { return b == 0; });
}

int HexValue(char c)
{
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

} // namespace

ParsedTx ParseTxAt(std::span<const uint8_t> data, std::size_t& offset)
{
    const std::size_t start = offset;
    Reader reader{data, offset};
    ParsedTx tx;
    std::size_t witness_bytes{0};

    tx.version = static_cast<int32_t>(reader.LittleEndian(4, "version"));

    // BIP144: a zero input count followed by a non-zero flag byte marks the extended format.
    if (reader.PeekByte() == 0x00 && reader.HasBytes(2) && reader.PeekByte(1) != 0x00) {
        const std::size_t flag_pos = reader.Pos() + 1;
        reader.Take(1, "segwit marker");
        const uint8_t flag = reader.Byte("segwit flag");
        if (flag != 0x01) throw ParseError("unknown segwit flag", flag_pos);
        tx.segwit = true;
        witness_bytes += 2;
    }

    const uint64_t n_in = reader.CompactSize("input count");
    tx.inputs.reserve(std::min<uint64_t>(n_in, 1024));
    for (uint64_t i = 0; i < n_in; ++i) {
        const std::size_t in_start = reader.Pos();
        ParsedInput in;
        auto txid = reader.Take(32, "txid");
        std::copy(txid.begin(), txid.end(), in.prev_txid.begin());
        in.prev_position = static_cast<uint32_t>(reader.LittleEndian(4, "output position"));
        in.script = reader.VarBytes("unlocking script");
        in.sequence = static_cast<uint32_t>(reader.LittleEndian(4, "sequence"));
        in.size = reader.Pos() - in_start;
        tx.inputs.push_back(std::move(in));
    }

    const uint64_t n_out = reader.CompactSize("output count");
    tx.outputs.reserve(std::min<uint64_t>(n_out, 1024));
    for (uint64_t i = 0; i < n_out; ++i) {
        const std::size_t out_start = reader.Pos();
        ParsedOutput out;
        out.amount = static_cast<int64_t>(reader.LittleEndian(8, "amount"));
        out.script = reader.VarBytes("locking script");
        out.size = reader.Pos() - out_start;
        out.match = ClassifyOutput(out.script);
        tx.outputs.push_back(std::move(out));
    }

    if (tx.segwit) {
        tx.witnesses.reserve(tx.inputs.size());
        for (std::size_t i = 0; i < tx.inputs.size(); ++i) {
            const std::size_t wit_start = reader.Pos();
            ParsedWitness wit;
            const uint64_t n_items = reader.CompactSize("witness item count");
            wit.items.reserve(std::min<uint64_t>(n_items, 1024));
            for (uint64_t j = 0; j < n_items; ++j) wit.items.push_back(reader.VarBytes("witness item"));
            wit.size = reader.Pos() - wit_start;
            witness_bytes += wit.size;
            tx.witnesses.push_back(std::move(wit));
        }
    }

    tx.locktime = static_cast<uint32_t>(reader.LittleEndian(4, "locktime"));

    for (std::size_t i = 0; i < tx.inputs.size(); ++i) {
        ParsedInput& in = tx.inputs[i];
        if (IsNullOutpoint(in)) {
            in.match.cls = InputClass::COINBASE;
        } else {
            std::span<const Bytes> witness;
            if (tx.segwit) witness = tx.witnesses[i].items;
            in.match = ClassifyInput(in.script, witness);
        }
    }

    tx.total_size = reader.Pos() - start;
    if (tx.total_size > MAX_TX_SIZE) throw ParseError("transaction exceeds maximum size", start);
    tx.base_size = tx.total_size - witness_bytes;
    tx.weight = 3 * tx.base_size + tx.total_size;
    offset = reader.Pos();
    return tx;
}

ParsedTx ParseTx(std::span<const uint8_t> data)
{
    if (data.size() > MAX_TX_SIZE) throw ParseError("input exceeds maximum transaction size", MAX_TX_SIZE);
    std::size_t offset{0};
    ParsedTx tx = ParseTxAt(data, offset);
    if (offset != data.size()) throw ParseError("trailing bytes after transaction", offset);
    return tx;
}

Bytes DecodeHex(std::string_view hex)
{
    Bytes out;
    out.reserve(hex.size() / 2);
    int high{-1};
    std::size_t digits{0};
    for (std::size_t i = 0; i < hex.size(); ++i) {
        const char c = hex[i];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        const int v = HexValue(c);
        if (v < 0) throw ParseError(std::string{"invalid hex character '"} + c + "'", digits / 2);
        ++digits;
        if (high < 0) {
            high = v;
        } else {
            out.push_back(static_cast<uint8_t>((high << 4) | v));
            high = -1;
        }
    }
    if (high >= 0) throw ParseError("odd number of hex digits", out.size());
    return out;
}

std::string EncodeHex(std::span<const uint8_t> data)
{
    static constexpr char DIGITS[] = "0123456789abcdef";
    std::string ret;
    ret.reserve(data.size() * 2);
    for (uint8_t b : data) {
        ret.push_back(DIGITS[b >> 4]);
        ret.push_back(DIGITS[b & 0x0f]);
    }
    return ret;
}

ParsedTx ParseTxHex(std::string_view hex)
{
    return ParseTx(DecodeHex(hex));
}

std::vector<ParsedTx> ParseBlock(std::span<const uint8_t> data)
{
    Reader reader{data, 0};
    reader.Take(BLOCK_HEADER_SIZE, "block header");
    const uint64_t n_tx = reader.CompactSize("transaction count");
    std::vector<ParsedTx> ret;
    ret.reserve(std::min<uint64_t>(n_tx, 1 << 16));
    std::size_t offset = reader.Pos();
    for (uint64_t i = 0; i < n_tx; ++i) ret.push_back(ParseTxAt(data, offset));
    if (offset != data.size()) throw ParseError("trailing bytes after block", offset);
    return ret;
}

Bytes SerializeTx(const ParsedTx& tx)
{
    Bytes out;
    out.reserve(tx.total_size);
    WriteLE(out, static_cast<uint32_t>(tx.version), 4);
    if (tx.segwit) {
        out.push_back(0x00);
        out.push_back(0x01);
    }
    WriteCompactSize(out, tx.inputs.size());
    for (const ParsedInput& in : tx.inputs) {
        out.insert(out.end(), in.prev_txid.begin(), in.prev_txid.end());
        WriteLE(out, in.prev_position, 4);
        WriteVarBytes(out, in.script);
        WriteLE(out, in.sequence, 4);
    }
    WriteCompactSize(out, tx.outputs.size());
    for (const ParsedOutput& o : tx.outputs) {
        WriteLE(out, static_cast<uint64_t>(o.amount), 8);
        WriteVarBytes(out, o.script);
    }
    if (tx.segwit) {
        for (const ParsedWitness& wit : tx.witnesses) {
            WriteCompactSize(out, wit.items.size());
            for (const Bytes& item : wit.items) WriteVarBytes(out, item);
        }
    }
    WriteLE(out, tx.locktime, 4);
    return out;
}

std::string ToString(Component component)
{
    switch (component) {
    case Component::OVERHEAD: return "overhead";
    case Component::INPUT: return "input";
    case Component::OUTPUT: return "output";
    case Component::WITNESS: return "witness";
    }
    return "?";
}

std::vector<Measurement> Measure(const ParsedTx& tx)
{
    std::vector<Measurement> ret;
    ret.reserve(1 + tx.inputs.size() + tx.outputs.size() + tx.witnesses.size());
    std::size_t components{0};
    for (const auto& in : tx.inputs) components += in.size;
    for (const auto& out : tx.outputs) components += out.size;
    for (const auto& wit : tx.witnesses) components += wit.size;

    ret.push_back({Component::OVERHEAD, tx.segwit ? "segwit" : "legacy", tx.total_size - components});
    for (const auto& in : tx.inputs) ret.push_back({Component::INPUT, in.match.Label(), in.size});
    for (const auto& out : tx.outputs) ret.push_back({Component::OUTPUT, out.match.Label(), out.size});
    for (std::size_t i = 0; i < tx.witnesses.size(); ++i) {
        const ParsedWitness& wit = tx.witnesses[i];
        const std::string kind = wit.items.empty() ? "empty" : tx.inputs[i].match.Label();
        ret.push_back({Component::WITNESS, kind, wit.size});
    }
    return ret;
}

} // namespace txsize
