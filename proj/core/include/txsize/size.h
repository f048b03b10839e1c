// Copyright (c) 2026 The txsize developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef TXSIZE_SIZE_H
#define TXSIZE_SIZE_H

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace txsize {

/**
 * Exact, non-negative byte count.
 *
 * Average signature sizes introduce half bytes, and dividing a weight by four
 * to obtain virtual bytes introduces quarters and eighths. All of these are
 * representable exactly as a multiple of 1/8, which is how the value is
 * stored. Arithmetic never rounds: an operation whose result is not a
 * multiple of 1/8, or would be negative, throws.
 */
class SizeQ
{
public:
    static constexpr uint64_t DENOMINATOR{8};

    constexpr SizeQ() = default;
    constexpr explicit SizeQ(uint64_t bytes) : m_eighths(bytes * DENOMINATOR) {}

    static constexpr SizeQ FromEighths(uint64_t eighths)
    {
        SizeQ ret;
        ret.m_eighths = eighths;
        return ret;
    }
    static constexpr SizeQ FromHalves(uint64_t halves) { return FromEighths(halves * 4); }
    /** num/den bytes; den must divide 8. */
    static SizeQ Fraction(uint64_t num, uint64_t den);
    /** Parses "147", "71.5", "109.375". Throws std::invalid_argument. */
    static SizeQ Parse(const std::string& str);

    constexpr uint64_t Eighths() const { return m_eighths; }
    /** Numerator of the reduced fraction. */
    uint64_t Numerator() const;
    /** Denominator of the reduced fraction: 1, 2, 4 or 8. */
    uint64_t Denominator() const;
    constexpr bool IsInteger() const { return m_eighths % DENOMINATOR == 0; }
    constexpr uint64_t Floor() const { return m_eighths / DENOMINATOR; }
    constexpr uint64_t Ceil() const { return (m_eighths + DENOMINATOR - 1) / DENOMINATOR; }
    double ToDouble() const { return static_cast<double>(m_eighths) / DENOMINATOR; }

    /** Exact decimal rendering: "191.5", "109.375", "82". */
    std::string ToString() const;

    SizeQ& operator+=(const SizeQ& other);
    SizeQ& operator-=(const SizeQ& other);
    SizeQ& operator*=(uint64_t factor);

    friend SizeQ operator+(SizeQ a, const SizeQ& b) { return a += b; }
    friend SizeQ operator-(SizeQ a, const SizeQ& b) { return a -= b; }
    friend SizeQ operator*(SizeQ a, uint64_t k) { return a *= k; }
    friend SizeQ operator*(uint64_t k, SizeQ a) { return a *= k; }

    /** Exact division by a small integer; throws if the quotient is not a multiple of 1/8. */
    SizeQ DivideExact(uint64_t divisor) const;

    friend constexpr bool operator==(const SizeQ&, const SizeQ&) = default;
    friend constexpr auto operator<=>(const SizeQ&, const SizeQ&) = default;

private:
    uint64_t m_eighths{0};
};

std::ostream& operator<<(std::ostream& os, const SizeQ& size);

} // namespace txsize

#endif // TXSIZE_SIZE_H
