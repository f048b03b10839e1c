// Copyright (c) 2026 The txsize developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <txsize/size.h>

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace txsize {

SizeQ SizeQ::Fraction(uint64_t num, uint64_t den)
{
    if (den == 0 || DENOMINATOR % den != 0) {
        throw std::invalid_argument("SizeQ denominator must divide 8");
    }
    return FromEighths(num * (DENOMINATOR / den));
}

SizeQ SizeQ::Parse(const std::string& str)
{
    const auto dot = str.find('.');
    const std::string whole = str.substr(0, dot);
    uint64_t integer{0};
    auto [ptr, ec] = std::from_chars(whole.data(), whole.data() + whole.size(), integer);
    if (whole.empty() || ec != std::errc{} || ptr != whole.data() + whole.size()) {
        throw std::invalid_argument("not a byte count: " + str);
    }
    uint64_t eighths{0};
    if (dot != std::string::npos) {
        const std::string frac = str.substr(dot + 1);
        if (frac == "5") eighths = 4;
        else if (frac == "25") eighths = 2;
        else if (frac == "75") eighths = 6;
        else if (frac == "125") eighths = 1;
        else if (frac == "375") eighths = 3;
        else if (frac == "625") eighths = 5;
        else if (frac == "875") eighths = 7;
        else if (frac.find_first_not_of('0') == std::string::npos && !frac.empty()) eighths = 0;
        else throw std::invalid_argument("not a multiple of 1/8: " + str);
    }
    return FromEighths(integer * DENOMINATOR + eighths);
}

uint64_t SizeQ::Numerator() const
{
    return m_eighths / std::gcd(m_eighths, DENOMINATOR);
}

uint64_t SizeQ::Denominator() const
{
    return DENOMINATOR / std::gcd(m_eighths, DENOMINATOR);
}

std::string SizeQ::ToString() const
{
    std::string ret = std::to_string(Floor());
    switch (m_eighths % DENOMINATOR) {
    case 0: break;
    case 1: ret += ".125"; break;
    case 2: ret += ".25"; break;
    case 3: ret += ".375"; break;
    case 4: ret += ".5"; break;
    case 5: ret += ".625"; break;
    case 6: ret += ".75"; break;
    case 7: ret += ".875"; break;
    }
    return ret;
}

SizeQ& SizeQ::operator+=(const SizeQ& other)
{
    if (m_eighths > std::numeric_limits<uint64_t>::max() - other.m_eighths) {
        throw std::overflow_error("SizeQ addition overflow");
    }
    m_eighths += other.m_eighths;
    return *this;
}

SizeQ& SizeQ::operator-=(const SizeQ& other)
{
    if (other.m_eighths > m_eighths) {
        throw std::domain_error("SizeQ subtraction would be negative");
    }
    m_eighths -= other.m_eighths;
    return *this;
}

SizeQ& SizeQ::operator*=(uint64_t factor)
{
    if (factor != 0 && m_eighths > std::numeric_limits<uint64_t>::max() / factor) {
        throw std::overflow_error("SizeQ multiplication overflow");
    }
    m_eighths *= factor;
    return *this;
}

SizeQ SizeQ::DivideExact(uint64_t divisor) const
{
    if (divisor == 0 || m_eighths % divisor != 0) {
        throw std::domain_error("SizeQ " + ToString() + " is not exactly divisible by " + std::to_string(divisor));
    }
    return FromEighths(m_eighths / divisor);
}

std::ostream& operator<<(std::ostream& os, const SizeQ& size)
{
    return os << size.ToString();
}

} // namespace txsize
