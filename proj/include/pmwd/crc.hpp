// CRC generator polynomials, hex notation including the leading degree term
// (0x59 is x^6 + x^4 + x^3 + 1).

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pmwd {

struct CrcPolynomial {
    uint64_t coefficients = 1; // bit t is the coefficient of x^t
    int degree = 0;            // = K_P

    bool constant_term() const { return coefficients & 1u; }

    static CrcPolynomial from_bits(uint64_t bits) {
        if (bits == 0)
            throw std::invalid_argument("CrcPolynomial: zero polynomial");
        CrcPolynomial p;
        p.coefficients = bits;
        p.degree = 63 - std::countl_zero(bits);
        return p;
    }

    static CrcPolynomial parse_hex(std::string_view text) {
        std::string_view digits = text;
        if (digits.size() > 2 && (digits.substr(0, 2) == "0x" || digits.substr(0, 2) == "0X"))
            digits = digits.substr(2);
        if (digits.empty() || digits.size() > 16)
            throw std::invalid_argument("CrcPolynomial: bad hex string");
        uint64_t bits = 0;
        for (char c : digits) {
            int nibble;
            if (c >= '0' && c <= '9')
                nibble = c - '0';
            else if (c >= 'a' && c <= 'f')
                nibble = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F')
                nibble = c - 'A' + 10;
            else
                throw std::invalid_argument("CrcPolynomial: bad hex digit");
            bits = (bits << 4) | uint64_t(nibble);
        }
        return from_bits(bits);
    }

    std::string render_hex() const {
        static const char digit[] = "0123456789ABCDEF";
        std::string out;
        uint64_t bits = coefficients;
        do {
            out.insert(out.begin(), digit[bits & 0xF]);
            bits >>= 4;
        } while (bits);
        return "0x" + out;
    }

    friend bool operator==(const CrcPolynomial&, const CrcPolynomial&) = default;
};

// Remainder of x^degree * b(x) mod g(x) for the systematic CRC encoding
// s = (b, p). b[0] is the highest-degree message coefficient; the returned
// vector lists p_1..p_KP with p_1 the highest-degree remainder coefficient.
inline std::vector<uint8_t> crc_remainder(const CrcPolynomial& g,
                                          const std::vector<uint8_t>& message) {
    uint64_t reg = 0;
    const uint64_t top = uint64_t(1) << g.degree;
    for (uint8_t bit : message) {
        reg = (reg << 1) | (bit & 1u);
        if (reg & top)
            reg ^= g.coefficients;
    }
    for (int t = 0; t < g.degree; ++t) {
        reg <<= 1;
        if (reg & top)
            reg ^= g.coefficients;
    }
    std::vector<uint8_t> parity(g.degree);
    for (int t = 0; t < g.degree; ++t)
        parity[t] = (reg >> (g.degree - 1 - t)) & 1u;
    return parity;
}

// s = (b, p): message bits first, remainder bits last.
inline std::vector<uint8_t> crc_encode(const CrcPolynomial& g,
                                       const std::vector<uint8_t>& message) {
    std::vector<uint8_t> s = message;
    const std::vector<uint8_t> parity = crc_remainder(g, message);
    s.insert(s.end(), parity.begin(), parity.end());
    return s;
}

} // namespace pmwd
