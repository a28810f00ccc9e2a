#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sumpath {

// Arbitrary-precision non-negative integers; targets produced by the
// CSP-to-Subset-Sum encoding routinely exceed machine words.
using BigInt = boost::multiprecision::cpp_int;

inline int bit_length(const BigInt& x) {
    if (x < 0) throw std::invalid_argument("bit_length: negative value");
    if (x == 0) return 0;
    return static_cast<int>(boost::multiprecision::msb(x)) + 1;
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }

inline BigInt from_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty decimal string");
    std::size_t start = (s[0] == '-') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("bad decimal string: " + s);
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("bad decimal string: " + s);
    return BigInt(s);
}

// MSB-first binary rendering, zero-padded to `width` bits.
inline std::string to_bits(const BigInt& x, int width) {
    if (x < 0) throw std::invalid_argument("to_bits: negative value");
    if (bit_length(x) > width)
        throw std::invalid_argument("to_bits: value does not fit in " + std::to_string(width) + " bits");
    std::string out(static_cast<std::size_t>(width), '0');
    for (int i = 0; i < width; ++i)
        if (boost::multiprecision::bit_test(x, static_cast<unsigned>(i)))
            out[static_cast<std::size_t>(width - 1 - i)] = '1';
    return out;
}

inline BigInt from_bits(std::string_view bits) {
    BigInt x = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw std::invalid_argument("bad bit string");
        x <<= 1;
        if (c == '1') x |= 1;
    }
    return x;
}

// Smallest w with 2^w > x, i.e. the width needed to store values 0..x.
inline int bits_for(const BigInt& x) { return x == 0 ? 1 : bit_length(x); }

inline std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace sumpath
