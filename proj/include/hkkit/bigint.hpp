#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace hkkit {

// Unbounded integers: q = p^e and HK(e) grow without limit.
using BigInt = boost::multiprecision::cpp_int;

// Periodic term values b(n-b) with n a 64-bit word always fit in 128 bits.
using Phi = boost::multiprecision::uint128_t;

inline std::string to_decimal(const BigInt& v) { return v.str(); }
inline std::string to_decimal(const Phi& v) { return v.str(); }

}  // namespace hkkit
