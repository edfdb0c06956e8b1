#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ffgold {

using BigInt = boost::multiprecision::cpp_int;

/// Deterministic primality test, valid for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Distinct prime factors of n in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

int mobius(std::uint64_t n);

/// Positive divisors of n in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// base^exp, throws InvalidArgument on 64-bit overflow.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

BigInt big_pow(std::uint64_t base, unsigned exp);

/// Ratio num/den of two (possibly huge) integers as a double.
double big_ratio(const BigInt& num, const BigInt& den);

/// Natural log of a positive big integer.
double big_log(const BigInt& n);

}  // namespace ffgold
